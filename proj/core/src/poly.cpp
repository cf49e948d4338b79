#include "qtor/poly.hpp"

#include <sstream>

#include "qtor/error.hpp"
#include "modp.hpp"

namespace qtor {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw PreconditionError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  MultiPoly p(nvars);
  Exponent e{};
  e[i - 1] = 1;
  p.terms_.emplace(e, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Exponent{} && terms_.begin()->second == 1;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw ConsistencyError("constant_value on a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k = 0; k < n_; ++k) s += e[k];
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c_in) {
  // mpq equality assumes canonical form; callers may hand in e.g. 10/15.
  Rational c = c_in;
  c.canonicalize();
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const Rational& s_in) const {
  MultiPoly r(n_);
  Rational s = s_in;
  s.canonicalize();
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(std::max(n_, o.n_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e;
      for (int k = 0; k < kMaxRank; ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(n_, 1), b = *this;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  MultiPoly r = *this, q(std::max(n_, d.n_));
  const Exponent& ld = d.leading_exponent();
  const Rational& lc = d.leading_coeff();
  while (!r.is_zero()) {
    const Exponent lr = r.leading_exponent();
    Exponent e;
    for (int k = 0; k < kMaxRank; ++k) {
      if (lr[k] < ld[k]) return std::nullopt;
      e[k] = static_cast<std::uint16_t>(lr[k] - ld[k]);
    }
    Rational c = r.leading_coeff() / lc;
    q.terms_.emplace(e, c);
    for (const auto& [de, dc] : d.terms_) {
      Exponent s;
      for (int k = 0; k < kMaxRank; ++k) s[k] = static_cast<std::uint16_t>(de[k] + e[k]);
      r.add_term(s, -c * dc);
    }
  }
  return q;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) < n_) throw PreconditionError("evaluation point too short");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < e[k]; ++j) t *= point[k];
    s += t;
  }
  return s;
}

namespace {

std::uint64_t mpz_mod(const mpz_class& z) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(modp::kP));
}

}  // namespace

std::optional<std::uint64_t> MultiPoly::eval_mod(const std::vector<std::uint64_t>& point) const {
  std::uint64_t s = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t den = mpz_mod(c.get_den());
    if (den == 0) return std::nullopt;
    std::uint64_t t = modp::mul(mpz_mod(c.get_num()), modp::inv(den));
    for (int k = 0; k < n_; ++k)
      if (e[k]) t = modp::mul(t, modp::pow(point[k], e[k]));
    s = modp::add(s, t);
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool unit_mono = (e == Exponent{});
    Rational a = abs(c);
    if (c < 0) os << "-";
    else if (!first) os << "+";
    bool need_star = false;
    if (a != 1 || unit_mono) {
      os << rational_to_string(a);
      need_star = true;
    }
    for (int k = 0; k < n_; ++k) {
      if (!e[k]) continue;
      if (need_star) os << '*';
      os << 'a' << (k + 1);
      if (e[k] > 1) os << '^' << e[k];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

MultiPoly root_form(const Root& r) {
  MultiPoly p(r.rank());
  for (int k = 0; k < r.rank(); ++k)
    if (r[k] != 0) {
      Exponent e{};
      e[k] = 1;
      p.add_term(e, Rational(r[k]));
    }
  return p;
}

}  // namespace qtor
