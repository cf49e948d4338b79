#include "qtor/root_rational.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

#include "modp.hpp"
#include "qtor/error.hpp"

namespace qtor {

FieldPtr Field::of(const DynkinDatum& d) {
  static std::mutex mu;
  static std::map<std::string, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d.name());
  if (it != cache.end()) return it->second;

  auto f = std::make_shared<Field>();
  f->n_ = d.rank();
  f->name_ = d.name();
  f->roots_ = d.positive_roots();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ std::hash<std::string>{}(f->name_));
  for (const Root& r : f->roots_) {
    f->forms_.push_back(root_form(r));
    std::vector<std::uint64_t> pt(f->n_);
    for (auto& x : pt) x = rng() % modp::kP;
    int v = 0;
    while (r[v] == 0) ++v;
    std::uint64_t s = 0;
    for (int k = 0; k < f->n_; ++k)
      if (k != v) s = modp::add(s, modp::mul(modp::of(r[k]), pt[k]));
    pt[v] = modp::mul(modp::of(-1), modp::mul(s, modp::inv(modp::of(r[v]))));
    f->probes_.push_back(std::move(pt));
  }
  cache.emplace(d.name(), f);
  return f;
}

namespace {

// Fold the leading coefficient of p into unit (times or divided by).
void make_monic(MultiPoly& p, Rational& unit, bool numerator) {
  if (p.is_zero()) return;
  Rational lc = p.leading_coeff();
  if (lc == 1) return;
  p = p * Rational(1 / lc);
  if (numerator) unit *= lc;
  else unit /= lc;
}

// Strip every root-form factor from p, recording signed exponents.
void extract_roots(const Field& f, MultiPoly& p, std::map<Root, int>& factors, int sign) {
  if (p.is_constant()) return;
  for (std::size_t k = 0; k < f.roots().size() && !p.is_constant(); ++k) {
    const Root& r = f.roots()[k];
    bool uses_only_present_vars = true;
    {
      // A linear form divides p only if every variable of the form appears in p.
      Exponent seen{};
      for (const auto& [e, c] : p.terms())
        for (int v = 0; v < f.nvars(); ++v) seen[v] = std::max(seen[v], e[v]);
      for (int v = 0; v < f.nvars(); ++v)
        if (r[v] != 0 && seen[v] == 0) uses_only_present_vars = false;
    }
    if (!uses_only_present_vars) continue;
    while (!p.is_constant()) {
      auto z = p.eval_mod(f.probe(k));
      if (z && *z != 0) break;
      auto q = p.divide_exact(f.form(k));
      if (!q) break;
      p = std::move(*q);
      factors[r] += sign;
    }
  }
}

}  // namespace

void RootRational::adopt(const FieldPtr& f) {
  if (!field_) field_ = f;
}

int RootRational::nvars() const { return field_ ? field_->nvars() : 0; }

RootRational RootRational::zero(FieldPtr f) {
  RootRational r;
  r.field_ = std::move(f);
  r.num_ = MultiPoly::constant(r.nvars(), 1);
  r.den_ = MultiPoly::constant(r.nvars(), 1);
  return r;
}

RootRational RootRational::one(FieldPtr f) { return constant(std::move(f), 1); }

RootRational RootRational::constant(FieldPtr f, const Rational& c) {
  RootRational r = zero(std::move(f));
  r.unit_ = c;
  r.unit_.canonicalize();
  return r;
}

RootRational RootRational::of_root(FieldPtr f, const Root& root, int exp) {
  if (root.is_zero()) throw PreconditionError("zero root has no linear form");
  RootRational r = one(std::move(f));
  if (root.rank() != r.nvars()) throw PreconditionError("root rank does not match the field");
  if (exp == 0) return r;
  const auto& roots = r.field_->roots();
  auto known = [&](const Root& b) { return std::find(roots.begin(), roots.end(), b) != roots.end(); };
  if (root.is_positive() && known(root)) {
    r.factors_[root] = exp;
  } else if (root.is_negative() && known(-root)) {
    r.factors_[-root] = exp;
    if (exp % 2) r.unit_ = -1;
  } else {
    MultiPoly p = root_form(root);
    r.num_ = exp > 0 ? p.pow(exp) : MultiPoly::constant(r.nvars(), 1);
    r.den_ = exp < 0 ? p.pow(-exp) : MultiPoly::constant(r.nvars(), 1);
    r.normalize(true);
  }
  return r;
}

RootRational RootRational::of_poly(FieldPtr f, const MultiPoly& num, const MultiPoly& den) {
  RootRational r = one(std::move(f));
  const int n = r.nvars();
  r.num_ = MultiPoly(n) + num;
  if (den.nvars() == 0 && den.is_zero()) {
    r.den_ = MultiPoly::constant(n, 1);
  } else {
    if (den.is_zero()) throw PreconditionError("zero denominator");
    r.den_ = MultiPoly(n) + den;
  }
  r.normalize(true);
  return r;
}

RootRational RootRational::from_parts(FieldPtr f, const Rational& unit, const std::map<Root, int>& factors,
                                      const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw PreconditionError("zero denominator");
  RootRational r = one(std::move(f));
  r.unit_ = unit;
  r.unit_.canonicalize();
  for (const auto& [root, e] : factors) {
    if (!root.is_positive() || std::find(r.field_->roots().begin(), r.field_->roots().end(), root) == r.field_->roots().end())
      throw PreconditionError("root factors must be positive roots");
    if (e) r.factors_[root] += e;
  }
  r.num_ = num;
  r.den_ = den;
  r.normalize(true);
  return r;
}

bool RootRational::is_one() const {
  return unit_ == 1 && factors_.empty() && num_.is_one() && den_.is_one();
}

bool RootRational::is_root_monomial() const {
  return is_zero() || (num_.is_one() && den_.is_one());
}

void RootRational::normalize(bool extract) {
  const int n = nvars();
  if (num_.nvars() == 0 && num_.is_zero()) num_ = MultiPoly::constant(n, 1);
  if (den_.nvars() == 0 && den_.is_zero()) den_ = MultiPoly::constant(n, 1);
  if (den_.is_zero()) throw PreconditionError("division by the zero function");
  if (unit_ == 0 || num_.is_zero()) {
    unit_ = 0;
    factors_.clear();
    num_ = MultiPoly::constant(n, 1);
    den_ = MultiPoly::constant(n, 1);
    return;
  }
  make_monic(num_, unit_, true);
  make_monic(den_, unit_, false);
  if (extract && field_) {
    extract_roots(*field_, num_, factors_, +1);
    extract_roots(*field_, den_, factors_, -1);
    make_monic(num_, unit_, true);
    make_monic(den_, unit_, false);
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly::constant(n, 1);
    } else if (auto q2 = den_.divide_exact(num_)) {
      den_ = std::move(*q2);
      num_ = MultiPoly::constant(n, 1);
    }
    make_monic(num_, unit_, true);
    make_monic(den_, unit_, false);
  }
  for (auto it = factors_.begin(); it != factors_.end();)
    it = it->second == 0 ? factors_.erase(it) : std::next(it);
}

RootRational RootRational::normalized() const {
  RootRational r = *this;
  r.normalize(true);
  return r;
}

MultiPoly RootRational::expand(const std::map<Root, int>& factors, int nvars, bool positive_part) {
  MultiPoly p = MultiPoly::constant(nvars, 1);
  for (const auto& [r, e] : factors) {
    int k = positive_part ? e : -e;
    if (k > 0) p *= root_form(r).pow(k);
  }
  return p;
}

RootRational RootRational::operator*(const RootRational& o) const {
  if (!field_ && !o.field_) return {};
  RootRational r;
  r.field_ = field_ ? field_ : o.field_;
  r.unit_ = unit_ * o.unit_;
  if (r.unit_ == 0) return zero(r.field_);
  r.factors_ = factors_;
  for (const auto& [root, e] : o.factors_) r.factors_[root] += e;
  const int n = r.nvars();
  r.num_ = num_.is_one() ? o.num_ : (o.num_.is_one() ? num_ : num_ * o.num_);
  r.den_ = den_.is_one() ? o.den_ : (o.den_.is_one() ? den_ : den_ * o.den_);
  if (r.num_.nvars() == 0) r.num_ = MultiPoly::constant(n, 1);
  if (r.den_.nvars() == 0) r.den_ = MultiPoly::constant(n, 1);
  // Residuals carry no root factor, so neither does their product.
  r.normalize(false);
  return r;
}

RootRational RootRational::inverse() const {
  if (is_zero()) throw PreconditionError("division by the zero function");
  RootRational r = *this;
  r.unit_ = 1 / unit_;
  for (auto& [root, e] : r.factors_) e = -e;
  std::swap(r.num_, r.den_);
  return r;
}

RootRational RootRational::operator/(const RootRational& o) const {
  if (o.is_zero()) throw PreconditionError("division by the zero function");
  return *this * o.inverse();
}

RootRational RootRational::operator-() const {
  RootRational r = *this;
  r.unit_ = -r.unit_;
  return r;
}

RootRational RootRational::operator+(const RootRational& o) const {
  if (is_zero()) {
    RootRational r = o;
    r.adopt(field_);
    return r;
  }
  if (o.is_zero()) {
    RootRational r = *this;
    r.adopt(o.field_);
    return r;
  }
  RootRational r;
  r.field_ = field_ ? field_ : o.field_;
  const int n = r.nvars();
  // Pull out the common root part min(e_a, e_b).
  std::map<Root, int> common, ra, rb;
  for (const auto& [root, e] : factors_) {
    auto it = o.factors_.find(root);
    int eb = it == o.factors_.end() ? 0 : it->second;
    int g = std::min(e, eb);
    if (g) common[root] = g;
    if (e - g) ra[root] = e - g;
    if (eb - g) rb[root] = eb - g;
  }
  for (const auto& [root, eb] : o.factors_) {
    if (factors_.count(root)) continue;
    int g = std::min(0, eb);
    if (g) common[root] = g;
    if (eb - g) rb[root] = eb - g;
    if (-g) ra[root] = -g;
  }
  MultiPoly ta = expand(ra, n, true) * num_;
  MultiPoly tb = expand(rb, n, true) * o.num_;
  MultiPoly sum;
  if (den_ == o.den_) {
    sum = ta * unit_ + tb * o.unit_;
    r.den_ = den_;
  } else {
    sum = (ta * o.den_) * unit_ + (tb * den_) * o.unit_;
    r.den_ = den_ * o.den_;
  }
  if (sum.is_zero()) return zero(r.field_);
  r.unit_ = 1;
  r.factors_ = std::move(common);
  r.num_ = std::move(sum);
  r.normalize(true);
  return r;
}

RootRational RootRational::operator-(const RootRational& o) const { return *this + (-o); }

RootRational& RootRational::operator*=(const RootRational& o) { return *this = *this * o; }
RootRational& RootRational::operator/=(const RootRational& o) { return *this = *this / o; }
RootRational& RootRational::operator+=(const RootRational& o) { return *this = *this + o; }

RootRational RootRational::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RootRational r = one(field_), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

bool RootRational::same_form(const RootRational& o) const {
  return unit_ == o.unit_ && factors_ == o.factors_ && num_ == o.num_ && den_ == o.den_;
}

int RootRational::multiplicity(const Root& r) const {
  if (is_zero()) throw PreconditionError("multiplicity of the zero function");
  Root pr = r.is_negative() ? -r : r;
  auto it = factors_.find(pr);
  int m = it == factors_.end() ? 0 : it->second;
  MultiPoly form = root_form(pr);
  for (int sign : {+1, -1}) {
    MultiPoly p = sign > 0 ? num_ : den_;
    while (!p.is_constant()) {
      auto q = p.divide_exact(form);
      if (!q) break;
      p = std::move(*q);
      m += sign;
    }
  }
  return m;
}

Rational RootRational::eval(const std::vector<Rational>& point) const {
  if (is_zero()) return 0;
  Rational v = unit_;
  bool vanishes = false;
  for (const auto& [r, e] : factors_) {
    Rational x = root_form(r).eval(point);
    if (x == 0) {
      if (e < 0) throw PreconditionError("evaluation at a pole: factor " + r.to_string() + " vanishes");
      vanishes = true;
      continue;
    }
    Rational p = 1;
    for (int k = 0; k < std::abs(e); ++k) p *= x;
    if (e > 0) v *= p;
    else v /= p;
  }
  Rational d = den_.eval(point);
  if (d == 0) throw PreconditionError("evaluation at a pole: residual denominator " + den_.to_string() + " vanishes");
  if (vanishes) return 0;
  return Rational(v * num_.eval(point) / d);
}

MultiPoly RootRational::expanded_numerator() const {
  if (is_zero()) return MultiPoly(nvars());
  return expand(factors_, nvars(), true) * num_ * unit_;
}

MultiPoly RootRational::expanded_denominator() const {
  return expand(factors_, nvars(), false) * den_;
}

namespace {

std::string paren(const std::string& s, bool need) { return need ? "(" + s + ")" : s; }

std::string render_root(const Root& r, int e) {
  // same spelling as a residual polynomial: "2*a2", not "2a2"
  const std::string f = root_form(r).to_string();
  std::string s = paren(f, f.find('+') != std::string::npos);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "*" : "") + parts[k];
  return s;
}

}  // namespace

namespace {

// Least common multiple of the coefficient denominators.
mpz_class coeff_lcm(const MultiPoly& p) {
  mpz_class l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  return l;
}

}  // namespace

// Display form: integer coefficients in the residuals, with the unit folded
// into a residual whenever that residual is already printed.
std::string RootRational::to_string() const {
  if (is_zero()) return "0";
  MultiPoly num = num_, den = den_;
  Rational a = abs(unit_);
  mpz_class ln = coeff_lcm(num), ld = coeff_lcm(den);
  num = num * Rational(ln);
  den = den * Rational(ld);
  a *= Rational(ld) / Rational(ln);
  if (!num.is_one()) {
    num = num * Rational(a.get_num());
    a = Rational(1, 1) / Rational(a.get_den());
  }
  if (!den.is_one()) {
    den = den * Rational(a.get_den());
    a = Rational(a.get_num());
  }
  std::vector<std::string> top, bot;
  if (a.get_num() != 1) top.push_back(a.get_num().get_str());
  if (a.get_den() != 1) bot.push_back(a.get_den().get_str());
  // a1 before a2 before a1+a2: by height, then by leading simple root.
  std::vector<std::pair<Root, int>> fs(factors_.begin(), factors_.end());
  std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) {
    if (x.first.height() != y.first.height()) return x.first.height() < y.first.height();
    return y.first < x.first;
  });
  for (const auto& [r, e] : fs) (e > 0 ? top : bot).push_back(render_root(r, std::abs(e)));
  if (!num.is_one()) top.push_back(paren(num.to_string(), num.size() > 1));
  if (!den.is_one()) bot.push_back(paren(den.to_string(), den.size() > 1));
  // A lone factor needs no grouping: "a1+a2" rather than "(a1+a2)".
  if (unit_ > 0 && bot.empty() && top.size() == 1 && top[0].front() == '(' && top[0].back() == ')')
    top[0] = top[0].substr(1, top[0].size() - 2);
  std::string s = unit_ < 0 ? "-" : "";
  s += top.empty() ? "1" : join(top);
  if (!bot.empty()) s += "/" + paren(join(bot), bot.size() > 1);
  return s;
}

bool rr_equal(const RootRational& a, const RootRational& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.same_form(b)) return true;
  std::map<Root, int> ea, eb;
  for (const auto& [r, e] : a.root_factors()) ea[r] += e;
  for (const auto& [r, e] : b.root_factors()) eb[r] += e;
  std::map<Root, int> la, lb;
  auto all = ea;
  for (const auto& [r, e] : eb) all.emplace(r, 0);
  for (const auto& [r, unused] : all) {
    int x = ea.count(r) ? ea[r] : 0, y = eb.count(r) ? eb[r] : 0;
    int m = std::min(x, y);
    if (x - m) la[r] = x - m;
    if (y - m) lb[r] = y - m;
  }
  const int n = std::max(a.nvars(), b.nvars());
  auto expand = [n](const std::map<Root, int>& f) {
    MultiPoly p = MultiPoly::constant(n, 1);
    for (const auto& [r, e] : f) p *= root_form(r).pow(e);
    return p;
  };
  MultiPoly lhs = expand(la) * a.residual_num() * b.residual_den() * a.unit();
  MultiPoly rhs = expand(lb) * b.residual_num() * a.residual_den() * b.unit();
  return lhs == rhs;
}

int multiplicity(const RootRational& a, const Root& r) { return a.multiplicity(r); }
RootRational pow(const RootRational& a, int k) { return a.pow(k); }
Rational rr_eval(const RootRational& a, const std::vector<Rational>& point) { return a.eval(point); }

RootRational reciprocal_product(FieldPtr f, const std::vector<Root>& roots) {
  RootRational r = RootRational::one(f);
  for (const Root& b : roots) r *= RootRational::of_root(f, b, -1);
  return r;
}

}  // namespace qtor
