#include "qtor/dtilde.hpp"

#include <cctype>
#include <sstream>

#include "qtor/error.hpp"

namespace qtor {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("monomial '" + s + "': " + what + " at offset " + std::to_string(pos));
  }
};

}  // namespace

TorusMonomial TorusMonomial::parse(const std::string& text) {
  TorusMonomial m;
  Cursor c{text};
  c.skip_ws();
  if (c.pos == text.size()) return m;
  if (c.eat('1')) {
    c.skip_ws();
    if (c.pos != text.size()) c.fail("trailing input");
    return m;
  }
  do {
    c.expect('Y');
    c.expect('[');
    int i = c.integer();
    c.expect(',');
    int p = c.integer();
    c.expect(']');
    int e = 1;
    if (c.eat('^')) e = c.integer();
    m.mul({i, p}, e);
  } while (c.eat('*'));
  c.skip_ws();
  if (c.pos != text.size()) c.fail("trailing input");
  return m;
}

TorusMonomial TorusMonomial::kr_string(int i, int p, int k) {
  TorusMonomial m;
  for (int j = 0; j < k; ++j) m.mul({i, p + 2 * j}, 1);
  return m;
}

TorusMonomial& TorusMonomial::mul(const TorusPoint& x, int e) {
  if (e == 0) return *this;
  int& slot = exps[x];
  slot += e;
  if (slot == 0) exps.erase(x);
  return *this;
}

std::string TorusMonomial::to_string() const {
  if (exps.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, e] : exps) {
    if (!first) os << '*';
    os << "Y[" << x.i << ',' << x.p << ']';
    if (e != 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

std::string KRLabel::to_string() const {
  return "X(" + std::to_string(i) + "," + std::to_string(p) + ";" + std::to_string(k) + ")";
}

KRLabel initial_label(const ARFrame& f, long t) {
  TorusPoint x = f.phi_inv(t);
  return {x.i, x.p, f.top_string_length(x)};
}

DtildeEngine::DtildeEngine(const ARFrame& f, const CtildeTable& t)
    : frame_(f), table_(t), field_(Field::of(f.datum())) {
  if (t.datum().name() != f.datum().name()) throw PreconditionError("C~ table and frame have different types");
}

const RootRational& DtildeEngine::Y(const TorusPoint& x) {
  frame_.require(x);
  auto it = ymemo_.find(x);
  if (it != ymemo_.end()) return it->second;
  // Only (j,s) with p <= s <= xi(j) contribute; everything else has both
  // C~ arguments <= 0.
  std::map<Root, int> exps;
  for (int j = 1; j <= frame_.rank(); ++j) {
    int s = x.p;
    if ((frame_.xi(j) - s) % 2 != 0) ++s;
    for (; s <= frame_.xi(j); s += 2) {
      std::int64_t e = table_(x.i, j, s - x.p - 1) - table_(x.i, j, s - x.p + 1);
      if (e == 0) continue;
      exps[frame_.beta(frame_.phi({j, s}))] += static_cast<int>(e);
    }
  }
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  const int n = frame_.rank();
  auto v = RootRational::from_parts(field_, 1, exps, MultiPoly::constant(n, 1), MultiPoly::constant(n, 1));
  return ymemo_.emplace(x, std::move(v)).first->second;
}

RootRational DtildeEngine::monomial(const TorusMonomial& m) {
  RootRational r = RootRational::one(field_);
  for (const auto& [x, e] : m.exps) r *= Y(x).pow(e);
  return r;
}

void DtildeEngine::check_label(const KRLabel& l) const {
  if (l.i < 1 || l.i > frame_.rank()) throw PreconditionError("vertex " + std::to_string(l.i) + " out of range");
  if (l.k < 0) throw PreconditionError("KR string length must be nonnegative");
  if ((frame_.xi(l.i) - l.p) % 2 != 0)
    throw PreconditionError("(" + std::to_string(l.i) + "," + std::to_string(l.p) + ") has the wrong parity");
  if (l.k == 0) return;
  if (l.top() > frame_.xi(l.i))
    throw PreconditionError("KR label " + l.to_string() + " has top " + std::to_string(l.top()) +
                            " above xi(" + std::to_string(l.i) + ") = " + std::to_string(frame_.xi(l.i)));
}

const RootRational& DtildeEngine::KR(const KRLabel& l) {
  check_label(l);
  return kr_rec(l);
}

// Solve the T-system at (i, p+2, k) for X^{(k)}_{i,p}. Every right-hand label
// has a larger top, or the same top and a smaller k.
const RootRational& DtildeEngine::kr_rec(const KRLabel& l) {
  auto it = krmemo_.find(l);
  if (it != krmemo_.end()) return it->second;
  RootRational v;
  if (l.k == 0) {
    v = RootRational::one(field_);
  } else if (l.top() == frame_.xi(l.i)) {
    v = RootRational::one(field_);
    for (int j = 0; j < l.k; ++j) v *= Y({l.i, l.p + 2 * j});
  } else {
    RootRational num = kr_rec({l.i, l.p, l.k + 1}) * kr_rec({l.i, l.p + 2, l.k - 1});
    RootRational nb = RootRational::one(field_);
    for (int j : frame_.datum().neighbors(l.i)) nb *= kr_rec({j, l.p + 1, l.k});
    num += nb;
    const RootRational& den = kr_rec({l.i, l.p + 2, l.k});
    if (den.is_zero()) throw ConsistencyError("T-system divisor vanished at " + l.to_string());
    v = num / den;
    if (v.is_zero()) throw ConsistencyError("T-system produced zero at " + l.to_string());
  }
  return krmemo_.emplace(l, std::move(v)).first->second;
}

RootRational dtilde_Y(const ARFrame& f, const CtildeTable& t, int i, int p) {
  DtildeEngine e(f, t);
  return e.Y({i, p});
}

RootRational dtilde_monomial(const ARFrame& f, const CtildeTable& t, const TorusMonomial& m) {
  DtildeEngine e(f, t);
  return e.monomial(m);
}

RootRational dtilde_KR(const ARFrame& f, const CtildeTable& t, const KRLabel& l) {
  DtildeEngine e(f, t);
  return e.KR(l);
}

}  // namespace qtor
