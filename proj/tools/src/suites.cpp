#include "suites.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "qtor/cluster.hpp"
#include "qtor/dbar.hpp"
#include "qtor/dtilde.hpp"
#include "qtor/error.hpp"

namespace qtor::cli {

void SuiteResult::check(bool cond, const std::string& witness) {
  ++checks;
  if (cond) return;
  ok = false;
  if (witnesses.size() < 8) witnesses.push_back(witness);
}

namespace {

constexpr const char* kSinkSource = "2>1,2>3";

bool is_q0(const ARFrame& f) {
  return f.orientation().to_string() == Orientation::monotonic(f.datum()).to_string();
}

bool is_a3_sink_source(const ARFrame& f) {
  return f.datum().name() == "A3" && f.orientation().to_string() == Orientation::parse(kSinkSource).to_string();
}

void need(bool cond, const std::string& suite, const std::string& what) {
  if (!cond) throw PreconditionError("suite '" + suite + "' needs " + what);
}

// A3 sink-source golden data: node -> the printed denominator, as root lists.
// The D~ value of the initial KR class at the node is its reciprocal.
struct Node {
  int i, p;
  std::vector<std::vector<int>> roots;
};

const std::vector<Node>& a3_nodes() {
  static const std::vector<Node> nodes = {
      {1, -1, {{0, 1, 0}, {1, 1, 0}}},
      {1, -3, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}}},
      {1, -5, {{1, 0, 0}}},
      {1, -7, {}},
      {1, -9, {{0, 1, 0}, {1, 1, 0}}},
      {2, 0, {{0, 1, 0}}},
      {2, -2, {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}}},
      {2, -4, {{1, 0, 0}, {0, 0, 1}, {1, 1, 1}}},
      {2, -6, {}},
      {2, -8, {{0, 1, 0}}},
      {3, -1, {{0, 1, 0}, {0, 1, 1}}},
      {3, -3, {{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}},
      {3, -5, {{0, 0, 1}}},
      {3, -7, {}},
      {3, -9, {{0, 1, 0}, {0, 1, 1}}},
  };
  return nodes;
}

RootRational recip(const FieldPtr& F, const std::vector<std::vector<int>>& roots) {
  std::vector<Root> rs;
  for (const auto& c : roots) rs.push_back(Root::from_coords(c));
  return reciprocal_product(F, rs);
}

SuiteResult a3_nodes_suite(const ARFrame& f, const CtildeTable& t) {
  need(is_a3_sink_source(f), "a3-nodes", "the A3 frame with orientation 2>1,2>3");
  SuiteResult r{"a3-nodes"};
  DtildeEngine e(f, t);
  for (const auto& nd : a3_nodes()) {
    KRLabel l{nd.i, nd.p, f.top_string_length({nd.i, nd.p})};
    const auto& v = e.KR(l);
    auto want = recip(e.field(), nd.roots);
    r.check(rr_equal(v, want), l.to_string() + ": got " + v.to_string() + ", expected " + want.to_string());
  }
  return r;
}

SuiteResult mutations(const ARFrame& f, const CtildeTable& t) {
  need(is_a3_sink_source(f), "mutations", "the A3 frame with orientation 2>1,2>3");
  SuiteResult r{"mutations"};
  auto F = Field::of(f.datum());
  auto poly = [&](std::vector<std::pair<std::array<int, 3>, int>> terms) {
    MultiPoly p(3);
    for (auto& [e, c] : terms) p.add_term(Exponent{static_cast<std::uint16_t>(e[0]), static_cast<std::uint16_t>(e[1]),
                                                   static_cast<std::uint16_t>(e[2])},
                                          Rational(c));
    return RootRational::of_poly(F, p);
  };
  Seed s = initial_seed(f, t, 2 * f.N(), true);
  struct Want {
    int v;
    RootRational value;
  };
  std::vector<Want> wants = {
      {4, poly({{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 1}, 1}}) * recip(F, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})},
      {5, poly({{{0, 1, 0}, 1}, {{0, 0, 1}, 2}}) * recip(F, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})},
      {6, poly({{{1, 0, 0}, 2}, {{0, 1, 0}, 1}}) * recip(F, {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}})},
  };
  for (const auto& w : wants) {
    Seed m = mutate(s, w.v);
    r.check(rr_equal(m.value(w.v), w.value),
            "x'" + std::to_string(w.v) + " = " + m.value(w.v).to_string() + ", expected " + w.value.to_string());
    r.check(exchange_holds(s, m, w.v), "exchange relation at " + std::to_string(w.v));
    Seed back = mutate(m, w.v);
    r.check(rr_equal(back.value(w.v), s.value(w.v)) && back.quiver == s.quiver,
            "mutation at " + std::to_string(w.v) + " is not involutive");
  }
  return r;
}

SuiteResult properties(const ARFrame& f, const CtildeTable& t, const SuiteOptions& opt) {
  SuiteResult r{"properties"};
  long tmax = opt.tmax ? opt.tmax : 2L * f.N();
  auto rep = verify_properties(f, t, tmax, opt.threads);
  r.checks = rep.checked_a + rep.checked_b + rep.checked_c;
  for (const auto& v : rep.violations) {
    r.ok = false;
    if (r.witnesses.size() < 8)
      r.witnesses.push_back(std::string("(") + v.property + ") t=" + std::to_string(v.t) + " beta=" +
                            v.beta.to_string() + ": " + v.detail);
  }
  return r;
}

SuiteResult closed_forms(const ARFrame& f, const CtildeTable& t) {
  need(is_q0(f) && f.datum().family() != Family::E, "closed-forms", "a type A or D frame with the monotonic orientation");
  SuiteResult r{"closed-forms"};
  DtildeEngine e(f, t);
  for (const auto& l : q0_labels(f)) {
    const auto& v = e.KR(l);
    auto c = closed_form(f, l);
    r.check(rr_equal(v, c), l.to_string() + ": T-system " + v.to_string() + ", closed form " + c.to_string());
  }
  return r;
}

SuiteResult generators(const ARFrame& f, const CtildeTable& t) {
  need(is_q0(f) && f.datum().family() != Family::E, "generators", "a type A or D frame with the monotonic orientation");
  SuiteResult r{"generators"};
  DtildeEngine e(f, t);
  for (long s = 1; s <= f.N(); ++s) {
    TorusPoint x = f.phi_inv(s);
    const auto& v = e.KR({x.i, x.p, 1});
    auto c = cuspidal_value(f, f.beta(s));
    r.check(rr_equal(v, c), x.to_string() + ": D~ " + v.to_string() + ", D-bar " + c.to_string());
  }
  return r;
}

SuiteResult periodicity(const ARFrame& f, const CtildeTable& t) {
  SuiteResult r{"periodicity"};
  DtildeEngine e(f, t);
  const long N2 = 2L * f.N();
  for (long s = 1; s <= f.N(); ++s)
    r.check(rr_equal(e.initial(s + N2), e.initial(s)), "x_" + std::to_string(s + N2) + " != x_" + std::to_string(s));
  for (int i = 1; i <= f.rank(); ++i) {
    KRLabel fr{i, f.xi(i) - 2 * f.h() + 2, f.h()};
    r.check(e.KR(fr).is_one(), "frozen " + fr.to_string() + " = " + e.KR(fr).to_string());
    for (int shift = 0; shift <= 2 * f.h(); shift += 2) {
      int p = f.xi(i) - 2 * f.h() + 2 - shift;
      auto v = e.monomial(TorusMonomial::kr_string(i, p, f.h()));
      r.check(v.is_one(), "full period string at (" + std::to_string(i) + "," + std::to_string(p) + ") = " + v.to_string());
    }
  }
  return r;
}

SuiteResult ctilde_suite(const ARFrame& f, const CtildeTable& t) {
  SuiteResult r{"ctilde"};
  const auto& d = f.datum();
  const int n = d.rank(), h = f.h();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      for (int m = 1; m <= d.distance(i, j); ++m)
        r.check(t(i, j, m) == 0, "C~" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(m) + ") != 0");
      r.check(t(i, j, d.distance(i, j) + 1) == 1, "C~ at distance+1 is not 1");
      for (int m = 1; m <= 4 * h; ++m) {
        r.check(t(i, j, m) == t(j, i, m), "C~ not symmetric");
        r.check(t(i, j, m + 2 * h) == t(i, j, m), "C~ not 2h-periodic");
      }
    }
  // C~_ij(s-p+1) = eps eps <beta, beta>_Q on a 2h window with s >= p.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int p = f.xi(i); p > f.xi(i) - 2 * h; p -= 2)
        for (int s = f.xi(j); s > f.xi(j) - 2 * h; s -= 2) {
          if (s < p) continue;
          auto [bi, ei] = f.beta_eps({i, p});
          auto [bj, ej] = f.beta_eps({j, s});
          r.check(t(i, j, s - p + 1) == ei * ej * f.euler_form(bi, bj),
                  "C~ vs Euler form at (" + std::to_string(i) + "," + std::to_string(p) + ";" + std::to_string(j) +
                      "," + std::to_string(s) + ")");
        }
  return r;
}

SuiteResult flag(const ARFrame& f, const CtildeTable& t, const SuiteOptions& opt) {
  SuiteResult r{"flag"};
  const auto& d = f.datum();
  DtildeEngine e(f, t);
  auto tab = flag_minor_values(d, f.reduced_word());
  for (long s = 1; s <= f.N(); ++s)
    r.check(rr_equal(tab.values[s - 1].inverse(), e.initial(s)),
            "1/P_" + std::to_string(s) + " != D~(x_" + std::to_string(s) + ")");
  // Random reduced words of w0 reached by braid moves.
  std::mt19937 rng(opt.seed);
  Word w = f.reduced_word();
  for (int trial = 0; trial < 10; ++trial) {
    for (int step = 0; step < 40; ++step) {
      auto mv = available_moves(d, w);
      if (mv.empty()) break;
      w = apply_move(w, mv[std::uniform_int_distribution<std::size_t>(0, mv.size() - 1)(rng)]);
    }
    auto ft = flag_minor_values(d, w);
    for (int j = 1; j <= f.N(); ++j) {
      int jp = t_plus(w, j);
      if (jp == 0) continue;
      for (const Root& b : d.positive_roots()) {
        int diff = ft.values[j - 1].multiplicity(b) - ft.values[jp - 1].multiplicity(b);
        r.check(diff <= 1, "Property C fails for word " + word_to_string(w) + " at j=" + std::to_string(j));
      }
    }
  }
  return r;
}

SuiteResult minimal_pairs_suite(const ARFrame& f) {
  SuiteResult r{"minimal-pairs"};
  const auto& d = f.datum();
  const int n = d.rank();
  if (d.family() == Family::D && is_q0(f)) {
    for (int p = 1; p < n - 1; ++p)
      for (int q = p + 1; q <= n - 1; ++q) {
        const bool odd = p % 2 == 1;
        MinimalPair want{alpha_seg(d, p, odd ? n : n - 1), alpha_seg(d, q, odd ? n - 1 : n)};
        auto got = minimal_pair(f, theta_pq(d, p, q));
        r.check(got == want, "theta" + std::to_string(p) + std::to_string(q) + ": got (" + got.gamma.to_string() +
                                 ", " + got.delta.to_string() + ")");
      }
  }
  for (const Root& b : d.positive_roots()) {
    auto a = cuspidal_via_minimal_pair(f, b, PairPolicy::MaxGamma);
    if (d.family() != Family::E && is_q0(f)) {
      r.check(a.applicable, b.to_string() + ": minimal-pair recursion blocked");
      if (a.applicable) r.check(rr_equal(a.value, cuspidal_value(f, b)), b.to_string() + ": recursion disagrees");
    }
    auto c = cuspidal_via_minimal_pair(f, b, PairPolicy::MinGamma);
    if (a.applicable && c.applicable)
      r.check(rr_equal(a.value, c.value), b.to_string() + ": tie-break policies disagree");
  }
  auto cov = cuspidal_coverage(f);
  r.notes.push_back("minimal-pair recursion applicable on " + std::to_string(cov.applicable) + "/" +
                    std::to_string(cov.roots) + " roots");
  return r;
}

SuiteResult schur_weyl(const ARFrame& f, const CtildeTable& t, const SuiteOptions& opt) {
  need(is_q0(f) && f.datum().family() == Family::A, "schur-weyl", "a type A frame with the monotonic orientation");
  SuiteResult r{"schur-weyl"};
  const int n = f.rank();
  std::mt19937 rng(opt.seed);
  DtildeEngine e(f, t);
  std::vector<Rational> ones(n, Rational(1));
  for (int trial = 0; trial < 50; ++trial) {
    DominantExponents m;
    for (int i = 1; i <= n; ++i)
      for (int rr = 1; rr <= n - i + 1; ++rr)
        if (int k = std::uniform_int_distribution<int>(0, 2)(rng); k) m[{i, rr}] = k;
    long total = 0;
    for (const auto& [ir, k] : m) total += static_cast<long>(ir.first) * k;
    mpz_class fac;
    mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(total));
    Rational lhs = predicted_dim_ratio(f, m);
    Rational rhs = Rational(fac) * e.monomial(dominant_monomial(f, m)).eval(ones);
    r.check(lhs == rhs, "m=" + dominant_monomial(f, m).to_string() + ": " + lhs.get_str() + " vs " + rhs.get_str());
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"a3-nodes",    "mutations", "properties",    "closed-forms", "generators",
                                                 "periodicity", "ctilde",    "flag",          "minimal-pairs", "schur-weyl"};
  return names;
}

std::vector<std::string> applicable_suites(const ARFrame& f) {
  std::vector<std::string> out;
  const bool ad = f.datum().family() != Family::E;
  for (const auto& s : suite_names()) {
    if ((s == "a3-nodes" || s == "mutations") && !is_a3_sink_source(f)) continue;
    if ((s == "closed-forms" || s == "generators") && !(ad && is_q0(f))) continue;
    if (s == "schur-weyl" && !(is_q0(f) && f.datum().family() == Family::A)) continue;
    out.push_back(s);
  }
  return out;
}

SuiteResult run_suite(const std::string& name, const ARFrame& f, const CtildeTable& t, const SuiteOptions& opt) {
  if (name == "a3-nodes") return a3_nodes_suite(f, t);
  if (name == "mutations") return mutations(f, t);
  if (name == "properties") return properties(f, t, opt);
  if (name == "closed-forms") return closed_forms(f, t);
  if (name == "generators") return generators(f, t);
  if (name == "periodicity") return periodicity(f, t);
  if (name == "ctilde") return ctilde_suite(f, t);
  if (name == "flag") return flag(f, t, opt);
  if (name == "minimal-pairs") return minimal_pairs_suite(f);
  if (name == "schur-weyl") return schur_weyl(f, t, opt);
  throw PreconditionError("unknown suite '" + name + "'");
}

}  // namespace qtor::cli
