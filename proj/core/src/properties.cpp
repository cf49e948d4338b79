#include <algorithm>
#include <cstdlib>
#include <thread>

#include "qtor/dtilde.hpp"
#include "qtor/error.hpp"

namespace qtor {

namespace {

void check_position(DtildeEngine& e, long t, PropertyReport& rep) {
  const ARFrame& f = e.frame();
  const Root& bt = f.beta(t);
  const RootRational& xt = e.initial(t);

  // (A) a reciprocal product of roots, exponents |<beta_t, beta>_Q|.
  ++rep.checked_a;
  if (!xt.is_root_monomial() || xt.unit() != 1) {
    rep.violations.push_back({'A', t, bt, "not a reciprocal product of roots: " + xt.to_string()});
  } else {
    for (const auto& [b, ex] : xt.root_factors()) {
      int want = std::abs(f.euler_form(bt, b));
      if (ex > 0 || -ex != want)
        rep.violations.push_back({'A', t, b,
                                  "exponent " + std::to_string(ex) + ", expected -" + std::to_string(want)});
    }
  }

  // (B) x_t x_{t-} = beta_t^{-1} prod of the r < t < r+ with i_r ~ i_t.
  ++rep.checked_b;
  RootRational lhs = xt;
  if (long tm = f.t_minus(t); tm > 0) lhs *= e.initial(tm);
  RootRational rhs = RootRational::of_root(e.field(), bt, -1);
  const int it = f.letter(t);
  for (int j : f.datum().neighbors(it)) {
    for (long r = t - 1; r >= 1; --r)
      if (f.letter(r) == j) {
        rhs *= e.initial(r);
        break;
      }
  }
  if (!rr_equal(lhs, rhs))
    rep.violations.push_back({'B', t, bt, lhs.to_string() + " != " + rhs.to_string()});

  // (C) every root has multiplicity in {-1, 0, 1} in D~(Y_{i,p}).
  ++rep.checked_c;
  const RootRational& y = e.Y(f.phi_inv(t));
  for (const Root& b : f.datum().positive_roots()) {
    int m = y.multiplicity(b);
    if (std::abs(m) > 1)
      rep.violations.push_back({'C', t, b, "multiplicity " + std::to_string(m)});
  }
}

}  // namespace

PropertyReport verify_properties(const ARFrame& f, const CtildeTable& t, long tmax, int threads) {
  if (tmax < 1) throw PreconditionError("tmax must be positive");
  if (tmax > 2L * f.N()) throw PreconditionError("Property A is checked on t <= 2N only");
  threads = std::max(1, std::min<int>(threads, static_cast<int>(tmax)));
  std::vector<PropertyReport> parts(threads);
  auto work = [&](int w) {
    DtildeEngine e(f, t);
    for (long s = 1 + w; s <= tmax; s += threads) check_position(e, s, parts[w]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& ep : errs)
      if (ep) std::rethrow_exception(ep);
  }
  PropertyReport rep;
  rep.tmax = tmax;
  for (auto& p : parts) {
    rep.checked_a += p.checked_a;
    rep.checked_b += p.checked_b;
    rep.checked_c += p.checked_c;
    rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
  }
  std::stable_sort(rep.violations.begin(), rep.violations.end(),
                   [](const auto& a, const auto& b) { return a.t < b.t; });
  return rep;
}

}  // namespace qtor
