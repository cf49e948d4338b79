#include <doctest.h>

#include "qtor/error.hpp"
#include "qtor/quantum_cartan.hpp"
#include "support/oracles.hpp"

using namespace qtor;

namespace {

const std::vector<std::pair<Family, int>> kTypes = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::A, 6},
    {Family::A, 7}, {Family::A, 8}, {Family::D, 4}, {Family::D, 5}, {Family::D, 6}, {Family::D, 7},
    {Family::D, 8}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}};

int coxeter_number(const DynkinDatum& d) { return 2 * d.num_positive() / d.rank(); }

}  // namespace

TEST_CASE("A3 series coefficients") {
  CtildeTable t(DynkinDatum::make(Family::A, 3));
  CHECK(t(1, 1, 7) == -1);
  CHECK(t(1, 3, 3) == 1);
  CHECK(t(2, 2, 3) == 1);
  CHECK(t(1, 2, 6) == -1);
  // C~_11(z) = z - z^7 + z^9 - z^15 + ...
  std::vector<int> c11 = {0, 1, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0};
  for (int m = 1; m <= 16; ++m) CHECK(t(1, 1, m) == c11[m]);
}

TEST_CASE("Non-positive m gives zero; bad indices are rejected") {
  CtildeTable t(DynkinDatum::make(Family::D, 4));
  for (int m = -5; m <= 0; ++m) CHECK(t(1, 1, m) == 0);
  CHECK_THROWS_AS(t(0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(t(1, 5, 1), PreconditionError);
}

TEST_CASE("Recurrence agrees with the series-inversion oracle up to m = 40") {
  for (auto [fam, n] : kTypes) {
    auto d = DynkinDatum::make(fam, n);
    CAPTURE(d.name());
    CtildeTable t(d);
    auto want = oracle::ctilde_series(d, 40);
    for (int m = 1; m <= 40; ++m)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) CHECK(t(i, j, m) == want[m][i - 1][j - 1]);
  }
}

TEST_CASE("Zero below distance, one just above, symmetric, 2h-periodic") {
  for (auto [fam, n] : kTypes) {
    auto d = DynkinDatum::make(fam, n);
    CAPTURE(d.name());
    CtildeTable t(d);
    const int h = coxeter_number(d);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        for (int m = 1; m <= d.distance(i, j); ++m) CHECK(t(i, j, m) == 0);
        CHECK(t(i, j, d.distance(i, j) + 1) == 1);
        for (int m = 1; m <= 4 * h; ++m) {
          CHECK(t(i, j, m) == t(j, i, m));
          CHECK(t(i, j, m + 2 * h) == t(i, j, m));
        }
      }
  }
}

TEST_CASE("Copies are independent and agree") {
  auto d = DynkinDatum::make(Family::E, 7);
  CtildeTable a(d);
  (void)a(3, 4, 30);
  CtildeTable b(a);
  for (int m = 1; m <= 60; ++m) CHECK(a(2, 6, m) == b(2, 6, m));
}

TEST_CASE("nval: diagonal, below, and the Euler-form identity") {
  for (auto [fam, n] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 5}, {Family::E, 6}}) {
    auto f = fam == Family::A ? ARFrame::build(fam, n, Orientation::parse("2>1,2>3"), std::make_pair(2, 0))
                              : ARFrame::monotonic(fam, n);
    CAPTURE(f.datum().name());
    CtildeTable t(f.datum());
    std::vector<TorusPoint> pts;
    for (long s = 1; s <= 2L * f.N(); ++s) pts.push_back(f.phi_inv(s));
    for (const auto& a : pts) {
      CHECK(nval(t, f, a, a) == 1);
      auto [ba, ea] = f.beta_eps(a);
      for (const auto& b : pts) {
        if (b.p < a.p) CHECK(nval(t, f, a, b) == 0);
        auto [bb, eb] = f.beta_eps(b);
        if (b.p > a.p) CHECK(nval(t, f, a, b) == ea * eb * f.cartan_pairing(ba, bb));
        if (b.p >= a.p) CHECK(t(a.i, b.i, b.p - a.p + 1) == ea * eb * f.euler_form(ba, bb));
      }
    }
    CHECK_THROWS_AS(nval(t, f, {1, 1}, {1, -1}), PreconditionError);
  }
}
