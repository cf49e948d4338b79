#include <algorithm>

#include "qtor/dtilde.hpp"
#include "qtor/error.hpp"

namespace qtor {

Root alpha_seg(const DynkinDatum& d, int p, int q) {
  const int n = d.rank();
  if (p < 1 || q > n || p > q) throw PreconditionError("alpha segment out of range");
  Root r(n);
  if (d.family() == Family::D && q == n) {
    if (p >= n - 1) {
      r[n - 1] = 1;
      return r;
    }
    for (int k = p; k <= n - 2; ++k) r[k - 1] = 1;
    r[n - 1] = 1;
    return r;
  }
  for (int k = p; k <= q; ++k) r[k - 1] = 1;
  return r;
}

Root theta_pq(const DynkinDatum& d, int p, int q) {
  const int n = d.rank();
  if (d.family() != Family::D) throw PreconditionError("theta roots exist only in type D");
  if (p < 1 || q < 1 || p > n - 1 || q > n - 1) throw PreconditionError("theta indices out of range");
  const int a = std::min(p, q), b = std::max(p, q);
  Root r(n);
  for (int k = a; k < b; ++k) r[k - 1] = 1;
  for (int k = b; k <= n - 2; ++k) r[k - 1] = 2;
  r[n - 2] = 1;
  r[n - 1] = 1;
  return r;
}

namespace {

void require_q0(const ARFrame& f, Family fam) {
  if (f.datum().family() != fam)
    throw PreconditionError(std::string("closed form needs a type ") + family_letter(fam) + " frame");
  if (f.orientation().to_string() != Orientation::monotonic(f.datum()).to_string())
    throw PreconditionError("closed forms are stated for the monotonic orientation only");
}

// r = (xi(i) - s + 2)/2 after checking the label lies in C_{Q0}.
int string_index(const ARFrame& f, int i, int s, int k) {
  if (i < 1 || i > f.rank()) throw PreconditionError("vertex out of range");
  int g = f.xi(i) - s;
  if (g < 0 || g % 2 != 0) throw PreconditionError("(i,s) is not in I^{<=xi}");
  int r = g / 2 + 1;
  if (r > f.nQ(i)) throw PreconditionError("(i,s) lies outside the first period");
  if (k < 1 || k > r) throw PreconditionError("k must satisfy 1 <= k <= r");
  return r;
}

}  // namespace

RootRational closed_form_A(const ARFrame& f, int i, int s, int k) {
  require_q0(f, Family::A);
  const int r = string_index(f, i, s, k);
  const auto& d = f.datum();
  auto F = Field::of(d);
  RootRational v = RootRational::one(F);
  for (int p = r - k + 1; p <= r; ++p)
    for (int q = r; q <= r + i - 1; ++q) v *= RootRational::of_root(F, alpha_seg(d, p, q), -1);
  return v;
}

RootRational closed_form_D(const ARFrame& f, int i, int s, int k) {
  require_q0(f, Family::D);
  const int r = string_index(f, i, s, k);
  const auto& d = f.datum();
  const int n = d.rank();
  auto F = Field::of(d);
  // p = 0 factors are 1 by convention.
  auto A = [&](int p, int q, int e) {
    return p == 0 ? RootRational::one(F) : RootRational::of_root(F, alpha_seg(d, p, q), e);
  };
  auto T = [&](int p, int q, int e) {
    return p == 0 ? RootRational::one(F) : RootRational::of_root(F, theta_pq(d, p, q), e);
  };
  const int r1 = r + i - n + 1, r2 = std::max(r1 - k + 1, 0), r3 = r - k + 1;
  RootRational v = RootRational::one(F);
  if (i <= n - 2) {
    for (int p = r3; p <= r; ++p)
      for (int q = r; q <= n - 2 + std::min(0, r1); ++q) v *= A(p, q, -1);
    for (int p = r2; p <= r1; ++p) {
      if (p == 0) continue;
      v *= T(p, p, 1);
      for (int q = r3; q <= r; ++q) v *= T(p, q, -1);
      for (int q = r1; q <= n; ++q) v *= A(p, q, -1);
    }
  } else {
    const int si = (r - 1) % 2 == 0 ? i : (i == n ? n - 1 : n);
    for (int p = r3; p <= r; ++p)
      for (int q = r; q <= n - 2; ++q) v *= A(p, q, -1);
    for (int p = r3; p <= r; ++p) v *= A(p, si, -1);
    for (int p = r3; p <= r; ++p)
      for (int q = p + 1; q <= r; ++q) v *= T(p, q, -1);
  }
  return v;
}

RootRational closed_form(const ARFrame& f, const KRLabel& l) {
  switch (f.datum().family()) {
    case Family::A: return closed_form_A(f, l.i, l.p, l.k);
    case Family::D: return closed_form_D(f, l.i, l.p, l.k);
    default: throw PreconditionError("no closed KR formula in type E");
  }
}

std::vector<KRLabel> q0_labels(const ARFrame& f) {
  std::vector<KRLabel> out;
  for (int i = 1; i <= f.rank(); ++i)
    for (int r = 1; r <= f.nQ(i); ++r)
      for (int k = 1; k <= r; ++k) out.push_back({i, f.xi(i) - 2 * r + 2, k});
  return out;
}

}  // namespace qtor
