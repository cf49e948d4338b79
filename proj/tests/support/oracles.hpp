#pragma once

// Independent reference computations. Nothing here calls into the code paths
// being checked except the Dynkin datum itself (Cartan matrix, adjacency).

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qtor/cartan.hpp"
#include "qtor/frame.hpp"
#include "qtor/root_rational.hpp"

namespace oracle {

using qtor::DynkinDatum;
using qtor::Root;

// Coefficients of z^m, m = 1..mmax, in the inverse of C(z) = (z+1/z) I - A.
// C(z) = z^{-1} P(z) with P = (1+z^2) I - z A and P(0) = I, so
// C(z)^{-1} = z * sum_k (I - P)^k, truncated at degree mmax - 1.
inline std::vector<std::vector<std::vector<std::int64_t>>> ctilde_series(const DynkinDatum& d, int mmax) {
  const int n = d.rank(), D = mmax;  // degrees 0..D-1
  using Mat = std::vector<std::vector<std::int64_t>>;
  using Series = std::vector<Mat>;  // Series[deg]
  auto zero = [&] { return Mat(n, std::vector<std::int64_t>(n, 0)); };
  Series Q(D, zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (D > 1 && d.adjacent(i + 1, j + 1)) Q[1][i][j] = 1;
      if (D > 2 && i == j) Q[2][i][j] = -1;
    }
  auto mul = [&](const Series& a, const Series& b) {
    Series c(D, zero());
    for (int x = 0; x < D; ++x)
      for (int y = 0; x + y < D; ++y)
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) {
            if (!a[x][i][k]) continue;
            for (int j = 0; j < n; ++j) c[x + y][i][j] += a[x][i][k] * b[y][k][j];
          }
    return c;
  };
  Series S(D, zero()), P(D, zero());
  for (int i = 0; i < n; ++i) P[0][i][i] = 1;  // Q^0
  for (int k = 0; k < D; ++k) {                // Q has no constant term: Q^k starts at z^k
    for (int x = 0; x < D; ++x)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) S[x][i][j] += P[x][i][j];
    P = mul(P, Q);
  }
  // out[m][i][j] = C~_{i+1,j+1}(m)
  std::vector<std::vector<std::vector<std::int64_t>>> out(mmax + 1, zero());
  for (int m = 1; m <= mmax; ++m) out[m] = S[m - 1];
  return out;
}

inline int highest_coefficient(const DynkinDatum& d) {
  switch (d.family()) {
    case qtor::Family::A: return 1;
    case qtor::Family::D: return 2;
    default: return d.rank() == 6 ? 3 : d.rank() == 7 ? 4 : 6;
  }
}

// Positive roots = nonnegative lattice vectors of norm 2, by exhaustive search.
inline std::vector<Root> positive_roots_brute(const DynkinDatum& d) {
  const int n = d.rank(), cap = highest_coefficient(d);
  std::vector<Root> out;
  std::vector<int> c(n, 0);
  while (true) {
    int k = 0;
    while (k < n && c[k] == cap) c[k++] = 0;
    if (k == n) break;
    ++c[k];
    long norm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += static_cast<long>(c[i]) * d.cartan(i + 1, j + 1) * c[j];
    if (norm == 2) out.push_back(Root::from_coords(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Simple reflection applied directly through the Cartan matrix.
inline Root reflect(const DynkinDatum& d, int i, Root b) {
  int pair = 0;
  for (int j = 1; j <= d.rank(); ++j) pair += d.cartan(i, j) * b.coeff(j);
  b[i - 1] -= pair;
  return b;
}

// b_k = s_{i1} ... s_{i(k-1)} (a_{ik}) evaluated right to left.
inline std::vector<Root> inversion_roots(const DynkinDatum& d, const qtor::Word& w) {
  std::vector<Root> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Root b = Root::simple(d.rank(), w[k]);
    for (std::size_t l = k; l-- > 0;) b = reflect(d, w[l], b);
    out.push_back(b);
  }
  return out;
}

// <a_i, a_j>_Q = delta_ij - #(i -> j), straight from the arrow list.
inline int euler_form(const qtor::Orientation& q, const Root& b, const Root& c) {
  const int n = b.rank();
  long s = 0;
  for (int i = 0; i < n; ++i) s += static_cast<long>(b[i]) * c[i];
  for (auto [u, v] : q.arrows) s -= static_cast<long>(b[u - 1]) * c[v - 1];
  return static_cast<int>(s);
}

// phi^{-1}(t) = (i_t, xi(i_t) - 2 N_Q(t) + 2), N_Q(t) = occurrences of i_t in
// the first t letters.
inline qtor::TorusPoint phi_inv_by_counting(const qtor::ARFrame& f, long t) {
  qtor::Word w = f.word(t);
  int i = w.back();
  long cnt = std::count(w.begin(), w.end(), i);
  return {i, static_cast<int>(f.xi(i) - 2 * cnt + 2)};
}

// Exact rational evaluation of prod (root form)^e.
inline qtor::Rational eval_roots(const std::map<Root, int>& f, const std::vector<qtor::Rational>& x) {
  qtor::Rational v = 1;
  for (const auto& [r, e] : f) {
    qtor::Rational s = 0;
    for (int k = 0; k < r.rank(); ++k) s += r[k] * x[k];
    for (int q = 0; q < std::abs(e); ++q) v = e > 0 ? qtor::Rational(v * s) : qtor::Rational(v / s);
  }
  return v;
}

// A random point with small positive coordinates: no positive-root form vanishes.
inline std::vector<qtor::Rational> positive_point(std::mt19937& rng, int n) {
  std::vector<qtor::Rational> x;
  std::uniform_int_distribution<int> num(1, 97), den(1, 13);
  for (int k = 0; k < n; ++k) {
    qtor::Rational q(num(rng), den(rng));
    q.canonicalize();
    x.push_back(q);
  }
  return x;
}

}  // namespace oracle
