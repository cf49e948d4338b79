#include "qtor/cluster.hpp"

#include <cstdlib>
#include <tuple>

#include "qtor/error.hpp"

namespace qtor {

std::size_t Quiver::idx(int u, int v) const {
  if (u < 1 || u > m_ || v < 1 || v > m_) throw PreconditionError("quiver vertex out of range");
  return static_cast<std::size_t>(u - 1) * m_ + (v - 1);
}

void Quiver::add_arrow(int u, int v, int mult) {
  if (u == v) throw PreconditionError("loops are not allowed");
  b_[idx(u, v)] += mult;
  b_[idx(v, u)] -= mult;
}

std::vector<int> Quiver::in_neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= m_; ++u)
    for (int k = 0; k < b(u, v); ++k) out.push_back(u);
  return out;
}

std::vector<int> Quiver::out_neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= m_; ++u)
    for (int k = 0; k < b(v, u); ++k) out.push_back(u);
  return out;
}

std::vector<std::tuple<int, int, int>> Quiver::arrows() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int u = 1; u <= m_; ++u)
    for (int v = 1; v <= m_; ++v)
      if (b(u, v) > 0) out.emplace_back(u, v, b(u, v));
  return out;
}

// Composite arrows through k, reversal at k, 2-cycle cancellation: in matrix
// form b'(i,j) = b(i,j) + (|b(i,k)| b(k,j) + b(i,k) |b(k,j)|) / 2.
Quiver Quiver::mutated(int k) const {
  Quiver q = *this;
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= m_; ++j) {
      if (i == k || j == k) {
        q.b_[idx(i, j)] = -b(i, j);
      } else {
        int bik = b(i, k), bkj = b(k, j);
        q.b_[idx(i, j)] = b(i, j) + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return q;
}

Quiver initial_quiver(const ARFrame& f, int window) {
  if (window < 1) throw PreconditionError("window must be at least 1");
  Quiver q(window);
  std::set<int> frozen;
  for (int t = 1; t <= window; ++t) {
    long tp = f.t_plus(t);
    if (tp <= window) q.add_arrow(static_cast<int>(tp), t);
    else frozen.insert(t);
    // Oblique arrows t -> l for i_t ~ i_l and t < l < t+ <= M.
    if (tp > window) continue;
    for (long l = t + 1; l < tp; ++l)
      if (f.datum().adjacent(f.letter(t), f.letter(l))) q.add_arrow(t, static_cast<int>(l));
  }
  q.set_frozen(std::move(frozen));
  return q;
}

Seed initial_seed(const ARFrame& f, const CtildeTable& t, int window, bool specialize_frozen) {
  Seed s{initial_quiver(f, window), {}};
  DtildeEngine e(f, t);
  auto F = Field::of(f.datum());
  for (int v = 1; v <= window; ++v) {
    if (specialize_frozen && s.quiver.is_frozen(v)) s.values.push_back(RootRational::one(F));
    else s.values.push_back(e.initial(v));
  }
  return s;
}

namespace {

RootRational product(const Seed& s, const std::vector<int>& vs) {
  RootRational r = RootRational::one(s.values.front().field());
  for (int u : vs) r *= s.value(u);
  return r;
}

}  // namespace

Seed mutate(const Seed& s, int v) {
  if (v < 1 || v > s.quiver.size()) throw PreconditionError("vertex " + std::to_string(v) + " outside the window");
  if (s.quiver.is_frozen(v)) throw PreconditionError("vertex " + std::to_string(v) + " is frozen");
  const RootRational& old = s.value(v);
  if (old.is_zero()) throw PreconditionError("cannot mutate at a vertex with value zero");
  Seed out = s;
  out.values[v - 1] = (product(s, s.quiver.in_neighbors(v)) + product(s, s.quiver.out_neighbors(v))) / old;
  out.quiver = s.quiver.mutated(v);
  return out;
}

Seed mutate_sequence(Seed s, const std::vector<int>& seq) {
  for (int v : seq) s = mutate(s, v);
  return s;
}

bool exchange_holds(const Seed& before, const Seed& after, int v) {
  RootRational lhs = before.value(v) * after.value(v);
  RootRational rhs = product(before, before.quiver.in_neighbors(v)) + product(before, before.quiver.out_neighbors(v));
  return rr_equal(lhs, rhs);
}

}  // namespace qtor
