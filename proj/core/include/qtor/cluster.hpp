#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtor/dtilde.hpp"
#include "qtor/frame.hpp"
#include "qtor/root_rational.hpp"

namespace qtor {

// Quiver on vertices 1..M stored as its exchange matrix: b(u,v) arrows u->v
// when positive, b(v,u) = -b(u,v).
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int m) : m_(m), b_(static_cast<std::size_t>(m) * m, 0) {}

  int size() const { return m_; }
  int b(int u, int v) const { return b_[idx(u, v)]; }
  void add_arrow(int u, int v, int mult = 1);

  const std::set<int>& frozen() const { return frozen_; }
  bool is_frozen(int v) const { return frozen_.count(v) != 0; }
  void set_frozen(std::set<int> f) { frozen_ = std::move(f); }

  std::vector<int> in_neighbors(int v) const;   // u with u -> v
  std::vector<int> out_neighbors(int v) const;  // u with v -> u
  // (u, v, multiplicity) for every arrow u -> v.
  std::vector<std::tuple<int, int, int>> arrows() const;

  Quiver mutated(int k) const;
  bool operator==(const Quiver&) const = default;

 private:
  std::size_t idx(int u, int v) const;

  int m_ = 0;
  std::vector<int> b_;
  std::set<int> frozen_;
};

struct Seed {
  Quiver quiver;
  std::vector<RootRational> values;  // values[v-1]
  const RootRational& value(int v) const { return values.at(v - 1); }
};

// Window [1, M] of the initial seed; values are D~ of the initial KR classes.
// With specialize_frozen, frozen values become 1.
Seed initial_seed(const ARFrame& f, const CtildeTable& t, int window, bool specialize_frozen);
Quiver initial_quiver(const ARFrame& f, int window);

Seed mutate(const Seed& s, int v);
Seed mutate_sequence(Seed s, const std::vector<int>& seq);

// old(v) * new(v) == prod over in-arrows + prod over out-arrows of the old seed.
bool exchange_holds(const Seed& before, const Seed& after, int v);

}  // namespace qtor
