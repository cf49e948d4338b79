#include "qtor/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qtor/error.hpp"

namespace qtor {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw PreconditionError("unsupported Dynkin family '" + s + "' (expected A, D or E)");
}

Root::Root(int rank) : n_(rank) {
  if (rank < 1 || rank > kMaxRank)
    throw PreconditionError("rank must lie in [1," + std::to_string(kMaxRank) + "]");
}

Root::Root(int rank, std::initializer_list<int> coords) : Root(rank) {
  if (static_cast<int>(coords.size()) != rank)
    throw PreconditionError("root coordinate count does not match rank");
  int k = 0;
  for (int c : coords) c_[k++] = c;
}

Root Root::simple(int rank, int i) {
  Root r(rank);
  if (i < 1 || i > rank) throw PreconditionError("vertex out of range");
  r.c_[i - 1] = 1;
  return r;
}

Root Root::from_coords(const std::vector<int>& coords) {
  Root r(static_cast<int>(coords.size()));
  for (std::size_t k = 0; k < coords.size(); ++k) r.c_[k] = coords[k];
  return r;
}

bool Root::is_zero() const {
  for (int k = 0; k < n_; ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool Root::is_positive() const {
  bool some = false;
  for (int k = 0; k < n_; ++k) {
    if (c_[k] < 0) return false;
    some = some || c_[k] > 0;
  }
  return some;
}

bool Root::is_negative() const { return (-*this).is_positive(); }

int Root::height() const {
  int s = 0;
  for (int k = 0; k < n_; ++k) s += c_[k];
  return s;
}

std::vector<int> Root::coords() const { return {c_.begin(), c_.begin() + n_}; }

Root Root::operator+(const Root& o) const {
  Root r = *this;
  r += o;
  return r;
}
Root Root::operator-(const Root& o) const {
  Root r = *this;
  r -= o;
  return r;
}
Root Root::operator-() const {
  Root r = *this;
  for (int k = 0; k < n_; ++k) r.c_[k] = -r.c_[k];
  return r;
}
Root Root::operator*(int s) const {
  Root r = *this;
  for (int k = 0; k < n_; ++k) r.c_[k] *= s;
  return r;
}
Root& Root::operator+=(const Root& o) {
  for (int k = 0; k < n_; ++k) c_[k] += o.c_[k];
  return *this;
}
Root& Root::operator-=(const Root& o) {
  for (int k = 0; k < n_; ++k) c_[k] -= o.c_[k];
  return *this;
}

std::string Root::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < n_; ++k) {
    int c = c_[k];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    if (c != 1) os << c;
    os << 'a' << (k + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(Family f, int n) {
  std::vector<std::pair<int, int>> e;
  switch (f) {
    case Family::A:
      if (n < 1) throw PreconditionError("type A needs rank >= 1");
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (n < 4) throw PreconditionError("type D needs rank >= 4");
      for (int i = 1; i + 1 <= n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n - 1);
      e.emplace_back(n - 2, n);
      break;
    case Family::E:
      if (n < 6 || n > 8) throw PreconditionError("type E needs rank 6, 7 or 8");
      e = {{1, 2}, {2, 3}, {3, 4}, {3, 5}};
      for (int i = 5; i < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  return e;
}

}  // namespace

DynkinDatum DynkinDatum::make(Family family, int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw PreconditionError("rank must lie in [1," + std::to_string(kMaxRank) + "]");
  DynkinDatum d;
  d.family_ = family;
  d.n_ = rank;
  d.edges_ = diagram_edges(family, rank);
  d.cartan_.assign(rank, std::vector<int>(rank, 0));
  d.adj_.assign(rank, {});
  for (int i = 0; i < rank; ++i) d.cartan_[i][i] = 2;
  for (auto [a, b] : d.edges_) {
    d.cartan_[a - 1][b - 1] = d.cartan_[b - 1][a - 1] = -1;
    d.adj_[a - 1].push_back(b);
    d.adj_[b - 1].push_back(a);
  }
  for (auto& nb : d.adj_) std::sort(nb.begin(), nb.end());

  d.dist_.assign(rank, std::vector<int>(rank, -1));
  for (int s = 1; s <= rank; ++s) {
    std::deque<int> q{s};
    d.dist_[s - 1][s - 1] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : d.adj_[u - 1])
        if (d.dist_[s - 1][v - 1] < 0) {
          d.dist_[s - 1][v - 1] = d.dist_[s - 1][u - 1] + 1;
          q.push_back(v);
        }
    }
  }

  // Closure under b -> b + a_i whenever (b, a_i) = -1; complete in simply-laced types.
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (int i = 1; i <= rank; ++i) {
    frontier.push_back(Root::simple(rank, i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier)
      for (int i = 1; i <= rank; ++i) {
        if (d.pairing(b, Root::simple(rank, i)) != -1) continue;
        Root c = b + Root::simple(rank, i);
        if (seen.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  d.roots_.assign(seen.begin(), seen.end());
  std::stable_sort(d.roots_.begin(), d.roots_.end(),
                   [](const Root& x, const Root& y) { return x.height() < y.height(); });
  return d;
}

std::string DynkinDatum::name() const {
  return std::string(1, family_letter(family_)) + std::to_string(n_);
}

int DynkinDatum::pairing(const Root& b, const Root& c) const {
  int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (b[i] == 0) continue;
    int row = 2 * c[i];
    for (int j : adj_[i]) row -= c[j - 1];
    s += b[i] * row;
  }
  return s;
}

Root DynkinDatum::reflect(int i, const Root& b) const {
  int c = 2 * b[i - 1];
  for (int j : adj_[i - 1]) c -= b[j - 1];
  Root r = b;
  r[i - 1] -= c;
  return r;
}

int DynkinDatum::index_of(const Root& r) const {
  auto it = std::find(roots_.begin(), roots_.end(), r);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

}  // namespace qtor
