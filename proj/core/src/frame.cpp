#include "qtor/frame.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qtor/error.hpp"

namespace qtor {

Orientation Orientation::parse(const std::string& text) {
  Orientation q;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '\t'; }),
              tok.end());
    if (tok.empty()) continue;
    auto gt = tok.find('>');
    if (gt == std::string::npos || gt == 0 || gt + 1 == tok.size())
      throw PreconditionError("malformed arrow '" + tok + "' (expected a>b)");
    try {
      std::size_t ua = 0, ub = 0;
      std::string sa = tok.substr(0, gt), sb = tok.substr(gt + 1);
      int a = std::stoi(sa, &ua), b = std::stoi(sb, &ub);
      if (ua != sa.size() || ub != sb.size()) throw std::invalid_argument("trailing");
      q.arrows.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw PreconditionError("malformed arrow '" + tok + "' (expected a>b)");
    }
  }
  return q;
}

Orientation Orientation::monotonic(const DynkinDatum& d) {
  Orientation q;
  for (auto [a, b] : d.edges()) q.arrows.emplace_back(std::min(a, b), std::max(a, b));
  return q;
}

std::string Orientation::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    os << (k ? "," : "") << arrows[k].first << '>' << arrows[k].second;
  return os.str();
}

std::string TorusPoint::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(p) + ")";
}

ARFrame ARFrame::monotonic(Family family, int rank) {
  return build(family, rank, Orientation::monotonic(DynkinDatum::make(family, rank)));
}

ARFrame ARFrame::build(Family family, int rank, const Orientation& q,
                       std::optional<std::pair<int, int>> anchor) {
  ARFrame f;
  f.datum_ = DynkinDatum::make(family, rank);
  f.orientation_ = q;
  const DynkinDatum& d = f.datum_;
  const int n = rank;

  f.arrow_count_.assign(n, std::vector<int>(n, 0));
  std::set<std::pair<int, int>> covered;
  for (auto [a, b] : q.arrows) {
    if (a < 1 || a > n || b < 1 || b > n || !d.adjacent(a, b))
      throw PreconditionError("arrow " + std::to_string(a) + ">" + std::to_string(b) +
                              " is not an edge of " + d.name());
    if (!covered.insert({std::min(a, b), std::max(a, b)}).second)
      throw PreconditionError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                              " is oriented twice");
    f.arrow_count_[a - 1][b - 1] = 1;
  }
  if (covered.size() != d.edges().size())
    throw PreconditionError("orientation leaves an edge of " + d.name() + " unoriented");

  // Height function: xi(target) = xi(source) - 1.
  f.xi_.assign(n, 0);
  std::vector<bool> done(n, false);
  int start = anchor ? anchor->first : 1;
  if (start < 1 || start > n) throw PreconditionError("anchor vertex out of range");
  f.xi_[start - 1] = anchor ? anchor->second : 0;
  done[start - 1] = true;
  std::deque<int> bfs{start};
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop_front();
    for (int v : d.neighbors(u)) {
      if (done[v - 1]) continue;
      f.xi_[v - 1] = f.xi_[u - 1] + (f.arrow_count_[u - 1][v - 1] ? -1 : 1);
      done[v - 1] = true;
      bfs.push_back(v);
    }
  }
  if (!anchor) {
    int mx = *std::max_element(f.xi_.begin(), f.xi_.end());
    for (int& x : f.xi_) x -= mx;
  }

  // Sources first: decreasing height is an adapted order of all vertices.
  f.coxeter_word_.resize(n);
  for (int i = 0; i < n; ++i) f.coxeter_word_[i] = i + 1;
  std::stable_sort(f.coxeter_word_.begin(), f.coxeter_word_.end(),
                   [&](int a, int b) { return f.xi_[a - 1] > f.xi_[b - 1]; });

  // gamma_i = sum of a_j over j with a path j -> ... -> i.
  f.gamma_.assign(n, Root(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<bool> seen(n, false);
    std::deque<int> st{i};
    seen[i - 1] = true;
    while (!st.empty()) {
      int u = st.front();
      st.pop_front();
      f.gamma_[i - 1][u - 1] = 1;
      for (int v : d.neighbors(u))
        if (!seen[v - 1] && f.arrow_count_[v - 1][u - 1]) {
          seen[v - 1] = true;
          st.push_back(v);
        }
    }
  }

  f.N_ = d.num_positive();
  if ((2 * f.N_) % n != 0) throw ConsistencyError("2N not divisible by rank");
  f.h_ = 2 * f.N_ / n;

  f.orbit_.assign(n, {});
  f.nq_.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    Root v = f.gamma_[i - 1];
    for (int r = 0; r < f.h_; ++r) {
      f.orbit_[i - 1].push_back(v);
      if (f.nq_[i - 1] == 0 && !v.is_positive()) f.nq_[i - 1] = r;
      v = f.coxeter(v);
    }
    if (v != f.gamma_[i - 1]) throw ConsistencyError("tau_Q^h does not fix gamma");
    if (f.nq_[i - 1] == 0) throw ConsistencyError("tau orbit of gamma never leaves Phi+");
  }

  // Greedy source removal, smallest index first, within the quota n_Q(i).
  std::vector<int> height = f.xi_, count(n, 0);
  auto is_source = [&](int i) {
    for (int j : d.neighbors(i))
      if (height[j - 1] != height[i - 1] - 1) return false;
    return true;
  };
  for (int step = 0; step < f.N_; ++step) {
    int pick = 0;
    for (int i = 1; i <= n && !pick; ++i)
      if (count[i - 1] < f.nq_[i - 1] && is_source(i)) pick = i;
    if (!pick) throw ConsistencyError("no admissible source while building the adapted word");
    f.prefix_.push_back(pick);
    height[pick - 1] -= 2;
    ++count[pick - 1];
  }

  // w0(a_i) = -a_{i*}.
  f.star_.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    Root b = Root::simple(n, i);
    for (std::size_t l = f.prefix_.size(); l-- > 0;) b = d.reflect(f.prefix_[l], b);
    for (int j = 1; j <= n; ++j)
      if (b == -Root::simple(n, j)) f.star_[i - 1] = j;
    if (!f.star_[i - 1]) throw ConsistencyError("w0 does not send a simple root to a negative simple root");
  }

  f.occ_.assign(n, {});
  f.occ_index_.assign(2 * f.N_, 0);
  for (int t = 1; t <= 2 * f.N_; ++t) {
    int i = f.letter(t);
    f.occ_index_[t - 1] = static_cast<int>(f.occ_[i - 1].size());
    f.occ_[i - 1].push_back(t);
  }
  for (int i = 1; i <= n; ++i)
    if (static_cast<int>(f.occ_[i - 1].size()) != f.h_)
      throw ConsistencyError("vertex " + std::to_string(i) + " does not occur h times in 2N letters");

  f.beta2N_.reserve(2 * f.N_);
  for (int t = 1; t <= 2 * f.N_; ++t) f.beta2N_.push_back(f.beta_eps(f.phi_inv(t)).first);

  f.validate();
  return f;
}

Root ARFrame::coxeter(const Root& b) const {
  Root v = b;
  for (std::size_t l = coxeter_word_.size(); l-- > 0;) v = datum_.reflect(coxeter_word_[l], v);
  return v;
}

void ARFrame::validate() const {
  const int n = rank();
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    total += nQ(i);
    if (star(star(i)) != i) throw ConsistencyError("star is not an involution");
    if (nQ(i) + nQ(star(i)) != h_) throw ConsistencyError("n_Q(i) + n_Q(i*) != h");
  }
  if (total != N_) throw ConsistencyError("sum of n_Q differs from N");

  // The first 2N letters are sources of the successively reflected quivers.
  std::vector<int> height = xi_;
  for (int t = 1; t <= 2 * N_; ++t) {
    int i = letter(t);
    for (int j : datum_.neighbors(i))
      if (height[j - 1] != height[i - 1] - 1)
        throw ConsistencyError("letter " + std::to_string(t) + " of the infinite word is not a source");
    height[i - 1] -= 2;
  }

  std::vector<Root> inv = inversion_set(datum_, prefix_);
  for (int t = 1; t <= N_; ++t) {
    auto [b, e] = beta_eps(phi_inv(t));
    if (e != 1 || b != inv[t - 1]) throw ConsistencyError("tau-orbit roots disagree with inversion roots");
  }
}

int ARFrame::letter(long t) const {
  if (t < 1) throw PreconditionError("positions start at 1");
  long m = (t - 1) / N_;
  int l = prefix_[(t - 1) % N_];
  return (m % 2) ? star_[l - 1] : l;
}

Word ARFrame::word(long length) const {
  Word w;
  w.reserve(length);
  for (long t = 1; t <= length; ++t) w.push_back(letter(t));
  return w;
}

bool ARFrame::contains(const TorusPoint& x) const {
  if (x.i < 1 || x.i > rank()) return false;
  int g = xi(x.i) - x.p;
  return g >= 0 && g % 2 == 0;
}

void ARFrame::require(const TorusPoint& x) const {
  if (!contains(x))
    throw PreconditionError("point " + x.to_string() + " is outside I^{<=xi}");
}

long ARFrame::phi(const TorusPoint& x) const {
  require(x);
  long m = (xi(x.i) - x.p) / 2;
  return 2L * N_ * (m / h_) + occ_[x.i - 1][m % h_];
}

TorusPoint ARFrame::phi_inv(long t) const {
  if (t < 1) throw PreconditionError("positions start at 1");
  long cycles = (t - 1) / (2L * N_);
  long u = (t - 1) % (2L * N_) + 1;
  int i = letter(u);
  long m = cycles * h_ + occ_index_[u - 1];
  return {i, static_cast<int>(xi(i) - 2 * m)};
}

std::pair<Root, int> ARFrame::beta_eps(const TorusPoint& x) const {
  require(x);
  const Root& v = orbit_[x.i - 1][((xi(x.i) - x.p) / 2) % h_];
  if (v.is_positive()) return {v, 1};
  return {-v, -1};
}

const Root& ARFrame::beta(long t) const {
  if (t < 1) throw PreconditionError("positions start at 1");
  return beta2N_[(t - 1) % (2L * N_)];
}

long ARFrame::t_plus(long t) const {
  TorusPoint x = phi_inv(t);
  return phi({x.i, x.p - 2});
}

long ARFrame::t_minus(long t) const {
  TorusPoint x = phi_inv(t);
  if (x.p + 2 > xi(x.i)) return 0;
  return phi({x.i, x.p + 2});
}

int ARFrame::euler_form(const Root& b, const Root& c) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (b[i] == 0) continue;
    int row = c[i];
    for (int j = 0; j < n; ++j) row -= arrow_count_[i][j] * c[j];
    s += b[i] * row;
  }
  return s;
}

}  // namespace qtor
