#include "qtor/dbar.hpp"

#include <algorithm>
#include <functional>

#include "qtor/error.hpp"

namespace qtor {

RootRational word_value(const FieldPtr& f, const Word& w) {
  RootRational v = RootRational::one(f);
  Root s(f->nvars());
  for (int j : w) {
    if (j < 1 || j > f->nvars()) throw PreconditionError("letter " + std::to_string(j) + " out of range");
    s += Root::simple(f->nvars(), j);
    v *= RootRational::of_root(f, s, -1);
  }
  return v;
}

RootRational dbar_weight_sum(const DynkinDatum& d, const WeightData& data) {
  if (data.empty()) throw PreconditionError("weight data is empty");
  auto f = Field::of(d);
  auto weight = [&](const Word& w) {
    std::vector<int> c(d.rank(), 0);
    for (int j : w) {
      if (j < 1 || j > d.rank()) throw PreconditionError("letter " + std::to_string(j) + " out of range");
      ++c[j - 1];
    }
    return c;
  };
  const auto w0 = weight(data.front().word);
  RootRational sum = RootRational::zero(f);
  for (const auto& e : data) {
    if (e.word.empty()) throw PreconditionError("weight data contains an empty word");
    if (e.dim < 0) throw PreconditionError("weight-space dimensions must be nonnegative");
    if (weight(e.word) != w0)
      throw PreconditionError("word " + word_to_string(e.word) + " has a different weight from " +
                              word_to_string(data.front().word));
    if (e.dim) sum += RootRational::constant(f, Rational(e.dim)) * word_value(f, e.word);
  }
  return sum;
}

RootRational nakada_hook(const DynkinDatum& d, const Word& w) {
  if (!is_reduced(d, w)) throw PreconditionError("word " + word_to_string(w) + " is not reduced");
  if (!is_dominant_minuscule(d, w))
    throw PreconditionError("word " + word_to_string(w) + " is not dominant minuscule");
  return reciprocal_product(Field::of(d), inversion_set(d, w));
}

namespace {

Word segment_word(int p, int q) {
  Word w;
  for (int k = p; k <= q; ++k) w.push_back(k);
  return w;
}

void require_q0(const ARFrame& f) {
  if (f.orientation().to_string() != Orientation::monotonic(f.datum()).to_string())
    throw PreconditionError("closed cuspidal values are stated for the monotonic orientation");
}

}  // namespace

RootRational cuspidal_value(const ARFrame& q0, const Root& beta) {
  const auto& d = q0.datum();
  const int n = d.rank();
  if (!d.is_root(beta)) throw PreconditionError(beta.to_string() + " is not a positive root");
  if (d.family() == Family::E)
    throw PreconditionError("no closed cuspidal values in type E; use cuspidal_via_minimal_pair");
  require_q0(q0);
  auto f = Field::of(d);
  int first = 0;
  while (beta[first] == 0) ++first;
  const int p = first + 1;
  if (d.family() == Family::A) {
    int last = n - 1;
    while (beta[last] == 0) --last;
    return word_value(f, segment_word(p, last + 1));
  }
  const bool has_n1 = beta[n - 2] != 0, has_n = beta[n - 1] != 0;
  if (!(has_n1 && has_n)) {
    if (has_n) {
      // alpha_{p,n}: word (p, ..., n-2, n)
      Word w = p >= n - 1 ? Word{n} : segment_word(p, n - 2);
      if (p < n - 1) w.push_back(n);
      return word_value(f, w);
    }
    int last = n - 1;
    while (beta[last] == 0) --last;
    return word_value(f, segment_word(p, last + 1));
  }
  // theta_{p,q}: q is the first coefficient 2, or n-1 if there is none.
  int q = n - 1;
  for (int k = p; k <= n - 2; ++k)
    if (beta[k - 1] == 2) {
      q = k;
      break;
    }
  RootRational v = RootRational::of_root(f, theta_pq(d, p, p), 1);
  for (int k = q; k <= n - 2; ++k) v *= RootRational::of_root(f, alpha_seg(d, q, k), -1);
  for (int k = p; k <= n; ++k) v *= RootRational::of_root(f, alpha_seg(d, p, k), -1);
  v *= RootRational::of_root(f, beta, -1);
  return v;
}

int convex_position(const ARFrame& f, const Root& beta) {
  const Word& w = f.reduced_word();
  for (int t = 1; t <= static_cast<int>(w.size()); ++t)
    if (f.beta(t) == beta) return t;
  throw PreconditionError(beta.to_string() + " is not a positive root");
}

std::vector<MinimalPair> minimal_pairs(const ARFrame& f, const Root& beta) {
  const auto& d = f.datum();
  if (!d.is_root(beta)) throw PreconditionError(beta.to_string() + " is not a positive root");
  if (beta.height() == 1) throw PreconditionError("a simple root has no minimal pair");
  std::map<Root, int> pos;
  for (int t = 1; t <= f.N(); ++t) pos[f.beta(t)] = t;
  struct Cand {
    int g, dl;
    MinimalPair pr;
  };
  std::vector<Cand> all;
  for (const Root& g : d.positive_roots()) {
    Root dl = beta - g;
    if (!d.is_root(dl)) continue;
    if (pos[g] < pos[dl]) all.push_back({pos[g], pos[dl], {g, dl}});
  }
  std::vector<MinimalPair> out;
  for (const auto& c : all) {
    bool nested = std::any_of(all.begin(), all.end(), [&](const Cand& o) { return c.g < o.g && o.dl < c.dl; });
    if (!nested) out.push_back(c.pr);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return pos[a.gamma] < pos[b.gamma]; });
  return out;
}

MinimalPair minimal_pair(const ARFrame& f, const Root& beta, PairPolicy policy) {
  auto all = minimal_pairs(f, beta);
  if (all.empty()) throw ConsistencyError("no minimal pair for " + beta.to_string());
  return policy == PairPolicy::MaxGamma ? all.back() : all.front();
}

CuspidalOutcome cuspidal_via_minimal_pair(const ARFrame& f, const Root& beta, PairPolicy policy) {
  const auto& d = f.datum();
  if (!d.is_root(beta)) throw PreconditionError(beta.to_string() + " is not a positive root");
  auto F = Field::of(d);
  std::map<Root, CuspidalOutcome> memo;
  std::function<const CuspidalOutcome&(const Root&)> go = [&](const Root& b) -> const CuspidalOutcome& {
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    CuspidalOutcome out;
    if (b.height() == 1) {
      int i = 0;
      while (b[i] == 0) ++i;
      out = {true, RootRational::of_root(F, b, -1), Word{i + 1}, Root()};
    } else {
      MinimalPair mp = minimal_pair(f, b, policy);
      const CuspidalOutcome g = go(mp.gamma);
      const CuspidalOutcome dl = go(mp.delta);
      out.word = g.word;
      out.word.insert(out.word.end(), dl.word.begin(), dl.word.end());
      if (!g.applicable || !dl.applicable) {
        out.blocked_at = g.applicable ? dl.blocked_at : g.blocked_at;
      } else {
        Word head = dl.word;
        head.insert(head.end(), g.word.begin(), g.word.end());
        if (is_reduced(d, head) && is_dominant_minuscule(d, head)) {
          out.applicable = true;
          out.value = dl.value * g.value - reciprocal_product(F, inversion_set(d, head));
        } else {
          out.blocked_at = b;
        }
      }
    }
    return memo.emplace(b, std::move(out)).first->second;
  };
  return go(beta);
}

CuspidalCoverage cuspidal_coverage(const ARFrame& f, PairPolicy policy) {
  CuspidalCoverage c;
  for (const Root& b : f.datum().positive_roots()) {
    ++c.roots;
    if (cuspidal_via_minimal_pair(f, b, policy).applicable) ++c.applicable;
    else c.blocked.push_back(b);
  }
  return c;
}

FlagMinorTable flag_minor_values(const DynkinDatum& d, const Word& w) {
  if (static_cast<int>(w.size()) != d.num_positive())
    throw PreconditionError("word has length " + std::to_string(w.size()) + ", expected N = " +
                            std::to_string(d.num_positive()));
  FlagMinorTable tab;
  tab.word = w;
  tab.betas = inversion_set(d, w);  // throws on a non-reduced word
  auto F = Field::of(d);
  const int N = static_cast<int>(w.size());
  for (int j = 1; j <= N; ++j) {
    RootRational v = RootRational::of_root(F, tab.betas[j - 1], 1);
    for (int nb : d.neighbors(w[j - 1]))
      for (int l = j - 1; l >= 1; --l)
        if (w[l - 1] == nb) {
          v *= tab.values[l - 1];
          break;
        }
    if (int jm = t_minus(w, j); jm > 0) v /= tab.values[jm - 1];
    bool pure = v.is_root_monomial() && v.unit() == 1 &&
                std::all_of(v.root_factors().begin(), v.root_factors().end(),
                            [](const auto& kv) { return kv.second > 0; });
    if (!pure) throw ConsistencyError("P_" + std::to_string(j) + " = " + v.to_string() + " is not a product of roots");
    tab.values.push_back(std::move(v));
  }
  return tab;
}

void check_dominant_exponents(const ARFrame& q0, const DominantExponents& m) {
  const auto& d = q0.datum();
  if (d.family() != Family::A) throw PreconditionError("the dimension ratio is stated for type A");
  require_q0(q0);
  const int n = d.rank();
  for (const auto& [ir, e] : m) {
    auto [i, r] = ir;
    if (i < 1 || i > n) throw PreconditionError("vertex " + std::to_string(i) + " out of range");
    if (r < 1 || r > n - i + 1)
      throw PreconditionError("index r = " + std::to_string(r) + " outside [1, " + std::to_string(n - i + 1) +
                              "] for i = " + std::to_string(i));
    if (e < 0) throw PreconditionError("exponents must be nonnegative");
  }
}

TorusMonomial dominant_monomial(const ARFrame& q0, const DominantExponents& m) {
  check_dominant_exponents(q0, m);
  TorusMonomial y;
  for (const auto& [ir, e] : m) y.mul({ir.first, q0.xi(ir.first) - 2 * (ir.second - 1)}, e);
  return y;
}

Rational predicted_dim_ratio(const ARFrame& q0, const DominantExponents& m) {
  check_dominant_exponents(q0, m);
  auto fact = [](long k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  };
  long total = 0;
  Rational ratio = 1;
  for (const auto& [ir, e] : m) {
    auto [i, r] = ir;
    total += static_cast<long>(i) * e;
    Rational base(fact(r - 1), fact(r + i - 1));
    base.canonicalize();
    for (int k = 0; k < e; ++k) ratio *= base;
  }
  return ratio * Rational(fact(total));
}

}  // namespace qtor
