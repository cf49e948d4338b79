#include <set>
#include <sstream>

#include "qtor/cartan.hpp"
#include "qtor/error.hpp"

namespace qtor {

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  return os.str();
}

Word parse_word(const std::string& s) {
  Word w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok.substr(a), &used);
    } catch (const std::exception&) {
      throw PreconditionError("malformed word entry '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", a + used) != std::string::npos)
      throw PreconditionError("malformed word entry '" + tok + "'");
    w.push_back(v);
  }
  return w;
}

namespace {

void check_letters(const DynkinDatum& d, const Word& w) {
  for (int i : w)
    if (i < 1 || i > d.rank())
      throw PreconditionError("letter " + std::to_string(i) + " is not a vertex of " + d.name());
}

}  // namespace

std::vector<Root> inversion_set(const DynkinDatum& d, const Word& w) {
  check_letters(d, w);
  std::vector<Root> out;
  std::set<Root> seen;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    Root b = Root::simple(d.rank(), w[k]);
    for (std::size_t l = k; l-- > 0;) b = d.reflect(w[l], b);
    if (!b.is_positive() || !seen.insert(b).second)
      throw PreconditionError("word (" + word_to_string(w) + ") is not reduced: root " +
                              b.to_string() + " at position " + std::to_string(k + 1));
    out.push_back(b);
  }
  return out;
}

bool is_reduced(const DynkinDatum& d, const Word& w) {
  try {
    inversion_set(d, w);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

int t_plus(const Word& w, int t) {
  if (t < 1 || t > static_cast<int>(w.size())) throw PreconditionError("position out of range");
  for (int u = t + 1; u <= static_cast<int>(w.size()); ++u)
    if (w[u - 1] == w[t - 1]) return u;
  return 0;
}

int t_minus(const Word& w, int t) {
  if (t < 1 || t > static_cast<int>(w.size())) throw PreconditionError("position out of range");
  for (int u = t - 1; u >= 1; --u)
    if (w[u - 1] == w[t - 1]) return u;
  return 0;
}

namespace {

int neighbors_between(const DynkinDatum& d, const Word& w, int lo, int hi, int letter) {
  int c = 0;
  for (int l = lo + 1; l < hi; ++l)
    if (d.adjacent(letter, w[l - 1])) ++c;
  return c;
}

}  // namespace

bool is_fully_commutative(const DynkinDatum& d, const Word& w) {
  inversion_set(d, w);
  const int len = static_cast<int>(w.size());
  for (int k = 1; k <= len; ++k) {
    int kp = t_plus(w, k);
    if (kp && neighbors_between(d, w, k, kp, w[k - 1]) < 2) return false;
  }
  return true;
}

// Between consecutive occurrences exactly two neighbours; after the last
// occurrence of a letter at most one neighbour (the weight pairing there is
// 1 - #later neighbours and must stay >= 0).
bool is_dominant_minuscule(const DynkinDatum& d, const Word& w) {
  inversion_set(d, w);
  const int len = static_cast<int>(w.size());
  for (int k = 1; k <= len; ++k) {
    int kp = t_plus(w, k);
    if (kp) {
      if (neighbors_between(d, w, k, kp, w[k - 1]) != 2) return false;
    } else if (neighbors_between(d, w, k, len + 1, w[k - 1]) > 1) {
      return false;
    }
  }
  return true;
}

std::vector<BraidMove> available_moves(const DynkinDatum& d, const Word& w) {
  std::vector<BraidMove> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    int a = w[k], b = w[k + 1];
    if (a != b && !d.adjacent(a, b)) out.push_back({static_cast<int>(k), false});
    if (k + 2 < w.size() && d.adjacent(a, b) && w[k + 2] == a)
      out.push_back({static_cast<int>(k), true});
  }
  return out;
}

Word apply_move(const Word& w, const BraidMove& m) {
  Word r = w;
  if (m.braid) {
    int a = w[m.pos], b = w[m.pos + 1];
    r[m.pos] = b;
    r[m.pos + 1] = a;
    r[m.pos + 2] = b;
  } else {
    std::swap(r[m.pos], r[m.pos + 1]);
  }
  return r;
}

}  // namespace qtor
