#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qtor {

enum class Family { A, D, E };

inline constexpr int kMaxRank = 8;

char family_letter(Family f);
Family parse_family(const std::string& s);

// Integer vector on the simple roots. Vertices are 1-based in every public API;
// operator[] is 0-based coordinate access.
class Root {
 public:
  Root() = default;
  explicit Root(int rank);
  Root(int rank, std::initializer_list<int> coords);
  static Root simple(int rank, int i);
  static Root from_coords(const std::vector<int>& coords);

  int rank() const { return n_; }
  int operator[](int k) const { return c_[k]; }
  int& operator[](int k) { return c_[k]; }
  int coeff(int i) const { return c_[i - 1]; }

  bool is_zero() const;
  bool is_positive() const;  // all >= 0, some > 0
  bool is_negative() const;
  int height() const;
  std::vector<int> coords() const;

  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root operator-() const;
  Root operator*(int s) const;
  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

  // "a1+2a2+a3"
  std::string to_string() const;

 private:
  std::array<int, kMaxRank> c_{};
  int n_ = 0;
};

// Simply-laced Dynkin diagram with the labelling of the monotonic orientations:
// A_n a path, D_n forks at n-2, E_r branches at 3 with leaf 4.
class DynkinDatum {
 public:
  static DynkinDatum make(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return n_; }
  std::string name() const;

  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  bool adjacent(int i, int j) const { return cartan_[i - 1][j - 1] == -1; }
  const std::vector<int>& neighbors(int i) const { return adj_[i - 1]; }
  int distance(int i, int j) const { return dist_[i - 1][j - 1]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Symmetric bilinear form (b, c) with (a_i, a_i) = 2.
  int pairing(const Root& b, const Root& c) const;
  Root reflect(int i, const Root& b) const;

  // Positive roots ordered by height then coordinates.
  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  int index_of(const Root& r) const;  // -1 if r is not a positive root
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  Root highest_root() const { return roots_.back(); }

 private:
  Family family_ = Family::A;
  int n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Root> roots_;
};

// Weyl-group words. All words are sequences of 1-based vertex labels.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

// Inversion roots b_k = s_{i1}...s_{i(k-1)}(a_{ik}); throws PreconditionError
// naming the first non-positive or repeated root when the word is not reduced.
std::vector<Root> inversion_set(const DynkinDatum& d, const Word& w);
bool is_reduced(const DynkinDatum& d, const Word& w);

// Next / previous occurrence of the letter at 1-based position t inside a
// finite word. t_plus returns 0 for "none" (the +infinity case).
int t_plus(const Word& w, int t);
int t_minus(const Word& w, int t);

// Both verify reducedness first (PreconditionError otherwise).
bool is_fully_commutative(const DynkinDatum& d, const Word& w);
bool is_dominant_minuscule(const DynkinDatum& d, const Word& w);

// Positions where a commutation (i j -> j i, i !~ j) or a braid move
// (i j i -> j i j, i ~ j) applies.
struct BraidMove {
  int pos;      // 0-based start
  bool braid;   // false: commutation of length 2
};
std::vector<BraidMove> available_moves(const DynkinDatum& d, const Word& w);
Word apply_move(const Word& w, const BraidMove& m);

}  // namespace qtor
