#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtor/cartan.hpp"

namespace qtor {

// One arrow per diagram edge, (source, target).
struct Orientation {
  std::vector<std::pair<int, int>> arrows;

  // "a>b,c>d"; empty string is the empty orientation (rank 1).
  static Orientation parse(const std::string& text);
  // The monotonic orientation Q0: every edge points to the larger label.
  static Orientation monotonic(const DynkinDatum& d);
  std::string to_string() const;
};

// A vertex of the repetition quiver, (i, p).
struct TorusPoint {
  int i = 0;
  int p = 0;
  auto operator<=>(const TorusPoint&) const = default;
  std::string to_string() const;
};

// Auslander-Reiten data of (datum, Q, xi), fixed at construction.
// Positions t along the infinite adapted word are 1-based.
class ARFrame {
 public:
  // anchor = (vertex, height); default normalizes max xi = 0.
  static ARFrame build(Family family, int rank, const Orientation& q,
                       std::optional<std::pair<int, int>> anchor = std::nullopt);
  static ARFrame monotonic(Family family, int rank);

  const DynkinDatum& datum() const { return datum_; }
  const Orientation& orientation() const { return orientation_; }
  int rank() const { return datum_.rank(); }
  int N() const { return N_; }
  int h() const { return h_; }

  int xi(int i) const { return xi_[i - 1]; }
  int star(int i) const { return star_[i - 1]; }
  int nQ(int i) const { return nq_[i - 1]; }
  const Root& gamma(int i) const { return gamma_[i - 1]; }
  const Word& coxeter_word() const { return coxeter_word_; }
  // tau_Q = s_{c1} ... s_{cn} applied to b.
  Root coxeter(const Root& b) const;

  // First N letters: a reduced word of w0 adapted to Q.
  const Word& reduced_word() const { return prefix_; }
  int letter(long t) const;
  Word word(long length) const;
  long t_plus(long t) const;
  long t_minus(long t) const;  // 0 when t is the first occurrence

  bool contains(const TorusPoint& x) const;
  void require(const TorusPoint& x) const;  // PreconditionError outside I^{<=xi}
  long phi(const TorusPoint& x) const;
  TorusPoint phi_inv(long t) const;

  // (beta_{phi(i,p)}, eps_{i,p}).
  std::pair<Root, int> beta_eps(const TorusPoint& x) const;
  const Root& beta(long t) const;

  // <a_i, a_j>_Q = delta_ij - #(i -> j).
  int euler_form(const Root& b, const Root& c) const;
  int cartan_pairing(const Root& b, const Root& c) const { return datum_.pairing(b, c); }

  // Label of the initial KR module at position t: (point, k).
  int top_string_length(const TorusPoint& x) const { return (xi(x.i) - x.p) / 2 + 1; }

 private:
  ARFrame() = default;
  void validate() const;

  DynkinDatum datum_;
  Orientation orientation_;
  std::vector<std::vector<int>> arrow_count_;
  std::vector<int> xi_, star_, nq_;
  std::vector<Root> gamma_;
  Word coxeter_word_;
  Word prefix_;
  int N_ = 0, h_ = 0;
  // occ_[i-1][m]: position in [1, 2N] of the (m+1)-th occurrence of i; size h.
  std::vector<std::vector<int>> occ_;
  std::vector<int> occ_index_;  // position t in [1,2N] -> m
  // orbit_[i-1][r] = tau^r(gamma_i), signed, r in [0, h).
  std::vector<std::vector<Root>> orbit_;
  std::vector<Root> beta2N_;  // beta_t for t in [1, 2N]
};

}  // namespace qtor
