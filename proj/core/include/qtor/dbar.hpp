#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qtor/dtilde.hpp"
#include "qtor/frame.hpp"
#include "qtor/root_rational.hpp"

namespace qtor {

struct WeightEntry {
  Word word;
  long dim = 0;
};
using WeightData = std::vector<WeightEntry>;

// 1/(a_{j1} (a_{j1}+a_{j2}) ... (a_{j1}+...+a_{jd})).
RootRational word_value(const FieldPtr& f, const Word& w);

// Sum of dim * word_value over the entries; all words must share one weight.
RootRational dbar_weight_sum(const DynkinDatum& d, const WeightData& data);

// Product of 1/beta over the inversion set; the word must be dominant minuscule.
RootRational nakada_hook(const DynkinDatum& d, const Word& w);

// Closed values for the monotonic orientation in types A and D.
RootRational cuspidal_value(const ARFrame& q0, const Root& beta);

struct MinimalPair {
  Root gamma;
  Root delta;
  bool operator==(const MinimalPair&) const = default;
};

// Which minimal pair to keep when several exist; positions are in the
// convex order beta_1 < ... < beta_N of the frame's adapted word.
enum class PairPolicy {
  MaxGamma,  // latest gamma
  MinGamma,  // earliest gamma
};

// Position of a positive root in the frame's convex order, 1-based.
int convex_position(const ARFrame& f, const Root& beta);
std::vector<MinimalPair> minimal_pairs(const ARFrame& f, const Root& beta);
MinimalPair minimal_pair(const ARFrame& f, const Root& beta, PairPolicy policy = PairPolicy::MaxGamma);

struct CuspidalOutcome {
  bool applicable = false;
  RootRational value;  // meaningful only when applicable
  Word word;           // j_beta
  Root blocked_at;     // root whose j_delta j_gamma is not dominant minuscule
};

CuspidalOutcome cuspidal_via_minimal_pair(const ARFrame& f, const Root& beta,
                                          PairPolicy policy = PairPolicy::MaxGamma);

struct CuspidalCoverage {
  int roots = 0;
  int applicable = 0;
  std::vector<Root> blocked;
};
CuspidalCoverage cuspidal_coverage(const ARFrame& f, PairPolicy policy = PairPolicy::MaxGamma);

struct FlagMinorTable {
  Word word;
  std::vector<Root> betas;           // inversion roots beta_1..beta_N
  std::vector<RootRational> values;  // P_1..P_N
};

// P_j = beta_j prod_{l<j<l+, i_l~i_j} P_l / P_{j-}, with P_0 = 1.
FlagMinorTable flag_minor_values(const DynkinDatum& d, const Word& w);

// m[(i, r)] is the exponent of Y_{i, xi(i)-2(r-1)}.
using DominantExponents = std::map<std::pair<int, int>, int>;
void check_dominant_exponents(const ARFrame& q0, const DominantExponents& m);
TorusMonomial dominant_monomial(const ARFrame& q0, const DominantExponents& m);
Rational predicted_dim_ratio(const ARFrame& q0, const DominantExponents& m);

}  // namespace qtor
