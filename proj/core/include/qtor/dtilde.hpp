#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qtor/frame.hpp"
#include "qtor/quantum_cartan.hpp"
#include "qtor/root_rational.hpp"

namespace qtor {

// Laurent monomial in the Y_{i,p}; zero exponents are never stored.
struct TorusMonomial {
  std::map<TorusPoint, int> exps;

  // "Y[1,-1]*Y[2,-2]^-1"; "1" or "" is the empty monomial.
  static TorusMonomial parse(const std::string& text);
  // Y_{i,p} Y_{i,p+2} ... Y_{i,p+2k-2}.
  static TorusMonomial kr_string(int i, int p, int k);
  TorusMonomial& mul(const TorusPoint& x, int e);
  std::string to_string() const;
};

struct KRLabel {
  int i = 0;
  int p = 0;
  int k = 0;
  int top() const { return p + 2 * k - 2; }
  auto operator<=>(const KRLabel&) const = default;
  std::string to_string() const;
};

// Label of the initial cluster variable at position t: the KR string from
// phi^{-1}(t) up to xi(i).
KRLabel initial_label(const ARFrame& f, long t);

// Memoizing evaluator for one (frame, table). Not synchronized: give each
// thread its own engine.
class DtildeEngine {
 public:
  DtildeEngine(const ARFrame& f, const CtildeTable& t);

  const ARFrame& frame() const { return frame_; }
  const FieldPtr& field() const { return field_; }

  const RootRational& Y(const TorusPoint& x);
  RootRational monomial(const TorusMonomial& m);
  const RootRational& KR(const KRLabel& l);
  const RootRational& initial(long t) { return KR(initial_label(frame_, t)); }

  // Throws PreconditionError unless the label lies in C^{<=xi}.
  void check_label(const KRLabel& l) const;

 private:
  const RootRational& kr_rec(const KRLabel& l);

  const ARFrame& frame_;
  const CtildeTable& table_;
  FieldPtr field_;
  std::map<TorusPoint, RootRational> ymemo_;
  std::map<KRLabel, RootRational> krmemo_;
};

RootRational dtilde_Y(const ARFrame& f, const CtildeTable& t, int i, int p);
RootRational dtilde_monomial(const ARFrame& f, const CtildeTable& t, const TorusMonomial& m);
RootRational dtilde_KR(const ARFrame& f, const CtildeTable& t, const KRLabel& l);

// Linear forms of type A / D roots in the labelling used by the closed forms.
// In type D, theta(p,p) is not a root; both return the raw coefficient vector.
Root alpha_seg(const DynkinDatum& d, int p, int q);
Root theta_pq(const DynkinDatum& d, int p, int q);

// Product formulas for the monotonic orientation; the frame supplies xi.
RootRational closed_form_A(const ARFrame& f, int i, int s, int k);
RootRational closed_form_D(const ARFrame& f, int i, int s, int k);
// Dispatch on family; PreconditionError for E.
RootRational closed_form(const ARFrame& f, const KRLabel& l);
// Every KR label of C_{Q0}: (i, s) with 1 <= r <= nQ(i), 1 <= k <= r.
std::vector<KRLabel> q0_labels(const ARFrame& f);

struct PropertyViolation {
  char property = 0;  // 'A', 'B' or 'C'
  long t = 0;
  Root beta;
  std::string detail;
};

struct PropertyReport {
  long tmax = 0;
  long checked_a = 0, checked_b = 0, checked_c = 0;
  std::vector<PropertyViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Properties A, B and C on the initial cluster variables x_1..x_tmax.
// threads > 1 splits the positions across per-thread engines.
PropertyReport verify_properties(const ARFrame& f, const CtildeTable& t, long tmax, int threads = 1);

}  // namespace qtor
