#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtor/cartan.hpp"
#include "qtor/poly.hpp"

namespace qtor {

// The rational function field Q(a_1..a_n) of one root system, carrying the
// positive-root linear forms used as trial divisors.
class Field {
 public:
  static std::shared_ptr<const Field> of(const DynkinDatum& d);

  int nvars() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<Root>& roots() const { return roots_; }
  const MultiPoly& form(std::size_t k) const { return forms_[k]; }
  // A point (mod 2^61-1) on the hyperplane of root k.
  const std::vector<std::uint64_t>& probe(std::size_t k) const { return probes_[k]; }

 private:
  int n_ = 0;
  std::string name_;
  std::vector<Root> roots_;
  std::vector<MultiPoly> forms_;
  std::vector<std::vector<std::uint64_t>> probes_;
};

using FieldPtr = std::shared_ptr<const Field>;

// unit * prod(root form)^exp * num / den. After normalization num and den are
// monic (leading coefficient 1), share no root-form factor with anything, and
// den is divided out of num whenever the division is exact.
class RootRational {
 public:
  RootRational() = default;  // zero, field adopted from the other operand
  static RootRational zero(FieldPtr f);
  static RootRational one(FieldPtr f);
  static RootRational constant(FieldPtr f, const Rational& c);
  static RootRational of_root(FieldPtr f, const Root& r, int exp = 1);
  static RootRational of_poly(FieldPtr f, const MultiPoly& num,
                              const MultiPoly& den = MultiPoly());
  static RootRational from_parts(FieldPtr f, const Rational& unit, const std::map<Root, int>& factors,
                                 const MultiPoly& num, const MultiPoly& den);

  const FieldPtr& field() const { return field_; }
  int nvars() const;
  const Rational& unit() const { return unit_; }
  const std::map<Root, int>& root_factors() const { return factors_; }
  const MultiPoly& residual_num() const { return num_; }
  const MultiPoly& residual_den() const { return den_; }

  bool is_zero() const { return unit_ == 0; }
  bool is_one() const;
  // No residual polynomials: a signed product of root powers.
  bool is_root_monomial() const;

  RootRational operator*(const RootRational& o) const;
  RootRational operator/(const RootRational& o) const;
  RootRational operator+(const RootRational& o) const;
  RootRational operator-(const RootRational& o) const;
  RootRational operator-() const;
  RootRational& operator*=(const RootRational& o);
  RootRational& operator/=(const RootRational& o);
  RootRational& operator+=(const RootRational& o);
  RootRational inverse() const;
  RootRational pow(int k) const;

  // Structural identity of normal forms (implies rr_equal, not conversely).
  bool same_form(const RootRational& o) const;

  // Multiplicity of the linear form of r (negative in the denominator).
  int multiplicity(const Root& r) const;

  Rational eval(const std::vector<Rational>& point) const;

  // Fully expanded numerator / denominator with the unit folded into the numerator.
  MultiPoly expanded_numerator() const;
  MultiPoly expanded_denominator() const;

  std::string to_string() const;

  // Re-run normalization (idempotent on normalized values).
  RootRational normalized() const;

 private:
  void normalize(bool extract_roots);
  void adopt(const FieldPtr& f);
  static MultiPoly expand(const std::map<Root, int>& factors, int nvars, bool positive_part);

  FieldPtr field_;
  Rational unit_ = 0;
  std::map<Root, int> factors_;
  MultiPoly num_, den_;
};

bool rr_equal(const RootRational& a, const RootRational& b);
int multiplicity(const RootRational& a, const Root& r);
RootRational pow(const RootRational& a, int k);
Rational rr_eval(const RootRational& a, const std::vector<Rational>& point);

// Product of 1/(root) over a list.
RootRational reciprocal_product(FieldPtr f, const std::vector<Root>& roots);

}  // namespace qtor
