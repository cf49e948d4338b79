#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtor/cartan.hpp"

namespace qtor {

using Rational = mpq_class;
using Exponent = std::array<std::uint16_t, kMaxRank>;

Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& q);

// Sparse polynomial in a_1..a_n over Q. Terms are kept in lexicographic
// exponent order (a_1 most significant); zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : n_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return n_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  int total_degree() const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly pow(unsigned k) const;
  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // Quotient when d divides *this exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  Rational eval(const std::vector<Rational>& point) const;
  // Value modulo the Mersenne prime 2^61-1; nullopt if a denominator vanishes.
  std::optional<std::uint64_t> eval_mod(const std::vector<std::uint64_t>& point) const;

  // "a1^2+2*a1*a2-1/3"
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Exponent, Rational> terms_;
};

// Linear form of a root: sum c_i a_i.
MultiPoly root_form(const Root& r);

}  // namespace qtor
