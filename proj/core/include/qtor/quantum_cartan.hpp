#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "qtor/cartan.hpp"
#include "qtor/frame.hpp"

namespace qtor {

// Coefficients of the inverse quantum Cartan matrix,
//   C~_ij(m+1) = sum_{k~j} C~_ik(m) - C~_ij(m-1),  C~(1) = Id,  C~(m<=0) = 0.
// Rows are extended on demand under a lock; copies are independent clones.
class CtildeTable {
 public:
  explicit CtildeTable(const DynkinDatum& d);
  CtildeTable(const CtildeTable& o);
  CtildeTable& operator=(const CtildeTable&) = delete;

  const DynkinDatum& datum() const { return datum_; }
  std::int64_t operator()(int i, int j, int m) const;

 private:
  void extend_to(int m) const;

  DynkinDatum datum_;
  mutable std::shared_mutex mu_;
  mutable std::vector<std::vector<std::int64_t>> rows_;  // rows_[m] is n*n, row-major
};

std::int64_t ctilde(const CtildeTable& t, int i, int j, int m);

// N(i,p; j,s) = C~_ij(s-p+1) - C~_ij(s-p-1).
std::int64_t nval(const CtildeTable& t, const ARFrame& f, const TorusPoint& a, const TorusPoint& b);

}  // namespace qtor
