#include "qtor/quantum_cartan.hpp"

#include <mutex>

#include "qtor/error.hpp"

namespace qtor {

CtildeTable::CtildeTable(const DynkinDatum& d) : datum_(d) {
  const int n = d.rank();
  rows_.emplace_back(n * n, 0);
  std::vector<std::int64_t> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  rows_.push_back(std::move(id));
}

CtildeTable::CtildeTable(const CtildeTable& o) : datum_(o.datum_) {
  std::shared_lock lock(o.mu_);
  rows_ = o.rows_;
}

void CtildeTable::extend_to(int m) const {
  std::unique_lock lock(mu_);
  const int n = datum_.rank();
  while (static_cast<int>(rows_.size()) <= m) {
    const auto& cur = rows_.back();
    const auto& prev = rows_[rows_.size() - 2];
    std::vector<std::int64_t> next(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t s = -prev[i * n + j];
        for (int k : datum_.neighbors(j + 1)) s += cur[i * n + (k - 1)];
        next[i * n + j] = s;
      }
    rows_.push_back(std::move(next));
  }
}

std::int64_t CtildeTable::operator()(int i, int j, int m) const {
  const int n = datum_.rank();
  if (i < 1 || i > n || j < 1 || j > n) throw PreconditionError("C~ index out of range");
  if (m <= 0) return 0;
  {
    std::shared_lock lock(mu_);
    if (m < static_cast<int>(rows_.size())) return rows_[m][(i - 1) * n + (j - 1)];
  }
  extend_to(m);
  std::shared_lock lock(mu_);
  return rows_[m][(i - 1) * n + (j - 1)];
}

std::int64_t ctilde(const CtildeTable& t, int i, int j, int m) { return t(i, j, m); }

std::int64_t nval(const CtildeTable& t, const ARFrame& f, const TorusPoint& a, const TorusPoint& b) {
  f.require(a);
  f.require(b);
  return t(a.i, b.i, b.p - a.p + 1) - t(a.i, b.i, b.p - a.p - 1);
}

}  // namespace qtor
