#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtor/frame.hpp"
#include "qtor/quantum_cartan.hpp"

namespace qtor::cli {

struct SuiteOptions {
  long tmax = 0;  // 0: 2N
  int threads = 1;
  unsigned seed = 1;
};

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  long checks = 0;
  std::vector<std::string> witnesses;  // first few failures
  std::vector<std::string> notes;      // informational lines (coverage etc.)

  void check(bool cond, const std::string& witness);
};

const std::vector<std::string>& suite_names();
// Suites that make sense for this frame (what "all" runs).
std::vector<std::string> applicable_suites(const ARFrame& f);
// PreconditionError when the suite does not apply to the frame.
SuiteResult run_suite(const std::string& name, const ARFrame& f, const CtildeTable& t, const SuiteOptions& opt);

}  // namespace qtor::cli
