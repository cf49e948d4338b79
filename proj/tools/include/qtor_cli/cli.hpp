#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtor::cli {

enum class Format { Text, Json };

// Frame selection and rendering options shared by every subcommand.
struct RunConfig {
  std::string family = "A";
  int rank = 1;
  std::string orientation;  // empty: monotonic
  std::optional<std::pair<int, int>> anchor;
  int window = 0;  // 0: 2N
  Format format = Format::Text;
  std::string suite;

  // Flags that parse back to an equal config.
  std::vector<std::string> render() const;
  bool operator==(const RunConfig&) const = default;
};

// Parses "--type X --rank n ..." style flags into a RunConfig (used for the
// round-trip property; run() uses the same option definitions).
RunConfig parse_config(const std::vector<std::string>& args);

// Exit status: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker threads for sweeps, from QTOR_THREADS (default 1).
int thread_count();

}  // namespace qtor::cli
