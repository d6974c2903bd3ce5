#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace shufflegrp::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2 };

struct RunConfig {
  std::string subcommand;
  std::size_t k = 3;
  std::size_t n = 0;
  std::string format = "text";  // text | json
  std::uint64_t seed = 0;
  std::size_t max_degree = 200;  // Schreier-Sims degree cap
  bool max_degree_set = false;
  std::size_t pair_cap = 2000;
  std::size_t budget = 10'000'000;  // witness token budget
  std::size_t sample = 0;
  unsigned workers = 1;
};

/// Runs the shufflegrp command line; results go to `out`, diagnostics to
/// `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shufflegrp::cli
