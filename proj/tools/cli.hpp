#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace houghton::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

// Shared knobs of every subcommand; echoed into each report.
struct RunConfig {
  int n = 3;
  int r = 2;
  int h = 3;
  std::uint64_t seed = 1;
  int samples = 100;
  int radius = 2;
  int height_cap = 4;
  int x_max = 8;
  int k_max = 12;
  int threads = 1;
  std::string format;  // json | csv | dot; empty picks the command's default
  std::string out;     // empty: stdout
};

// Runs one command line; never calls exit. `out` receives reports, `err`
// diagnostics.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace houghton::cli
