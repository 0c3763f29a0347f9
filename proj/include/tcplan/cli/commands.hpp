#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tcplan::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Entry point of the `tcplan` executable; subcommands plan, verify, domains,
/// tc and bench. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_plan(const std::string& input, int samples, const std::string& output, std::ostream& err);
int cmd_verify(const std::string& input, const std::string& path, std::ostream& out, std::ostream& err);
int cmd_domains(const std::string& input, std::ostream& out, std::ostream& err);
int cmd_tc(int d, int k, std::ostream& out, std::ostream& err);

struct BenchOptions {
  int d = 2;
  int k = 2;
  double r = 1.0;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string csv;
  int samples = 1000;
  int threads = 1;
  bool timing = false;  ///< record wall time per trial (makes the CSV nondeterministic)
};

/// CSV header written by cmd_bench.
inline constexpr const char* kBenchHeader = "trial,domain,min_clearance,path_length,wall_time_ms";

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace tcplan::cli
