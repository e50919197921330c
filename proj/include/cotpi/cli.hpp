#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cotpi/series.hpp"
#include "cotpi/verify.hpp"

namespace cotpi {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

struct ComputeConfig {
  enum class Target { sk, pi };
  Target target = Target::sk;
  long k = 0;          // sk
  int j = 0;           // pi
  int digits = 0;      // fractional digits requested
  SkMethod method = SkMethod::zeta_series;  // sk default; pi maps direct/zeta
  std::uint64_t term_cap = kDefaultTermCap;
};

struct ReportConfig {
  enum class Preset { sk_convergence, pi_routes };
  Preset preset = Preset::sk_convergence;
  std::vector<long> k_values;  // sk-convergence
  int j_begin = 0, j_end = 0;  // pi-routes, inclusive
  int digits = 0;
  std::string out_path;  // empty: stdout
};

int run_compute(const ComputeConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_report(const ReportConfig& cfg, std::ostream& out, std::ostream& err);

// Full argv-level entry point: parses flags, dispatches, maps exceptions
// to exit codes. The binary in tools/ is a one-line wrapper over this.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cotpi
