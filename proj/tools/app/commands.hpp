#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "config.hpp"

namespace toricfano::cli {

struct Options {
  bool json = false;
  bool oracle = false;
  std::optional<long long> max;  // scan: overrides the range bound
  std::size_t cap = 100000;      // scan: refuse larger enumerations
  unsigned threads = 0;          // scan: 0 = hardware concurrency
};

// Each command returns a JSON report; render_text gives the human form of
// the same document, so both modes carry identical rational strings.
nlohmann::json cmd_check(const BundleConfig& config, const Options& options);
nlohmann::json cmd_polytope(const BundleConfig& config, const Options& options);
nlohmann::json cmd_flag_info(const BundleConfig& config, const Options& options);
nlohmann::json cmd_scan(const BundleConfig& config, const Options& options);

/// Numerical comparison for a CP^m fiber (fixed points, random samples,
/// barycenter).
nlohmann::json oracle_report(std::size_t m);

std::string render_text(const nlohmann::json& report);

/// Full command-line entry point. Returns the process exit status: 0 when
/// the pipeline ran (whatever the verdict), nonzero on input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toricfano::cli
