#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gstark/bernoulli.hpp"

namespace gstark {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kCacheEnvVar = "GSTARK_CACHE_DIR";
// Below this precision every record is reported inconclusive.
inline constexpr long kMinConclusivePrecision = 6;

struct RunConfig {
  std::string command;  // interp | gross-stark | w-algebra | hecke | lambda
  long p = 5;
  std::vector<long> discs;
  long precision = 12;
  long qexp_terms = 200;
  long lambda_trunc = 16;
  long trials = 100;
  std::string json_path;
  std::string cache_dir;

  std::string to_json() const;
};

// Throws ConfigError.
void validate(const RunConfig& config);

// --cache wins; otherwise the environment variable; otherwise no cache.
std::string resolve_cache_dir(const RunConfig& config);

struct CheckRecord {
  std::string id;
  std::string instance;
  std::string status;  // pass | fail | inconclusive | error
  std::optional<long> discrepancy_valuation;  // empty when the check is exact
  long ms = 0;
  std::string message;
};

class VerificationReport {
 public:
  explicit VerificationReport(RunConfig config) : config_(std::move(config)) {}
  void add(CheckRecord r) { checks_.push_back(std::move(r)); }
  const std::vector<CheckRecord>& checks() const { return checks_; }
  const RunConfig& config() const { return config_; }
  bool any_failure() const;
  // with_timing = false drops "ms", giving a deterministic document
  std::string to_json(bool with_timing = true) const;

 private:
  RunConfig config_;
  std::vector<CheckRecord> checks_;
};

VerificationReport cmd_interp_check(const RunConfig& config, BernoulliCache& cache);
VerificationReport cmd_gross_stark(const RunConfig& config, BernoulliCache& cache);
VerificationReport cmd_w_algebra(const RunConfig& config);
VerificationReport cmd_hecke_check(const RunConfig& config, BernoulliCache& cache);
VerificationReport cmd_lambda_check(const RunConfig& config);

// Validates and dispatches on config.command.
VerificationReport run(const RunConfig& config, BernoulliCache& cache);

// 0 all pass (inconclusive allowed), 1 any failure or error record.
int exit_code(const VerificationReport& report);

// The command-line driver; returns the process exit code (2 on usage errors).
int verify_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gstark
