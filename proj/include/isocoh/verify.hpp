#pragma once

// Claim suite: every checked statement is a named claim with an expected
// value and a tolerance class. Claims run in a thread pool and reports are
// emitted in claim-id order, so output is reproducible for a fixed seed.
//
// Configuration file (INI):
//   [run]
//   groups = tables, jacobi     ; subset of tables|jacobi|heisenberg|
//                               ; curvature|splitting|catalog (default all)
//   seed = 24301                ; sampling seed (default 0x5EED)
//   samples = 20                ; genericity samples per orbit check
//   threads = 0                 ; 0 = hardware concurrency
//   [tolerance]
//   algebraic = 1e-9
//   finite_difference = 1e-5
//   curvature = 1e-8
//   anticommutation = 1e-12
//   flatness = 1e-9

#include "isocoh/serialize.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isocoh {

/// Raised for unreadable or malformed configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ToleranceClass { Exact, Algebraic, FiniteDifference, Curvature, Anticommutation, Flatness };

struct Tolerances {
  double algebraic = 1e-9;
  double finite_difference = 1e-5;
  double curvature = 1e-8;
  double anticommutation = 1e-12;
  double flatness = 1e-9;

  double value(ToleranceClass c) const;
};

struct VerifyConfig {
  std::vector<std::string> groups;  ///< empty = all groups
  std::uint64_t seed = kDefaultSeed;
  int samples = kDefaultSamples;
  int threads = 0;
  Tolerances tolerances;
};

/// Names of all claim groups in canonical order.
const std::vector<std::string>& claim_groups();

VerifyConfig parse_config(const std::string& text);
VerifyConfig load_config(const std::string& path);

/// What a claim computed and whether it holds.
struct ClaimOutcome {
  Json computed;
  Json expected;
  double residual = 0.0;
  bool pass = false;
  std::string reason;
};

struct ClaimSpec {
  std::string id;
  std::string group;
  std::string target;  ///< catalog id or representation row
  std::string check;   ///< operation name
  ToleranceClass tolerance_class = ToleranceClass::Exact;
  double tolerance = 0.0;
  std::uint64_t seed = kDefaultSeed;
  std::string source;  ///< "reference" | "derived" | "invariant"
  std::function<ClaimOutcome(const ClaimSpec&)> run;
};

struct VerificationReport {
  std::string claim_id;
  std::string group;
  std::string target;
  std::string check;
  std::string status;  ///< pass | fail | skipped
  Json computed;
  Json expected;
  std::string source;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string reason;
  std::int64_t runtime_ms = 0;
};

struct SuiteResult {
  std::vector<VerificationReport> reports;  ///< sorted by claim id
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::int64_t runtime_ms = 0;

  /// 0 when every non-skipped claim passes, 1 otherwise.
  int exit_code() const { return failed == 0 ? 0 : 1; }
};

std::vector<ClaimSpec> build_claims(const VerifyConfig& config);
SuiteResult run_suite(const VerifyConfig& config);

/// One JSON object per line, then a summary object. Timing lives only in
/// the "timing" field and is dropped when include_timing is false.
std::string render_json_lines(const SuiteResult& result, bool include_timing = true);
std::string render_text(const SuiteResult& result);

/// Helpers shared with the tests.
ClaimOutcome exact_outcome(const Json& computed, const Json& expected);
ClaimOutcome residual_outcome(double residual, double tolerance, const Json& expected);
ClaimOutcome lower_bound_outcome(double value, double bound);

}  // namespace isocoh
