#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sandwich/bundle.hpp"
#include "sandwich/semidirect.hpp"

namespace sandwich {

/// Bad command-line or configuration input; maps to exit code 64.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitNotClassC = 2, kExitUsage = 64 };

struct PipelineConfig {
  std::string ambient_type;
  int rank = 0;
  /// Ambient coordinates: rank + 1 entries for A and G2's three, 8 for E.
  std::vector<std::int64_t> h_star;
  /// Empty means every registered check.
  std::vector<std::string> checks;
  std::string output_format = "json";
  std::size_t seed_cap = kDefaultClosureCap;
  VerifyLimits limits;
};

/// Check names in execution order.
const std::vector<std::string>& check_registry();

/// Throws UsageError for unknown checks or formats. Returns the selected
/// checks in registry order.
std::vector<std::string> resolve_checks(const std::vector<std::string>& requested);

/// Throws UsageError when the root type/rank is unknown or h_star has the
/// wrong length or is zero.
void validate_config(const PipelineConfig& cfg);

/// Throws ClassCError (exit 2) when the center is not one-dimensional,
/// AlignmentError or UsageError for unusable input.
Bundle build_bundle(const PipelineConfig& cfg);

/// Runs the selected checks against a bundle. Unselected checks appear with
/// status "skipped". Timing lives under the "timing" key only.
nlohmann::json run_verify(const Bundle& b, const PipelineConfig& cfg);

/// True unless some check in the report failed.
bool report_passed(const nlohmann::json& report);

/// The report without its "timing" key, dumped with sorted keys.
std::string canonical_dump(const nlohmann::json& report);

/// Human-readable summary of a verify report.
std::string format_text(const nlohmann::json& report);

/// JSON for a rejected build: {"error": "not_class_c", "center": ...}.
nlohmann::json rejection_json(const CenterReport& c);

struct ScanHit {
  std::vector<std::int64_t> h_star;
  int M = 0;
};

/// Every nonzero integer vector with entries in [-bound, bound] (primitive
/// representatives only) whose alignment passes the class-C gate, in
/// lexicographic order. Vectors that do not align are skipped.
std::vector<ScanHit> scan(const std::string& ambient_type, int rank, int bound);

nlohmann::json scan_to_json(const std::string& ambient_type, int rank, int bound, const std::vector<ScanHit>& hits);

}  // namespace sandwich
