#pragma once

/**
 * Command-line front end: `horadam <seq|validate|sum|estimate|verify> [flags]`.
 *
 * Exit codes:
 *   0  success
 *   1  unexpected internal failure
 *   2  invalid configuration (bad flag, malformed number, violated invariant)
 *   3  parameters fail the convergence hypotheses (`validate` reports overall=false)
 *   4  series failure (zero or wrong-signed denominator, tail bound not established,
 *      inverse enclosure straddles zero)
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "horadam/error.hpp"
#include "horadam/harness.hpp"
#include "horadam/numeric.hpp"

namespace horadam::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitValidity = 3,
  kExitSeries = 4,
};

enum class OutputFormat { csv, json };

struct RunConfig {
  Integer a = 0, b = 1, p = 1, q = 1;
  std::int64_t m = 1;
  std::vector<Integer> s{Integer(1)};
  std::vector<std::int64_t> l{0};
  bool alternating = false;
  /// "general" or "block"
  std::string family = "general";
  /// Block length; defaults to size(s) - 1 for the block family.
  std::optional<std::int64_t> t;
  std::int64_t n_start = 2;
  std::int64_t n_end = 25;
  /// Lower summation index for `sum` and `estimate`.
  std::int64_t n = 10;
  /// Decimal or fraction string, converted exactly.
  std::string eps = "1e-20";
  OutputFormat output = OutputFormat::csv;
  int digits = 30;
  unsigned threads = 1;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& config);
/// Overlays the fields present in `j` on `base`. Throws Error(InvalidArgument).
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

std::vector<std::string> preset_names();
/// Throws Error(InvalidArgument) for unknown names.
RunConfig preset(std::string_view name);

RecurrenceParams params_of(const RunConfig& config);
WeightedSelector selector_of(const RunConfig& config);
EstimateFamily family_of(const RunConfig& config);
Rational eps_of(const RunConfig& config);

int exit_code_for(ErrorCode code) noexcept;

/// Entry point; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace horadam::cli
