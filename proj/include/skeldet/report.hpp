#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skeldet/numeric.hpp"

namespace skeldet {

enum class Relation { kEqual, kAtLeast };

const char* relation_name(Relation relation);

/// One verification trial. `dim`, `det` and `formula` are the compared
/// quantities when they apply; `pass` is decided by the suite.
struct TrialRecord {
  std::size_t id = 0;
  nlohmann::json instance = nlohmann::json::object();
  std::optional<BigInt> dim;
  std::optional<BigInt> det;
  std::optional<BigInt> formula;
  Relation relation = Relation::kEqual;
  bool pass = false;
  /// Set when the trial threw instead of producing values.
  std::optional<std::string> error;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;
  /// Instances generated but not used (e.g. failed a class or PSD filter).
  std::size_t discarded = 0;
  /// Skipped instances with reasons.
  std::vector<std::string> skipped;
  std::int64_t elapsed_ms = 0;

  std::size_t total() const noexcept { return trials.size(); }
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
  std::vector<const TrialRecord*> failures() const;

  /// Appends a trial, assigning the next id.
  TrialRecord& add(TrialRecord record);
};

/// Canonical report JSON. Big integers are decimal strings. `timestamp` (UTC,
/// ISO 8601) is added when requested; it and summary.elapsed_ms are the only
/// run-dependent fields.
nlohmann::json report_to_json(const VerificationReport& report, bool with_timestamp = true);

/// Header plus one row per trial.
void write_report_csv(std::ostream& out, const VerificationReport& report);

/// Summary line, then one line per failed trial with its instance.
void write_report_text(std::ostream& out, const VerificationReport& report);

}  // namespace skeldet
