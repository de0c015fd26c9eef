// Deterministic report serialization: canonical JSON (sorted keys, 17
// significant digits) and RFC 4180 CSV with LF line endings, so repeated runs
// of the same configuration are byte-identical and diffable.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmcf/brakke.hpp"

namespace lmcf {

inline constexpr const char* kEngineVersion = "1.0.0";

struct SuiteReport {
  std::string suite_id;
  std::string engine_version = kEngineVersion;
  nlohmann::json config = nlohmann::json::object();
  std::vector<nlohmann::json> cells;

  /// "pass" / "fail" / "inconclusive", a pure function of the cells.
  std::string verdict() const;
};

/// Canonical rendering: object keys sorted, numbers with up to 17 significant
/// digits, no trailing whitespace, LF newline at end.
std::string canonical_json(const nlohmann::json& j);

void write_json(const SuiteReport& report, const std::filesystem::path& path);

/// Rectangular numeric series; throws on ragged rows.
void write_csv_series(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows,
                      const std::filesystem::path& path);

nlohmann::json to_json(const BrakkeVerdict& v);
nlohmann::json to_json(const LimitMatch& lm);
nlohmann::json to_json(const DivergenceFit& fit);
nlohmann::json to_json(const BrakkeReport& rep);

}  // namespace lmcf
