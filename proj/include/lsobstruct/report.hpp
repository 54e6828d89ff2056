#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsobstruct/dinv.hpp"
#include "lsobstruct/families.hpp"
#include "lsobstruct/knot_io.hpp"
#include "lsobstruct/obstruction.hpp"
#include "lsobstruct/scan.hpp"

namespace lsobstruct {

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& name);

// Everything a single-knot analysis produces. Machine renderings carry exact
// fractions as [numerator, denominator]; decimals appear only in the human
// table and are marked approximate.
struct AnalysisReport {
  std::string name;
  std::string provenance;
  std::int64_t genus = 0;
  std::int64_t k = 0;
  bool even_k = false;
  std::optional<JumpVector> r;
  std::vector<std::int64_t> krcatovich_violations;
  TorsionProfile profile;
  std::optional<bool> rough;  // even-k screen at slope 2g-1
  std::optional<TorsionBoundLine> bound_line;
  std::optional<bool> quick;  // screen at the analyzed slope
  std::optional<DInvariantTable> table;
  std::optional<Verdict> verdict;

  bool admissible() const { return krcatovich_violations.empty(); }
};

// Validates, extracts the jump data, builds the torsion profile (interval
// route cross-checked against the direct sum for even k), and, when a slope
// is given, the d-invariant table and verdict. A non-square-free slope below
// 2g-1 yields a table-free NOT_APPLICABLE verdict; a square-free one raises
// SlopeTooSmall.
AnalysisReport analyze_knot(const KnotInput& input, std::optional<std::int64_t> slope);

struct ScanReport {
  std::string name;
  std::int64_t genus = 0;
  std::optional<JumpVector> r;
  std::vector<std::int64_t> krcatovich_violations;
  std::vector<ScanRow> rows;
  std::optional<SlopeInterval> interval;

  bool admissible() const { return krcatovich_violations.empty(); }
};

ScanReport scan_knot(const KnotInput& input, std::int64_t max_slope,
                     const ScanOptions& options);

struct BatchRecord {
  int line = 0;
  std::string name;
  bool ok = false;
  std::string error;
  std::int64_t genus = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> krcatovich_violations;
  std::vector<Verdict> verdicts;
  std::optional<SlopeInterval> interval;
};

struct BatchResult {
  std::vector<BatchRecord> records;
  std::int64_t ok_count = 0;
  std::int64_t error_count = 0;
  std::int64_t obstructed_count = 0;
};

// Per-row pipeline over the census: slopes 2g-1 .. 2g-1+delta per knot.
// Malformed rows become error records; the batch never aborts on them.
BatchResult run_batch(const Census& census, std::int64_t delta, int jobs);

struct ValidationReport {
  std::string name;
  bool valid = false;
  std::string reason;  // failing condition when invalid
  std::int64_t genus = 0;
  std::int64_t k = 0;
  std::optional<JumpVector> r;
  std::vector<std::int64_t> krcatovich_violations;
};

ValidationReport validate_knot(const KnotInput& input);

// --- machine renderings (deterministic: sorted keys, reduced fractions) ---

nlohmann::json rational_json(const Rational& value);
nlohmann::json interval_json(const SlopeInterval& interval);
nlohmann::json verdict_json(const Verdict& verdict);
nlohmann::json d_table_json(const DInvariantTable& table);
nlohmann::json analysis_json(const AnalysisReport& report);
nlohmann::json scan_json(const ScanReport& report);
nlohmann::json slope_report_json(const SlopeReport& report);
nlohmann::json family_knot_json(const KnFamilyMember& member);
nlohmann::json validation_json(const ValidationReport& report);
nlohmann::json batch_summary_json(const BatchResult& result);
std::string batch_jsonl(const BatchResult& result);

std::string d_table_csv(const DInvariantTable& table);  // i,numerator,denominator,branch
std::string torsion_csv(const TorsionProfile& profile);  // j,t_j
std::string bound_csv(const TorsionBoundLine& line);
std::string dinv_plot_csv(const DInvariantTable& table);  // i,num,den
std::string scan_csv(const ScanReport& report);

// --- human renderings -----------------------------------------------------

std::string render_analysis_table(const AnalysisReport& report);
std::string render_scan_table(const ScanReport& report);
std::string render_slope_report_table(const SlopeReport& report);
std::string render_validation_table(const ValidationReport& report);
std::string render_batch_summary(const BatchResult& result);

// Writes torsion.csv, bound.csv (even k only), and dinv.csv (when a table is
// present) into the directory, creating it if needed.
void write_plot_data(const AnalysisReport& report, const std::filesystem::path& dir);

}  // namespace lsobstruct
