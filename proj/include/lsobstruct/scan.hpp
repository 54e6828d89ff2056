#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsobstruct/families.hpp"
#include "lsobstruct/obstruction.hpp"
#include "lsobstruct/torsion.hpp"

namespace lsobstruct {

// One slope of a range scan. Screened rows were rejected by the quick bound
// before tabulation and carry no verdict (they can never be Obstructed).
struct ScanRow {
  std::int64_t slope = 0;
  bool screened = false;
  std::optional<Verdict> verdict;

  friend bool operator==(const ScanRow& x, const ScanRow& y);
};

struct ScanOptions {
  int jobs = 0;        // <= 0: all hardware threads
  bool screen = true;  // apply the quick bound where it is valid (n >= 2g)
};

// Serial reference implementation; the parallel kernel must match it row
// for row.
std::vector<ScanRow> scan_slopes_serial(const TorsionProfile& torsion, std::int64_t lo,
                                        std::int64_t hi, bool screen = true);

// OpenMP kernel over independent slopes.
std::vector<ScanRow> scan_slopes(const TorsionProfile& torsion, std::int64_t lo,
                                 std::int64_t hi, const ScanOptions& options = {});

// [2g-1, n] for the maximal Obstructed slope among the rows, or nothing.
std::optional<SlopeInterval> nonfillable_from_rows(const std::vector<ScanRow>& rows,
                                                   std::int64_t genus);

// Family sweep kernel; indices lo..hi inclusive. jobs as in ScanOptions.
std::vector<SlopeReport> kn_classification_range(std::int64_t lo, std::int64_t hi,
                                                 int jobs = 0);

}  // namespace lsobstruct
