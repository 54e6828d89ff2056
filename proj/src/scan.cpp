#include "lsobstruct/scan.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lsobstruct/dinv.hpp"

namespace lsobstruct {

namespace {

bool verdict_equal(const Verdict& x, const Verdict& y) {
  return x.slope == y.slope && x.square_free == y.square_free && x.threshold == y.threshold &&
         x.max_d == y.max_d && x.weak_labels == y.weak_labels && x.conclusion == y.conclusion;
}

ScanRow scan_one(const TorsionProfile& torsion, std::int64_t n, bool screen) {
  // The genus-label screen is only valid once label g is in the table
  // (n >= 2g); a screened slope can never classify as Obstructed.
  if (screen && n >= 2 * torsion.genus && !quick_bound(torsion.genus, n))
    return ScanRow{n, true, std::nullopt};
  return ScanRow{n, false, classify(d_table(torsion, n))};
}

}  // namespace

bool operator==(const ScanRow& x, const ScanRow& y) {
  if (x.slope != y.slope || x.screened != y.screened) return false;
  if (x.verdict.has_value() != y.verdict.has_value()) return false;
  return !x.verdict || verdict_equal(*x.verdict, *y.verdict);
}

std::vector<ScanRow> scan_slopes_serial(const TorsionProfile& torsion, std::int64_t lo,
                                        std::int64_t hi, bool screen) {
  std::vector<ScanRow> rows;
  if (hi < lo) return rows;
  rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) rows.push_back(scan_one(torsion, n, screen));
  return rows;
}

std::vector<ScanRow> scan_slopes(const TorsionProfile& torsion, std::int64_t lo,
                                 std::int64_t hi, const ScanOptions& options) {
  if (hi < lo) return {};
  const std::int64_t count = hi - lo + 1;
  std::vector<ScanRow> rows(static_cast<std::size_t>(count));
  std::exception_ptr first_error;

#ifdef _OPENMP
  const int jobs = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static, 1) num_threads(jobs)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      rows[static_cast<std::size_t>(idx)] = scan_one(torsion, lo + idx, options.screen);
    } catch (...) {
#pragma omp critical
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
#else
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      rows[static_cast<std::size_t>(idx)] = scan_one(torsion, lo + idx, options.screen);
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
      break;
    }
  }
#endif

  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

std::optional<SlopeInterval> nonfillable_from_rows(const std::vector<ScanRow>& rows,
                                                   std::int64_t genus) {
  std::optional<std::int64_t> best;
  for (const auto& row : rows) {
    if (row.verdict && row.verdict->conclusion == Conclusion::Obstructed) best = row.slope;
  }
  if (!best) return std::nullopt;
  return SlopeInterval::closed(Rational(2 * genus - 1), Rational(*best));
}

std::vector<SlopeReport> kn_classification_range(std::int64_t lo, std::int64_t hi, int jobs) {
  if (hi < lo) return {};
  const std::int64_t count = hi - lo + 1;
  std::vector<SlopeReport> reports(static_cast<std::size_t>(count));
  std::exception_ptr first_error;

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      reports[static_cast<std::size_t>(idx)] = kn_slope_classification(lo + idx);
    } catch (...) {
#pragma omp critical
      {
        if (!first_error) first_error = std::current_exception();
      }
    }
  }
#else
  (void)jobs;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    try {
      reports[static_cast<std::size_t>(idx)] = kn_slope_classification(lo + idx);
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
      break;
    }
  }
#endif

  if (first_error) std::rethrow_exception(first_error);
  return reports;
}

}  // namespace lsobstruct
