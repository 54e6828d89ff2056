#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsobstruct/dinv.hpp"
#include "lsobstruct/rational.hpp"
#include "lsobstruct/torsion.hpp"

namespace lsobstruct {

enum class Conclusion {
  Obstructed,     // square-free slope, every d-invariant strictly non-weak
  Inconclusive,   // some weak d-invariant
  NotApplicable,  // slope not square-free; the bound does not apply
};

std::string_view to_string(Conclusion c);

// Outcome of the negative-definite bound at one integral slope. A d-value is
// weak iff d >= threshold, threshold = (1 - 1/n)/4 for odd n and 1/4 for
// even n. max_d is absent only for verdicts produced without a table (slope
// below the L-space range at a non-square-free coefficient).
struct Verdict {
  std::int64_t slope = 0;
  bool square_free = false;
  Rational threshold;
  std::optional<Rational> max_d;
  std::vector<std::int64_t> weak_labels;
  Conclusion conclusion = Conclusion::Inconclusive;
};

// Interval of surgery slopes; absent endpoints are unbounded.
struct SlopeInterval {
  std::optional<Rational> low;
  std::optional<Rational> high;
  bool closed_low = true;
  bool closed_high = true;

  static SlopeInterval closed(Rational lo, Rational hi);
  static SlopeInterval left_open(Rational lo, Rational hi);  // (lo, hi]
  static SlopeInterval below(Rational hi, bool closed_hi);   // (-inf, hi
  static SlopeInterval above(Rational lo, bool closed_lo);   // lo, +inf)
  static SlopeInterval point(Rational x);

  std::string str() const;

  friend bool operator==(const SlopeInterval& x, const SlopeInterval& y) = default;
};

// No prime squared divides n; trial division.
bool is_square_free(std::int64_t n);

// Smallest d-value that still satisfies the negative-definite bound at
// slope n: (n-1)/(4n) for odd n, 1/4 for even n.
Rational weak_threshold(std::int64_t n);

// Compares every table entry to the threshold and draws the conclusion.
Verdict classify(const DInvariantTable& table);

// Scans integer slopes in [2g-1, scan_max], serially and without screening
// (this is the reference path). Returns [2g-1, n] for the maximal slope n
// that classifies as Obstructed, or nothing. An empty scan range (scan_max
// below 2g-1) yields nothing.
std::optional<SlopeInterval> rational_nonfillable_interval(const TorsionProfile& torsion,
                                                           std::int64_t scan_max);

// Necessary condition for an all-non-weak table at n = 2g + (m-1):
// (m-2)^2 < 4g for even m, (m-1)(m-3) < 4g for odd m. false guarantees a
// weak value at label g whenever that label exists (n >= 2g).
bool quick_bound(std::int64_t g, std::int64_t n);

// Sufficient condition for all-non-weak d-invariants at the slope 2g - 1:
// with i_min minimizing A_i / (g - a_i) over i = 1..h (exact comparison,
// ties to the smallest index), checks a_{i_min} + 4 A_{i_min} >= g.
bool rough_estimate(const IntervalData& data);

// The linear torsion lower bound through (g, 0) with slope -A_i/(g - a_i)
// at the minimizing index; the line drawn under the torsion staircase.
struct TorsionBoundLine {
  Rational slope;
  Rational intercept;
  std::int64_t index = 0;
};

TorsionBoundLine torsion_lower_bound_line(const IntervalData& data);

}  // namespace lsobstruct
