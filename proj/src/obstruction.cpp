#include "lsobstruct/obstruction.hpp"

#include <sstream>

namespace lsobstruct {

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Obstructed:
      return "OBSTRUCTED";
    case Conclusion::Inconclusive:
      return "INCONCLUSIVE";
    case Conclusion::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

SlopeInterval SlopeInterval::closed(Rational lo, Rational hi) {
  if (hi < lo) throw Error("interval endpoints out of order");
  return SlopeInterval{lo, hi, true, true};
}

SlopeInterval SlopeInterval::left_open(Rational lo, Rational hi) {
  if (hi < lo) throw Error("interval endpoints out of order");
  return SlopeInterval{lo, hi, false, true};
}

SlopeInterval SlopeInterval::below(Rational hi, bool closed_hi) {
  return SlopeInterval{std::nullopt, hi, false, closed_hi};
}

SlopeInterval SlopeInterval::above(Rational lo, bool closed_lo) {
  return SlopeInterval{lo, std::nullopt, closed_lo, false};
}

SlopeInterval SlopeInterval::point(Rational x) { return SlopeInterval{x, x, true, true}; }

std::string SlopeInterval::str() const {
  std::string s;
  s += (low && closed_low) ? '[' : '(';
  s += low ? low->str() : "-inf";
  s += ", ";
  s += high ? high->str() : "+inf";
  s += (high && closed_high) ? ']' : ')';
  return s;
}

bool is_square_free(std::int64_t n) {
  if (n < 1) throw Error("square-free test requires a positive integer");
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

Rational weak_threshold(std::int64_t n) {
  if (n < 1) throw Error("threshold requires a positive slope");
  if (n % 2 == 1) return Rational::make(detail::int128(n) - 1, detail::int128(4) * n);
  return Rational(1, 4);
}

Verdict classify(const DInvariantTable& table) {
  Verdict v;
  v.slope = table.n;
  v.square_free = is_square_free(table.n);
  v.threshold = weak_threshold(table.n);
  v.max_d = table.max_entry();
  for (std::int64_t i = 0; i <= table.max_label(); ++i) {
    if (table.at(i) >= v.threshold) v.weak_labels.push_back(i);
  }
  if (!v.square_free) {
    v.conclusion = Conclusion::NotApplicable;
  } else if (v.weak_labels.empty()) {
    v.conclusion = Conclusion::Obstructed;
  } else {
    v.conclusion = Conclusion::Inconclusive;
  }
  return v;
}

std::optional<SlopeInterval> rational_nonfillable_interval(const TorsionProfile& torsion,
                                                           std::int64_t scan_max) {
  if (torsion.genus < 1) throw Error("obstruction scan requires positive genus");
  const std::int64_t lo = 2 * torsion.genus - 1;
  if (scan_max < lo) return std::nullopt;
  std::optional<std::int64_t> best;
  for (std::int64_t n = lo; n <= scan_max; ++n) {
    if (classify(d_table(torsion, n)).conclusion == Conclusion::Obstructed) best = n;
  }
  if (!best) return std::nullopt;
  return SlopeInterval::closed(Rational(lo), Rational(*best));
}

bool quick_bound(std::int64_t g, std::int64_t n) {
  const detail::int128 m = detail::int128(n) - detail::int128(2) * g + 1;
  const detail::int128 bound = detail::int128(4) * g;
  if (m % 2 == 0) {
    const detail::int128 w = m - 2;
    return w * w < bound;
  }
  return (m - 1) * (m - 3) < bound;
}

namespace {

std::int64_t min_ratio_index(const IntervalData& data) {
  std::int64_t best = 1;
  Rational best_ratio(data.A(1), data.genus() - data.a(1));
  for (std::int64_t i = 2; i <= data.h(); ++i) {
    const Rational ratio(data.A(i), data.genus() - data.a(i));
    if (ratio < best_ratio) {  // ties keep the smaller index
      best = i;
      best_ratio = ratio;
    }
  }
  return best;
}

}  // namespace

bool rough_estimate(const IntervalData& data) {
  const std::int64_t i = min_ratio_index(data);
  return data.a(i) + 4 * data.A(i) >= data.genus();
}

TorsionBoundLine torsion_lower_bound_line(const IntervalData& data) {
  const std::int64_t i = min_ratio_index(data);
  const Rational ratio(data.A(i), data.genus() - data.a(i));
  TorsionBoundLine line;
  line.slope = -ratio;
  line.intercept = ratio * Rational(data.genus());
  line.index = i;
  return line;
}

}  // namespace lsobstruct
