#include "lsobstruct/families.hpp"

#include <initializer_list>
#include <map>
#include <string>

#include "lsobstruct/dinv.hpp"
#include "lsobstruct/torsion.hpp"

namespace lsobstruct {

std::string_view to_string(IntervalTag tag) {
  switch (tag) {
    case IntervalTag::TightNonfillable:
      return "TIGHT_NONFILLABLE";
    case IntervalTag::NonfillableTightUnknown:
      return "NONFILLABLE_TIGHT_UNKNOWN";
    case IntervalTag::TightFillabilityUnknown:
      return "TIGHT_FILLABILITY_UNKNOWN";
  }
  return "?";
}

KnFamilyMember kn_knot(std::int64_t n) {
  if (n < 1) throw Error("family index must be >= 1");

  std::map<std::int64_t, std::int64_t> coeffs;
  coeffs[0] = 1;
  for (std::int64_t j = 0; j <= n; ++j) {
    coeffs[4 * j + 2] = 1;
    coeffs[-(4 * j + 2)] = 1;
    coeffs[4 * j + 1] = -1;
    coeffs[-(4 * j + 1)] = -1;
  }

  KnFamilyMember member;
  member.index = n;
  member.knot = AlexanderPolynomial(std::move(coeffs), "K_" + std::to_string(n));
  member.braid_word.reserve(static_cast<std::size_t>(4 * (2 * n + 1) + 5));
  for (std::int64_t rep = 0; rep < 2 * n + 1; ++rep) {
    for (const int gen : {2, 1, 3, 2}) member.braid_word.push_back(gen);
  }
  for (const int gen : {-1, 2, 1, 1, 2}) member.braid_word.push_back(gen);
  member.genus = 4 * n + 2;
  member.tb = 8 * n + 1;
  member.rot_abs = 2;
  return member;
}

std::int64_t kn_torsion_closed_form(std::int64_t n, std::int64_t j) {
  if (j < 0) j = -j;
  if (j > 4 * n + 2) return 0;
  return n - (j + 2) / 4 + 1;
}

SlopeInterval tight_excluded_interval(std::int64_t tb, std::int64_t rot_abs) {
  // [2gs - |rot| - 1, 2gs - 1] rewritten through tb + |rot| = 2gs - 1.
  return SlopeInterval::closed(Rational(tb), Rational(tb + rot_abs));
}

SlopeReport kn_slope_classification(std::int64_t n) {
  const auto member = kn_knot(n);
  const auto profile = knot_torsion_profile(member.knot);
  const std::int64_t base = 8 * n + 3;  // = 2g - 1

  SlopeReport report;
  report.index = n;
  report.tight_excluded = tight_excluded_interval(member.tb, member.rot_abs);

  // Best certified obstruction slope among the candidates, largest first.
  // Square-freeness alone is not enough: the table must classify as
  // Obstructed at that slope.
  for (const std::int64_t candidate : {8 * n + 5, 8 * n + 3}) {
    if (!is_square_free(candidate)) continue;
    if (classify(d_table(profile, candidate)).conclusion != Conclusion::Obstructed) continue;
    report.m = candidate;
    break;
  }
  if (report.m)
    report.nonfillable = SlopeInterval::closed(Rational(base), Rational(*report.m));

  report.classification.push_back(
      {SlopeInterval::below(Rational(8 * n + 1), false), IntervalTag::TightFillabilityUnknown});
  if (report.m) {
    report.classification.push_back(
        {SlopeInterval::point(Rational(base)), IntervalTag::NonfillableTightUnknown});
    if (*report.m > base) {
      report.classification.push_back({SlopeInterval::left_open(Rational(base), Rational(*report.m)),
                                       IntervalTag::TightNonfillable});
    }
    report.classification.push_back(
        {SlopeInterval::above(Rational(*report.m), false), IntervalTag::TightFillabilityUnknown});
  } else {
    report.classification.push_back(
        {SlopeInterval::above(Rational(base), false), IntervalTag::TightFillabilityUnknown});
  }

  report.disclaimer =
      "surgeries in these intervals are generically hyperbolic; finitely many "
      "exceptional slopes may exist and are not identified";
  return report;
}

}  // namespace lsobstruct
