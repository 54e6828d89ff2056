#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "lsobstruct/scan.hpp"

using namespace lsobstruct;
using lsobstruct::testing::pretzel_2_3_11;

TEST_CASE("parallel kernel matches the serial reference row for row") {
  const auto profile = knot_torsion_profile(pretzel_2_3_11());
  for (const bool screen : {true, false}) {
    const auto serial = scan_slopes_serial(profile, 13, 80, screen);
    for (const int jobs : {1, 2, 4}) {
      ScanOptions options;
      options.jobs = jobs;
      options.screen = screen;
      CHECK(scan_slopes(profile, 13, 80, options) == serial);
    }
  }
}

TEST_CASE("screening kicks in exactly where the quick bound fails") {
  const auto profile = knot_torsion_profile(pretzel_2_3_11());
  const auto rows = scan_slopes_serial(profile, 13, 25, true);
  REQUIRE(rows.size() == 13);
  for (const auto& row : rows) {
    // (m-2)^2 or (m-1)(m-3) reaches 4g = 28 from slope 21 on
    const bool expect_screened = row.slope >= 21;
    CHECK(row.screened == expect_screened);
    CHECK(row.verdict.has_value() == !expect_screened);
  }
}

TEST_CASE("screened scans produce the same interval as the unscreened reference") {
  std::vector<TorsionProfile> profiles{knot_torsion_profile(pretzel_2_3_11())};
  for (std::int64_t n = 1; n <= 6; ++n)
    profiles.push_back(knot_torsion_profile(kn_knot(n).knot));

  for (const auto& profile : profiles) {
    const std::int64_t lo = 2 * profile.genus - 1;
    for (const std::int64_t max : {lo, lo + 7, lo + 23}) {
      const auto rows = scan_slopes(profile, lo, max, ScanOptions{2, true});
      CHECK(nonfillable_from_rows(rows, profile.genus) ==
            rational_nonfillable_interval(profile, max));
    }
  }
}

TEST_CASE("the screen stays off below twice the genus") {
  // At slope 2g-1 the genus label is outside the table and the quick bound
  // says nothing; a genus-1 staircase would otherwise lose its only
  // obstructed slopes.
  const auto trefoil = knot_torsion_profile(polynomial_from_jump_vector(JumpVector({1})));
  const auto rows = scan_slopes_serial(trefoil, 1, 6, true);
  REQUIRE(rows.size() == 6);
  CHECK_FALSE(rows[0].screened);
  REQUIRE(rows[0].verdict.has_value());
  CHECK(rows[0].verdict->conclusion == Conclusion::Obstructed);
  CHECK_FALSE(rows[3].screened);  // n = 4: m = 3, (m-1)(m-3) = 0 < 4
  CHECK(rows[4].screened);        // n = 5: m = 4, (m-2)^2 = 4 reaches 4g
  CHECK(nonfillable_from_rows(rows, 1) == rational_nonfillable_interval(trefoil, 6));
}

TEST_CASE("empty ranges scan to nothing") {
  const auto profile = knot_torsion_profile(pretzel_2_3_11());
  CHECK(scan_slopes(profile, 20, 13).empty());
  CHECK(scan_slopes_serial(profile, 20, 13).empty());
  CHECK_FALSE(nonfillable_from_rows({}, profile.genus).has_value());
}

TEST_CASE("family sweep kernel matches per-index classification") {
  const auto parallel = kn_classification_range(1, 10, 2);
  REQUIRE(parallel.size() == 10);
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto single = kn_slope_classification(n);
    const auto& swept = parallel[static_cast<std::size_t>(n - 1)];
    CHECK(swept.index == n);
    CHECK(swept.m == single.m);
    CHECK(swept.nonfillable == single.nonfillable);
    CHECK(swept.classification == single.classification);
  }
}
