#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "lsobstruct/families.hpp"
#include "lsobstruct/obstruction.hpp"

using namespace lsobstruct;
using lsobstruct::testing::for_each_jump_vector;
using lsobstruct::testing::pretzel_2_3_11;

TEST_CASE("square-free by trial division") {
  CHECK(is_square_free(1));
  CHECK(is_square_free(13));
  CHECK(is_square_free(21));
  CHECK(is_square_free(2));
  CHECK_FALSE(is_square_free(12));
  CHECK_FALSE(is_square_free(49));
  CHECK_FALSE(is_square_free(18));
  for (std::int64_t n = 0; n <= 50; ++n) CHECK_FALSE(is_square_free(8 * n + 4));
  CHECK_THROWS_AS(is_square_free(0), Error);
}

TEST_CASE("weak threshold by slope parity") {
  CHECK(weak_threshold(13) == Rational(3, 13));
  CHECK(weak_threshold(12) == Rational(1, 4));
  CHECK(weak_threshold(1) == Rational(0));
  CHECK(weak_threshold(2) == Rational(1, 4));
  CHECK(weak_threshold(19) == Rational(9, 38));
}

TEST_CASE("classification of the worked surgeries") {
  const auto pretzel = knot_torsion_profile(pretzel_2_3_11());
  const auto verdict = classify(d_table(pretzel, 13));
  CHECK(verdict.conclusion == Conclusion::Obstructed);
  CHECK(verdict.square_free);
  CHECK(verdict.threshold == Rational(3, 13));
  CHECK(verdict.max_d == Rational(-23, 13));
  CHECK(verdict.weak_labels.empty());

  const auto k1 = knot_torsion_profile(kn_knot(1).knot);
  CHECK(classify(d_table(k1, 13)).conclusion == Conclusion::Obstructed);
  CHECK(classify(d_table(k1, 11)).conclusion == Conclusion::Obstructed);

  // 12 is not square-free; the negativity analysis still runs and finds no
  // weak label here.
  const auto na = classify(d_table(k1, 12));
  CHECK(na.conclusion == Conclusion::NotApplicable);
  CHECK_FALSE(na.square_free);
  CHECK(na.weak_labels.empty());
  CHECK(na.max_d == Rational(-1, 4));

  // 21 is square-free but label 7 is weak: d = 1/3 >= 5/21.
  const auto weak = classify(d_table(pretzel, 21));
  CHECK(weak.conclusion == Conclusion::Inconclusive);
  CHECK(weak.weak_labels == std::vector<std::int64_t>{7});
  CHECK(weak.max_d == Rational(1, 3));
  CHECK(weak.threshold == Rational(5, 21));
}

TEST_CASE("nonfillable slope interval scans") {
  const auto k1 = knot_torsion_profile(kn_knot(1).knot);
  CHECK(rational_nonfillable_interval(k1, 13) ==
        SlopeInterval::closed(Rational(11), Rational(13)));
  CHECK_FALSE(rational_nonfillable_interval(k1, 10).has_value());

  const auto pretzel = knot_torsion_profile(pretzel_2_3_11());
  CHECK(rational_nonfillable_interval(pretzel, 13) ==
        SlopeInterval::closed(Rational(13), Rational(13)));
  // 16, 18, 20 are not square-free and 21+ turns weak, so 19 is the top.
  CHECK(rational_nonfillable_interval(pretzel, 20) ==
        SlopeInterval::closed(Rational(13), Rational(19)));
  CHECK(rational_nonfillable_interval(pretzel, 25) ==
        SlopeInterval::closed(Rational(13), Rational(19)));
}

TEST_CASE("per-slope conclusions across the pretzel range") {
  const auto pretzel = knot_torsion_profile(pretzel_2_3_11());
  const std::vector<std::pair<std::int64_t, Conclusion>> expected{
      {13, Conclusion::Obstructed},    {14, Conclusion::Obstructed},
      {15, Conclusion::Obstructed},    {16, Conclusion::NotApplicable},
      {17, Conclusion::Obstructed},    {18, Conclusion::NotApplicable},
      {19, Conclusion::Obstructed},    {20, Conclusion::NotApplicable},
      {21, Conclusion::Inconclusive},
  };
  for (const auto& [n, conclusion] : expected)
    CHECK(classify(d_table(pretzel, n)).conclusion == conclusion);
  // a positive yet non-weak value: label 7 at slope 19
  CHECK(d_table(pretzel, 19).at(7) == Rational(3, 38));
}

TEST_CASE("quick bound substitutions") {
  CHECK(quick_bound(7, 13));       // m = 0
  CHECK(quick_bound(6, 13));       // m = 2
  CHECK_FALSE(quick_bound(2, 9));  // m = 6: 16 >= 8
  CHECK(quick_bound(7, 20));       // m = 7: 24 < 28
  CHECK_FALSE(quick_bound(7, 21));  // m = 8: 36 >= 28
}

TEST_CASE("rough estimate at the minimal slope") {
  CHECK(rough_estimate(interval_data(JumpVector({1, 1, 1, 1, 1, 2}), 7)));
  CHECK(rough_estimate(interval_data(JumpVector({1, 1, 1, 3}), 6)));
  CHECK(rough_estimate(interval_data(JumpVector({1, 1}), 2)));
}

TEST_CASE("torsion lower bound line") {
  const auto pretzel = torsion_lower_bound_line(interval_data(JumpVector({1, 1, 1, 1, 1, 2}), 7));
  CHECK(pretzel.slope == Rational(-1, 3));
  CHECK(pretzel.intercept == Rational(7, 3));
  CHECK(pretzel.index == 1);

  // ratio tie between the first two indices resolves to the smaller one
  const auto k2 = torsion_lower_bound_line(interval_data(JumpVector({1, 1, 1, 1, 3, 3}), 10));
  CHECK(k2.slope == Rational(-1, 4));
  CHECK(k2.intercept == Rational(5, 2));
  CHECK(k2.index == 1);
}

TEST_CASE("screens are sound on small admissible vectors") {
  for_each_jump_vector(9, true, [](const std::vector<std::int64_t>& entries) {
    const JumpVector r(entries);
    if (!krcatovich_check(r).empty()) return;
    const std::int64_t g = r.genus();
    const auto profile = torsion_profile(interval_data(r, g));
    if (rough_estimate(interval_data(r, g))) {
      for (const auto& d : d_table(profile, 2 * g - 1).entries) CHECK(d.sign() < 0);
    }
    for (std::int64_t n = 2 * g; n <= 2 * g + 12; ++n) {
      if (!quick_bound(g, n)) CHECK_FALSE(classify(d_table(profile, n)).weak_labels.empty());
    }
    // an obstructed slope always lands inside the certified interval
    if (classify(d_table(profile, 2 * g - 1)).conclusion == Conclusion::Obstructed) {
      const auto interval = rational_nonfillable_interval(profile, 2 * g - 1);
      REQUIRE(interval.has_value());
      CHECK(interval->high == Rational(2 * g - 1));
    }
  });
}

TEST_CASE("the threshold is exactly the negative-definite bound over four") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const Rational bound = n % 2 == 1 ? Rational(n - 1, n) : Rational(1);
    for (std::int64_t num = -20; num <= 20; ++num) {
      for (std::int64_t den = 1; den <= 12; ++den) {
        const Rational d(num, den);
        CHECK((Rational(4) * d >= bound) == (d >= weak_threshold(n)));
      }
    }
  }
}

TEST_CASE("odd staircases run the obstruction through the direct route") {
  // genus-1 staircase; its 1-surgery table is the single entry -2
  const auto trefoil = knot_torsion_profile(polynomial_from_jump_vector(JumpVector({1})));
  const auto verdict = classify(d_table(trefoil, 1));
  CHECK(verdict.conclusion == Conclusion::Obstructed);
  CHECK(verdict.max_d == Rational(-2));
  CHECK(rational_nonfillable_interval(trefoil, 6) ==
        SlopeInterval::closed(Rational(1), Rational(3)));
}

TEST_CASE("interval endpoints and rendering") {
  CHECK(SlopeInterval::closed(Rational(11), Rational(13)).str() == "[11, 13]");
  CHECK(SlopeInterval::left_open(Rational(11), Rational(13)).str() == "(11, 13]");
  CHECK(SlopeInterval::below(Rational(9), false).str() == "(-inf, 9)");
  CHECK(SlopeInterval::above(Rational(13), false).str() == "(13, +inf)");
  CHECK(SlopeInterval::point(Rational(11)).str() == "[11, 11]");
  CHECK_THROWS_AS(SlopeInterval::closed(Rational(13), Rational(11)), Error);
}
