// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Every expected value is exact; time budgets are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lsobstruct/report.hpp"
#include "lsobstruct/scan.hpp"

using namespace lsobstruct;
using lsobstruct::testing::for_each_jump_vector;
using lsobstruct::testing::pretzel_2_3_11;

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure{message};
}

int run_criterion(int id, const char* summary, double budget_seconds,
                  const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const CheckFailure& f) {
    failure = f.message;
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && elapsed >= budget_seconds) {
    std::ostringstream os;
    os << "exceeded the " << budget_seconds << "s budget";
    failure = os.str();
  }
  if (failure.empty()) {
    std::printf("PASS  criterion %d: %s  (%.3fs < %.0fs)\n", id, summary, elapsed,
                budget_seconds);
    return 0;
  }
  std::printf("FAIL  criterion %d: %s  (%.3fs) -- %s\n", id, summary, elapsed,
              failure.c_str());
  return 1;
}

std::string source_dir() { return LSOBSTRUCT_SOURCE_DIR; }

void criterion_1() {
  const auto poly = pretzel_2_3_11();
  const auto seq = validate_lspace_form(poly);
  const auto r = jump_vector_from_exponents(seq);
  require(r.entries() == std::vector<std::int64_t>{1, 1, 1, 1, 1, 2}, "jump vector");

  const auto data = interval_data(r, 7);
  const std::vector<std::int64_t> expected_a{7, 4, 2, 0};
  const std::vector<std::int64_t> expected_b{6, 3, 1};
  for (std::int64_t j = 0; j <= 3; ++j)
    require(data.a(j) == expected_a[static_cast<std::size_t>(j)], "a marks");
  for (std::int64_t l = 1; l <= 3; ++l)
    require(data.b(l) == expected_b[static_cast<std::size_t>(l - 1)], "b marks");

  const auto profile = torsion_profile(data);
  require(profile.values == std::vector<std::int64_t>{3, 3, 2, 2, 1, 1, 1, 0},
          "torsion profile");
  for (std::int64_t j = 0; j <= 7; ++j)
    require(profile.t(j) == torsion_direct(poly, j), "direct-sum oracle");

  const auto table = d_table(profile, 13);
  for (const auto& entry : table.entries)
    require(entry.sign() < 0, "all 13-surgery d-invariants strictly negative");
  require(classify(table).conclusion == Conclusion::Obstructed, "verdict OBSTRUCTED");
}

void criterion_2() {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const auto member = kn_knot(n);
    const auto r = jump_vector_from_exponents(validate_lspace_form(member.knot));
    const auto profile = torsion_profile(interval_data(r, member.genus));
    for (std::int64_t j = 0; j <= member.genus + 3; ++j) {
      const std::int64_t closed = kn_torsion_closed_form(n, j);
      require(closed == profile.t(j), "closed form vs interval formula");
      require(closed == torsion_direct(member.knot, j), "closed form vs direct sum");
    }
  }
}

void criterion_3() {
  for (std::int64_t n = 1; n <= 50; ++n) {
    const auto profile = knot_torsion_profile(kn_knot(n).knot);
    for (std::int64_t k = 3; k <= 5; ++k) {
      const std::int64_t m = 8 * n + k;
      const auto table = d_table(profile, m);
      for (const auto& entry : table.entries)
        require(entry.sign() < 0, "all d-invariants negative");
      const Rational bound(-24 * n + k * k - 7 * k + 4, 4 * (8 * n + k));
      require(bound.sign() < 0, "proof bound negative");
      require(table.at(4 * n + 1) <= bound, "bound dominates the label-(4n+1) entry");
    }
  }
}

void criterion_4() {
  const auto first = kn_slope_classification(1);
  require(first.nonfillable == SlopeInterval::closed(Rational(11), Rational(13)),
          "index 1 nonfillable [11, 13]");
  require(first.tight_excluded == SlopeInterval::closed(Rational(9), Rational(11)),
          "index 1 tight-excluded [9, 11]");

  const auto second = kn_slope_classification(2);
  require(second.nonfillable == SlopeInterval::closed(Rational(19), Rational(21)),
          "index 2 nonfillable [19, 21]");

  for (std::int64_t n = 1; n <= 50; ++n) {
    if (!is_square_free(8 * n + 5)) continue;
    const auto report = kn_slope_classification(n);
    require(report.m == 8 * n + 5, "maximal square-free candidate certified");
    const auto want = SlopeInterval::left_open(Rational(8 * n + 3), Rational(8 * n + 5));
    bool found = false;
    for (const auto& tagged : report.classification)
      found = found || (tagged.tag == IntervalTag::TightNonfillable && tagged.interval == want);
    require(found, "(8n+3, 8n+5] tagged TIGHT_NONFILLABLE");
  }
}

void criterion_5() {
  int vectors = 0;
  for_each_jump_vector(12, true, [&](const std::vector<std::int64_t>& entries) {
    const JumpVector r(entries);
    if (!krcatovich_check(r).empty()) return;
    ++vectors;
    const auto poly = polynomial_from_jump_vector(r);
    const auto profile = torsion_profile(interval_data(r, r.genus()));
    for (std::int64_t j = 0; j <= profile.genus + 2; ++j)
      require(profile.t(j) == torsion_direct(poly, j),
              "interval formula vs direct sum over the exhaustive family");
  });
  require(vectors > 200, "exhaustive family is nonempty");
}

void criterion_6() {
  for_each_jump_vector(12, true, [&](const std::vector<std::int64_t>& entries) {
    const JumpVector r(entries);
    if (!krcatovich_check(r).empty()) return;
    const std::int64_t g = r.genus();
    const auto data = interval_data(r, g);
    const auto profile = torsion_profile(data);
    if (rough_estimate(data)) {
      for (const auto& entry : d_table(profile, 2 * g - 1).entries)
        require(entry.sign() < 0, "rough estimate implies strict negativity at 2g-1");
    }
    for (std::int64_t n = 2 * g - 1; n <= 2 * g + 20; ++n) {
      if (n >= 2 * g && !quick_bound(g, n))
        require(!classify(d_table(profile, n)).weak_labels.empty(),
                "failed quick bound implies a weak label");
    }
  });
}

void criterion_7() {
  std::vector<TorsionProfile> profiles{knot_torsion_profile(pretzel_2_3_11())};
  for (std::int64_t n = 1; n <= 50; ++n)
    profiles.push_back(knot_torsion_profile(kn_knot(n).knot));
  for (const auto& profile : profiles) {
    const std::int64_t lo = 2 * profile.genus - 1;
    for (std::int64_t n = lo; n <= lo + 21; ++n) {
      const auto table = d_table(profile, n);
      for (std::int64_t i = 0; i <= table.max_label(); ++i) {
        require(table.at(i) == surgery_d(profile, n, i),
                "branch formula vs one-shot surgery formula");
        if (i >= profile.genus)
          require(table.at(i) == unknot_d(n, i), "unknot branch above the genus");
      }
    }
  }
}

void criterion_8() {
  KnotInput pretzel;
  pretzel.poly = pretzel_2_3_11();
  pretzel.provenance = "acceptance";
  const auto pretzel_report = analyze_knot(pretzel, std::nullopt);
  require(torsion_csv(pretzel_report.profile) ==
              read_text_file(source_dir() + "/tests/golden/pretzel_torsion.csv"),
          "pretzel torsion.csv byte-match");
  require(pretzel_report.bound_line.has_value(), "pretzel bound line present");
  require(bound_csv(*pretzel_report.bound_line) ==
              read_text_file(source_dir() + "/tests/golden/pretzel_bound.csv"),
          "pretzel bound.csv byte-match (line -j/3 + 7/3)");

  KnotInput k2;
  k2.poly = kn_knot(2).knot;
  k2.provenance = "acceptance";
  const auto k2_report = analyze_knot(k2, std::nullopt);
  require(torsion_csv(k2_report.profile) ==
              read_text_file(source_dir() + "/tests/golden/k2_torsion.csv"),
          "K_2 torsion.csv byte-match");
  require(bound_csv(*k2_report.bound_line) ==
              read_text_file(source_dir() + "/tests/golden/k2_bound.csv"),
          "K_2 bound.csv byte-match (line -j/4 + 5/2)");
}

}  // namespace

int main() {
  int failures = 0;
  failures += run_criterion(1, "pretzel example end to end", 1.0, criterion_1);
  failures += run_criterion(2, "family torsion triple equivalence, n <= 50", 10.0, criterion_2);
  failures += run_criterion(3, "family d-invariants negative at 8n+{3,4,5}, n <= 50", 30.0,
                            criterion_3);
  failures += run_criterion(4, "family slope reports and interval tags", 10.0, criterion_4);
  failures += run_criterion(5, "exhaustive torsion oracle equivalence (sum <= 12)", 60.0,
                            criterion_5);
  failures += run_criterion(6, "screen soundness over the exhaustive family", 120.0,
                            criterion_6);
  failures += run_criterion(7, "branch consistency over built-in knots", 30.0, criterion_7);
  failures += run_criterion(8, "plot-data golden files byte-exact", 1.0, criterion_8);
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  }
  return failures;
}
