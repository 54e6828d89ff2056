#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsobstruct/alexpoly.hpp"
#include "lsobstruct/obstruction.hpp"

namespace lsobstruct {

// Member of the built-in hyperbolic L-space knot family. The braid word is
// provenance metadata only and is never evaluated.
struct KnFamilyMember {
  std::int64_t index = 0;
  AlexanderPolynomial knot;
  std::vector<int> braid_word;
  std::int64_t genus = 0;    // 4n + 2
  std::int64_t tb = 0;       // 8n + 1
  std::int64_t rot_abs = 0;  // 2
};

enum class IntervalTag {
  TightNonfillable,         // tight structures exist, none weakly fillable
  NonfillableTightUnknown,  // not weakly fillable, tightness open
  TightFillabilityUnknown,  // tight structures exist, fillability open
};

std::string_view to_string(IntervalTag tag);

struct TaggedInterval {
  SlopeInterval interval;
  IntervalTag tag = IntervalTag::TightFillabilityUnknown;

  friend bool operator==(const TaggedInterval& x, const TaggedInterval& y) = default;
};

// Per-family-index slope classification. nonfillable = [8n+3, m] where m is
// the best verified obstruction slope among {8n+5, 8n+3}; absent when
// neither candidate certifies. tight_excluded = [8n+1, 8n+3] from the sharp
// Legendrian data. classification lists only the regions with a definite
// tag; [8n+1, 8n+3) stays untagged (nothing is known there).
struct SlopeReport {
  std::int64_t index = 0;
  SlopeInterval tight_excluded;
  std::optional<SlopeInterval> nonfillable;
  std::optional<std::int64_t> m;
  std::vector<TaggedInterval> classification;
  std::string disclaimer;
};

// Builds the family knot: constant term 1, +1 at exponents +-(4j+2) and -1
// at +-(4j+1) for j = 0..n. Genus 4n+2, jump vector (1 x (n+2), 3 x n).
KnFamilyMember kn_knot(std::int64_t n);

// Closed-form torsion of the family member: 0 for j > 4n+2, else
// n - floor((j+2)/4) + 1.
std::int64_t kn_torsion_closed_form(std::int64_t n, std::int64_t j);

// Tight structures exist for slopes outside [tb, tb + |rot|] when the
// Legendrian data is slice-Bennequin sharp (tb + |rot| = 2gs - 1); the
// returned interval is the excluded range.
SlopeInterval tight_excluded_interval(std::int64_t tb, std::int64_t rot_abs);

// Full slope report for family index n. Candidate obstruction slopes are
// verified through the d-invariant table, not assumed.
SlopeReport kn_slope_classification(std::int64_t n);

}  // namespace lsobstruct
