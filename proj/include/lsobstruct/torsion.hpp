#pragma once

#include <cstdint>
#include <vector>

#include "lsobstruct/alexpoly.hpp"
#include "lsobstruct/errors.hpp"

namespace lsobstruct {

// Partial sums of a jump vector with even k = 2h and the derived interval
// marks. With g the top exponent:
//   A_j = r_1 + ... + r_j                       (j = 1..h)
//   B_j = r_{k-j+1} + ... + r_k                 (j = 1..h)
//   C_l = r_{k-l+2} + ... + r_k                 (l = 2..h)
//   a_j = g - (A_j + B_j), a_0 = g              (a_h = 0)
//   b_l = g - (A_l + C_l), b_1 = g - 1
// The marks interleave 0 = a_h < b_h < ... < b_1 < a_0 = g, so the intervals
// (b_m, a_{m-1}] and their complements tile (0, g].
class IntervalData {
 public:
  std::int64_t genus() const { return genus_; }
  std::int64_t h() const { return h_; }
  std::int64_t A(std::int64_t j) const { return prefix_.at(j - 1); }
  std::int64_t B(std::int64_t j) const { return suffix_.at(j - 1); }
  std::int64_t C(std::int64_t l) const { return suffix_open_.at(l - 2); }
  std::int64_t a(std::int64_t j) const { return a_marks_.at(j); }
  std::int64_t b(std::int64_t l) const { return b_marks_.at(l - 1); }

 private:
  friend IntervalData interval_data(const JumpVector& r, std::int64_t g);

  std::int64_t genus_ = 0;
  std::int64_t h_ = 0;
  std::vector<std::int64_t> prefix_;       // A_1..A_h
  std::vector<std::int64_t> suffix_;       // B_1..B_h
  std::vector<std::int64_t> suffix_open_;  // C_2..C_h
  std::vector<std::int64_t> a_marks_;      // a_0..a_h
  std::vector<std::int64_t> b_marks_;      // b_1..b_h
};

// Dense torsion coefficients t_0..t_g. Values are non-increasing with steps
// of 0 or 1, t_{g-1} = 1 and t_g = 0 for staircase input.
struct TorsionProfile {
  std::vector<std::int64_t> values;
  std::int64_t genus = 0;

  // t_j with the symmetric/vanishing conventions: |j|, zero beyond the genus.
  std::int64_t t(std::int64_t j) const {
    if (j < 0) j = -j;
    if (j >= static_cast<std::int64_t>(values.size())) return 0;
    return values[static_cast<std::size_t>(j)];
  }
};

// Throws UnsupportedParity for odd k and GenusMismatch when g is not the sum
// of the entries. Degenerate marks (possible only for inadmissible vectors)
// raise a diagnostic rather than producing a profile.
IntervalData interval_data(const JumpVector& r, std::int64_t g);

// 1 iff j lies in one of the increment intervals (b_m, a_{m-1}], m = 1..h.
// Valid for 1 <= j <= g; IndexOutOfRange otherwise.
int torsion_step(const IntervalData& data, std::int64_t j);

// t_j = number of increment steps in (j, g]; accumulated from t_g = 0.
TorsionProfile torsion_profile(const IntervalData& data);

// Profile through the defining sum; works for any validated staircase
// (either parity, including the unknot).
TorsionProfile profile_from_direct(const AlexanderPolynomial& poly);

// Profile used by the analysis pipeline: interval formula for even k >= 2,
// cross-checked entry by entry against the defining sum; direct sum for odd
// k and for the unknot.
TorsionProfile knot_torsion_profile(const AlexanderPolynomial& poly);

}  // namespace lsobstruct
