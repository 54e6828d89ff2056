#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsobstruct/errors.hpp"

namespace lsobstruct {

// Symmetrized Alexander polynomial as a sparse exponent -> coefficient table.
// Only nonzero coefficients are stored. Construction enforces the symmetry
// c[e] = c[-e]; the staircase conditions are checked by validate_lspace_form,
// so non-staircase polynomials can exist (and be rejected with a reason).
class AlexanderPolynomial {
 public:
  AlexanderPolynomial() = default;
  explicit AlexanderPolynomial(std::map<std::int64_t, std::int64_t> coeffs,
                               std::string name = "");

  const std::map<std::int64_t, std::int64_t>& support() const { return coeffs_; }
  std::int64_t coeff(std::int64_t exponent) const;
  bool empty() const { return coeffs_.empty(); }
  std::int64_t max_exponent() const;  // throws EmptyPolynomial
  const std::string& name() const { return name_; }

  // Names are labels; equality compares coefficients only.
  friend bool operator==(const AlexanderPolynomial& x, const AlexanderPolynomial& y) {
    return x.coeffs_ == y.coeffs_;
  }

 private:
  std::map<std::int64_t, std::int64_t> coeffs_;
  std::string name_;
};

// Strictly increasing staircase support n_{-k} < ... < n_k, antisymmetric
// about zero, with top gap n_k - n_{k-1} = 1 (vacuous for k = 0).
class ExponentSequence {
 public:
  explicit ExponentSequence(std::vector<std::int64_t> ascending);

  std::int64_t k() const { return static_cast<std::int64_t>(exponents_.size() / 2); }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  // n_i for |i| <= k.
  std::int64_t at(std::int64_t signed_index) const;

  friend bool operator==(const ExponentSequence& x, const ExponentSequence& y) {
    return x.exponents_ == y.exponents_;
  }

 private:
  std::vector<std::int64_t> exponents_;
};

// Every-second exponent gap of the staircase, top down. Determines the
// polynomial uniquely: the descending gap sequence is the palindrome
// r_1, r_k, r_2, r_{k-1}, ... and the top exponent is the sum of the entries.
class JumpVector {
 public:
  explicit JumpVector(std::vector<std::int64_t> entries);

  std::int64_t k() const { return static_cast<std::int64_t>(entries_.size()); }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  // r_i, 1-based.
  std::int64_t at(std::int64_t i) const;
  // k/2 for even k, absent otherwise.
  std::optional<std::int64_t> h() const;
  // Top exponent of the staircase = sum of the entries.
  std::int64_t genus() const;

  friend bool operator==(const JumpVector& x, const JumpVector& y) {
    return x.entries_ == y.entries_;
  }

 private:
  std::vector<std::int64_t> entries_;
};

// Checks the staircase conditions (odd term count, alternating +-1 from a +1
// top, antisymmetric exponents, top gap 1) and returns the exponent support.
ExponentSequence validate_lspace_form(const AlexanderPolynomial& poly);

// r_i = n_{k+2-2i} - n_{k+1-2i} for i = 1..k. Throws DegenerateSequence for
// the unknot staircase (k = 0).
JumpVector jump_vector_from_exponents(const ExponentSequence& seq);

// Inverse of jump extraction; the result always passes validate_lspace_form
// and re-extracts to the same vector (checked, InconsistentParity otherwise).
AlexanderPolynomial polynomial_from_jump_vector(const JumpVector& r, std::string name = "");

// Maximal exponent of a validated staircase polynomial.
std::int64_t genus(const AlexanderPolynomial& poly);

// Indices j in 2..k with sum(r_2..r_j) > sum(r_{k-j+2}..r_k). A nonempty
// result means the vector cannot come from an L-space knot; callers treat
// this as a warning, not a failure.
std::vector<std::int64_t> krcatovich_check(const JumpVector& r);

// Defining torsion sum t_j = sum_{m>0} m * c_{|j|+m}. Works on any symmetric
// polynomial and is the reference for every other torsion computation here.
std::int64_t torsion_direct(const AlexanderPolynomial& poly, std::int64_t j);

}  // namespace lsobstruct
