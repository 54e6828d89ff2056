#pragma once

#include <cstdint>
#include <vector>

#include "lsobstruct/errors.hpp"
#include "lsobstruct/rational.hpp"
#include "lsobstruct/torsion.hpp"

namespace lsobstruct {

// d-invariants of the n-surgery, one entry per label i = 0..floor(n/2).
// d depends only on |i|, so labels +-i share one entry while the surgered
// manifold still has n distinct Spin^c structures (for even n the labels
// +-n/2 name the same structure).
struct DInvariantTable {
  std::int64_t n = 0;
  std::int64_t genus = 0;
  std::vector<Rational> entries;

  std::int64_t max_label() const { return static_cast<std::int64_t>(entries.size()) - 1; }
  std::int64_t spin_c_count() const { return n; }

  // Labels below the genus carry a torsion correction; the rest are pure
  // unknot values.
  bool torsion_branch(std::int64_t label) const { return label < genus; }

  // Entry for |i| <= n/2; LabelOutOfRange otherwise.
  const Rational& at(std::int64_t label) const;
  Rational max_entry() const;
};

// d(U(n), i) = (n - 2i)^2 / (4n) - 1/4 for 0 <= i <= n/2.
Rational unknot_d(std::int64_t n, std::int64_t label);

// d(K(n), i) = d(U(n), i) - 2 t_i. Requires n >= 2g - 1 (SlopeTooSmall
// below that: the surgery formula is only guaranteed on the L-space range).
Rational surgery_d(const TorsionProfile& torsion, std::int64_t n, std::int64_t label);

// Full table for labels 0..floor(n/2). Labels below g use the torsion
// branch, labels g..g+floor((m-1)/2) with n = 2g + (m-1) the unknot branch;
// the construction asserts the two ranges tile the table exactly.
DInvariantTable d_table(const TorsionProfile& torsion, std::int64_t n);

}  // namespace lsobstruct
