#include "lsobstruct/dinv.hpp"

#include <algorithm>
#include <sstream>

namespace lsobstruct {

const Rational& DInvariantTable::at(std::int64_t label) const {
  if (label < 0) label = -label;
  if (label > max_label()) {
    std::ostringstream os;
    os << "label " << label << " outside 0.." << max_label() << " for n = " << n;
    throw LabelOutOfRange(os.str());
  }
  return entries[static_cast<std::size_t>(label)];
}

Rational DInvariantTable::max_entry() const {
  if (entries.empty()) throw Error("d-invariant table is empty");
  return *std::max_element(entries.begin(), entries.end());
}

Rational unknot_d(std::int64_t n, std::int64_t label) {
  if (n < 1) throw Error("surgery coefficient must be positive");
  if (label < 0) label = -label;
  if (detail::int128(2) * label > detail::int128(n)) {
    std::ostringstream os;
    os << "label " << label << " outside |i| <= n/2 for n = " << n;
    throw LabelOutOfRange(os.str());
  }
  // ((n - 2i)^2 - n) / (4n)
  const detail::int128 w = detail::int128(n) - detail::int128(2) * label;
  return Rational::make(w * w - n, detail::int128(4) * n);
}

Rational surgery_d(const TorsionProfile& torsion, std::int64_t n, std::int64_t label) {
  if (detail::int128(n) < detail::int128(2) * torsion.genus - 1) {
    std::ostringstream os;
    os << "slope " << n << " below the L-space range 2g-1 = " << 2 * torsion.genus - 1;
    throw SlopeTooSmall(os.str());
  }
  return unknot_d(n, label) - Rational::make(detail::int128(2) * torsion.t(label), 1);
}

DInvariantTable d_table(const TorsionProfile& torsion, std::int64_t n) {
  if (detail::int128(n) < detail::int128(2) * torsion.genus - 1) {
    std::ostringstream os;
    os << "slope " << n << " below the L-space range 2g-1 = " << 2 * torsion.genus - 1;
    throw SlopeTooSmall(os.str());
  }

  DInvariantTable table;
  table.n = n;
  table.genus = torsion.genus;

  // Label ranges of the two branches must tile 0..floor(n/2): the torsion
  // branch ends at g-1 and with n = 2g + (m-1) the unknot branch ends at
  // g + floor((m-1)/2).
  const std::int64_t top = n / 2;
  const std::int64_t m = n - 2 * torsion.genus + 1;
  const std::int64_t unknot_top =
      m >= 1 ? torsion.genus + (m - 1) / 2 : torsion.genus - 1;
  if (unknot_top != top) throw Error("d-invariant branch ranges do not tile the table");

  table.entries.reserve(static_cast<std::size_t>(top + 1));
  for (std::int64_t i = 0; i <= top; ++i) {
    if (i < torsion.genus) {
      table.entries.push_back(unknot_d(n, i) -
                              Rational::make(detail::int128(2) * torsion.t(i), 1));
    } else {
      table.entries.push_back(unknot_d(n, i));
    }
  }
  return table;
}

}  // namespace lsobstruct
