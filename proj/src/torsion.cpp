#include "lsobstruct/torsion.hpp"

#include <sstream>

namespace lsobstruct {

IntervalData interval_data(const JumpVector& r, std::int64_t g) {
  if (r.k() % 2 != 0)
    throw UnsupportedParity("interval formula requires even staircase length k");
  if (g != r.genus()) {
    std::ostringstream os;
    os << "genus " << g << " does not match the jump vector (top exponent " << r.genus()
       << ")";
    throw GenusMismatch(os.str());
  }

  const std::int64_t k = r.k();
  IntervalData data;
  data.genus_ = g;
  data.h_ = k / 2;

  data.prefix_.resize(static_cast<std::size_t>(data.h_));
  data.suffix_.resize(static_cast<std::size_t>(data.h_));
  std::int64_t acc = 0;
  for (std::int64_t j = 1; j <= data.h_; ++j) {
    acc += r.at(j);
    data.prefix_[static_cast<std::size_t>(j - 1)] = acc;
  }
  acc = 0;
  for (std::int64_t j = 1; j <= data.h_; ++j) {
    acc += r.at(k - j + 1);
    data.suffix_[static_cast<std::size_t>(j - 1)] = acc;
  }
  if (data.h_ >= 2) {
    data.suffix_open_.resize(static_cast<std::size_t>(data.h_ - 1));
    acc = 0;
    for (std::int64_t l = 2; l <= data.h_; ++l) {
      acc += r.at(k - l + 2);
      data.suffix_open_[static_cast<std::size_t>(l - 2)] = acc;
    }
  }

  data.a_marks_.resize(static_cast<std::size_t>(data.h_ + 1));
  data.a_marks_[0] = g;
  for (std::int64_t j = 1; j <= data.h_; ++j)
    data.a_marks_[static_cast<std::size_t>(j)] = g - (data.A(j) + data.B(j));

  data.b_marks_.resize(static_cast<std::size_t>(data.h_));
  data.b_marks_[0] = g - 1;
  for (std::int64_t l = 2; l <= data.h_; ++l)
    data.b_marks_[static_cast<std::size_t>(l - 1)] = g - (data.A(l) + data.C(l));

  // Diagnostic: the marks must interleave strictly, 0 = a_h < b_h < ... <
  // b_1 < a_0 = g. Positive jumps make this automatic; a violation means
  // the vector slipped past its admissibility checks.
  if (data.a(data.h_) != 0) throw Error("interval marks degenerate: a_h != 0");
  for (std::int64_t j = 1; j <= data.h_; ++j) {
    if (!(data.a(j) < data.b(j) && data.b(j) < data.a(j - 1))) {
      std::ostringstream os;
      os << "interval marks degenerate at j = " << j << ": a_j = " << data.a(j)
         << ", b_j = " << data.b(j) << ", a_{j-1} = " << data.a(j - 1);
      throw Error(os.str());
    }
  }

  return data;
}

int torsion_step(const IntervalData& data, std::int64_t j) {
  if (j < 1 || j > data.genus()) {
    std::ostringstream os;
    os << "torsion step index " << j << " outside 1.." << data.genus();
    throw IndexOutOfRange(os.str());
  }
  for (std::int64_t m = 1; m <= data.h(); ++m) {
    if (data.b(m) < j && j <= data.a(m - 1)) return 1;
  }
  return 0;
}

TorsionProfile torsion_profile(const IntervalData& data) {
  TorsionProfile profile;
  profile.genus = data.genus();
  profile.values.assign(static_cast<std::size_t>(profile.genus + 1), 0);
  for (std::int64_t j = profile.genus; j >= 1; --j) {
    profile.values[static_cast<std::size_t>(j - 1)] =
        profile.values[static_cast<std::size_t>(j)] + torsion_step(data, j);
  }
  return profile;
}

TorsionProfile profile_from_direct(const AlexanderPolynomial& poly) {
  const auto seq = validate_lspace_form(poly);
  TorsionProfile profile;
  profile.genus = seq.exponents().back();
  profile.values.resize(static_cast<std::size_t>(profile.genus + 1));
  for (std::int64_t j = 0; j <= profile.genus; ++j)
    profile.values[static_cast<std::size_t>(j)] = torsion_direct(poly, j);
  return profile;
}

TorsionProfile knot_torsion_profile(const AlexanderPolynomial& poly) {
  const auto seq = validate_lspace_form(poly);
  const std::int64_t k = seq.k();
  if (k == 0 || k % 2 != 0) return profile_from_direct(poly);

  const auto r = jump_vector_from_exponents(seq);
  auto profile = torsion_profile(interval_data(r, seq.exponents().back()));
  for (std::int64_t j = 0; j <= profile.genus; ++j) {
    if (profile.values[static_cast<std::size_t>(j)] != torsion_direct(poly, j)) {
      std::ostringstream os;
      os << "torsion cross-check failed at j = " << j;
      throw Error(os.str());
    }
  }
  return profile;
}

}  // namespace lsobstruct
