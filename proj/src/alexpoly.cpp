#include "lsobstruct/alexpoly.hpp"

#include <sstream>
#include <utility>

namespace lsobstruct {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError(what);
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError(what);
  return out;
}

}  // namespace

AlexanderPolynomial::AlexanderPolynomial(std::map<std::int64_t, std::int64_t> coeffs,
                                         std::string name)
    : name_(std::move(name)) {
  for (const auto& [e, c] : coeffs) {
    if (c != 0) coeffs_.emplace(e, c);
  }
  for (const auto& [e, c] : coeffs_) {
    const auto mirror = coeffs_.find(-e);
    if (mirror == coeffs_.end() || mirror->second != c) {
      std::ostringstream os;
      os << "asymmetric polynomial: coefficient " << c << " at t^" << e
         << " is not mirrored at t^" << -e;
      throw Error(os.str());
    }
  }
}

std::int64_t AlexanderPolynomial::coeff(std::int64_t exponent) const {
  const auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t AlexanderPolynomial::max_exponent() const {
  if (coeffs_.empty()) throw EmptyPolynomial("polynomial has no terms");
  return coeffs_.rbegin()->first;
}

ExponentSequence::ExponentSequence(std::vector<std::int64_t> ascending)
    : exponents_(std::move(ascending)) {
  if (exponents_.empty() || exponents_.size() % 2 == 0) {
    std::ostringstream os;
    os << "staircase support must have odd size 2k+1, got " << exponents_.size();
    throw NotLSpaceForm(os.str());
  }
  const std::size_t last = exponents_.size() - 1;
  for (std::size_t i = 1; i <= last; ++i) {
    if (exponents_[i - 1] >= exponents_[i])
      throw NotLSpaceForm("staircase support must be strictly increasing");
  }
  for (std::size_t i = 0; i <= last; ++i) {
    if (exponents_[i] != -exponents_[last - i]) {
      std::ostringstream os;
      os << "staircase support not antisymmetric: exponent " << exponents_[i]
         << " has no mirror " << -exponents_[i];
      throw NotLSpaceForm(os.str());
    }
  }
  if (last >= 1 && exponents_[last] - exponents_[last - 1] != 1) {
    std::ostringstream os;
    os << "top exponent gap must be 1, got " << exponents_[last] - exponents_[last - 1];
    throw NotLSpaceForm(os.str());
  }
}

std::int64_t ExponentSequence::at(std::int64_t signed_index) const {
  const std::int64_t kk = k();
  if (signed_index < -kk || signed_index > kk)
    throw IndexOutOfRange("exponent index outside [-k, k]");
  return exponents_[static_cast<std::size_t>(signed_index + kk)];
}

JumpVector::JumpVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidJump("jump vector must be nonempty");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) {
      std::ostringstream os;
      os << "jump r_" << i + 1 << " = " << entries_[i] << " must be >= 1";
      throw InvalidJump(os.str());
    }
  }
  if (entries_[0] != 1) {
    std::ostringstream os;
    os << "first jump must be 1 (top staircase gap), got " << entries_[0];
    throw InvalidJump(os.str());
  }
}

std::int64_t JumpVector::at(std::int64_t i) const {
  if (i < 1 || i > k()) throw IndexOutOfRange("jump index outside 1..k");
  return entries_[static_cast<std::size_t>(i - 1)];
}

std::optional<std::int64_t> JumpVector::h() const {
  if (k() % 2 != 0) return std::nullopt;
  return k() / 2;
}

std::int64_t JumpVector::genus() const {
  std::int64_t sum = 0;
  for (const std::int64_t r : entries_) sum = checked_add(sum, r, "jump vector genus");
  return sum;
}

ExponentSequence validate_lspace_form(const AlexanderPolynomial& poly) {
  const auto& support = poly.support();
  if (support.empty()) throw EmptyPolynomial("cannot validate an empty polynomial");

  std::vector<std::int64_t> exponents;
  exponents.reserve(support.size());
  for (const auto& [e, c] : support) exponents.push_back(e);

  // Coefficients must alternate +-1 downward from a +1 top term.
  const std::size_t last = exponents.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const std::int64_t expected = ((last - i) % 2 == 0) ? 1 : -1;
    const std::int64_t found = support.at(exponents[i]);
    if (found != expected) {
      std::ostringstream os;
      os << "coefficient at t^" << exponents[i] << " must be " << expected << ", found "
         << found;
      throw NotLSpaceForm(os.str());
    }
  }

  // Shape conditions (odd count, antisymmetry, top gap 1) live in the
  // sequence constructor so direct constructions obey them too.
  return ExponentSequence(std::move(exponents));
}

JumpVector jump_vector_from_exponents(const ExponentSequence& seq) {
  const std::int64_t k = seq.k();
  if (k == 0) throw DegenerateSequence("unknot staircase has no jumps");
  std::vector<std::int64_t> r(static_cast<std::size_t>(k));
  for (std::int64_t i = 1; i <= k; ++i)
    r[static_cast<std::size_t>(i - 1)] = seq.at(k + 2 - 2 * i) - seq.at(k + 1 - 2 * i);
  return JumpVector(std::move(r));
}

AlexanderPolynomial polynomial_from_jump_vector(const JumpVector& r, std::string name) {
  const std::int64_t k = r.k();
  // Descending gaps are the palindrome r_1, r_k, r_2, r_{k-1}, ...; walking
  // them down from the top exponent (= sum of entries) fills the support.
  std::vector<std::int64_t> exponents(static_cast<std::size_t>(2 * k + 1));
  std::int64_t cursor = r.genus();
  exponents[static_cast<std::size_t>(2 * k)] = cursor;
  for (std::int64_t m = 1; m <= 2 * k; ++m) {
    const std::int64_t gap = (m % 2 == 1) ? r.at((m + 1) / 2) : r.at(k + 1 - m / 2);
    cursor = checked_add(cursor, -gap, "staircase reconstruction");
    exponents[static_cast<std::size_t>(2 * k - m)] = cursor;
  }

  std::map<std::int64_t, std::int64_t> coeffs;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const std::int64_t sign = ((exponents.size() - 1 - i) % 2 == 0) ? 1 : -1;
    coeffs[exponents[i]] = sign;
  }

  // Self-check: the reconstruction must re-extract to the input vector.
  try {
    const ExponentSequence seq(exponents);
    if (!(jump_vector_from_exponents(seq) == r))
      throw InconsistentParity("reconstructed staircase does not reproduce its jump vector");
  } catch (const NotLSpaceForm& e) {
    throw InconsistentParity(std::string("staircase reconstruction failed: ") + e.what());
  }

  return AlexanderPolynomial(std::move(coeffs), std::move(name));
}

std::int64_t genus(const AlexanderPolynomial& poly) {
  const auto seq = validate_lspace_form(poly);
  return seq.exponents().back();
}

std::vector<std::int64_t> krcatovich_check(const JumpVector& r) {
  std::vector<std::int64_t> violations;
  const std::int64_t k = r.k();
  for (std::int64_t j = 2; j <= k; ++j) {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    for (std::int64_t i = 2; i <= j; ++i) lhs = checked_add(lhs, r.at(i), "admissibility sum");
    for (std::int64_t i = k - j + 2; i <= k; ++i)
      rhs = checked_add(rhs, r.at(i), "admissibility sum");
    if (lhs > rhs) violations.push_back(j);
  }
  return violations;
}

std::int64_t torsion_direct(const AlexanderPolynomial& poly, std::int64_t j) {
  if (j < 0) j = -j;
  std::int64_t sum = 0;
  for (const auto& [e, c] : poly.support()) {
    if (e <= j) continue;
    sum = checked_add(sum, checked_mul(e - j, c, "torsion sum"), "torsion sum");
  }
  return sum;
}

}  // namespace lsobstruct
