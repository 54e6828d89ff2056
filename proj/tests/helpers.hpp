#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lsobstruct/alexpoly.hpp"

namespace lsobstruct::testing {

// Disambiguates brace-heavy construction in the tests.
inline AlexanderPolynomial poly(std::map<std::int64_t, std::int64_t> coeffs,
                                std::string name = "") {
  return AlexanderPolynomial(std::move(coeffs), std::move(name));
}

// The worked pretzel example used throughout: genus 7, jumps (1,1,1,1,1,2).
inline AlexanderPolynomial pretzel_2_3_11() {
  std::map<std::int64_t, std::int64_t> coeffs;
  for (const auto& [e, c] : std::map<std::int64_t, std::int64_t>{
           {0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}, {6, -1}, {7, 1}}) {
    coeffs[e] = c;
    coeffs[-e] = c;
  }
  return AlexanderPolynomial(std::move(coeffs), "P(-2,3,11)");
}

// Enumerates every jump vector with r_1 = 1, r_i >= 1 and entry sum at most
// max_sum, in lexicographic-by-extension order. even_only restricts to even
// lengths. The callback sees each vector once.
inline void for_each_jump_vector(std::int64_t max_sum, bool even_only,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> current{1};
  std::function<void(std::int64_t)> extend = [&](std::int64_t sum) {
    if (!even_only || current.size() % 2 == 0) fn(current);
    for (std::int64_t next = 1; sum + next <= max_sum; ++next) {
      current.push_back(next);
      extend(sum + next);
      current.pop_back();
    }
  };
  if (max_sum >= 1) extend(1);
}

}  // namespace lsobstruct::testing
