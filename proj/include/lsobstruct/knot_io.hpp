#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsobstruct/alexpoly.hpp"

namespace lsobstruct {

// A knot resolved from one input source (file, inline JSON, or a family
// reference). declared_r is set when the source carried an explicit jump
// vector; when both a polynomial and a vector are present they have been
// cross-checked already.
struct KnotInput {
  AlexanderPolynomial poly;
  std::string provenance;
  std::optional<JumpVector> declared_r;
};

// Builds the full symmetric coefficient table from exponent/coefficient
// pairs. Pairs with only nonnegative exponents are mirrored; pairs covering
// negative exponents must already be symmetric. Duplicate exponents are a
// ParseError; zero coefficients are dropped.
std::map<std::int64_t, std::int64_t> coefficients_from_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);

// Parses a knot object: {"name": ..., "alexander": [[e, c], ...]} or
// {"name": ..., "r": [...]}; both payload fields together are accepted only
// when they describe the same staircase. `where` prefixes error messages.
KnotInput parse_knot_json(const std::string& text, const std::string& where);

// Resolves a knot argument: inline JSON when it starts with '{', the family
// shorthand "kn:N", otherwise a path to a knot JSON file.
KnotInput load_knot(const std::string& argument);

struct CensusRow {
  int line = 0;
  std::string name;
  std::string payload;
};

struct Census {
  bool r_format = false;  // header "name,r" vs "name,alexander"
  std::vector<CensusRow> rows;
};

// Header must be "name,alexander" (payload "e:c;e:c;...") or "name,r"
// (payload "r1;r2;..."). Rows are split at the last comma (names may contain
// commas, payloads cannot); blank lines are skipped. Row payloads are parsed
// lazily by knot_from_census_row so one bad row cannot abort a batch.
Census read_census_csv(const std::string& path);

AlexanderPolynomial knot_from_census_row(const Census& census, const CensusRow& row);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lsobstruct
