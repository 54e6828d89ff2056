#include "lsobstruct/knot_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lsobstruct/families.hpp"

namespace lsobstruct {

namespace {

using nlohmann::json;

std::int64_t int_from_json(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (const char ch : text) {
    if (ch == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  out.push_back(current);
  return out;
}

std::int64_t parse_int(const std::string& token, const std::string& where) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(where + ": '" + token + "' is not an integer");
  }
  if (used != token.size()) throw ParseError(where + ": '" + token + "' is not an integer");
  return value;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::map<std::int64_t, std::int64_t> coefficients_from_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  std::map<std::int64_t, std::int64_t> coeffs;
  bool any_negative = false;
  for (const auto& [e, c] : pairs) {
    if (!coeffs.emplace(e, c).second)
      throw ParseError("duplicate exponent " + std::to_string(e));
    if (e < 0) any_negative = true;
  }
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  }
  if (!any_negative) {
    // Nonnegative half given: mirror it.
    const auto half = coeffs;
    for (const auto& [e, c] : half) {
      if (e > 0) coeffs[-e] = c;
    }
  }
  return coeffs;
}

KnotInput parse_knot_json(const std::string& text, const std::string& where) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(where + ": knot input must be a JSON object");

  const std::string name =
      doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "unnamed";

  const bool has_poly = doc.contains("alexander");
  const bool has_r = doc.contains("r");
  if (!has_poly && !has_r)
    throw ParseError(where + ": knot object needs field 'alexander' or 'r'");

  std::optional<JumpVector> declared_r;
  if (has_r) {
    if (!doc["r"].is_array()) throw ParseError(where + ": field 'r' must be an array");
    std::vector<std::int64_t> entries;
    for (std::size_t i = 0; i < doc["r"].size(); ++i)
      entries.push_back(int_from_json(doc["r"][i], where + ": field 'r'"));
    try {
      declared_r = JumpVector(std::move(entries));
    } catch (const Error& e) {
      throw ParseError(where + ": field 'r': " + e.what());
    }
  }

  KnotInput input;
  input.provenance = where;
  if (has_poly) {
    if (!doc["alexander"].is_array())
      throw ParseError(where + ": field 'alexander' must be an array of [exponent, coefficient]");
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t i = 0; i < doc["alexander"].size(); ++i) {
      const json& pair = doc["alexander"][i];
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError(where + ": field 'alexander' entry " + std::to_string(i) +
                         " must be a pair [exponent, coefficient]");
      pairs.emplace_back(int_from_json(pair[0], where + ": exponent"),
                         int_from_json(pair[1], where + ": coefficient"));
    }
    try {
      input.poly = AlexanderPolynomial(coefficients_from_pairs(pairs), name);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(where + ": field 'alexander': " + e.what());
    }
    if (declared_r) {
      // Both forms present: they must describe the same staircase.
      try {
        const auto extracted = jump_vector_from_exponents(validate_lspace_form(input.poly));
        if (!(extracted == *declared_r))
          throw ParseError(where + ": fields 'alexander' and 'r' disagree");
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(where + ": field 'r' given but 'alexander' is not a staircase: " +
                         e.what());
      }
    }
  } else {
    try {
      input.poly = polynomial_from_jump_vector(*declared_r, name);
    } catch (const Error& e) {
      throw ParseError(where + ": field 'r': " + e.what());
    }
  }
  input.declared_r = std::move(declared_r);
  return input;
}

KnotInput load_knot(const std::string& argument) {
  if (!argument.empty() && argument.front() == '{') return parse_knot_json(argument, "inline knot");
  if (argument.rfind("kn:", 0) == 0) {
    const std::int64_t index = parse_int(argument.substr(3), "family reference '" + argument + "'");
    auto member = kn_knot(index);
    KnotInput input;
    input.provenance = "family kn index " + std::to_string(index);
    input.declared_r = jump_vector_from_exponents(validate_lspace_form(member.knot));
    input.poly = std::move(member.knot);
    return input;
  }
  return parse_knot_json(read_text_file(argument), argument);
}

Census read_census_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read census file '" + path + "'");

  Census census;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (!have_header) {
      if (text == "name,alexander") {
        census.r_format = false;
      } else if (text == "name,r") {
        census.r_format = true;
      } else {
        throw ParseError(path + ":1: header must be 'name,alexander' or 'name,r', got '" +
                         text + "'");
      }
      have_header = true;
      continue;
    }
    // Split at the last comma: knot names may contain commas, payloads
    // (semicolon-separated tokens) never do.
    const std::size_t comma = text.rfind(',');
    CensusRow row;
    row.line = line_no;
    if (comma == std::string::npos) {
      row.name = text;  // payload missing; flagged when the row is parsed
      row.payload = "";
    } else {
      row.name = trim(text.substr(0, comma));
      row.payload = trim(text.substr(comma + 1));
    }
    census.rows.push_back(std::move(row));
  }
  if (!have_header && line_no == 0) {
    // Empty file: an empty census, not an error.
    return census;
  }
  if (!have_header) throw ParseError(path + ": missing header row");
  return census;
}

AlexanderPolynomial knot_from_census_row(const Census& census, const CensusRow& row) {
  const std::string where = "line " + std::to_string(row.line);
  if (row.payload.empty()) throw ParseError(where + ": missing payload column");
  if (census.r_format) {
    std::vector<std::int64_t> entries;
    for (const auto& token : split(row.payload, ';'))
      entries.push_back(parse_int(trim(token), where));
    return polynomial_from_jump_vector(JumpVector(std::move(entries)), row.name);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& token : split(row.payload, ';')) {
    const auto parts = split(trim(token), ':');
    if (parts.size() != 2)
      throw ParseError(where + ": term '" + token + "' must look like 'exponent:coefficient'");
    pairs.emplace_back(parse_int(trim(parts[0]), where), parse_int(trim(parts[1]), where));
  }
  try {
    return AlexanderPolynomial(coefficients_from_pairs(pairs), row.name);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file '" + path + "'");
  out << content;
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace lsobstruct
