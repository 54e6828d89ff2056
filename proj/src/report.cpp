#include "lsobstruct/report.hpp"

#include <cstdio>
#include <exception>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lsobstruct {

namespace {

using nlohmann::json;

std::string approx4(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value.approx());
  return buffer;
}

std::string join_ints(const std::vector<std::int64_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error("unknown format '" + name + "' (expected table, json, or csv)");
}

AnalysisReport analyze_knot(const KnotInput& input, std::optional<std::int64_t> slope) {
  AnalysisReport report;
  report.name = input.poly.name();
  report.provenance = input.provenance;

  const auto seq = validate_lspace_form(input.poly);
  report.k = seq.k();
  report.even_k = report.k % 2 == 0;
  report.genus = seq.exponents().back();
  if (report.k >= 1) {
    report.r = jump_vector_from_exponents(seq);
    report.krcatovich_violations = krcatovich_check(*report.r);
  }
  report.profile = knot_torsion_profile(input.poly);
  if (report.even_k && report.k >= 2) {
    const auto data = interval_data(*report.r, report.genus);
    report.rough = rough_estimate(data);
    report.bound_line = torsion_lower_bound_line(data);
  }

  if (slope) {
    if (report.genus < 1)
      throw Error("surgery analysis of the unknot is out of scope (2g-1 < 1)");
    if (*slope < 1) throw Error("surgery coefficient must be positive");
    if (*slope >= 2 * report.genus - 1) {
      report.quick = quick_bound(report.genus, *slope);
      report.table = d_table(report.profile, *slope);
      report.verdict = classify(*report.table);
    } else if (!is_square_free(*slope)) {
      // Below the surgery-formula range, but the bound cannot apply at a
      // non-square-free coefficient anyway: verdict without a table.
      Verdict v;
      v.slope = *slope;
      v.square_free = false;
      v.threshold = weak_threshold(*slope);
      v.conclusion = Conclusion::NotApplicable;
      report.verdict = v;
    } else {
      std::ostringstream os;
      os << "slope " << *slope << " below the L-space range 2g-1 = "
         << 2 * report.genus - 1;
      throw SlopeTooSmall(os.str());
    }
  }
  return report;
}

ScanReport scan_knot(const KnotInput& input, std::int64_t max_slope,
                     const ScanOptions& options) {
  const auto base = analyze_knot(input, std::nullopt);
  if (base.genus < 1) throw Error("surgery scan of the unknot is out of scope (2g-1 < 1)");
  const std::int64_t lo = 2 * base.genus - 1;
  if (max_slope < lo) {
    std::ostringstream os;
    os << "scan bound " << max_slope << " below the L-space range 2g-1 = " << lo;
    throw SlopeTooSmall(os.str());
  }
  ScanReport report;
  report.name = base.name;
  report.genus = base.genus;
  report.r = base.r;
  report.krcatovich_violations = base.krcatovich_violations;
  report.rows = scan_slopes(base.profile, lo, max_slope, options);
  report.interval = nonfillable_from_rows(report.rows, base.genus);
  return report;
}

BatchResult run_batch(const Census& census, std::int64_t delta, int jobs) {
  BatchResult result;
  result.records.resize(census.rows.size());
  const std::int64_t count = static_cast<std::int64_t>(census.rows.size());

#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const CensusRow& row = census.rows[static_cast<std::size_t>(idx)];
    BatchRecord record;
    record.line = row.line;
    record.name = row.name;
    try {
      const auto poly = knot_from_census_row(census, row);
      KnotInput input;
      input.poly = poly;
      input.provenance = "census line " + std::to_string(row.line);
      const auto base = analyze_knot(input, std::nullopt);
      if (base.genus < 1) throw Error("unknot row: no valid surgery slope (2g-1 < 1)");
      record.genus = base.genus;
      record.k = base.k;
      if (base.r) record.r = base.r->entries();
      record.krcatovich_violations = base.krcatovich_violations;
      const std::int64_t lo = 2 * base.genus - 1;
      std::optional<std::int64_t> best;
      for (std::int64_t n = lo; n <= lo + delta; ++n) {
        auto verdict = classify(d_table(base.profile, n));
        if (verdict.conclusion == Conclusion::Obstructed) best = n;
        record.verdicts.push_back(std::move(verdict));
      }
      if (best) record.interval = SlopeInterval::closed(Rational(lo), Rational(*best));
      record.ok = true;
    } catch (const std::exception& e) {
      record.ok = false;
      record.error = e.what();
    }
    result.records[static_cast<std::size_t>(idx)] = std::move(record);
  }

  for (const auto& record : result.records) {
    if (!record.ok) {
      ++result.error_count;
      continue;
    }
    ++result.ok_count;
    for (const auto& verdict : record.verdicts) {
      if (verdict.conclusion == Conclusion::Obstructed) {
        ++result.obstructed_count;
        break;
      }
    }
  }
  return result;
}

ValidationReport validate_knot(const KnotInput& input) {
  ValidationReport report;
  report.name = input.poly.name();
  try {
    const auto seq = validate_lspace_form(input.poly);
    report.valid = true;
    report.k = seq.k();
    report.genus = seq.exponents().back();
    if (report.k >= 1) {
      report.r = jump_vector_from_exponents(seq);
      report.krcatovich_violations = krcatovich_check(*report.r);
    }
  } catch (const Error& e) {
    report.valid = false;
    report.reason = e.what();
  }
  return report;
}

json rational_json(const Rational& value) { return json::array({value.num(), value.den()}); }

json interval_json(const SlopeInterval& interval) {
  json out;
  out["low"] = interval.low ? rational_json(*interval.low) : json(nullptr);
  out["high"] = interval.high ? rational_json(*interval.high) : json(nullptr);
  out["closed_low"] = interval.closed_low;
  out["closed_high"] = interval.closed_high;
  return out;
}

json verdict_json(const Verdict& verdict) {
  json out;
  out["slope"] = verdict.slope;
  out["square_free"] = verdict.square_free;
  out["threshold"] = rational_json(verdict.threshold);
  out["max_d"] = verdict.max_d ? rational_json(*verdict.max_d) : json(nullptr);
  out["weak_labels"] = verdict.weak_labels;
  out["conclusion"] = std::string(to_string(verdict.conclusion));
  return out;
}

json d_table_json(const DInvariantTable& table) {
  json entries = json::array();
  for (std::int64_t i = 0; i <= table.max_label(); ++i) {
    json entry;
    entry["i"] = i;
    entry["d"] = rational_json(table.at(i));
    entry["branch"] = table.torsion_branch(i) ? "torsion" : "unknot";
    entries.push_back(std::move(entry));
  }
  json out;
  out["n"] = table.n;
  out["genus"] = table.genus;
  out["spin_c_count"] = table.spin_c_count();
  out["entries"] = std::move(entries);
  return out;
}

json analysis_json(const AnalysisReport& report) {
  json out;
  out["name"] = report.name;
  out["source"] = report.provenance;
  out["genus"] = report.genus;
  out["k"] = report.k;
  out["k_even"] = report.even_k;
  out["r"] = report.r ? json(report.r->entries()) : json(nullptr);
  out["krcatovich_violations"] = report.krcatovich_violations;
  out["admissible"] = report.admissible();
  out["torsion"] = report.profile.values;
  json screens;
  screens["quick_bound"] = report.quick ? json(*report.quick) : json(nullptr);
  screens["rough_estimate"] = report.rough ? json(*report.rough) : json(nullptr);
  out["screens"] = std::move(screens);
  if (report.bound_line) {
    json line;
    line["slope"] = rational_json(report.bound_line->slope);
    line["intercept"] = rational_json(report.bound_line->intercept);
    line["index"] = report.bound_line->index;
    out["torsion_bound_line"] = std::move(line);
  } else {
    out["torsion_bound_line"] = nullptr;
  }
  out["d_table"] = report.table ? d_table_json(*report.table) : json(nullptr);
  out["verdict"] = report.verdict ? verdict_json(*report.verdict) : json(nullptr);
  return out;
}

json scan_json(const ScanReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["slope"] = row.slope;
    r["screened"] = row.screened;
    r["verdict"] = row.verdict ? verdict_json(*row.verdict) : json(nullptr);
    rows.push_back(std::move(r));
  }
  json out;
  out["name"] = report.name;
  out["genus"] = report.genus;
  out["r"] = report.r ? json(report.r->entries()) : json(nullptr);
  out["krcatovich_violations"] = report.krcatovich_violations;
  out["admissible"] = report.admissible();
  out["slopes"] = std::move(rows);
  out["interval"] = report.interval ? interval_json(*report.interval) : json(nullptr);
  return out;
}

json slope_report_json(const SlopeReport& report) {
  json tags = json::array();
  for (const auto& tagged : report.classification) {
    json t;
    t["interval"] = interval_json(tagged.interval);
    t["tag"] = std::string(to_string(tagged.tag));
    tags.push_back(std::move(t));
  }
  json out;
  out["index"] = report.index;
  out["tight_excluded"] = interval_json(report.tight_excluded);
  out["nonfillable"] = report.nonfillable ? interval_json(*report.nonfillable) : json(nullptr);
  out["m"] = report.m ? json(*report.m) : json(nullptr);
  out["classification"] = std::move(tags);
  out["disclaimer"] = report.disclaimer;
  return out;
}

json family_knot_json(const KnFamilyMember& member) {
  json pairs = json::array();
  for (const auto& [e, c] : member.knot.support()) {
    if (e >= 0) pairs.push_back(json::array({e, c}));
  }
  const auto r = jump_vector_from_exponents(validate_lspace_form(member.knot));
  json metadata;
  metadata["braid_word"] = member.braid_word;
  metadata["tb"] = member.tb;
  metadata["rot_abs"] = member.rot_abs;
  json out;
  out["name"] = member.knot.name();
  out["alexander"] = std::move(pairs);
  out["r"] = r.entries();
  out["genus"] = member.genus;
  out["metadata"] = std::move(metadata);
  return out;
}

json validation_json(const ValidationReport& report) {
  json out;
  out["name"] = report.name;
  out["valid"] = report.valid;
  out["reason"] = report.valid ? json(nullptr) : json(report.reason);
  if (report.valid) {
    out["genus"] = report.genus;
    out["k"] = report.k;
    out["r"] = report.r ? json(report.r->entries()) : json(nullptr);
    out["krcatovich_violations"] = report.krcatovich_violations;
    out["admissible"] = report.krcatovich_violations.empty();
  }
  return out;
}

json batch_summary_json(const BatchResult& result) {
  json out;
  out["rows"] = result.records.size();
  out["ok"] = result.ok_count;
  out["errors"] = result.error_count;
  out["obstructed"] = result.obstructed_count;
  return out;
}

std::string batch_jsonl(const BatchResult& result) {
  std::string out;
  for (const auto& record : result.records) {
    json r;
    r["line"] = record.line;
    r["name"] = record.name;
    r["status"] = record.ok ? "ok" : "error";
    if (record.ok) {
      r["genus"] = record.genus;
      r["k"] = record.k;
      r["r"] = record.r;
      r["krcatovich_violations"] = record.krcatovich_violations;
      r["admissible"] = record.krcatovich_violations.empty();
      json verdicts = json::array();
      for (const auto& verdict : record.verdicts) verdicts.push_back(verdict_json(verdict));
      r["verdicts"] = std::move(verdicts);
      r["interval"] = record.interval ? interval_json(*record.interval) : json(nullptr);
    } else {
      r["error"] = record.error;
    }
    out += r.dump();
    out += '\n';
  }
  return out;
}

std::string d_table_csv(const DInvariantTable& table) {
  std::string out = "i,numerator,denominator,branch\n";
  for (std::int64_t i = 0; i <= table.max_label(); ++i) {
    const Rational& d = table.at(i);
    out += std::to_string(i) + "," + std::to_string(d.num()) + "," + std::to_string(d.den()) +
           "," + (table.torsion_branch(i) ? "torsion" : "unknot") + "\n";
  }
  return out;
}

std::string torsion_csv(const TorsionProfile& profile) {
  std::string out = "j,t_j\n";
  for (std::size_t j = 0; j < profile.values.size(); ++j)
    out += std::to_string(j) + "," + std::to_string(profile.values[j]) + "\n";
  return out;
}

std::string bound_csv(const TorsionBoundLine& line) {
  std::string out = "slope_num,slope_den,intercept_num,intercept_den\n";
  out += std::to_string(line.slope.num()) + "," + std::to_string(line.slope.den()) + "," +
         std::to_string(line.intercept.num()) + "," + std::to_string(line.intercept.den()) +
         "\n";
  return out;
}

std::string dinv_plot_csv(const DInvariantTable& table) {
  std::string out = "i,num,den\n";
  for (std::int64_t i = 0; i <= table.max_label(); ++i) {
    const Rational& d = table.at(i);
    out += std::to_string(i) + "," + std::to_string(d.num()) + "," + std::to_string(d.den()) +
           "\n";
  }
  return out;
}

std::string scan_csv(const ScanReport& report) {
  std::string out = "n,square_free,screened,conclusion,max_d_numerator,max_d_denominator\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.slope) + ",";
    out += is_square_free(row.slope) ? "1," : "0,";
    out += row.screened ? "1," : "0,";
    if (row.verdict) {
      out += std::string(to_string(row.verdict->conclusion)) + ",";
      out += std::to_string(row.verdict->max_d->num()) + "," +
             std::to_string(row.verdict->max_d->den());
    } else {
      out += "SCREENED,,";
    }
    out += "\n";
  }
  return out;
}

std::string render_analysis_table(const AnalysisReport& report) {
  std::ostringstream os;
  os << "knot: " << report.name << "   [" << report.provenance << "]\n";
  os << "genus: " << report.genus << "   staircase length: k = " << report.k << " ("
     << (report.even_k ? "even" : "odd") << ")\n";
  if (report.r) {
    os << "jump vector: (" << join_ints(report.r->entries(), ", ") << ")   "
       << (report.admissible()
               ? "admissible"
               : "INADMISSIBLE (violations at j = " + join_ints(report.krcatovich_violations, ", ") +
                     ")")
       << "\n";
  } else {
    os << "jump vector: (none; trivial staircase)\n";
  }
  os << "torsion t_0..t_" << report.genus << ": " << join_ints(report.profile.values, " ")
     << "\n";
  if (report.bound_line) {
    os << "torsion lower bound: " << report.bound_line->slope.str() << " * j + "
       << report.bound_line->intercept.str() << "   (minimizing index "
       << report.bound_line->index << ")\n";
  }
  if (report.rough)
    os << "rough estimate at 2g-1: " << (*report.rough ? "passes" : "does not apply") << "\n";
  if (report.quick)
    os << "quick bound at the slope: " << (*report.quick ? "passes" : "fails") << "\n";
  if (report.table) {
    os << "slope " << report.table->n << ": "
       << (report.verdict->square_free ? "square-free" : "not square-free") << ", "
       << report.table->spin_c_count() << " spin^c structures, labels 0.."
       << report.table->max_label() << "\n";
    os << "    i  d(K(n),i)            ~approx      branch\n";
    for (std::int64_t i = 0; i <= report.table->max_label(); ++i) {
      const Rational& d = report.table->at(i);
      char line[128];
      std::snprintf(line, sizeof(line), "  %3lld  %-18s %11s      %s\n",
                    static_cast<long long>(i), d.str().c_str(), approx4(d).c_str(),
                    report.table->torsion_branch(i) ? "torsion" : "unknot");
      os << line;
    }
  }
  if (report.verdict) {
    os << "threshold: " << report.verdict->threshold.str() << " (~"
       << approx4(report.verdict->threshold) << ")\n";
    if (report.verdict->max_d)
      os << "max d: " << report.verdict->max_d->str() << " (~" << approx4(*report.verdict->max_d)
         << ")\n";
    else
      os << "max d: not tabulated (slope below 2g-1)\n";
    os << "weak labels: "
       << (report.verdict->weak_labels.empty() ? "(none)"
                                               : join_ints(report.verdict->weak_labels, ", "))
       << "\n";
    os << "conclusion: " << to_string(report.verdict->conclusion) << "\n";
  }
  return os.str();
}

std::string render_scan_table(const ScanReport& report) {
  std::ostringstream os;
  os << "knot: " << report.name << "   genus " << report.genus;
  if (!report.admissible())
    os << "   INADMISSIBLE jump vector (violations at j = "
       << join_ints(report.krcatovich_violations, ", ") << ")";
  os << "\n";
  os << "    n  square_free  screened  conclusion      max_d\n";
  for (const auto& row : report.rows) {
    char line[160];
    if (row.verdict) {
      const std::string max = row.verdict->max_d->str() + " (~" + approx4(*row.verdict->max_d) + ")";
      std::snprintf(line, sizeof(line), "  %3lld  %-11s  %-8s  %-14s  %s\n",
                    static_cast<long long>(row.slope), row.verdict->square_free ? "yes" : "no",
                    "no", std::string(to_string(row.verdict->conclusion)).c_str(), max.c_str());
    } else {
      std::snprintf(line, sizeof(line), "  %3lld  %-11s  %-8s  %-14s  %s\n",
                    static_cast<long long>(row.slope), is_square_free(row.slope) ? "yes" : "no",
                    "yes", "(screened)", "-");
    }
    os << line;
  }
  os << "nonfillable interval: " << (report.interval ? report.interval->str() : "(none)")
     << "\n";
  return os.str();
}

std::string render_slope_report_table(const SlopeReport& report) {
  std::ostringstream os;
  os << "family kn, index " << report.index << "\n";
  os << "tight structures exist outside: " << report.tight_excluded.str() << "\n";
  if (report.m) {
    os << "obstruction verified at m = " << *report.m << "; nonfillable "
       << report.nonfillable->str() << "\n";
  } else {
    os << "no square-free obstruction candidate among {8n+3, 8n+5}\n";
  }
  os << "classification:\n";
  for (const auto& tagged : report.classification)
    os << "  " << tagged.interval.str() << "  " << to_string(tagged.tag) << "\n";
  os << "note: " << report.disclaimer << "\n";
  return os.str();
}

std::string render_validation_table(const ValidationReport& report) {
  std::ostringstream os;
  os << "knot: " << report.name << "\n";
  if (!report.valid) {
    os << "valid staircase: no\n";
    os << "reason: " << report.reason << "\n";
    return os.str();
  }
  os << "valid staircase: yes\n";
  os << "genus: " << report.genus << "   k: " << report.k << "\n";
  if (report.r) {
    os << "jump vector: (" << join_ints(report.r->entries(), ", ") << ")\n";
    os << "admissible: "
       << (report.krcatovich_violations.empty()
               ? "yes"
               : "no (violations at j = " + join_ints(report.krcatovich_violations, ", ") + ")")
       << "\n";
  } else {
    os << "jump vector: (none; trivial staircase)\n";
  }
  return os.str();
}

std::string render_batch_summary(const BatchResult& result) {
  std::ostringstream os;
  os << "rows: " << result.records.size() << "   ok: " << result.ok_count
     << "   errors: " << result.error_count << "   obstructed: " << result.obstructed_count
     << "\n";
  return os.str();
}

void write_plot_data(const AnalysisReport& report, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
  write_text_file((dir / "torsion.csv").string(), torsion_csv(report.profile));
  if (report.bound_line) write_text_file((dir / "bound.csv").string(), bound_csv(*report.bound_line));
  if (report.table) write_text_file((dir / "dinv.csv").string(), dinv_plot_csv(*report.table));
}

}  // namespace lsobstruct
