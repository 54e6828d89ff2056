#include "lsobstruct/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lsobstruct/report.hpp"

namespace lsobstruct {

namespace {

int verdict_exit_code(const Verdict& verdict) {
  switch (verdict.conclusion) {
    case Conclusion::Obstructed:
      return kExitObstructed;
    case Conclusion::Inconclusive:
      return kExitInconclusive;
    case Conclusion::NotApplicable:
      return kExitNotApplicable;
  }
  return kExitInternal;
}

int cmd_analyze(const std::string& knot_arg, std::int64_t slope, Format format) {
  const auto report = analyze_knot(load_knot(knot_arg), slope);
  switch (format) {
    case Format::Table:
      std::cout << render_analysis_table(report);
      break;
    case Format::Json:
      std::cout << analysis_json(report).dump(2) << "\n";
      break;
    case Format::Csv:
      std::cout << (report.table ? d_table_csv(*report.table)
                                 : std::string("i,numerator,denominator,branch\n"));
      break;
  }
  return verdict_exit_code(*report.verdict);
}

int cmd_scan(const std::string& knot_arg, std::int64_t max_slope, int jobs, Format format) {
  ScanOptions options;
  options.jobs = jobs;
  const auto report = scan_knot(load_knot(knot_arg), max_slope, options);
  switch (format) {
    case Format::Table:
      std::cout << render_scan_table(report);
      break;
    case Format::Json:
      std::cout << scan_json(report).dump(2) << "\n";
      break;
    case Format::Csv:
      std::cout << scan_csv(report);
      break;
  }
  return 0;
}

int cmd_batch(const std::string& census_path, std::int64_t delta, const std::string& output,
              int jobs, Format format) {
  const auto census = read_census_csv(census_path);
  const auto result = run_batch(census, delta, jobs);
  const std::string records = batch_jsonl(result);
  const bool to_stdout = output.empty() || output == "-";
  if (to_stdout) {
    std::cout << records;
  } else {
    write_text_file(output, records);
  }
  std::ostream& summary_out = to_stdout ? std::cerr : std::cout;
  switch (format) {
    case Format::Table:
      summary_out << render_batch_summary(result);
      break;
    case Format::Json:
      summary_out << batch_summary_json(result).dump() << "\n";
      break;
    case Format::Csv:
      summary_out << "rows,ok,errors,obstructed\n"
                  << result.records.size() << "," << result.ok_count << ","
                  << result.error_count << "," << result.obstructed_count << "\n";
      break;
  }
  return 0;
}

std::string family_csv(const KnFamilyMember& member) {
  const auto r = jump_vector_from_exponents(validate_lspace_form(member.knot));
  std::string payload;
  for (std::size_t i = 0; i < r.entries().size(); ++i) {
    if (i) payload += ';';
    payload += std::to_string(r.entries()[i]);
  }
  return "name,r\n" + member.knot.name() + "," + payload + "\n";
}

std::string slope_report_csv(const SlopeReport& report) {
  std::string out = "low_num,low_den,high_num,high_den,closed_low,closed_high,tag\n";
  for (const auto& tagged : report.classification) {
    const auto& iv = tagged.interval;
    out += iv.low ? std::to_string(iv.low->num()) + "," + std::to_string(iv.low->den()) : ",";
    out += ",";
    out += iv.high ? std::to_string(iv.high->num()) + "," + std::to_string(iv.high->den()) : ",";
    out += ",";
    out += iv.closed_low ? "1," : "0,";
    out += iv.closed_high ? "1," : "0,";
    out += std::string(to_string(tagged.tag)) + "\n";
  }
  return out;
}

int cmd_family(std::int64_t index, bool classify_flag, Format format) {
  if (classify_flag) {
    const auto report = kn_slope_classification(index);
    switch (format) {
      case Format::Table:
        std::cout << render_slope_report_table(report);
        break;
      case Format::Json:
        std::cout << slope_report_json(report).dump(2) << "\n";
        break;
      case Format::Csv:
        std::cout << slope_report_csv(report);
        break;
    }
    return 0;
  }
  const auto member = kn_knot(index);
  switch (format) {
    case Format::Table: {
      std::cout << "name: " << member.knot.name() << "\n";
      std::cout << "genus: " << member.genus << "   tb: " << member.tb
                << "   |rot|: " << member.rot_abs << "\n";
      const auto r = jump_vector_from_exponents(validate_lspace_form(member.knot));
      std::cout << "jump vector: (";
      for (std::size_t i = 0; i < r.entries().size(); ++i)
        std::cout << (i ? ", " : "") << r.entries()[i];
      std::cout << ")\n";
      break;
    }
    case Format::Json:
      std::cout << family_knot_json(member).dump(2) << "\n";
      break;
    case Format::Csv:
      std::cout << family_csv(member);
      break;
  }
  return 0;
}

int cmd_plot_data(const std::string& knot_arg, std::optional<std::int64_t> slope,
                  const std::string& output_dir) {
  const auto report = analyze_knot(load_knot(knot_arg), slope);
  write_plot_data(report, output_dir);
  std::cout << "wrote " << output_dir << "/torsion.csv\n";
  if (report.bound_line) std::cout << "wrote " << output_dir << "/bound.csv\n";
  if (report.table) std::cout << "wrote " << output_dir << "/dinv.csv\n";
  return 0;
}

int cmd_validate(const std::string& knot_arg, Format format) {
  const auto report = validate_knot(load_knot(knot_arg));
  switch (format) {
    case Format::Table:
      std::cout << render_validation_table(report);
      break;
    case Format::Json:
      std::cout << validation_json(report).dump(2) << "\n";
      break;
    case Format::Csv: {
      std::string r_payload;
      if (report.r) {
        for (std::size_t i = 0; i < report.r->entries().size(); ++i) {
          if (i) r_payload += ';';
          r_payload += std::to_string(report.r->entries()[i]);
        }
      }
      std::cout << "name,valid,genus,k,r,admissible\n";
      std::cout << report.name << "," << (report.valid ? 1 : 0) << "," << report.genus << ","
                << report.k << "," << r_payload << ","
                << (report.valid && report.krcatovich_violations.empty() ? 1 : 0) << "\n";
      break;
    }
  }
  return report.valid ? 0 : kExitData;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "lsobstruct: d-invariant obstruction to weakly symplectically fillable "
      "contact structures on surgeries along L-space knots"};
  app.require_subcommand(1);

  const std::string format_choices_help = "output format: table, json, csv";
  const auto format_check = CLI::IsMember({"table", "json", "csv"});

  std::string knot_arg;
  std::int64_t slope = 0;
  std::int64_t max_slope = 0;
  std::int64_t delta = 0;
  std::int64_t family_index = 1;
  int jobs = 0;
  bool classify_flag = false;
  std::string output;
  std::string format_analyze = "table";
  std::string format_scan = "table";
  std::string format_batch = "table";
  std::string format_family = "json";
  std::string format_validate = "table";

  const char* knot_help =
      "knot input: JSON file path, inline JSON ('{...}'), or family reference kn:N";

  auto* analyze = app.add_subcommand("analyze", "single-slope obstruction analysis");
  analyze->add_option("knot", knot_arg, knot_help)->required();
  analyze->add_option("--slope", slope, "integral surgery coefficient")->required();
  auto* analyze_format = analyze->add_option("--format", format_analyze, format_choices_help)
                             ->check(format_check);

  auto* scan = app.add_subcommand("scan", "per-slope verdicts over [2g-1, max]");
  scan->add_option("knot", knot_arg, knot_help)->required();
  scan->add_option("--max", max_slope, "largest slope to scan")->required();
  scan->add_option("--jobs", jobs, "worker threads (default: all logical CPUs)");
  auto* scan_format = scan->add_option("--format", format_scan, format_choices_help)
                          ->check(format_check);

  auto* batch = app.add_subcommand("batch", "process a census CSV, one JSON record per knot");
  batch->add_option("census", knot_arg, "census CSV with header name,alexander or name,r")
      ->required();
  batch->add_option("--delta", delta, "scan slopes 2g-1 .. 2g-1+delta (default: 2g-1 only)")
      ->check(CLI::NonNegativeNumber);
  batch->add_option("--output", output, "records file ('-' or empty: stdout)");
  batch->add_option("--jobs", jobs, "worker threads (default: all logical CPUs)");
  auto* batch_format = batch->add_option("--format", format_batch, format_choices_help)
                           ->check(format_check);

  auto* family = app.add_subcommand("family", "built-in knot family generators");
  std::string family_name;
  family->add_option("name", family_name, "family name")->required()->check(CLI::IsMember({"kn"}));
  family->add_option("--index", family_index, "family index n >= 1")->required();
  family->add_flag("--classify", classify_flag, "emit the slope classification report");
  auto* family_format = family->add_option("--format", format_family, format_choices_help)
                            ->check(format_check);

  auto* plot = app.add_subcommand("plot-data", "emit torsion/bound/d-invariant CSV files");
  std::optional<std::int64_t> plot_slope;
  plot->add_option("knot", knot_arg, knot_help)->required();
  plot->add_option("--slope", plot_slope, "also emit dinv.csv for this slope");
  plot->add_option("--output", output, "output directory")->required();

  auto* validate = app.add_subcommand("validate", "check the staircase conditions");
  validate->add_option("knot", knot_arg, knot_help)->required();
  auto* validate_format = validate->add_option("--format", format_validate, format_choices_help)
                              ->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  // Precedence: explicit flag, then LSOBSTRUCT_FORMAT, then the built-in
  // default. A malformed environment value is an error, not a fallback.
  const char* env_format = std::getenv("LSOBSTRUCT_FORMAT");
  const auto effective_format = [&](const CLI::Option* flag,
                                    const std::string& flag_value) -> Format {
    if (flag->count() == 0 && env_format != nullptr && *env_format != '\0')
      return parse_format(env_format);
    return parse_format(flag_value);
  };

  try {
    if (analyze->parsed())
      return cmd_analyze(knot_arg, slope, effective_format(analyze_format, format_analyze));
    if (scan->parsed())
      return cmd_scan(knot_arg, max_slope, jobs, effective_format(scan_format, format_scan));
    if (batch->parsed())
      return cmd_batch(knot_arg, delta, output, jobs,
                       effective_format(batch_format, format_batch));
    if (family->parsed())
      return cmd_family(family_index, classify_flag,
                        effective_format(family_format, format_family));
    if (plot->parsed()) return cmd_plot_data(knot_arg, plot_slope, output);
    if (validate->parsed())
      return cmd_validate(knot_arg, effective_format(validate_format, format_validate));
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace lsobstruct
