// paramcode: syntactic-parameter tables as q-ary codes.
//
//   paramcode analyze fixtures/example1.tsv
//   paramcode classify --delta 13/25 --rate 0.0634 --alphabet 2
//   paramcode bounds-curve --alphabet 3 --samples 101 --format csv

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paramcode/analysis.hpp"

namespace fs = std::filesystem;
using namespace paramcode;

namespace {

struct CommonFlags {
  std::uint32_t alphabet = 2;
  std::string rate_base = "q";
  std::string entailed;
  std::string missing;
  std::vector<std::string> languages;
  std::vector<std::string> parameters;
  std::string delimiter = "auto";
  std::string format = "json";
  std::string output;
};

void add_build_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--alphabet", f.alphabet, "Code alphabet size q")
      ->check(CLI::IsMember({2u, 3u}));
  cmd->add_option("--rate-base", f.rate_base, "Logarithm base for k and R")
      ->check(CLI::IsMember({"q", "2"}));
  cmd->add_option("--entailed", f.entailed, "Entailed cells: drop columns, encode as 0, or fail")
      ->check(CLI::IsMember({"drop", "zero", "error"}));
  cmd->add_option("--missing", f.missing, "Missing cells: drop columns, encode as 0, or fail")
      ->check(CLI::IsMember({"drop", "zero", "error"}));
  cmd->add_option("--languages", f.languages, "Comma separated languages to keep")->delimiter(',');
  cmd->add_option("--parameters", f.parameters, "Comma separated parameter ids to keep")
      ->delimiter(',');
  cmd->add_option("--delimiter", f.delimiter, "Input cell delimiter")
      ->check(CLI::IsMember({"auto", "tab", "comma"}));
}

void add_output_flags(CLI::App* cmd, CommonFlags& f, bool csv_allowed = true) {
  if (csv_allowed)
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", f.output, "Output file (default: stdout)");
}

BuildOptions build_options(const CommonFlags& f) {
  BuildOptions o;
  o.alphabet = f.alphabet;
  o.rate_base = f.rate_base == "2" ? RateBase::Two : RateBase::Q;
  if (!f.entailed.empty()) o.entailed = parse_unset_handling(f.entailed);
  if (!f.missing.empty()) o.missing = parse_unset_handling(f.missing);
  if (!f.languages.empty()) o.languages = f.languages;
  if (!f.parameters.empty()) o.parameters = f.parameters;
  return o;
}

TableFormat table_format(const CommonFlags& f) {
  if (f.delimiter == "tab") return {Delimiter::Tab};
  if (f.delimiter == "comma") return {Delimiter::Comma};
  return {Delimiter::Auto};
}

OutputFormat output_format(const CommonFlags& f) {
  return f.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const std::string& text, const CommonFlags& f, const std::string& command) {
  fs::path target = f.output;
  if (target.empty()) {
    if (const char* dir = std::getenv("PARAMCODE_OUTPUT_DIR"); dir && *dir) {
      fs::create_directories(dir);
      target = fs::path(dir) / (command + (f.format == "csv" ? ".csv" : ".json"));
    }
  }
  if (target.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + target.string() + "'");
  out << text;
}

int report_error(const Error& e) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = std::string(to_string(e.kind()));
  j["error"]["message"] = e.what();
  if (e.where()) {
    j["error"]["line"] = e.where()->line;
    j["error"]["column"] = e.where()->column;
  }
  std::cerr << j.dump() << "\n";
  return 1;
}

SpoilKind spoil_kind(const std::string& s) {
  if (s == "extend") return SpoilKind::Extend;
  if (s == "project") return SpoilKind::Project;
  if (s == "restrict") return SpoilKind::Restrict;
  return SpoilKind::RestrictProject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syntactic-parameter tables as error-correcting codes"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string table_path;
  std::string family;
  bool no_timestamp = false;

  auto* analyze = app.add_subcommand("analyze", "Build the code of a family and report its parameters");
  analyze->add_option("table", table_path, "Parameter table (TSV/CSV)")->required();
  analyze->add_option("--family", family, "Family name recorded in the report (default: file stem)");
  analyze->add_flag("--no-timestamp", no_timestamp, "Omit generated_at");
  add_build_flags(analyze, flags);
  add_output_flags(analyze, flags, false);

  std::string matrix_kind = "relative";
  auto* distances = app.add_subcommand("distances", "Pairwise Hamming distance matrix");
  distances->add_option("table", table_path, "Parameter table (TSV/CSV)")->required();
  distances->add_option("--kind", matrix_kind, "CSV matrix entries")
      ->check(CLI::IsMember({"relative", "absolute"}));
  add_build_flags(distances, flags);
  add_output_flags(distances, flags);

  std::string delta_text;
  double rate = 0.0;
  double slack = 0.0;
  auto* classify_cmd = app.add_subcommand("classify", "Place a (delta, R) point against the bounds");
  classify_cmd->add_option("--delta", delta_text, "Relative minimum distance (p/q or decimal)")
      ->required();
  classify_cmd->add_option("--rate", rate, "Transmission rate R")->required();
  classify_cmd->add_option("--alphabet", flags.alphabet, "Alphabet size q")
      ->check(CLI::Range(2u, 1u << 16));
  classify_cmd->add_option("--slack", slack, "Finite-length Singleton slack");
  add_output_flags(classify_cmd, flags, false);

  std::string op = "restrict";
  SpoilRequest spoil_request;
  unsigned letter = 0;
  std::map<std::string, Letter> function_table;
  auto* spoil = app.add_subcommand("spoil", "Apply a spoiling operation and check its parameter law");
  spoil->add_option("table", table_path, "Parameter table (TSV/CSV)")->required();
  spoil->add_option("--op", op, "Operation")
      ->check(CLI::IsMember({"extend", "project", "restrict", "restrict-project"}))
      ->required();
  spoil->add_option("--position", spoil_request.position, "1-based position")->required();
  auto* letter_opt = spoil->add_option("--letter", letter, "Letter for restrict");
  spoil->add_option("--function", spoil_request.function,
                    "constant-<a>, parity-of-word, or table");
  spoil->add_option("--function-table", function_table, "language=letter pairs for --function table")
      ->delimiter(',');
  add_build_flags(spoil, flags);
  add_output_flags(spoil, flags, false);

  EnsembleConfig ensemble;
  std::uint64_t cap = 1'000'000;
  auto* sample = app.add_subcommand("sample", "Sample codes from the Shannon random code ensemble");
  sample->add_option("--n", ensemble.n, "Block length")->required();
  sample->add_option("--m", ensemble.m, "Words per code")->required();
  sample->add_option("--alphabet", flags.alphabet, "Alphabet size q")->check(CLI::IsMember({2u, 3u}));
  sample->add_option("--trials", ensemble.trials, "Number of codes");
  sample->add_option("--seed", ensemble.seed, "64-bit seed");
  add_output_flags(sample, flags);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every code of m words in F_q^n");
  enumerate->add_option("--n", ensemble.n, "Block length (<= 6)")->required();
  enumerate->add_option("--m", ensemble.m, "Words per code")->required();
  enumerate->add_option("--alphabet", flags.alphabet, "Alphabet size q")
      ->check(CLI::IsMember({2u, 3u}));
  enumerate->add_option("--cap", cap, "Maximum number of codes to visit");
  add_output_flags(enumerate, flags);

  std::size_t samples = 101;
  auto* curves = app.add_subcommand("bounds-curve", "Sample the GV, Hamming, Singleton and Plotkin bounds");
  curves->add_option("--alphabet", flags.alphabet, "Alphabet size q")->check(CLI::IsMember({2u, 3u}));
  curves->add_option("--samples", samples, "Number of delta samples (>= 2)");
  add_output_flags(curves, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(Error(ErrorKind::UsageError, e.what()));
  }

  try {
    if (analyze->parsed()) {
      const ParameterTable table = read_table_file(table_path, table_format(flags));
      if (family.empty()) family = fs::path(table_path).stem().string();
      AnalysisReport report = run_analyze(table, family, build_options(flags));
      if (!no_timestamp) report.generated_at = utc_timestamp();
      emit(to_json(report), flags, "analyze");
    } else if (distances->parsed()) {
      const ParameterTable table = read_table_file(table_path, table_format(flags));
      emit(run_distances(table, build_options(flags), output_format(flags),
                         matrix_kind == "absolute" ? MatrixKind::Absolute : MatrixKind::Relative),
           flags, "distances");
    } else if (classify_cmd->parsed()) {
      emit(run_classify({Rational::parse(delta_text), rate, flags.alphabet}, slack), flags,
           "classify");
    } else if (spoil->parsed()) {
      const ParameterTable table = read_table_file(table_path, table_format(flags));
      spoil_request.kind = spoil_kind(op);
      if (letter_opt->count() > 0) spoil_request.letter = letter;
      spoil_request.function_table = function_table;
      emit(run_spoil(table, build_options(flags), spoil_request), flags, "spoil");
    } else if (sample->parsed()) {
      ensemble.q = flags.alphabet;
      emit(run_sample(ensemble, output_format(flags)), flags, "sample");
    } else if (enumerate->parsed()) {
      emit(run_enumerate(ensemble.n, ensemble.m, flags.alphabet, cap, output_format(flags)), flags,
           "enumerate");
    } else if (curves->parsed()) {
      emit(run_curves(flags.alphabet, samples, output_format(flags)), flags, "bounds-curve");
    }
  } catch (const Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    return report_error(Error(ErrorKind::IoError, e.what()));
  }
  return 0;
}
