#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "paramcode/analysis.hpp"
#include "test_support.hpp"

using namespace paramcode;
using namespace paramcode::testing;
using nlohmann::json;

namespace {

/// The Arabic/Wolof/Basque rows padded with 38 columns that are entailed in
/// every language, giving 63 parameters in total.
ParameterTable padded_example2() {
  ParameterTable t = example2_table();
  for (int i = 0; i < 38; ++i) {
    t.parameter_ids.push_back("E" + std::to_string(i + 1));
    for (auto& r : t.languages) r.values.push_back(ParamValue::Entailed);
  }
  return t;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / "paramcode_test_stdout";
  const auto err = dir / "paramcode_test_stderr";
  const std::string cmd = std::string("\"") + PARAMCODE_CLI + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("analyze the Romance family") {
  const AnalysisReport r = run_analyze(example1_table(), "romance", {});
  CHECK(r.params_base_q.delta == Rational(1, 6));
  CHECK(std::abs(r.params_base_q.rate - 0.2642) < 1e-4);
  CHECK(r.classification.verdict == Verdict::BelowGV);
  CHECK(r.dropped.empty());

  const json j = json::parse(to_json(r));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["classification"]["verdict"] == "BelowGV");
  CHECK(j["code_parameters"]["base_q"]["delta"] == "1/6");
  CHECK_FALSE(j.contains("generated_at"));
}

TEST_CASE("analyze the Arabic/Wolof/Basque family") {
  const AnalysisReport r = run_analyze(example2_table(), "example2", {});
  CHECK(r.params_base_q.delta == Rational(13, 25));
  CHECK(r.classification.verdict == Verdict::AboveAsymptotic);
  CHECK(r.classification.certificate("plotkin").fires);
}

TEST_CASE("ternary encoding over 63 parameters") {
  BuildOptions options;
  options.alphabet = 3;
  options.rate_base = RateBase::Two;
  const AnalysisReport r = run_analyze(padded_example2(), "padded", options);
  CHECK(r.code.block_length() == 63);
  CHECK(r.dropped.empty());
  // log2(3)/63
  CHECK(std::abs(r.params_base_2.rate - 0.025158134932081844) < 1e-12);
  CHECK(std::abs(r.params_base_2.rate - 0.0252) < 5e-4);
  CHECK(std::abs(r.params_base_q.rate - 1.0 / 63) < 1e-12);

  // The binary default drops the padded columns again.
  BuildOptions binary;
  const AnalysisReport dropped = run_analyze(padded_example2(), "padded", binary);
  CHECK(dropped.code.block_length() == 25);
  CHECK(dropped.dropped.size() == 38);
}

TEST_CASE("reports reproduce from their own provenance") {
  for (const ParameterTable& table : {example1_table(), example2_table(), padded_example2()}) {
    for (std::uint32_t q : {2u, 3u}) {
      BuildOptions options;
      options.alphabet = q;
      options.languages = std::vector<std::string>{table.languages[1].name, table.languages[0].name};
      const std::string first = to_json(run_analyze(table, "family", options));
      const ReportInputs inputs = inputs_from_report(first);
      CHECK(inputs.table == table);
      CHECK(to_json(run_analyze(inputs.table, inputs.family, inputs.options)) == first);
    }
  }
  AnalysisReport stamped = run_analyze(example1_table(), "romance", {});
  stamped.generated_at = "2020-01-01T00:00:00Z";
  CHECK(json::parse(to_json(stamped))["generated_at"] == "2020-01-01T00:00:00Z");
}

TEST_CASE("distances wrapper") {
  const std::string csv = run_distances(example2_table(), {}, OutputFormat::Csv, MatrixKind::Absolute);
  CHECK(csv.find("Arabic,0,16,13\n") != std::string::npos);
  const json j = json::parse(run_distances(example2_table(), {}, OutputFormat::Json, MatrixKind::Relative));
  CHECK(j["relative_exact"][0][1] == "16/25");
}

TEST_CASE("classify wrapper") {
  const json j = json::parse(run_classify({Rational(13, 25), std::log2(3.0) / 25, 2}, 0.0));
  CHECK(j["classification"]["verdict"] == "AboveAsymptotic");
}

TEST_CASE("spoil wrapper") {
  SpoilRequest req;
  req.kind = SpoilKind::Restrict;
  req.position = 4;
  req.letter = 0;
  const json j = json::parse(run_spoil(example1_table(), {}, req));
  CHECK(j["result_languages"] == json::array({"Italian", "French"}));
  CHECK(j["law_holds"] == true);

  SpoilRequest ext;
  ext.kind = SpoilKind::Extend;
  ext.position = 7;
  ext.function = "table";
  ext.function_table = {{"Italian", 0}, {"Spanish", 1}, {"French", 1}};
  CHECK(json::parse(run_spoil(example1_table(), {}, ext))["law_holds"] == true);

  CHECK(make_spoil_function({SpoilKind::Extend, 1, std::nullopt, "constant-1", {}}, 2).tag() ==
        "constant-1");
  CHECK_THROWS_AS(make_spoil_function({SpoilKind::Extend, 1, std::nullopt, "nonsense", {}}, 2),
                  Error);
}

TEST_CASE("sample, enumerate and curves wrappers") {
  const EnsembleConfig cfg{16, 5, 2, 20, 77};
  CHECK(run_sample(cfg, OutputFormat::Csv) == run_sample(cfg, OutputFormat::Csv));
  CHECK(run_sample(cfg, OutputFormat::Json) == run_sample(cfg, OutputFormat::Json));
  CHECK(run_enumerate(2, 2, 2, 100, OutputFormat::Csv).find("0.5,0.5,4,") != std::string::npos);

  const std::string curves = run_curves(2, 101, OutputFormat::Csv);
  std::istringstream in(curves);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.size() == 102);
  CHECK(lines[1].rfind("0,1,", 0) == 0);
  CHECK(lines[101].rfind("1,0,", 0) == 0);
}

TEST_CASE("command line") {
  const std::string ex1 = fixture("example1.tsv");

  const CliResult ok = run_cli("analyze \"" + ex1 + "\" --no-timestamp");
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out)["classification"]["verdict"] == "BelowGV");
  CHECK(run_cli("analyze \"" + ex1 + "\" --no-timestamp").out == ok.out);

  const CliResult stamped = run_cli("analyze \"" + ex1 + "\"");
  CHECK(json::parse(stamped.out).contains("generated_at"));

  const CliResult unknown = run_cli("analyze \"" + ex1 + "\" --frobnicate");
  CHECK(unknown.status != 0);
  CHECK(json::parse(unknown.err)["error"]["kind"] == "UsageError");

  const CliResult missing = run_cli("analyze /nonexistent/table.tsv");
  CHECK(missing.status != 0);
  CHECK(json::parse(missing.err)["error"]["kind"] == "IoError");

  const auto bad = std::filesystem::temp_directory_path() / "paramcode_bad.tsv";
  std::ofstream(bad) << "language\tP1\tP2\nItalian\t+\tx\n";
  const CliResult parse = run_cli("analyze \"" + bad.string() + "\"");
  CHECK(parse.status != 0);
  const json err = json::parse(parse.err)["error"];
  CHECK(err["kind"] == "UnknownCellValue");
  CHECK(err["line"] == 2);
  CHECK(err["column"] == 3);

  const CliResult spoil = run_cli("spoil \"" + ex1 + "\" --op restrict --position 4 --letter 0");
  CHECK(json::parse(spoil.out)["result_languages"] == json::array({"Italian", "French"}));

  const CliResult classify = run_cli("classify --delta 0.4643 --rate 0.0252 --alphabet 3");
  CHECK(json::parse(classify.out)["classification"]["verdict"] == "BelowGV");

  const CliResult curves = run_cli("bounds-curve --format csv");
  CHECK(std::count(curves.out.begin(), curves.out.end(), '\n') == 102);

  CHECK(run_cli("enumerate --n 4 --m 2 --cap 10").status != 0);
  CHECK(run_cli("sample --n 2 --m 5").status != 0);
  CHECK(run_cli("analyze \"" + ex1 + "\" --alphabet 5").status != 0);
}
