#pragma once

// End-to-end commands behind the paramcode CLI. Each run_* function takes
// parsed inputs and returns the serialized output, so the CLI binary only
// handles flags and files.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paramcode/bounds.hpp"
#include "paramcode/core.hpp"
#include "paramcode/ensemble.hpp"
#include "paramcode/ingest.hpp"
#include "paramcode/metrics.hpp"
#include "paramcode/spoiling.hpp"

namespace paramcode {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Json, Csv };

/// Everything needed to turn a table into a code. Unset handling defaults to
/// BuildPolicy::defaults_for(alphabet).
struct BuildOptions {
  std::uint32_t alphabet = 2;
  RateBase rate_base = RateBase::Q;
  std::optional<UnsetHandling> entailed;
  std::optional<UnsetHandling> missing;
  std::optional<std::vector<std::string>> languages;
  std::optional<std::vector<std::string>> parameters;

  BuildPolicy policy() const;
};

struct BuiltFamily {
  ParameterTable selected;  // after --languages / --parameters
  DropResult reduced;       // after the policy's column drops
  Code code;
};

BuiltFamily build_family(const ParameterTable& table, const BuildOptions& options);

struct AnalysisReport {
  std::string family;
  std::string generated_at;  // excluded from reproducibility comparisons
  std::string input_table;   // canonical serialization of the full input table
  BuildOptions options;
  BuildPolicy policy;
  std::vector<std::string> retained;
  std::vector<std::string> dropped;
  Code code;
  CodeParameters params_base_q;
  CodeParameters params_base_2;
  RegionClassification classification;
  DistanceMatrix distances;
};

AnalysisReport run_analyze(const ParameterTable& table, const std::string& family,
                           const BuildOptions& options);

/// Report as JSON. The generated_at field is written only when non-empty.
std::string to_json(const AnalysisReport& report);

/// Inverse of the provenance block of a report: the input table and options
/// embedded in it, so the analysis can be rerun.
struct ReportInputs {
  std::string family;
  ParameterTable table;
  BuildOptions options;
};
ReportInputs inputs_from_report(const std::string& report_json);

std::string run_distances(const ParameterTable& table, const BuildOptions& options,
                          OutputFormat format, MatrixKind kind);

std::string run_classify(const CodePoint& point, double singleton_slack);

struct SpoilRequest {
  SpoilKind kind = SpoilKind::Restrict;
  std::size_t position = 1;
  std::optional<Letter> letter;
  /// constant-0, constant-1, ..., parity-of-word, or table
  std::string function = "constant-0";
  std::map<std::string, Letter> function_table;  // label -> letter, for "table"
};

SpoilFunction make_spoil_function(const SpoilRequest& request, std::uint32_t q);

std::string run_spoil(const ParameterTable& table, const BuildOptions& options,
                      const SpoilRequest& request);

std::string run_sample(const EnsembleConfig& config, OutputFormat format);
std::string run_enumerate(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap,
                          OutputFormat format);
std::string run_curves(std::uint32_t q, std::size_t samples, OutputFormat format);

}  // namespace paramcode
