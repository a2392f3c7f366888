#include "paramcode/analysis.hpp"

#include <fmt/format.h>

#include "json.hpp"

namespace paramcode {

using json = nlohmann::ordered_json;

BuildPolicy BuildOptions::policy() const {
  BuildPolicy p = BuildPolicy::defaults_for(alphabet);
  if (entailed) p.entailed = *entailed;
  if (missing) p.missing = *missing;
  return p;
}

BuiltFamily build_family(const ParameterTable& table, const BuildOptions& options) {
  ParameterTable selected = select(table, options.languages, options.parameters);
  const BuildPolicy policy = options.policy();
  DropResult reduced = apply_policy(selected, policy);
  Code code = build_code(reduced.table, policy);
  return {std::move(selected), std::move(reduced), std::move(code)};
}

namespace {

json params_json(const CodeParameters& p) {
  json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["d"] = p.d;
  j["delta"] = p.delta.to_string();
  j["delta_value"] = p.delta.to_double();
  j["rate_base"] = p.rate_base;
  j["k"] = p.k;
  j["R"] = p.rate;
  j["distance_multiset"] = p.distance_multiset;
  return j;
}

json classification_json(const RegionClassification& c) {
  json j;
  j["verdict"] = std::string(to_string(c.verdict));
  auto certs = json::array();
  for (const auto& cert : c.certificates) {
    json e;
    e["bound"] = cert.bound;
    e["fires"] = cert.fires;
    e["margin"] = cert.margin;
    e["inequality"] = cert.inequality;
    certs.push_back(std::move(e));
  }
  j["certificates"] = std::move(certs);
  j["notes"] = c.notes;
  return j;
}

json code_json(const Code& code) {
  json j;
  j["q"] = code.q();
  j["n"] = code.block_length();
  auto words = json::array();
  for (const auto& w : code.words()) words.push_back({{"label", w.label}, {"word", w.letters_text()}});
  j["words"] = std::move(words);
  auto collisions = json::array();
  for (const auto& c : code.collisions())
    collisions.push_back({{"language", c.language}, {"same_word_as", c.merged_into}});
  j["collisions"] = std::move(collisions);
  return j;
}

json optional_list(const std::optional<std::vector<std::string>>& list) {
  if (!list) return nullptr;
  return *list;
}

std::optional<std::vector<std::string>> list_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::vector<std::string>>();
}

RateBase parse_rate_base(const std::string& s) {
  if (s == "q") return RateBase::Q;
  if (s == "2") return RateBase::Two;
  throw Error(ErrorKind::UsageError, "rate base must be q or 2, got '" + s + "'");
}

}  // namespace

AnalysisReport run_analyze(const ParameterTable& table, const std::string& family,
                           const BuildOptions& options) {
  validate_table(table);
  BuiltFamily built = build_family(table, options);
  CodeParameters base_q = code_parameters(built.code, RateBase::Q);
  CodeParameters base_2 = code_parameters(built.code, RateBase::Two);
  const CodeParameters& chosen = options.rate_base == RateBase::Q ? base_q : base_2;

  ClassifyOptions classify_options;
  classify_options.singleton_slack = 1.0 / static_cast<double>(chosen.n);
  RegionClassification classification =
      classify({chosen.delta, chosen.rate, built.code.q()}, classify_options);
  DistanceMatrix distances = distance_matrix(built.code);

  return AnalysisReport{family,
                        {},
                        serialize_table(table),
                        options,
                        options.policy(),
                        built.reduced.table.parameter_ids,
                        built.reduced.dropped,
                        std::move(built.code),
                        std::move(base_q),
                        std::move(base_2),
                        std::move(classification),
                        std::move(distances)};
}

std::string to_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = r.family;
  if (!r.generated_at.empty()) j["generated_at"] = r.generated_at;

  json input;
  input["table"] = r.input_table;
  input["languages"] = optional_list(r.options.languages);
  input["parameters"] = optional_list(r.options.parameters);
  j["input"] = std::move(input);

  json policy;
  policy["alphabet"] = r.policy.alphabet.q();
  policy["entailed"] = std::string(to_string(r.policy.entailed));
  policy["missing"] = std::string(to_string(r.policy.missing));
  policy["rate_base"] = std::string(to_string(r.options.rate_base));
  j["policy"] = std::move(policy);

  j["retained_parameters"] = r.retained;
  j["dropped_parameters"] = r.dropped;
  j["code"] = code_json(r.code);
  j["code_parameters"] = {{"base_q", params_json(r.params_base_q)},
                          {"base_2", params_json(r.params_base_2)}};
  json classification = classification_json(r.classification);
  classification["rate_base"] = std::string(to_string(r.options.rate_base));
  classification["singleton_slack"] = fmt::format("1/{}", r.params_base_q.n);
  j["classification"] = std::move(classification);
  j["distance_matrix"] = json::parse(to_json(r.distances));
  return j.dump(2) + "\n";
}

ReportInputs inputs_from_report(const std::string& report_json) {
  const json j = json::parse(report_json);
  if (j.value("schema_version", 0) != kSchemaVersion)
    throw Error(ErrorKind::SyntaxError, "unsupported report schema_version");
  ReportInputs in;
  in.family = j.at("family").get<std::string>();
  in.table = parse_table(j.at("input").at("table").get<std::string>());
  in.options.languages = list_from(j.at("input").at("languages"));
  in.options.parameters = list_from(j.at("input").at("parameters"));
  const json& policy = j.at("policy");
  in.options.alphabet = policy.at("alphabet").get<std::uint32_t>();
  in.options.entailed = parse_unset_handling(policy.at("entailed").get<std::string>());
  in.options.missing = parse_unset_handling(policy.at("missing").get<std::string>());
  in.options.rate_base = parse_rate_base(policy.at("rate_base").get<std::string>());
  return in;
}

std::string run_distances(const ParameterTable& table, const BuildOptions& options,
                          OutputFormat format, MatrixKind kind) {
  const BuiltFamily built = build_family(table, options);
  const DistanceMatrix dm = distance_matrix(built.code);
  return format == OutputFormat::Csv ? to_csv(dm, kind) : to_json(dm);
}

std::string run_classify(const CodePoint& point, double singleton_slack) {
  ClassifyOptions options;
  options.singleton_slack = singleton_slack;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["delta"] = point.delta.to_string();
  j["R"] = point.rate;
  j["q"] = point.q;
  j["singleton_slack"] = singleton_slack;
  j["classification"] = classification_json(classify(point, options));
  return j.dump(2) + "\n";
}

SpoilFunction make_spoil_function(const SpoilRequest& request, std::uint32_t q) {
  const std::string& name = request.function;
  if (name == "parity-of-word" || name == "parity") return SpoilFunction::parity(q);
  if (name == "table") return SpoilFunction::by_label(request.function_table);
  constexpr std::string_view prefix = "constant-";
  if (name.rfind(prefix, 0) == 0) {
    const Rational value = Rational::parse(std::string_view(name).substr(prefix.size()));
    if (value.den() != 1 || value.num() < 0)
      throw Error(ErrorKind::UsageError, "bad constant function '" + name + "'");
    return SpoilFunction::constant(static_cast<Letter>(value.num()));
  }
  throw Error(ErrorKind::UsageError, "unknown spoil function '" + name + "'");
}

std::string run_spoil(const ParameterTable& table, const BuildOptions& options,
                      const SpoilRequest& request) {
  const BuiltFamily built = build_family(table, options);
  const Code& code = built.code;
  const auto need_letter = [&]() -> Letter {
    if (!request.letter) throw Error(ErrorKind::UsageError, "restrict needs a letter");
    return *request.letter;
  };

  const SpoilResult result = [&] {
    switch (request.kind) {
      case SpoilKind::Extend:
        return spoil_extend(code, request.position, make_spoil_function(request, code.q()));
      case SpoilKind::Project:
        return spoil_project(code, request.position);
      case SpoilKind::Restrict:
        return spoil_restrict(code, request.position, need_letter());
      case SpoilKind::RestrictProject:
        return spoil_restrict_project(code, request.position, need_letter());
    }
    throw Error(ErrorKind::UsageError, "unknown spoil kind");
  }();

  const SpoilReport& rep = result.report;
  const LawVerdict verdict = check_spoiling_law(rep);
  json j;
  j["schema_version"] = kSchemaVersion;
  json op;
  op["kind"] = std::string(to_string(rep.kind));
  op["position"] = rep.position;
  if (rep.letter) op["letter"] = *rep.letter;
  if (!rep.function_tag.empty()) op["function"] = rep.function_tag;
  j["operation"] = std::move(op);
  j["input_code"] = code_json(code);
  j["before"] = params_json(rep.before);
  j["after"] = params_json(rep.after);
  j["law"] = std::string(to_string(rep.law));
  j["word_collision"] = rep.word_collision;
  j["law_holds"] = verdict.holds;
  j["law_violations"] = verdict.violations;
  j["result_code"] = code_json(result.code);
  j["result_languages"] = result.code.languages();
  return j.dump(2) + "\n";
}

std::string run_sample(const EnsembleConfig& config, OutputFormat format) {
  const auto trials = sample_srce(config);
  const std::string provenance =
      fmt::format("srce:n={},m={},q={},seed={}", config.n, config.m, config.q, config.seed);
  if (format == OutputFormat::Csv) return to_csv(to_point_cloud(trials, config.q, provenance));

  json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = {{"n", config.n}, {"m", config.m}, {"q", config.q},
                 {"trials", config.trials}, {"seed", config.seed}};
  auto arr = json::array();
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const auto& p = trials[t].params;
    arr.push_back({{"trial", t},
                   {"d", p.d},
                   {"delta", p.delta.to_string()},
                   {"R", p.rate},
                   {"redraws", trials[t].redraws}});
  }
  j["trials"] = std::move(arr);
  return j.dump(2) + "\n";
}

namespace {

std::string cloud_json(const PointCloud& cloud) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = cloud.q;
  auto arr = json::array();
  for (const auto& p : cloud.points)
    arr.push_back({{"delta", p.delta.to_string()},
                   {"delta_value", p.delta.to_double()},
                   {"R", p.rate},
                   {"multiplicity", p.multiplicity},
                   {"provenance", p.provenance}});
  j["points"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace

std::string run_enumerate(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap,
                          OutputFormat format) {
  const PointCloud cloud = enumerate_codes(n, m, q, cap);
  return format == OutputFormat::Csv ? to_csv(cloud) : cloud_json(cloud);
}

std::string run_curves(std::uint32_t q, std::size_t samples, OutputFormat format) {
  const BoundCurves curves = emit_bound_curves(q, samples);
  if (format == OutputFormat::Csv) return to_csv(curves);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["q"] = q;
  auto arr = json::array();
  for (const auto& s : curves.samples)
    arr.push_back({{"delta", s.delta.to_double()},
                   {"gv", s.gv},
                   {"hamming", s.hamming},
                   {"singleton", s.singleton},
                   {"plotkin", s.plotkin}});
  j["samples"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace paramcode
