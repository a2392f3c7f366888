#include "paramcode/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include "json.hpp"

namespace paramcode {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::LengthMismatch,
                "lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

std::size_t hamming_distance(const Codeword& a, const Codeword& b) {
  require_same_length(a.size(), b.size());
  std::size_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a.letters[i] != b.letters[i];
  return diff;
}

Rational relative_hamming(const Codeword& a, const Codeword& b) {
  const std::size_t d = hamming_distance(a, b);
  if (a.size() == 0) return Rational(0, 1);
  return Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(a.size()));
}

CodeParameters code_parameters(const Code& code, RateBase base) {
  const auto& words = code.words();
  if (words.size() < 2)
    throw Error(ErrorKind::TooFewWords,
                "code has " + std::to_string(words.size()) + " word(s), need at least 2");

  CodeParameters p;
  p.n = code.block_length();
  p.m = words.size();
  p.rate_base = base == RateBase::Q ? code.q() : 2;
  p.k = std::log(static_cast<double>(p.m)) / std::log(static_cast<double>(p.rate_base));
  p.rate = p.k / static_cast<double>(p.n);

  p.distance_multiset.reserve(p.m * (p.m - 1) / 2);
  for (std::size_t i = 0; i < p.m; ++i)
    for (std::size_t j = i + 1; j < p.m; ++j)
      p.distance_multiset.push_back(hamming_distance(words[i], words[j]));
  p.d = *std::min_element(p.distance_multiset.begin(), p.distance_multiset.end());
  p.delta = Rational(static_cast<std::int64_t>(p.d), static_cast<std::int64_t>(p.n));
  return p;
}

DistanceMatrix distance_matrix(const Code& code) {
  const auto& words = code.words();
  DistanceMatrix dm;
  dm.n = code.block_length();
  const std::size_t m = words.size();
  dm.absolute.assign(m, std::vector<std::size_t>(m, 0));
  dm.relative.assign(m, std::vector<Rational>(m));
  for (const auto& w : words) dm.labels.push_back(w.label);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t d = hamming_distance(words[i], words[j]);
      dm.absolute[i][j] = dm.absolute[j][i] = d;
      const Rational r = dm.n == 0 ? Rational()
                                   : Rational(static_cast<std::int64_t>(d),
                                              static_cast<std::int64_t>(dm.n));
      dm.relative[i][j] = dm.relative[j][i] = r;
    }
  }
  return dm;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const DistanceMatrix& matrix, MatrixKind kind) {
  std::string out = "language";
  for (const auto& l : matrix.labels) out += "," + csv_field(l);
  out += '\n';
  for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
    out += csv_field(matrix.labels[i]);
    for (std::size_t j = 0; j < matrix.labels.size(); ++j) {
      out += ',';
      if (kind == MatrixKind::Absolute)
        out += std::to_string(matrix.absolute[i][j]);
      else
        out += fmt::format("{}", matrix.relative[i][j].to_double());
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const DistanceMatrix& matrix) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["labels"] = matrix.labels;
  j["n"] = matrix.n;
  j["absolute"] = matrix.absolute;
  auto exact = nlohmann::ordered_json::array();
  auto decimal = nlohmann::ordered_json::array();
  for (const auto& row : matrix.relative) {
    auto er = nlohmann::ordered_json::array();
    auto dr = nlohmann::ordered_json::array();
    for (const auto& r : row) {
      er.push_back(r.to_string());
      dr.push_back(r.to_double());
    }
    exact.push_back(std::move(er));
    decimal.push_back(std::move(dr));
  }
  j["relative"] = std::move(decimal);
  j["relative_exact"] = std::move(exact);
  return j.dump(2) + "\n";
}

Rational logua_distance(const LanguageRecord& a, const LanguageRecord& b) {
  require_same_length(a.values.size(), b.values.size());
  std::int64_t shared = 0;
  std::int64_t differ = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (is_unset(a.values[i]) || is_unset(b.values[i])) continue;
    ++shared;
    differ += a.values[i] != b.values[i];
  }
  if (shared == 0)
    throw Error(ErrorKind::NoSharedParameters,
                "'" + a.name + "' and '" + b.name + "' share no set parameter");
  return Rational(differ, shared);
}

}  // namespace paramcode
