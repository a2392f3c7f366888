#include "paramcode/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace paramcode {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateLanguage: return "DuplicateLanguage";
    case ErrorKind::DuplicateParameter: return "DuplicateParameter";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownCellValue: return "UnknownCellValue";
    case ErrorKind::UnknownLanguage: return "UnknownLanguage";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::ResultEmpty: return "ResultEmpty";
    case ErrorKind::PolicyViolation: return "PolicyViolation";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooFewWords: return "TooFewWords";
    case ErrorKind::NoSharedParameters: return "NoSharedParameters";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::PartialFunction: return "PartialFunction";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::DegenerateResult: return "DegenerateResult";
    case ErrorKind::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorKind::SingletonLevelSet: return "SingletonLevelSet";
    case ErrorKind::InfeasibleConfig: return "InfeasibleConfig";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<SourcePosition> where)
    : std::runtime_error(message), kind_(kind), where_(where) {}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid parameter table:";
  for (const auto& v : violations) {
    out += "\n  ";
    out += to_string(v.kind);
    out += ": ";
    out += v.detail;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorKind::EmptyTable : violations.front().kind,
            join_violations(violations)),
      violations_(std::move(violations)) {}

bool ValidationError::has(ErrorKind kind) const noexcept {
  return std::any_of(violations_.begin(), violations_.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
  if (q < 2) throw Error(ErrorKind::DomainError, "alphabet size must be at least 2");
}

std::string_view cell_text(ParamValue v) noexcept {
  switch (v) {
    case ParamValue::Plus: return "+";
    case ParamValue::Minus: return "-";
    case ParamValue::Entailed: return "0";
    case ParamValue::Missing: return "?";
  }
  return "?";
}

const ParameterTable& validate_table(const ParameterTable& table) {
  std::vector<Violation> found;

  if (table.parameter_ids.empty())
    found.push_back({ErrorKind::EmptyTable, "no parameter columns"});
  if (table.languages.empty())
    found.push_back({ErrorKind::EmptyTable, "no language rows"});

  std::set<std::string> seen_ids;
  for (const auto& id : table.parameter_ids) {
    if (id.empty()) found.push_back({ErrorKind::EmptyTable, "empty parameter id"});
    if (!seen_ids.insert(id).second)
      found.push_back({ErrorKind::DuplicateParameter, "parameter '" + id + "' appears twice"});
  }

  std::set<std::string> seen_names;
  for (const auto& row : table.languages) {
    if (row.name.empty()) found.push_back({ErrorKind::EmptyTable, "empty language name"});
    if (!seen_names.insert(row.name).second)
      found.push_back({ErrorKind::DuplicateLanguage, "language '" + row.name + "' appears twice"});
    if (row.values.size() != table.parameter_ids.size())
      found.push_back({ErrorKind::RaggedRow,
                       "language '" + row.name + "' has " + std::to_string(row.values.size()) +
                           " values, expected " + std::to_string(table.parameter_ids.size())});
  }

  if (!found.empty()) throw ValidationError(std::move(found));
  return table;
}

std::string Codeword::letters_text() const {
  const bool wide = std::any_of(letters.begin(), letters.end(), [](Letter l) { return l >= 10; });
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

Code::Code(Alphabet alphabet, std::size_t block_length, std::vector<Codeword> candidates)
    : alphabet_(alphabet), block_length_(block_length) {
  std::map<std::vector<Letter>, std::size_t> index;
  for (auto& word : candidates) {
    if (word.size() != block_length_)
      throw Error(ErrorKind::LengthMismatch,
                  "word '" + word.label + "' has length " + std::to_string(word.size()) +
                      ", code block length is " + std::to_string(block_length_));
    for (Letter l : word.letters)
      if (!alphabet_.contains(l))
        throw Error(ErrorKind::InvalidLetter, "word '" + word.label + "' has letter " +
                                                  std::to_string(l) + " outside F_" +
                                                  std::to_string(alphabet_.q()));

    auto [it, inserted] = index.emplace(word.letters, words_.size());
    if (inserted) {
      label_map_.emplace_back(word.label, words_.size());
      words_.push_back(std::move(word));
    } else {
      label_map_.emplace_back(word.label, it->second);
      collisions_.push_back({word.label, words_[it->second].label});
    }
  }
}

std::size_t Code::word_index_of(const std::string& language) const {
  for (const auto& [label, idx] : label_map_)
    if (label == language) return idx;
  throw Error(ErrorKind::UnknownLanguage, "no codeword for '" + language + "'");
}

std::vector<std::string> Code::languages() const {
  std::vector<std::string> out;
  out.reserve(label_map_.size());
  for (const auto& entry : label_map_) out.push_back(entry.first);
  return out;
}

bool Code::same_words(const Code& other) const {
  if (q() != other.q() || block_length_ != other.block_length_ || size() != other.size())
    return false;
  std::set<std::vector<Letter>> mine;
  for (const auto& w : words_) mine.insert(w.letters);
  return std::all_of(other.words_.begin(), other.words_.end(),
                     [&](const Codeword& w) { return mine.count(w.letters) == 1; });
}

std::string_view to_string(RateBase base) noexcept {
  return base == RateBase::Q ? "q" : "2";
}

}  // namespace paramcode
