#pragma once

// Shared fixtures and hand-rolled random generators for the test suites.

#include <random>
#include <string>
#include <vector>

#include "paramcode/core.hpp"
#include "paramcode/ingest.hpp"

namespace paramcode::testing {

inline std::string fixture(const std::string& name) {
  return std::string(PARAMCODE_FIXTURES) + "/" + name;
}

inline ParameterTable example1_table() { return read_table_file(fixture("example1.tsv")); }
inline ParameterTable example2_table() { return read_table_file(fixture("example2.tsv")); }

inline Code example1_code() { return build_code(example1_table(), BuildPolicy::defaults_for(2)); }
inline Code example2_code() { return build_code(example2_table(), BuildPolicy::defaults_for(2)); }

inline Codeword word(const std::string& digits, const std::string& label = {}) {
  Codeword w{{}, label};
  for (char c : digits) w.letters.push_back(static_cast<Letter>(c - '0'));
  return w;
}

inline Code code_of(std::uint32_t q, const std::vector<std::string>& digit_words) {
  std::vector<Codeword> words;
  for (std::size_t i = 0; i < digit_words.size(); ++i)
    words.push_back(word(digit_words[i], "w" + std::to_string(i + 1)));
  return Code(Alphabet(q), digit_words.front().size(), std::move(words));
}

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  Letter letter(std::uint32_t q) { return static_cast<Letter>(size(0, q - 1)); }

  std::vector<Letter> letters(std::size_t n, std::uint32_t q) {
    std::vector<Letter> out(n);
    for (auto& l : out) l = letter(q);
    return out;
  }

  /// Code with up to m words (duplicates collapse).
  Code code(std::size_t n, std::size_t m, std::uint32_t q) {
    std::vector<Codeword> words;
    for (std::size_t i = 0; i < m; ++i) words.push_back({letters(n, q), "L" + std::to_string(i)});
    return Code(Alphabet(q), n, std::move(words));
  }

  ParamValue value(bool with_unset) {
    const std::size_t hi = with_unset ? 3 : 1;
    return static_cast<ParamValue>(size(0, hi));
  }

  ParameterTable table(std::size_t langs, std::size_t params, bool with_unset) {
    ParameterTable t;
    for (std::size_t p = 0; p < params; ++p) t.parameter_ids.push_back("p" + std::to_string(p));
    for (std::size_t l = 0; l < langs; ++l) {
      LanguageRecord r{"lang" + std::to_string(l), {}};
      for (std::size_t p = 0; p < params; ++p) r.values.push_back(value(with_unset));
      t.languages.push_back(std::move(r));
    }
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace paramcode::testing
