#pragma once

// Domain types shared by every module: parameter tables on the linguistic side,
// q-ary codes on the coding-theory side.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paramcode/error.hpp"
#include "paramcode/rational.hpp"

namespace paramcode {

using Letter = std::uint32_t;

/// Code alphabet F_q. Any q >= 2 is accepted; the linguistic codes use 2 or 3.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t q);
  std::uint32_t q() const noexcept { return q_; }
  bool contains(Letter letter) const noexcept { return letter < q_; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t q_;
};

/// Value of one syntactic parameter for one language.
enum class ParamValue : std::uint8_t { Plus, Minus, Entailed, Missing };

/// True for Entailed and Missing: the parameter carries no comparison data.
constexpr bool is_unset(ParamValue v) noexcept {
  return v == ParamValue::Entailed || v == ParamValue::Missing;
}

/// Canonical cell text: "+", "-", "0", "?".
std::string_view cell_text(ParamValue v) noexcept;

struct LanguageRecord {
  std::string name;
  std::vector<ParamValue> values;

  friend bool operator==(const LanguageRecord&, const LanguageRecord&) = default;
};

/// Languages x syntactic parameters. Plain aggregate; validate_table checks the
/// invariants (distinct ids, distinct names, rectangular, nonempty).
struct ParameterTable {
  std::vector<std::string> parameter_ids;
  std::vector<LanguageRecord> languages;

  std::size_t parameter_count() const noexcept { return parameter_ids.size(); }
  std::size_t language_count() const noexcept { return languages.size(); }

  friend bool operator==(const ParameterTable&, const ParameterTable&) = default;
};

/// Returns the table unchanged when valid, otherwise throws ValidationError
/// listing every violation.
const ParameterTable& validate_table(const ParameterTable& table);

struct Codeword {
  std::vector<Letter> letters;
  std::string label;

  std::size_t size() const noexcept { return letters.size(); }
  /// Letters as a digit string ("111011"); letters >= 10 are comma separated.
  std::string letters_text() const;
};

/// A language whose word coincides with an earlier language's word.
struct Collision {
  std::string language;
  std::string merged_into;  // label of the retained codeword
};

/// A finite subset of F_q^n. Words are distinct as letter sequences and keep
/// the order of first appearance; later duplicates become collisions.
class Code {
 public:
  /// Builds the code, dropping repeated letter sequences. Throws InvalidLetter
  /// or LengthMismatch when a candidate does not live in F_q^n.
  Code(Alphabet alphabet, std::size_t block_length, std::vector<Codeword> candidates);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t q() const noexcept { return alphabet_.q(); }
  std::size_t block_length() const noexcept { return block_length_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Codeword>& words() const noexcept { return words_; }
  const std::vector<Collision>& collisions() const noexcept { return collisions_; }

  /// Index of the codeword carrying a language, after collisions.
  std::size_t word_index_of(const std::string& language) const;
  const Codeword& word_of(const std::string& language) const {
    return words_[word_index_of(language)];
  }
  /// Every input label in input order.
  std::vector<std::string> languages() const;

  /// Equal as sets of letter sequences; labels are ignored.
  bool same_words(const Code& other) const;

 private:
  Alphabet alphabet_;
  std::size_t block_length_;
  std::vector<Codeword> words_;
  std::vector<Collision> collisions_;
  std::vector<std::pair<std::string, std::size_t>> label_map_;
};

enum class RateBase { Q, Two };

std::string_view to_string(RateBase base) noexcept;

/// (n, k, d, R, delta) of a code with at least two words.
struct CodeParameters {
  std::size_t n = 0;
  std::size_t m = 0;  // #C
  double k = 0.0;     // log_base(m)
  std::size_t d = 0;
  double rate = 0.0;  // k / n
  Rational delta;     // d / n
  std::uint32_t rate_base = 2;
  std::vector<std::size_t> distance_multiset;  // pairs (i<j) in lexicographic order
};

}  // namespace paramcode
