#pragma once

// Spoiling operations on codes and the [n, k, d] laws they obey.
//
//   extend    C *_i f   insert the letter f(w) before position i
//   project   C *_i     delete position i
//   restrict  C(a, i)   keep the words with letter a at position i
//
// Positions are 1-based throughout, as in the CLI.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paramcode/core.hpp"

namespace paramcode {

/// A map from the words of a code to alphabet letters. Evaluation returns
/// std::nullopt where the map is undefined.
class SpoilFunction {
 public:
  using Fn = std::function<std::optional<Letter>(const Codeword&)>;

  SpoilFunction(std::string tag, Fn fn) : tag_(std::move(tag)), fn_(std::move(fn)) {}

  static SpoilFunction constant(Letter a);
  /// Sum of the letters mod q.
  static SpoilFunction parity(std::uint32_t q);
  /// Explicit values keyed by codeword label.
  static SpoilFunction by_label(std::map<std::string, Letter> values);
  /// Explicit values keyed by letter sequence.
  static SpoilFunction by_word(std::map<std::vector<Letter>, Letter> values);

  const std::string& tag() const noexcept { return tag_; }
  std::optional<Letter> operator()(const Codeword& w) const { return fn_(w); }

 private:
  std::string tag_;
  Fn fn_;
};

enum class SpoilKind { Extend, Project, Restrict, RestrictProject };

/// Which parameter law the operation falls under, decided from the structure
/// of the input (not from the resulting parameters).
enum class SpoilCase {
  ExtendConstant,       // f constant on C: [n+1, k, d]
  ExtendSeparating,     // f separates every minimal pair: [n+1, k, d+1]
  ExtendGeneral,        // otherwise: [n+1, k, d or d+1]
  ProjectDecrease,      // some minimal pair differs at i: [n-1, k, d-1]
  ProjectPreserve,      // all minimal pairs agree at i: [n-1, k, d]
  ProjectCollision,     // words merge (d = 1): [n-1, k' < k, d' >= 1]
  RestrictConstant,     // column i constant on C: level set is C
  RestrictMajority,     // #C(a,i) >= #C / q: k-1 <= k' < k, d' >= d
  RestrictMinority,     // #C(a,i) < #C / q: k' < k-1, d' >= d
};

std::string_view to_string(SpoilKind k) noexcept;
std::string_view to_string(SpoilCase c) noexcept;

struct SpoilReport {
  SpoilKind kind;
  std::size_t position = 0;
  std::optional<Letter> letter;  // restrict
  std::string function_tag;      // extend
  CodeParameters before;
  CodeParameters after;
  SpoilCase law;
  bool word_collision = false;
};

struct SpoilResult {
  Code code;
  SpoilReport report;
};

/// Throws PositionOutOfRange (i outside 1..n+1), PartialFunction, InvalidLetter,
/// TooFewWords.
SpoilResult spoil_extend(const Code& code, std::size_t i, const SpoilFunction& f);

/// Throws PositionOutOfRange, TooShort (n < 2), DegenerateResult (< 2 words left).
SpoilResult spoil_project(const Code& code, std::size_t i);

/// Block length unchanged. Throws PositionOutOfRange, InvalidLetter,
/// EmptyLevelSet, SingletonLevelSet.
SpoilResult spoil_restrict(const Code& code, std::size_t i, Letter a);

/// C(a, i) *_i: restrict, then delete the now constant column.
SpoilResult spoil_restrict_project(const Code& code, std::size_t i, Letter a);

struct LawVerdict {
  bool holds = true;
  std::vector<std::string> violations;
};

/// Checks the after-parameters against the allowed set for the report's case.
LawVerdict check_spoiling_law(const SpoilReport& report);

}  // namespace paramcode
