#include "paramcode/spoiling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "paramcode/metrics.hpp"

namespace paramcode {

SpoilFunction SpoilFunction::constant(Letter a) {
  return SpoilFunction("constant-" + std::to_string(a),
                       [a](const Codeword&) -> std::optional<Letter> { return a; });
}

SpoilFunction SpoilFunction::parity(std::uint32_t q) {
  return SpoilFunction("parity-of-word", [q](const Codeword& w) -> std::optional<Letter> {
    std::uint64_t sum = 0;
    for (Letter l : w.letters) sum += l;
    return static_cast<Letter>(sum % q);
  });
}

SpoilFunction SpoilFunction::by_label(std::map<std::string, Letter> values) {
  return SpoilFunction("table", [values = std::move(values)](
                                    const Codeword& w) -> std::optional<Letter> {
    const auto it = values.find(w.label);
    if (it == values.end()) return std::nullopt;
    return it->second;
  });
}

SpoilFunction SpoilFunction::by_word(std::map<std::vector<Letter>, Letter> values) {
  return SpoilFunction("table", [values = std::move(values)](
                                    const Codeword& w) -> std::optional<Letter> {
    const auto it = values.find(w.letters);
    if (it == values.end()) return std::nullopt;
    return it->second;
  });
}

std::string_view to_string(SpoilKind k) noexcept {
  switch (k) {
    case SpoilKind::Extend: return "extend";
    case SpoilKind::Project: return "project";
    case SpoilKind::Restrict: return "restrict";
    case SpoilKind::RestrictProject: return "restrict-project";
  }
  return "extend";
}

std::string_view to_string(SpoilCase c) noexcept {
  switch (c) {
    case SpoilCase::ExtendConstant: return "ExtendConstant";
    case SpoilCase::ExtendSeparating: return "ExtendSeparating";
    case SpoilCase::ExtendGeneral: return "ExtendGeneral";
    case SpoilCase::ProjectDecrease: return "ProjectDecrease";
    case SpoilCase::ProjectPreserve: return "ProjectPreserve";
    case SpoilCase::ProjectCollision: return "ProjectCollision";
    case SpoilCase::RestrictConstant: return "RestrictConstant";
    case SpoilCase::RestrictMajority: return "RestrictMajority";
    case SpoilCase::RestrictMinority: return "RestrictMinority";
  }
  return "ExtendGeneral";
}

namespace {

void require_position(std::size_t i, std::size_t max) {
  if (i < 1 || i > max)
    throw Error(ErrorKind::PositionOutOfRange,
                fmt::format("position {} outside 1..{}", i, max));
}

std::vector<std::pair<std::size_t, std::size_t>> minimal_pairs(const Code& code, std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& words = code.words();
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b)
      if (hamming_distance(words[a], words[b]) == d) pairs.emplace_back(a, b);
  return pairs;
}

std::vector<Codeword> without_position(const std::vector<Codeword>& words, std::size_t i) {
  std::vector<Codeword> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    Codeword p{{}, w.label};
    p.letters.reserve(w.size() - 1);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (k != i - 1) p.letters.push_back(w.letters[k]);
    out.push_back(std::move(p));
  }
  return out;
}

struct LevelSet {
  std::vector<Codeword> words;
  SpoilCase law;
};

LevelSet level_set(const Code& code, std::size_t i, Letter a) {
  require_position(i, code.block_length());
  if (!code.alphabet().contains(a))
    throw Error(ErrorKind::InvalidLetter,
                fmt::format("letter {} outside F_{}", a, code.q()));
  LevelSet ls;
  for (const auto& w : code.words())
    if (w.letters[i - 1] == a) ls.words.push_back(w);
  if (ls.words.empty())
    throw Error(ErrorKind::EmptyLevelSet, fmt::format("no word has letter {} at position {}", a, i));
  if (ls.words.size() == 1)
    throw Error(ErrorKind::SingletonLevelSet,
                fmt::format("only '{}' has letter {} at position {}", ls.words.front().label, a, i));
  const std::size_t m = code.size();
  if (ls.words.size() == m)
    ls.law = SpoilCase::RestrictConstant;
  else if (ls.words.size() * code.q() >= m)
    ls.law = SpoilCase::RestrictMajority;
  else
    ls.law = SpoilCase::RestrictMinority;
  return ls;
}

}  // namespace

SpoilResult spoil_extend(const Code& code, std::size_t i, const SpoilFunction& f) {
  const std::size_t n = code.block_length();
  require_position(i, n + 1);
  const CodeParameters before = code_parameters(code);

  std::vector<Letter> values;
  for (const auto& w : code.words()) {
    const auto v = f(w);
    if (!v) throw Error(ErrorKind::PartialFunction, "function undefined on '" + w.label + "'");
    if (!code.alphabet().contains(*v))
      throw Error(ErrorKind::InvalidLetter,
                  fmt::format("function value {} on '{}' outside F_{}", *v, w.label, code.q()));
    values.push_back(*v);
  }

  SpoilCase law = SpoilCase::ExtendGeneral;
  if (std::all_of(values.begin(), values.end(), [&](Letter v) { return v == values.front(); })) {
    law = SpoilCase::ExtendConstant;
  } else {
    const auto pairs = minimal_pairs(code, before.d);
    if (std::all_of(pairs.begin(), pairs.end(),
                    [&](const auto& p) { return values[p.first] != values[p.second]; }))
      law = SpoilCase::ExtendSeparating;
  }

  std::vector<Codeword> words;
  words.reserve(code.size());
  for (std::size_t w = 0; w < code.size(); ++w) {
    Codeword e = code.words()[w];
    e.letters.insert(e.letters.begin() + static_cast<std::ptrdiff_t>(i - 1), values[w]);
    words.push_back(std::move(e));
  }
  Code out(code.alphabet(), n + 1, std::move(words));
  SpoilReport report{SpoilKind::Extend, i, std::nullopt, f.tag(), before, code_parameters(out),
                     law, false};
  return {std::move(out), std::move(report)};
}

SpoilResult spoil_project(const Code& code, std::size_t i) {
  const std::size_t n = code.block_length();
  if (n < 2) throw Error(ErrorKind::TooShort, "cannot project a code of block length < 2");
  require_position(i, n);
  const CodeParameters before = code_parameters(code);

  Code out(code.alphabet(), n - 1, without_position(code.words(), i));
  if (out.size() < 2)
    throw Error(ErrorKind::DegenerateResult,
                fmt::format("projection at {} leaves {} distinct word(s)", i, out.size()));

  const bool collision = out.size() < code.size();
  SpoilCase law = SpoilCase::ProjectPreserve;
  if (collision) {
    law = SpoilCase::ProjectCollision;
  } else {
    const auto pairs = minimal_pairs(code, before.d);
    const auto& words = code.words();
    if (std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
          return words[p.first].letters[i - 1] != words[p.second].letters[i - 1];
        }))
      law = SpoilCase::ProjectDecrease;
  }
  SpoilReport report{SpoilKind::Project, i, std::nullopt, {}, before, code_parameters(out),
                     law, collision};
  return {std::move(out), std::move(report)};
}

SpoilResult spoil_restrict(const Code& code, std::size_t i, Letter a) {
  const CodeParameters before = code_parameters(code);
  LevelSet ls = level_set(code, i, a);
  Code out(code.alphabet(), code.block_length(), std::move(ls.words));
  SpoilReport report{SpoilKind::Restrict, i, a, {}, before, code_parameters(out), ls.law, false};
  return {std::move(out), std::move(report)};
}

SpoilResult spoil_restrict_project(const Code& code, std::size_t i, Letter a) {
  if (code.block_length() < 2)
    throw Error(ErrorKind::TooShort, "cannot project a code of block length < 2");
  const CodeParameters before = code_parameters(code);
  LevelSet ls = level_set(code, i, a);
  Code out(code.alphabet(), code.block_length() - 1, without_position(ls.words, i));
  SpoilReport report{SpoilKind::RestrictProject, i, a, {}, before, code_parameters(out), ls.law,
                     false};
  return {std::move(out), std::move(report)};
}

namespace {

constexpr double kRateTolerance = 1e-9;

class LawChecker {
 public:
  explicit LawChecker(const SpoilReport& r) : r_(r) {}

  void expect(bool ok, std::string what) {
    if (!ok) verdict_.violations.push_back(std::move(what));
  }

  void block_length(std::size_t expected) {
    expect(r_.after.n == expected, fmt::format("n' = {}, expected {}", r_.after.n, expected));
  }
  void same_size() {
    expect(r_.after.m == r_.before.m, fmt::format("#C' = {}, expected {}", r_.after.m, r_.before.m));
    expect(std::abs(r_.after.k - r_.before.k) <= kRateTolerance,
           fmt::format("k' = {}, expected k = {}", r_.after.k, r_.before.k));
  }
  void distance_in(std::size_t lo, std::size_t hi) {
    expect(r_.after.d >= lo && r_.after.d <= hi,
           lo == hi ? fmt::format("d' = {}, expected {}", r_.after.d, lo)
                    : fmt::format("d' = {}, expected within [{}, {}]", r_.after.d, lo, hi));
  }
  void distance_at_least(std::size_t lo) {
    expect(r_.after.d >= lo, fmt::format("d' = {}, expected >= {}", r_.after.d, lo));
  }
  void case_is(std::initializer_list<SpoilCase> allowed) {
    expect(std::find(allowed.begin(), allowed.end(), r_.law) != allowed.end(),
           fmt::format("law {} does not apply to {}", to_string(r_.law), to_string(r_.kind)));
  }

  void restrict_sizes() {
    const double k = r_.before.k;
    const double k1 = r_.after.k;
    switch (r_.law) {
      case SpoilCase::RestrictConstant:
        same_size();
        distance_in(r_.before.d, r_.before.d);
        break;
      case SpoilCase::RestrictMajority:
        expect(k1 >= k - 1.0 - kRateTolerance && k1 < k - kRateTolerance,
               fmt::format("k' = {}, expected k-1 <= k' < k with k = {}", k1, k));
        break;
      case SpoilCase::RestrictMinority:
        expect(k1 < k - 1.0 + kRateTolerance,
               fmt::format("k' = {}, expected k' < k-1 with k = {}", k1, k));
        break;
      default:
        break;
    }
    distance_at_least(r_.before.d);
  }

  LawVerdict finish() {
    verdict_.holds = verdict_.violations.empty();
    return std::move(verdict_);
  }

 private:
  const SpoilReport& r_;
  LawVerdict verdict_;
};

}  // namespace

LawVerdict check_spoiling_law(const SpoilReport& report) {
  LawChecker check(report);
  const CodeParameters& b = report.before;
  const CodeParameters& a = report.after;

  check.expect(a.m >= 2, "result has fewer than two words");
  check.expect(a.d <= a.n, fmt::format("d' = {} exceeds n' = {}", a.d, a.n));
  check.expect(a.n > 0 && a.delta == Rational(static_cast<std::int64_t>(a.d),
                                              static_cast<std::int64_t>(a.n)),
               "delta' * n' != d'");
  check.expect(report.word_collision == (report.law == SpoilCase::ProjectCollision),
               "collision flag disagrees with the law case");

  switch (report.kind) {
    case SpoilKind::Extend:
      check.case_is({SpoilCase::ExtendConstant, SpoilCase::ExtendSeparating,
                     SpoilCase::ExtendGeneral});
      check.block_length(b.n + 1);
      check.same_size();
      if (report.law == SpoilCase::ExtendConstant) check.distance_in(b.d, b.d);
      else if (report.law == SpoilCase::ExtendSeparating) check.distance_in(b.d + 1, b.d + 1);
      else check.distance_in(b.d, b.d + 1);
      break;
    case SpoilKind::Project:
      check.case_is({SpoilCase::ProjectDecrease, SpoilCase::ProjectPreserve,
                     SpoilCase::ProjectCollision});
      check.block_length(b.n - 1);
      if (report.law == SpoilCase::ProjectCollision) {
        check.expect(a.m < b.m, "collision reported but #C did not drop");
        check.expect(b.d == 1, fmt::format("words merged although d = {}", b.d));
        check.distance_at_least(1);
      } else {
        check.same_size();
        if (report.law == SpoilCase::ProjectDecrease) check.distance_in(b.d - 1, b.d - 1);
        else check.distance_in(b.d, b.d);
      }
      break;
    case SpoilKind::Restrict:
    case SpoilKind::RestrictProject:
      check.case_is({SpoilCase::RestrictConstant, SpoilCase::RestrictMajority,
                     SpoilCase::RestrictMinority});
      check.block_length(report.kind == SpoilKind::Restrict ? b.n : b.n - 1);
      check.expect(a.m <= b.m, "level set larger than the code");
      check.restrict_sizes();
      break;
  }
  return check.finish();
}

}  // namespace paramcode
