#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace paramcode {

enum class ErrorKind {
  // table validation
  DuplicateLanguage,
  DuplicateParameter,
  RaggedRow,
  EmptyTable,
  // parsing / selection
  SyntaxError,
  UnknownCellValue,
  UnknownLanguage,
  UnknownParameter,
  ResultEmpty,
  // code construction
  PolicyViolation,
  AlphabetMismatch,
  InvalidLetter,
  // metrics
  LengthMismatch,
  TooFewWords,
  NoSharedParameters,
  DomainError,
  // spoiling
  PositionOutOfRange,
  PartialFunction,
  TooShort,
  DegenerateResult,
  EmptyLevelSet,
  SingletonLevelSet,
  // ensemble
  InfeasibleConfig,
  CapExceeded,
  // tooling
  IoError,
  UsageError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Position of an offending cell in a text document, 1-based.
struct SourcePosition {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<SourcePosition> where = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePosition>& where() const noexcept { return where_; }

 private:
  ErrorKind kind_;
  std::optional<SourcePosition> where_;
};

struct Violation {
  ErrorKind kind;
  std::string detail;
};

/// Thrown by validate_table; carries every violation found, not only the first.
/// kind() reports the first violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  bool has(ErrorKind kind) const noexcept;

 private:
  std::vector<Violation> violations_;
};

}  // namespace paramcode
