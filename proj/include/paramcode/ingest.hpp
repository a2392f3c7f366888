#pragma once

// Reading parameter tables and turning them into codes.
//
// Table format: UTF-8, one header row and one row per language, cells separated
// by a tab or a comma. The first header cell labels the language column, the
// remaining header cells are parameter ids. Body cells are one of
//   +  +1  1    -> Plus
//   -  -1       -> Minus
//   0           -> Entailed
//   ?           -> Missing
// Blank lines are skipped. Surrounding spaces in a cell are ignored.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paramcode/core.hpp"

namespace paramcode {

enum class Delimiter { Auto, Tab, Comma };

struct TableFormat {
  Delimiter delimiter = Delimiter::Auto;
};

ParameterTable parse_table(std::string_view text, TableFormat format = {});
ParameterTable read_table_file(const std::string& path, TableFormat format = {});

/// Canonical serialization: tab separated, header cell "language",
/// cells written as "+", "-", "0", "?". parse_table reads it back unchanged.
std::string serialize_table(const ParameterTable& table);

/// Sub-table in the requested order. std::nullopt selects everything in table order.
ParameterTable select(const ParameterTable& table,
                      const std::optional<std::vector<std::string>>& languages,
                      const std::optional<std::vector<std::string>>& parameters);

struct DropResult {
  ParameterTable table;
  std::vector<std::string> dropped;
};

/// Removes every column that is Entailed in some language (and, when
/// drop_missing is set, every column that is Missing in some language).
/// Throws ResultEmpty when no column survives.
DropResult drop_entailed_columns(const ParameterTable& table, bool drop_missing = true);

enum class UnsetHandling { DropColumns, TernaryZero, Error };

std::string_view to_string(UnsetHandling h) noexcept;
UnsetHandling parse_unset_handling(std::string_view text);

struct BuildPolicy {
  Alphabet alphabet{2};
  UnsetHandling entailed = UnsetHandling::DropColumns;
  UnsetHandling missing = UnsetHandling::DropColumns;

  /// DropColumns for q=2, TernaryZero for q=3.
  static BuildPolicy defaults_for(std::uint32_t q);
};

/// Table after the policy's column drops, plus the dropped ids.
/// Throws PolicyViolation / AlphabetMismatch as build_code would.
DropResult apply_policy(const ParameterTable& table, const BuildPolicy& policy);

/// One codeword per language, labelled with the language name.
/// q=2: Plus->1, Minus->0. q>=3: Plus->1, Minus->2, Entailed/Missing->0.
Code build_code(const ParameterTable& table, const BuildPolicy& policy);

}  // namespace paramcode
