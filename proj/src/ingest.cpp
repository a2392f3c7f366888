#include "paramcode/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace paramcode {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delim) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<ParamValue> cell_value(std::string_view cell) {
  if (cell == "+" || cell == "+1" || cell == "1") return ParamValue::Plus;
  if (cell == "-" || cell == "-1") return ParamValue::Minus;
  if (cell == "0") return ParamValue::Entailed;
  if (cell == "?") return ParamValue::Missing;
  return std::nullopt;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> nonblank_lines(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) lines.push_back({number, line});
    start = end + 1;
  }
  return lines;
}

}  // namespace

ParameterTable parse_table(std::string_view text, TableFormat format) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw Error(ErrorKind::EmptyTable, "document has no header row");

  char delim = '\t';
  switch (format.delimiter) {
    case Delimiter::Tab: delim = '\t'; break;
    case Delimiter::Comma: delim = ','; break;
    case Delimiter::Auto:
      delim = lines.front().text.find('\t') != std::string_view::npos ? '\t' : ',';
      break;
  }

  ParameterTable table;
  const auto header = split(lines.front().text, delim);
  for (std::size_t c = 1; c < header.size(); ++c) {
    const auto id = trim(header[c]);
    if (id.empty())
      throw Error(ErrorKind::SyntaxError, "empty parameter id in header",
                  SourcePosition{lines.front().number, c + 1});
    table.parameter_ids.emplace_back(id);
  }
  if (table.parameter_ids.empty())
    throw Error(ErrorKind::EmptyTable, "header names no parameters",
                SourcePosition{lines.front().number, 1});

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto& line = lines[r];
    const auto cells = split(line.text, delim);
    if (cells.size() != header.size())
      throw Error(ErrorKind::RaggedRow,
                  "row has " + std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(header.size()),
                  SourcePosition{line.number, std::min(cells.size(), header.size()) + 1});

    LanguageRecord record;
    record.name = std::string(trim(cells.front()));
    if (record.name.empty())
      throw Error(ErrorKind::SyntaxError, "empty language name", SourcePosition{line.number, 1});
    record.values.reserve(cells.size() - 1);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const auto cell = trim(cells[c]);
      const auto value = cell_value(cell);
      if (!value) {
        const SourcePosition where{line.number, c + 1};
        if (cell.empty()) throw Error(ErrorKind::SyntaxError, "empty cell", where);
        throw Error(ErrorKind::UnknownCellValue, "unknown cell value '" + std::string(cell) + "'",
                    where);
      }
      record.values.push_back(*value);
    }
    table.languages.push_back(std::move(record));
  }
  if (table.languages.empty())
    throw Error(ErrorKind::EmptyTable, "table has no language rows");

  validate_table(table);
  return table;
}

ParameterTable read_table_file(const std::string& path, TableFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), format);
}

std::string serialize_table(const ParameterTable& table) {
  std::string out = "language";
  for (const auto& id : table.parameter_ids) {
    out += '\t';
    out += id;
  }
  out += '\n';
  for (const auto& row : table.languages) {
    out += row.name;
    for (ParamValue v : row.values) {
      out += '\t';
      out += cell_text(v);
    }
    out += '\n';
  }
  return out;
}

ParameterTable select(const ParameterTable& table,
                      const std::optional<std::vector<std::string>>& languages,
                      const std::optional<std::vector<std::string>>& parameters) {
  validate_table(table);

  std::vector<std::size_t> columns;
  if (parameters) {
    for (const auto& id : *parameters) {
      const auto it = std::find(table.parameter_ids.begin(), table.parameter_ids.end(), id);
      if (it == table.parameter_ids.end())
        throw Error(ErrorKind::UnknownParameter, "unknown parameter '" + id + "'");
      columns.push_back(static_cast<std::size_t>(it - table.parameter_ids.begin()));
    }
  } else {
    for (std::size_t c = 0; c < table.parameter_count(); ++c) columns.push_back(c);
  }

  std::vector<const LanguageRecord*> rows;
  if (languages) {
    for (const auto& name : *languages) {
      const auto it = std::find_if(table.languages.begin(), table.languages.end(),
                                   [&](const LanguageRecord& r) { return r.name == name; });
      if (it == table.languages.end())
        throw Error(ErrorKind::UnknownLanguage, "unknown language '" + name + "'");
      rows.push_back(&*it);
    }
  } else {
    for (const auto& r : table.languages) rows.push_back(&r);
  }

  ParameterTable out;
  for (std::size_t c : columns) out.parameter_ids.push_back(table.parameter_ids[c]);
  for (const auto* row : rows) {
    LanguageRecord record{row->name, {}};
    for (std::size_t c : columns) record.values.push_back(row->values[c]);
    out.languages.push_back(std::move(record));
  }
  validate_table(out);
  return out;
}

namespace {

DropResult drop_columns_where(const ParameterTable& table, bool drop_entailed, bool drop_missing) {
  validate_table(table);
  DropResult result;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < table.parameter_count(); ++c) {
    const bool drop = std::any_of(
        table.languages.begin(), table.languages.end(), [&](const LanguageRecord& r) {
          return (drop_entailed && r.values[c] == ParamValue::Entailed) ||
                 (drop_missing && r.values[c] == ParamValue::Missing);
        });
    if (drop)
      result.dropped.push_back(table.parameter_ids[c]);
    else
      keep.push_back(c);
  }
  if (keep.empty())
    throw Error(ErrorKind::ResultEmpty, "every parameter column was dropped");

  for (std::size_t c : keep) result.table.parameter_ids.push_back(table.parameter_ids[c]);
  for (const auto& row : table.languages) {
    LanguageRecord record{row.name, {}};
    record.values.reserve(keep.size());
    for (std::size_t c : keep) record.values.push_back(row.values[c]);
    result.table.languages.push_back(std::move(record));
  }
  return result;
}

}  // namespace

DropResult drop_entailed_columns(const ParameterTable& table, bool drop_missing) {
  return drop_columns_where(table, true, drop_missing);
}

std::string_view to_string(UnsetHandling h) noexcept {
  switch (h) {
    case UnsetHandling::DropColumns: return "drop";
    case UnsetHandling::TernaryZero: return "zero";
    case UnsetHandling::Error: return "error";
  }
  return "drop";
}

UnsetHandling parse_unset_handling(std::string_view text) {
  if (text == "drop") return UnsetHandling::DropColumns;
  if (text == "zero") return UnsetHandling::TernaryZero;
  if (text == "error") return UnsetHandling::Error;
  throw Error(ErrorKind::UsageError, "expected drop, zero or error, got '" + std::string(text) + "'");
}

BuildPolicy BuildPolicy::defaults_for(std::uint32_t q) {
  if (q == 3) return {Alphabet(3), UnsetHandling::TernaryZero, UnsetHandling::TernaryZero};
  return {Alphabet(q), UnsetHandling::DropColumns, UnsetHandling::DropColumns};
}

namespace {

void check_policy(const ParameterTable& table, const BuildPolicy& policy) {
  const auto check = [&](UnsetHandling handling, ParamValue value, std::string_view what) {
    if (handling == UnsetHandling::TernaryZero && policy.alphabet.q() != 3)
      throw Error(ErrorKind::AlphabetMismatch,
                  std::string(what) + " cells encoded as 0 need q=3, alphabet has q=" +
                      std::to_string(policy.alphabet.q()));
    if (handling != UnsetHandling::Error) return;
    for (const auto& row : table.languages)
      for (std::size_t c = 0; c < row.values.size(); ++c)
        if (row.values[c] == value)
          throw Error(ErrorKind::PolicyViolation, std::string(what) + " cell for '" + row.name +
                                                      "' at parameter '" +
                                                      table.parameter_ids[c] + "'");
  };
  check(policy.entailed, ParamValue::Entailed, "entailed");
  check(policy.missing, ParamValue::Missing, "missing");
}

}  // namespace

DropResult apply_policy(const ParameterTable& table, const BuildPolicy& policy) {
  validate_table(table);
  check_policy(table, policy);
  const bool drop_entailed = policy.entailed == UnsetHandling::DropColumns;
  const bool drop_missing = policy.missing == UnsetHandling::DropColumns;
  if (!drop_entailed && !drop_missing) return {table, {}};
  return drop_columns_where(table, drop_entailed, drop_missing);
}

Code build_code(const ParameterTable& table, const BuildPolicy& policy) {
  const DropResult reduced = apply_policy(table, policy);
  const ParameterTable& t = reduced.table;
  const bool binary = policy.alphabet.q() == 2;

  std::vector<Codeword> words;
  words.reserve(t.language_count());
  for (const auto& row : t.languages) {
    Codeword w{{}, row.name};
    w.letters.reserve(row.values.size());
    for (std::size_t c = 0; c < row.values.size(); ++c) {
      switch (row.values[c]) {
        case ParamValue::Plus: w.letters.push_back(1); break;
        case ParamValue::Minus: w.letters.push_back(binary ? 0 : 2); break;
        case ParamValue::Entailed:
        case ParamValue::Missing:
          // Only reachable with q=2 when a drop left the cell behind, which
          // apply_policy rules out; q>=3 encodes it as 0.
          if (binary)
            throw Error(ErrorKind::PolicyViolation,
                        "unset cell for '" + row.name + "' at '" + t.parameter_ids[c] +
                            "' has no binary letter");
          w.letters.push_back(0);
          break;
      }
    }
    words.push_back(std::move(w));
  }
  return Code(policy.alphabet, t.parameter_count(), std::move(words));
}

}  // namespace paramcode
