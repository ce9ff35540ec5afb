#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dlx {

enum class ColumnKind { Primary, Secondary };

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// A generalized exact-cover instance: named columns (primary columns must be
// covered exactly once, secondary at most once) and rows given as lists of
// column indices.
class CoverProblem {
 public:
  struct Column {
    std::string name;
    ColumnKind kind;
  };

  CoverProblem() = default;

  int add_column(std::string name, ColumnKind kind = ColumnKind::Primary);
  // Adds a row given by column names; returns the 1-based row ordinal.
  int add_row(std::span<const std::string> names);
  int add_row(std::initializer_list<std::string> names) {
    return add_row(std::span<const std::string>(names.begin(), names.size()));
  }
  int add_row_indices(std::vector<int> cols);

  int column_count() const { return static_cast<int>(columns_.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int primary_count() const { return primary_count_; }
  int secondary_count() const { return column_count() - primary_count_; }

  const Column& column(int i) const { return columns_[i]; }
  // Columns of a row, by 1-based row ordinal.
  const std::vector<int>& row(int ordinal) const { return rows_.at(ordinal - 1); }
  std::vector<std::string> row_names(int ordinal) const;
  // Reporting label: explicit label if set, else the joined column names.
  std::string row_label(int ordinal) const;
  void set_row_label(int ordinal, std::string label);

  std::optional<int> find_column(const std::string& name) const;

  // True iff the row set covers every primary column exactly once and every
  // secondary column at most once. Pure counting; used as the test oracle.
  bool check_solution(std::span<const int> row_ordinals) const;

  // Rows whose name sets contain all the given names.
  std::vector<int> rows_containing(std::span<const std::string> names) const;

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<int>> rows_;
  std::unordered_map<std::string, int> by_name_;
  std::unordered_map<int, std::string> labels_;
  int primary_count_ = 0;
};

void validate_column_name(const std::string& name);

CoverProblem parse_cover_text(const std::string& text);
std::string emit_cover_text(const CoverProblem& p);

// Converts a generalized problem to a pure exact cover by making every column
// primary and appending one singleton row per formerly-secondary column.
CoverProblem to_pure_exact_cover(const CoverProblem& p);

}  // namespace dlx
