#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlx/cover_problem.hpp"

namespace dlx {

using CellHandle = int32_t;
using ColumnHandle = int32_t;
inline constexpr ColumnHandle kNoColumn = -1;

enum class Heuristic { MinSize, Leftmost };

// Four-way-linked sparse matrix over contiguous arenas. Column handle 0 is
// the root header; its left/right ring threads the uncovered primary columns.
// Secondary column headers start out self-linked and never join the root ring.
class LinkedMatrix {
 public:
  struct Cell {
    CellHandle left, right, up, down;
    ColumnHandle column;
    int32_t row;  // 1-based input ordinal; 0 for headers
  };
  struct Column {
    CellHandle head;
    int32_t size;
    ColumnKind kind;
    bool covered;
  };

  explicit LinkedMatrix(const CoverProblem& problem);

  ColumnHandle root() const { return 0; }
  int column_count() const { return static_cast<int>(columns_.size()) - 1; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  int row_count() const { return static_cast<int>(row_first_.size()); }

  const Cell& cell(CellHandle x) const { return cells_[x]; }
  const Column& column(ColumnHandle c) const { return columns_[c]; }
  const std::string& column_name(ColumnHandle c) const { return names_[c]; }
  // Handle for the i-th problem column (root is separate).
  ColumnHandle column_handle(int problem_index) const { return problem_index + 1; }
  CellHandle row_first_cell(int ordinal) const { return row_first_.at(ordinal - 1); }

  CellHandle head(ColumnHandle c) const { return columns_[c].head; }
  CellHandle left(CellHandle x) const { return cells_[x].left; }
  CellHandle right(CellHandle x) const { return cells_[x].right; }
  CellHandle up(CellHandle x) const { return cells_[x].up; }
  CellHandle down(CellHandle x) const { return cells_[x].down; }
  ColumnHandle column_of(CellHandle x) const { return cells_[x].column; }
  int row_of(CellHandle x) const { return cells_[x].row; }

  // Removes c from the root ring and splices out every other cell of every
  // row on c's ring. Returns the number of single-element splices (>= 1).
  uint64_t cover(ColumnHandle c);
  // Exact reverse of the matching cover; returns the same count.
  uint64_t uncover(ColumnHandle c);

  ColumnHandle choose_column(Heuristic h) const;

  // Column names of the row through x, starting at x and following the
  // rightward ring.
  std::vector<std::string> row_names_from(CellHandle x) const;

  // Debug mode tracks cover/uncover LIFO discipline and verifies ring sizes.
  void set_debug_checks(bool on) { debug_ = on; }

  bool links_equal(const LinkedMatrix& other) const;

 private:
  void check_column_size(ColumnHandle c) const;

  std::vector<Cell> cells_;
  std::vector<Column> columns_;
  std::vector<std::string> names_;
  std::vector<CellHandle> row_first_;
  std::vector<ColumnHandle> cover_stack_;
  bool debug_ = false;
};

}  // namespace dlx
