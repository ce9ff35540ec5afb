#include "dlx/linked_matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace dlx {

LinkedMatrix::LinkedMatrix(const CoverProblem& problem) {
  int ncols = problem.column_count();
  columns_.reserve(ncols + 1);
  names_.reserve(ncols + 1);
  size_t ncells = static_cast<size_t>(ncols) + 1;
  for (int r = 1; r <= problem.row_count(); ++r) ncells += problem.row(r).size();
  cells_.reserve(ncells);

  // Header cells: cell i is the header of column handle i (0 = root).
  for (int i = 0; i <= ncols; ++i) {
    ColumnKind kind = i == 0 ? ColumnKind::Primary : problem.column(i - 1).kind;
    cells_.push_back({i, i, i, i, static_cast<ColumnHandle>(i), 0});
    columns_.push_back({static_cast<CellHandle>(i), 0, kind, false});
    names_.push_back(i == 0 ? std::string("@root") : problem.column(i - 1).name);
  }
  // Thread root + primary headers into one horizontal ring.
  CellHandle prev = 0;
  for (int i = 1; i <= ncols; ++i) {
    if (columns_[i].kind != ColumnKind::Primary) continue;
    cells_[i].left = prev;
    cells_[prev].right = i;
    prev = i;
  }
  cells_[prev].right = 0;
  cells_[0].left = prev;

  row_first_.reserve(problem.row_count());
  for (int r = 1; r <= problem.row_count(); ++r) {
    const auto& cols = problem.row(r);
    CellHandle first = kNoColumn;
    for (int pc : cols) {
      ColumnHandle c = pc + 1;
      CellHandle x = static_cast<CellHandle>(cells_.size());
      CellHandle h = columns_[c].head;
      // Bottom of column c: above the header.
      cells_.push_back({x, x, cells_[h].up, h, c, r});
      cells_[cells_[h].up].down = x;
      cells_[h].up = x;
      ++columns_[c].size;
      if (first == kNoColumn) {
        first = x;
      } else {
        CellHandle last = cells_[first].left;
        cells_[x].left = last;
        cells_[x].right = first;
        cells_[last].right = x;
        cells_[first].left = x;
      }
    }
    row_first_.push_back(first);
  }
}

uint64_t LinkedMatrix::cover(ColumnHandle c) {
  assert(c > 0 && !columns_[c].covered);
  Column& col = columns_[c];
  CellHandle h = col.head;
  cells_[cells_[h].right].left = cells_[h].left;
  cells_[cells_[h].left].right = cells_[h].right;
  col.covered = true;
  uint64_t updates = 1;
  for (CellHandle i = cells_[h].down; i != h; i = cells_[i].down) {
    for (CellHandle j = cells_[i].right; j != i; j = cells_[j].right) {
      cells_[cells_[j].down].up = cells_[j].up;
      cells_[cells_[j].up].down = cells_[j].down;
      --columns_[cells_[j].column].size;
      ++updates;
    }
  }
  if (debug_) cover_stack_.push_back(c);
  return updates;
}

uint64_t LinkedMatrix::uncover(ColumnHandle c) {
  assert(c > 0 && columns_[c].covered);
  if (debug_) {
    if (cover_stack_.empty() || cover_stack_.back() != c)
      throw std::logic_error("uncover out of LIFO order: " + names_[c]);
    cover_stack_.pop_back();
  }
  Column& col = columns_[c];
  CellHandle h = col.head;
  uint64_t undos = 0;
  for (CellHandle i = cells_[h].up; i != h; i = cells_[i].up) {
    for (CellHandle j = cells_[i].left; j != i; j = cells_[j].left) {
      ++columns_[cells_[j].column].size;
      cells_[cells_[j].down].up = j;
      cells_[cells_[j].up].down = j;
      ++undos;
    }
  }
  cells_[cells_[h].right].left = h;
  cells_[cells_[h].left].right = h;
  col.covered = false;
  ++undos;
  if (debug_) check_column_size(c);
  return undos;
}

ColumnHandle LinkedMatrix::choose_column(Heuristic h) const {
  CellHandle first = cells_[columns_[0].head].right;
  if (first == columns_[0].head) return kNoColumn;
  if (h == Heuristic::Leftmost) return cells_[first].column;
  ColumnHandle best = cells_[first].column;
  int32_t s = columns_[best].size;
  for (CellHandle j = cells_[first].right; j != columns_[0].head; j = cells_[j].right) {
    ColumnHandle cj = cells_[j].column;
    if (columns_[cj].size < s) {
      best = cj;
      s = columns_[cj].size;
    }
  }
  return best;
}

std::vector<std::string> LinkedMatrix::row_names_from(CellHandle x) const {
  std::vector<std::string> out;
  out.push_back(names_[cells_[x].column]);
  for (CellHandle j = cells_[x].right; j != x; j = cells_[j].right)
    out.push_back(names_[cells_[j].column]);
  return out;
}

void LinkedMatrix::check_column_size(ColumnHandle c) const {
  const Column& col = columns_[c];
  int32_t n = 0;
  for (CellHandle i = cells_[col.head].down; i != col.head; i = cells_[i].down) ++n;
  if (n != col.size)
    throw std::logic_error("size mismatch on column " + names_[c]);
}

bool LinkedMatrix::links_equal(const LinkedMatrix& other) const {
  if (cells_.size() != other.cells_.size()) return false;
  for (size_t i = 0; i < cells_.size(); ++i) {
    const Cell& a = cells_[i];
    const Cell& b = other.cells_[i];
    if (a.left != b.left || a.right != b.right || a.up != b.up || a.down != b.down)
      return false;
  }
  for (size_t c = 0; c < columns_.size(); ++c)
    if (columns_[c].size != other.columns_[c].size ||
        columns_[c].covered != other.columns_[c].covered)
      return false;
  return true;
}

}  // namespace dlx
