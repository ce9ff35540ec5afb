#include "dlx/cover_problem.hpp"

#include <algorithm>
#include <sstream>

namespace dlx {

void validate_column_name(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty column name");
  if (name.size() > 15)
    throw std::invalid_argument("column name too long: " + name);
  for (char ch : name) {
    if (ch == '|' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
      throw std::invalid_argument("bad character in column name: " + name);
  }
}

int CoverProblem::add_column(std::string name, ColumnKind kind) {
  validate_column_name(name);
  if (by_name_.count(name))
    throw std::invalid_argument("duplicate column name: " + name);
  if (kind == ColumnKind::Primary && primary_count_ != column_count())
    throw std::invalid_argument("primary column after secondary: " + name);
  int idx = column_count();
  by_name_.emplace(name, idx);
  columns_.push_back({std::move(name), kind});
  if (kind == ColumnKind::Primary) ++primary_count_;
  return idx;
}

int CoverProblem::add_row(std::span<const std::string> names) {
  std::vector<int> cols;
  cols.reserve(names.size());
  for (const auto& n : names) {
    auto it = by_name_.find(n);
    if (it == by_name_.end())
      throw std::invalid_argument("row references undeclared column: " + n);
    cols.push_back(it->second);
  }
  return add_row_indices(std::move(cols));
}

int CoverProblem::add_row_indices(std::vector<int> cols) {
  if (cols.empty()) throw std::invalid_argument("empty row");
  auto sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate column within a row");
  for (int c : cols)
    if (c < 0 || c >= column_count())
      throw std::invalid_argument("row column index out of range");
  rows_.push_back(std::move(cols));
  return row_count();
}

std::vector<std::string> CoverProblem::row_names(int ordinal) const {
  std::vector<std::string> out;
  for (int c : row(ordinal)) out.push_back(columns_[c].name);
  return out;
}

std::string CoverProblem::row_label(int ordinal) const {
  auto it = labels_.find(ordinal);
  if (it != labels_.end()) return it->second;
  std::string out;
  for (int c : row(ordinal)) {
    if (!out.empty()) out += ' ';
    out += columns_[c].name;
  }
  return out;
}

void CoverProblem::set_row_label(int ordinal, std::string label) {
  labels_[ordinal] = std::move(label);
}

std::optional<int> CoverProblem::find_column(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool CoverProblem::check_solution(std::span<const int> row_ordinals) const {
  std::vector<int> cover_count(column_count(), 0);
  for (int r : row_ordinals) {
    if (r < 1 || r > row_count()) return false;
    for (int c : row(r)) ++cover_count[c];
  }
  for (int c = 0; c < column_count(); ++c) {
    int want_max = 1;
    int want_min = columns_[c].kind == ColumnKind::Primary ? 1 : 0;
    if (cover_count[c] < want_min || cover_count[c] > want_max) return false;
  }
  return true;
}

std::vector<int> CoverProblem::rows_containing(std::span<const std::string> names) const {
  std::vector<int> want;
  for (const auto& n : names) {
    auto c = find_column(n);
    if (!c) throw std::invalid_argument("unknown column: " + n);
    want.push_back(*c);
  }
  std::vector<int> out;
  for (int r = 1; r <= row_count(); ++r) {
    const auto& cols = row(r);
    bool all = std::all_of(want.begin(), want.end(), [&](int c) {
      return std::find(cols.begin(), cols.end(), c) != cols.end();
    });
    if (all) out.push_back(r);
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

CoverProblem parse_cover_text(const std::string& text) {
  CoverProblem p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    try {
      if (!have_header) {
        have_header = true;
        bool secondary = false;
        for (const auto& t : toks) {
          if (t == "|") {
            if (secondary) throw std::invalid_argument("'|' appears twice");
            secondary = true;
            continue;
          }
          p.add_column(t, secondary ? ColumnKind::Secondary : ColumnKind::Primary);
        }
      } else {
        for (const auto& t : toks)
          if (t == "|") throw std::invalid_argument("'|' not allowed in a row line");
        p.add_row(std::span<const std::string>(toks));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return p;
}

std::string emit_cover_text(const CoverProblem& p) {
  std::string out;
  bool bar = false;
  for (int c = 0; c < p.column_count(); ++c) {
    if (p.column(c).kind == ColumnKind::Secondary && !bar) {
      if (c > 0) out += ' ';
      out += '|';
      bar = true;
    }
    if (!out.empty()) out += ' ';
    out += p.column(c).name;
  }
  out += '\n';
  for (int r = 1; r <= p.row_count(); ++r) {
    std::string line;
    for (int c : p.row(r)) {
      if (!line.empty()) line += ' ';
      line += p.column(c).name;
    }
    out += line;
    out += '\n';
  }
  return out;
}

CoverProblem to_pure_exact_cover(const CoverProblem& p) {
  CoverProblem out;
  for (int c = 0; c < p.column_count(); ++c)
    out.add_column(p.column(c).name, ColumnKind::Primary);
  for (int r = 1; r <= p.row_count(); ++r) {
    out.add_row_indices(p.row(r));
    out.set_row_label(r, p.row_label(r));
  }
  for (int c = 0; c < p.column_count(); ++c)
    if (p.column(c).kind == ColumnKind::Secondary) out.add_row_indices({c});
  return out;
}

}  // namespace dlx
