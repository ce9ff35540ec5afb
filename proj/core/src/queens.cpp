#include "dlx/queens.hpp"

namespace dlx {

namespace {

// Middle-outward rank order: 4 3 5 2 6 1 7 0 for N=8.
std::vector<int> organ_pipe(int n) {
  std::vector<int> out;
  int m = n / 2;
  out.push_back(m);
  for (int d = 1; d < n; ++d) {
    if (m - d >= 0) out.push_back(m - d);
    if (m + d < n) out.push_back(m + d);
  }
  return out;
}

}  // namespace

CoverProblem queens_problem(const QueensSpec& spec) {
  int n = spec.n;
  if (n < 1) throw std::invalid_argument("queens N must be >= 1");
  CoverProblem p;

  std::vector<int> order(n);
  if (spec.ordering == QueensOrdering::OrganPipe) {
    order = organ_pipe(n);
  } else {
    for (int i = 0; i < n; ++i) order[i] = i;
  }

  bool files_secondary = spec.file_mode == QueensFileMode::FilesSecondary;
  if (files_secondary) {
    for (int i : order) p.add_column("R" + std::to_string(i));
    for (int j : order) p.add_column("F" + std::to_string(j), ColumnKind::Secondary);
  } else {
    for (int i : order) {
      p.add_column("R" + std::to_string(i));
      p.add_column("F" + std::to_string(i));
    }
  }
  // Diagonals A0, A(2n-2), B0, B(2n-2) occur in a single row each; omit them.
  for (int k = 1; k <= 2 * n - 3; ++k)
    p.add_column("A" + std::to_string(k), ColumnKind::Secondary);
  for (int k = 1; k <= 2 * n - 3; ++k)
    p.add_column("B" + std::to_string(k), ColumnKind::Secondary);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::string> row{"R" + std::to_string(i), "F" + std::to_string(j)};
      int a = i + j;
      int b = n - 1 - i + j;
      if (a >= 1 && a <= 2 * n - 3) row.push_back("A" + std::to_string(a));
      if (b >= 1 && b <= 2 * n - 3) row.push_back("B" + std::to_string(b));
      p.add_row(std::span<const std::string>(row));
    }
  }
  return p;
}

}  // namespace dlx
