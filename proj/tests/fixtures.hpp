#pragma once

#include <random>
#include <string>

#include "dlx/cover_problem.hpp"

// Knuth's 6-row, 7-column exact cover example; unique solution {1, 4, 5}.
inline const char* kMatrix3 =
    "A B C D E F G\n"
    "C E F\n"
    "A D G\n"
    "B C F\n"
    "A D\n"
    "B G\n"
    "D E G\n";

inline dlx::CoverProblem matrix3() { return dlx::parse_cover_text(kMatrix3); }

// Random instance for oracle comparisons: up to 7 columns (a suffix possibly
// secondary) and up to 12 rows. Every row touches at least one primary
// column; rows of only secondary columns are never branched on, so they lie
// outside the enumeration convention.
inline dlx::CoverProblem random_problem(std::mt19937& rng, bool allow_secondary) {
  std::uniform_int_distribution<int> ncol(1, 7), nrow(1, 12), coin(0, 1);
  dlx::CoverProblem p;
  int cols = ncol(rng);
  int secondary_from = allow_secondary ? std::uniform_int_distribution<int>(1, cols)(rng)
                                       : cols;
  for (int c = 0; c < cols; ++c)
    p.add_column(std::string(1, static_cast<char>('A' + c)),
                 c < secondary_from ? dlx::ColumnKind::Primary : dlx::ColumnKind::Secondary);
  int rows = nrow(rng);
  for (int r = 0; r < rows; ++r) {
    std::vector<int> cells;
    for (int c = 0; c < cols; ++c)
      if (coin(rng)) cells.push_back(c);
    bool has_primary = !cells.empty() && cells.front() < secondary_from;
    if (!has_primary)
      cells.insert(cells.begin(),
                   std::uniform_int_distribution<int>(0, secondary_from - 1)(rng));
    if (cells.size() > 1 && cells[0] == cells[1]) cells.erase(cells.begin());
    p.add_row_indices(cells);
  }
  return p;
}
