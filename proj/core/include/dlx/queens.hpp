#pragma once

#include "dlx/cover_problem.hpp"

namespace dlx {

enum class QueensOrdering { Natural, OrganPipe };
enum class QueensFileMode { FilesPrimary, FilesSecondary };

struct QueensSpec {
  int n = 8;
  QueensOrdering ordering = QueensOrdering::OrganPipe;
  QueensFileMode file_mode = QueensFileMode::FilesPrimary;
};

// N-queens as generalized cover: rows "Ri Fj A(i+j) B(N-1-i+j)" with the
// diagonal columns secondary. Diagonals hit by only one row (A0, A(2N-2), B0,
// B(2N-2)) are omitted entirely.
CoverProblem queens_problem(const QueensSpec& spec);

}  // namespace dlx
