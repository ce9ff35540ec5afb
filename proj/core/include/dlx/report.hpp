#pragma once

#include <string>
#include <vector>

#include "dlx/cover_problem.hpp"
#include "dlx/search.hpp"

namespace dlx {

// Per-level profile table: level, nodes, node %, updates, update %,
// updates per node, plus a totals row.
std::string format_profile(const SearchStats& stats);

struct RunOptions {
  SearchOptions search;
  std::vector<int> forced_rows;  // 1-based ordinals, committed before search
  int split_depth = 0;           // 0 = no splitting
  int jobs = 1;
  bool collect_solutions = true;
  std::optional<uint64_t> solution_limit;  // applies across the whole run
};

struct RunResult {
  SearchStats stats;
  std::vector<Solution> solutions;  // empty when collect_solutions is false
  double wall_seconds = 0;
};

// Runs a (possibly split and parallel) search over the problem. Forced rows
// are prepended to every reported solution; their cover updates land on
// level 0 as do those of split prefixes. Deterministic: solutions are ordered
// by descriptor order regardless of worker scheduling.
RunResult run_search(const CoverProblem& problem, const RunOptions& options);

}  // namespace dlx
