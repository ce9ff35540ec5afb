#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dlx/linked_matrix.hpp"

namespace dlx {

struct SearchOptions {
  Heuristic heuristic = Heuristic::MinSize;
  // A chosen column with no rows ends the branch without being covered
  // (zero updates).
  bool skip_empty_branch_column = true;
  std::optional<uint64_t> solution_limit;
  bool count_levels = true;
  bool collect_names = true;
  uint64_t rng_seed = 1;
};

struct SearchStats {
  std::vector<uint64_t> nodes_per_level;
  std::vector<uint64_t> updates_per_level;
  uint64_t total_nodes = 0;
  uint64_t total_updates = 0;
  uint64_t total_undos = 0;
  uint64_t total_solutions = 0;

  void add_node(size_t level) {
    if (nodes_per_level.size() <= level) nodes_per_level.resize(level + 1);
    ++nodes_per_level[level];
    ++total_nodes;
  }
  void add_updates(size_t level, uint64_t n) {
    if (updates_per_level.size() <= level) updates_per_level.resize(level + 1);
    updates_per_level[level] += n;
    total_updates += n;
  }
  void merge(const SearchStats& o, size_t level_shift = 0);
};

struct Solution {
  struct Row {
    int ordinal;                     // 1-based input row ordinal
    std::vector<std::string> names;  // branching column first, then ring order
  };
  std::vector<Row> rows;
  uint64_t discovery_index = 0;  // 0-based order of discovery

  std::vector<int> ordinals() const {
    std::vector<int> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.ordinal);
    return out;
  }
};

// Return false to stop the search early (the matrix is still fully restored).
using SolutionVisitor = std::function<bool(const Solution&)>;

SearchStats search(LinkedMatrix& m, const SearchOptions& options,
                   const SolutionVisitor& visitor = nullptr);

// Rows committed before search: covers each forced row's columns
// left-to-right. Release (or destruction) uncovers in exact reverse order.
class ForcedPrefix {
 public:
  ForcedPrefix() = default;
  ForcedPrefix(ForcedPrefix&&) noexcept;
  ForcedPrefix& operator=(ForcedPrefix&&) noexcept;
  ~ForcedPrefix() { release(); }

  uint64_t updates() const { return updates_; }
  const std::vector<Solution::Row>& rows() const { return rows_; }
  void release();

 private:
  friend ForcedPrefix force_rows(LinkedMatrix&, std::span<const int>);
  LinkedMatrix* m_ = nullptr;
  std::vector<ColumnHandle> covered_;
  std::vector<Solution::Row> rows_;
  uint64_t updates_ = 0;
};

ForcedPrefix force_rows(LinkedMatrix& m, std::span<const int> row_ordinals);

struct SplitDescriptor {
  std::vector<int> forced_rows;  // 1-based ordinals
};

// Enumerates all depth-level branch prefixes; forcing a descriptor's rows and
// searching each subproblem partitions the full solution space.
std::vector<SplitDescriptor> split(const CoverProblem& problem,
                                   const SearchOptions& options, int depth);

struct EstimateReport {
  double nodes_mean = 0;
  double nodes_stderr = 0;
  double updates_mean = 0;
  double updates_stderr = 0;
  uint64_t probes = 0;
};

// Knuth-style Monte Carlo tree-size estimation: random root-to-leaf descents
// weighted by the product of branching degrees. Unbiased for the node and
// update totals a full search would report.
EstimateReport estimate(LinkedMatrix& m, const SearchOptions& options,
                        uint64_t probes);

}  // namespace dlx
