#include "doctest.h"

#include <array>

#include "dlx/queens.hpp"
#include "dlx/search.hpp"

using namespace dlx;

namespace {

SearchStats run_queens(int n, QueensFileMode mode = QueensFileMode::FilesPrimary) {
  QueensSpec spec;
  spec.n = n;
  spec.file_mode = mode;
  LinkedMatrix m(queens_problem(spec));
  SearchOptions opt;
  opt.skip_empty_branch_column = false;
  return search(m, opt);
}

}  // namespace

TEST_CASE("queens 4 structure") {
  QueensSpec spec;
  spec.n = 4;
  auto p = queens_problem(spec);
  // 4 ranks + 4 files primary; diagonals hit twice or more: 2*7 - 4 omitted
  CHECK(p.primary_count() == 8);
  CHECK(p.secondary_count() == 10);
  CHECK(p.row_count() == 16);
  // corner (0,0): its sum-diagonal A0 is visited once and omitted entirely
  auto corner = p.rows_containing(std::vector<std::string>{"R0", "F0"});
  REQUIRE(corner.size() == 1);
  CHECK(p.row_names(corner[0]) == std::vector<std::string>{"R0", "F0", "B3"});
  CHECK_FALSE(p.find_column("A0").has_value());
  CHECK_FALSE(p.find_column("B0").has_value());
  LinkedMatrix m(p);
  auto stats = search(m, {});
  CHECK(stats.total_solutions == 2);
}

TEST_CASE("organ-pipe ordering interleaves middle-out") {
  QueensSpec spec;
  spec.n = 6;
  auto p = queens_problem(spec);
  CHECK(p.column(0).name == "R3");
  CHECK(p.column(1).name == "F3");
  CHECK(p.column(2).name == "R2");
  CHECK(p.column(3).name == "F2");
  CHECK(p.column(4).name == "R4");

  spec.ordering = QueensOrdering::Natural;
  auto q = queens_problem(spec);
  CHECK(q.column(0).name == "R0");
  CHECK(q.column(1).name == "F0");
  CHECK(q.column(2).name == "R1");
}

TEST_CASE("solution, node and update totals for small boards") {
  struct Row {
    int n;
    uint64_t solutions, nodes, updates;
  };
  // files primary, organ-pipe, no empty-column skipping
  const std::array<Row, 8> table{{{1, 1, 2, 3},
                                  {2, 0, 3, 19},
                                  {3, 0, 4, 56},
                                  {4, 2, 13, 183},
                                  {5, 10, 46, 572},
                                  {6, 4, 93, 1497},
                                  {7, 40, 334, 5066},
                                  {8, 92, 1049, 16680}}};
  for (const auto& row : table) {
    auto stats = run_queens(row.n);
    CHECK(stats.total_solutions == row.solutions);
    CHECK(stats.total_nodes == row.nodes);
    CHECK(stats.total_updates == row.updates);
  }
}

TEST_CASE("files-secondary totals for small boards") {
  struct Row {
    int n;
    uint64_t solutions, nodes, updates;
  };
  const std::array<Row, 8> table{{{1, 1, 2, 3},
                                  {2, 0, 3, 19},
                                  {3, 0, 6, 70},
                                  {4, 2, 15, 207},
                                  {5, 10, 50, 626},
                                  {6, 4, 115, 1765},
                                  {7, 40, 376, 5516},
                                  {8, 92, 1223, 18849}}};
  for (const auto& row : table) {
    auto stats = run_queens(row.n, QueensFileMode::FilesSecondary);
    CHECK(stats.total_solutions == row.solutions);
    CHECK(stats.total_nodes == row.nodes);
    CHECK(stats.total_updates == row.updates);
  }
}

TEST_CASE("solutions are valid placements") {
  QueensSpec spec;
  spec.n = 6;
  auto p = queens_problem(spec);
  LinkedMatrix m(p);
  int seen = 0;
  search(m, {}, [&](const Solution& s) {
    ++seen;
    CHECK(s.rows.size() == 6);
    CHECK(p.check_solution(s.ordinals()));
    return true;
  });
  CHECK(seen == 4);
}
