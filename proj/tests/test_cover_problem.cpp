#include "doctest.h"

#include <random>

#include "dlx/cover_problem.hpp"
#include "fixtures.hpp"

using namespace dlx;

TEST_CASE("parse_cover_text reads header and rows") {
  auto p = matrix3();
  CHECK(p.column_count() == 7);
  CHECK(p.primary_count() == 7);
  CHECK(p.row_count() == 6);
  CHECK(p.row_names(1) == std::vector<std::string>{"C", "E", "F"});
  CHECK(p.row_names(4) == std::vector<std::string>{"A", "D"});
}

TEST_CASE("secondary columns follow the bar") {
  auto p = parse_cover_text("A B | X Y\nA X\nB Y\nA B\n");
  CHECK(p.primary_count() == 2);
  CHECK(p.secondary_count() == 2);
  CHECK(p.column(2).kind == ColumnKind::Secondary);
  CHECK(p.column(3).name == "Y");
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_cover_text("A A\n"), ParseError);
  try {
    parse_cover_text("A B\nA C\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_cover_text("A | B | C\n"), ParseError);
  CHECK_THROWS_AS(parse_cover_text("A B\nA | B\n"), ParseError);
}

TEST_CASE("comments and blank lines are skipped") {
  auto p = parse_cover_text("# header\nA B\n\n# row\nA B\n");
  CHECK(p.column_count() == 2);
  CHECK(p.row_count() == 1);
}

TEST_CASE("emit then parse round-trips") {
  auto p = parse_cover_text("A B | X\nA X\nB\nA B\n");
  auto q = parse_cover_text(emit_cover_text(p));
  CHECK(q.column_count() == p.column_count());
  CHECK(q.primary_count() == p.primary_count());
  CHECK(q.row_count() == p.row_count());
  for (int r = 1; r <= p.row_count(); ++r) CHECK(q.row(r) == p.row(r));
  CHECK(emit_cover_text(q) == emit_cover_text(p));
}

TEST_CASE("check_solution counts primaries exactly and secondaries at most once") {
  auto p = matrix3();
  CHECK(p.check_solution(std::vector<int>{1, 4, 5}));
  CHECK_FALSE(p.check_solution(std::vector<int>{1, 4}));
  CHECK_FALSE(p.check_solution(std::vector<int>{1, 2, 4, 5}));

  auto g = parse_cover_text("A B | X\nA X\nB X\nB\n");
  CHECK(g.check_solution(std::vector<int>{1, 3}));
  CHECK_FALSE(g.check_solution(std::vector<int>{1, 2}));
}

TEST_CASE("rows_containing matches name subsets") {
  auto p = matrix3();
  CHECK(p.rows_containing(std::vector<std::string>{"A", "D"}) == std::vector<int>{2, 4});
  CHECK(p.rows_containing(std::vector<std::string>{"E"}) == std::vector<int>{1, 6});
  CHECK(p.rows_containing(std::vector<std::string>{"A", "B"}).empty());
}

TEST_CASE("row labels default to joined names") {
  auto p = matrix3();
  CHECK(p.row_label(4) == "A D");
  p.set_row_label(4, "pair");
  CHECK(p.row_label(4) == "pair");
}

TEST_CASE("to_pure_exact_cover appends one slack row per secondary column") {
  auto p = parse_cover_text("A B | X Y\nA X\nB Y\nA B\n");
  auto pure = to_pure_exact_cover(p);
  CHECK(pure.primary_count() == 4);
  CHECK(pure.secondary_count() == 0);
  CHECK(pure.row_count() == p.row_count() + 2);
  CHECK(pure.row(4) == std::vector<int>{2});
  CHECK(pure.row(5) == std::vector<int>{3});
}

TEST_CASE("column name and duplicate validation") {
  CoverProblem p;
  p.add_column("A");
  CHECK_THROWS_AS(p.add_column("A"), std::invalid_argument);
  p.add_column("S", ColumnKind::Secondary);
  CHECK_THROWS_AS(p.add_column("B"), std::invalid_argument);
  CHECK_THROWS_AS(p.add_row({"A", "A"}), std::invalid_argument);
  CHECK_THROWS_AS(p.add_row({"Z"}), std::invalid_argument);
}
