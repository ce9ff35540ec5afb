#include "doctest.h"

#include <random>
#include <set>

#include "dlx/linked_matrix.hpp"
#include "fixtures.hpp"

using namespace dlx;

namespace {

std::vector<std::string> root_ring(const LinkedMatrix& m) {
  std::vector<std::string> out;
  for (auto c = m.right(m.head(m.root())); c != m.head(m.root()); c = m.right(c))
    out.push_back(m.column_name(m.column_of(c)));
  return out;
}

}  // namespace

TEST_CASE("matrix structure from the 7-column example") {
  auto p = matrix3();
  LinkedMatrix m(p);
  CHECK(m.column_count() == 7);
  CHECK(root_ring(m) == std::vector<std::string>{"A", "B", "C", "D", "E", "F", "G"});
  // column sizes: A2 B2 C2 D3 E2 F2 G3
  std::vector<int> sizes;
  for (int c = 0; c < 7; ++c) sizes.push_back(m.column(m.column_handle(c)).size);
  CHECK(sizes == std::vector<int>{2, 2, 2, 3, 2, 2, 3});
}

TEST_CASE("cover counts one splice per removed cell plus the header") {
  auto p = matrix3();
  LinkedMatrix m(p);
  auto a = m.column_handle(*p.find_column("A"));
  // rows through A: "A D G" (2 other cells) and "A D" (1), plus the header
  CHECK(m.cover(a) == 4);
  CHECK(root_ring(m) == std::vector<std::string>{"B", "C", "D", "E", "F", "G"});
  CHECK(m.column(m.column_handle(*p.find_column("D"))).size == 1);
  CHECK(m.uncover(a) == 4);
}

TEST_CASE("uncover restores links exactly") {
  auto p = matrix3();
  LinkedMatrix m(p), reference(p);
  auto a = m.column_handle(0);
  auto d = m.column_handle(3);
  m.cover(a);
  CHECK_FALSE(m.links_equal(reference));
  m.cover(d);
  m.uncover(d);
  m.uncover(a);
  CHECK(m.links_equal(reference));
}

TEST_CASE("secondary headers stay out of the root ring") {
  auto p = parse_cover_text("A B | X Y\nA X\nB Y\nA B\n");
  LinkedMatrix m(p);
  CHECK(root_ring(m) == std::vector<std::string>{"A", "B"});
  auto x = m.column_handle(2);
  CHECK(m.column(x).kind == ColumnKind::Secondary);
  CHECK(m.column(x).size == 1);
  // covering a secondary column must not touch the root ring
  m.cover(x);
  CHECK(root_ring(m) == std::vector<std::string>{"A", "B"});
  m.uncover(x);
}

TEST_CASE("row_names_from starts at the given cell and follows the ring") {
  auto p = matrix3();
  LinkedMatrix m(p);
  auto first = m.row_first_cell(2);  // A D G
  CHECK(m.row_names_from(first) == std::vector<std::string>{"A", "D", "G"});
  CHECK(m.row_names_from(m.right(first)) == std::vector<std::string>{"D", "G", "A"});
}

TEST_CASE("debug checks enforce LIFO cover discipline") {
  auto p = matrix3();
  LinkedMatrix m(p);
  m.set_debug_checks(true);
  auto a = m.column_handle(0), b = m.column_handle(1);
  m.cover(a);
  m.cover(b);
  CHECK_THROWS(m.uncover(a));
  m.uncover(b);
  m.uncover(a);
}

TEST_CASE("randomized cover/uncover stack leaves the matrix untouched") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_problem(rng, true);
    LinkedMatrix m(p), reference(p);
    m.set_debug_checks(true);
    std::vector<ColumnHandle> stack;
    std::uniform_int_distribution<int> col(0, p.column_count() - 1), op(0, 2);
    uint64_t spliced = 0;
    for (int step = 0; step < 60; ++step) {
      if (op(rng) != 0 || stack.empty()) {
        auto c = m.column_handle(col(rng));
        if (m.column(c).covered) continue;
        spliced += m.cover(c);
        stack.push_back(c);
      } else {
        spliced -= m.uncover(stack.back());
        stack.pop_back();
      }
    }
    while (!stack.empty()) {
      spliced -= m.uncover(stack.back());
      stack.pop_back();
    }
    CHECK(spliced == 0);
    CHECK(m.links_equal(reference));
  }
}
