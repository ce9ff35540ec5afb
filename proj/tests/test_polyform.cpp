#include "doctest.h"

#include <map>
#include <set>

#include "dlx/polyform.hpp"
#include "dlx/search.hpp"
#include "dlx/symmetry.hpp"

using namespace dlx;

namespace {

const SquarePiece& pentomino(const std::string& name) {
  for (const auto& p : pentominoes())
    if (p.name == name) return p;
  FAIL("no pentomino ", name);
  static SquarePiece dummy;
  return dummy;
}

const TriPiece& hexiamond(const std::string& name) {
  for (const auto& p : hexiamonds())
    if (p.name == name) return p;
  FAIL("no hexiamond ", name);
  static TriPiece dummy;
  return dummy;
}

}  // namespace

TEST_CASE("the twelve pentominoes") {
  std::set<std::string> names;
  for (const auto& p : pentominoes()) {
    CHECK(p.cells.size() == 5);
    CHECK(p.cells == normalized(p.cells));
    names.insert(p.name);
  }
  CHECK(names == std::set<std::string>{"F", "I", "L", "N", "P", "T", "U", "V", "W", "X", "Y",
                                       "Z"});
}

TEST_CASE("pentomino orientation counts") {
  const std::map<std::string, size_t> expected{{"F", 8}, {"I", 2}, {"L", 8}, {"N", 8},
                                               {"P", 8}, {"T", 4}, {"U", 4}, {"V", 4},
                                               {"W", 4}, {"X", 1}, {"Y", 8}, {"Z", 4}};
  size_t total = 0;
  for (const auto& [name, count] : expected) {
    auto o = orientations(pentomino(name).cells, Chirality::Free);
    CHECK_MESSAGE(o.size() == count, name);
    total += o.size();
    // all images are translation-normalized and distinct
    std::set<std::vector<Sq>> distinct(o.begin(), o.end());
    CHECK(distinct.size() == o.size());
    for (const auto& img : o) CHECK(img == normalized(img));
  }
  CHECK(total == 63);
}

TEST_CASE("one-sided pentominoes append six primed mirrors") {
  auto os = one_sided_pentominoes();
  CHECK(os.size() == 18);
  std::set<std::string> names;
  for (const auto& p : os) names.insert(p.name);
  for (const char* n : {"F'", "L'", "N'", "P'", "Y'", "Z'"}) CHECK(names.count(n));
  for (const char* n : {"I'", "T'", "U'", "V'", "W'", "X'"}) CHECK_FALSE(names.count(n));
  // a primed piece is the mirror of its base
  for (const auto& p : os)
    if (p.name == "F'") CHECK(normalized(p.cells) == normalized(mirrored(pentomino("F").cells)));
}

TEST_CASE("square transforms behave like the dihedral group") {
  auto f = pentomino("F").cells;
  CHECK(normalized(transformed(f, 4, false)) == normalized(f));
  CHECK(normalized(mirrored(mirrored(f))) == normalized(f));
  auto once = transformed(f, 1, false);
  CHECK(normalized(transformed(once, 3, false)) == normalized(f));
}

TEST_CASE("the twelve hexiamonds") {
  std::set<std::string> names;
  for (const auto& p : hexiamonds()) {
    CHECK(p.cells.size() == 6);
    names.insert(p.name);
  }
  CHECK(names.size() == 12);
  CHECK(names.count("sphinx"));
  CHECK(names.count("hexagon"));
  CHECK(names.count("bar"));
}

TEST_CASE("hexiamond orientation counts") {
  CHECK(orientations(hexiamond("sphinx").cells, Chirality::Free).size() == 12);
  CHECK(orientations(hexiamond("sphinx").cells, Chirality::OneSided).size() == 6);
  CHECK(orientations(hexiamond("hexagon").cells, Chirality::Free).size() == 1);
  CHECK(one_sided_hexiamonds().size() == 19);
}

TEST_CASE("triangular transforms") {
  auto s = hexiamond("sphinx").cells;
  CHECK(normalized(transformed(s, 6, false)) == normalized(s));
  CHECK(normalized(mirrored(mirrored(s))) == normalized(s));
}

TEST_CASE("built-in boards") {
  CHECK(board_from_spec("scott8x8").squares.size() == 60);
  CHECK(board_from_spec("rect:6x10").squares.size() == 60);
  CHECK(board_from_spec("rect:3x30").squares.size() == 90);
  CHECK(board_from_spec("mutilated-chessboard").squares.size() == 62);
  CHECK(board_from_spec("rhombus6x6").triangles.size() == 72);
  CHECK(board_from_spec("grid:4x4-segments").segments.size() == 40);
  CHECK(board_from_spec("grid:5x5-segments").segments.size() == 60);
  CHECK(board_from_spec("aztec-diamond").segments.size() == 100);
}

TEST_CASE("snowflake board: 114 triangles, 156 internal edges, 6-fold symmetric") {
  auto b = board_from_spec("obeirne-hexagon");
  CHECK(b.triangles.size() == 114);
  CHECK(internal_edges(b).size() == 156);
  // closed under rotation by 60 degrees about its own center: rotating the
  // cell set gives a translate of itself
  auto rotated = normalized(transformed(b.triangles, 1, false));
  CHECK(rotated == normalized(b.triangles));
}

TEST_CASE("rhombus board internal edge count") {
  CHECK(internal_edges(board_from_spec("rhombus6x6")).size() == 96);
}

TEST_CASE("shape files") {
  auto b = board_from_shape_text("##\n#.\n", GridKind::Square);
  CHECK(b.squares.size() == 3);
  CHECK_THROWS(board_from_shape_text("", GridKind::Square));
}

TEST_CASE("pentomino matrix on the 60-square board") {
  auto p = placements(pentominoes(), board_from_spec("scott8x8"));
  CHECK(p.column_count() == 72);
  CHECK(p.primary_count() == 72);
  CHECK(p.row_count() == 1568);
  for (int r = 1; r <= p.row_count(); ++r) CHECK(p.row(r).size() == 6);

  auto f_only = placements({pentomino("F")}, board_from_spec("scott8x8"));
  CHECK(f_only.row_count() == 192);
}

TEST_CASE("column order variants") {
  PolyformOptions lex;
  lex.order = ColumnOrder::Lexicographic;
  auto p = placements(pentominoes(), board_from_spec("scott8x8"), {}, lex);
  std::vector<std::string> names;
  for (int c = 0; c < p.column_count(); ++c) names.push_back(p.column(c).name);
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  CHECK(names == sorted);
  CHECK(names.front() == "11");

  auto d = placements(pentominoes(), board_from_spec("scott8x8"));
  CHECK(d.column(0).name == "F");
}

TEST_CASE("anonymous pieces get no piece column") {
  std::vector<SquarePiece> domino{{"D", {{0, 0}, {0, 1}}}};
  PolyformOptions opt;
  opt.anonymous = true;
  auto p = placements(domino, board_from_spec("rect:2x3"), {}, opt);
  CHECK(p.column_count() == 6);
  CHECK(p.row_count() == 7);
  LinkedMatrix m(p);
  CHECK(search(m, {}).total_solutions == 3);
}

TEST_CASE("orientation restrictions only remove rows") {
  auto board = board_from_spec("scott8x8");
  SquareRestriction r;
  r.piece = "X";
  r.orientations = orientations(pentomino("X").cells, Chirality::Free);
  auto unrestricted = placements(pentominoes(), board);
  auto same = placements(pentominoes(), board, {r});
  CHECK(same.row_count() == unrestricted.row_count());

  SquareRestriction pin;
  pin.piece = "X";
  pin.placements = {{{2, 3}, {3, 2}, {3, 3}, {3, 4}, {4, 3}}};
  auto pinned = placements(pentominoes(), board, {pin});
  auto x_rows = unrestricted.rows_containing(std::vector<std::string>{"X"}).size();
  CHECK(pinned.row_count() == unrestricted.row_count() - static_cast<int>(x_rows) + 1);
}

TEST_CASE("presets cover the published configurations") {
  auto names = preset_names();
  std::set<std::string> set(names.begin(), names.end());
  for (const char* n : {"scott-x23", "scott-x24", "scott-x33", "6x10-xquadrant",
                        "rhombus-sphinx3", "3x30-onesided", "welded-4x4", "tetra5x5-exH",
                        "mutilated-chessboard", "y15x15", "obeirne-onesided"})
    CHECK_MESSAGE(set.count(n), n);
  CHECK_THROWS(make_preset("no-such-preset"));

  auto scott = make_preset("scott-x23");
  CHECK(scott.forced_rows.size() == 1);
  CHECK(scott.board.squares.size() == 60);
  auto x_row = scott.problem.row_names(scott.forced_rows[0]);
  CHECK(std::find(x_row.begin(), x_row.end(), "X") != x_row.end());
}

TEST_CASE("x placements on the center-hole board avoid the hole") {
  auto board = board_from_spec("scott8x8");
  auto p = placements({pentomino("X")}, board);
  // 36 plus-shape centers on 8x8; 4 hole centers and their 8 orthogonal
  // neighbors are excluded
  CHECK(p.row_count() == 24);
}
