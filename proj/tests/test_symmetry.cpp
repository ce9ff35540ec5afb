#include "doctest.h"

#include <sstream>

#include "dlx/symmetry.hpp"

using namespace dlx;

namespace {

std::vector<std::vector<std::string>> parse_rows(const std::vector<std::string>& lines) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : lines) {
    std::istringstream in(line);
    rows.emplace_back();
    std::string tok;
    while (in >> tok) rows.back().push_back(tok);
  }
  return rows;
}

// A published center-hole packing used as a fixed scoring reference.
const std::vector<std::string> kReferencePacking{
    "I 11 12 13 14 15", "N 16 26 27 37 47", "L 17 18 28 38 48",
    "U 21 22 31 41 42", "X 23 32 33 34 43", "W 24 25 35 36 46",
    "P 51 52 53 62 63", "F 56 64 65 66 75", "Z 57 58 67 76 77",
    "T 61 71 72 73 81", "V 68 78 86 87 88", "Y 74 82 83 84 85",
};

}  // namespace

TEST_CASE("piece map classifies tokens and demands full coverage") {
  auto board = board_from_spec("rect:2x2");
  auto map = piece_map_from_rows(board, parse_rows({"A 11 12", "B 21 22"}));
  CHECK(map.piece.size() == 4);
  CHECK_THROWS(piece_map_from_rows(board, parse_rows({"A 11 12"})));
  CHECK_THROWS(piece_map_from_rows(board, parse_rows({"A 11 12", "B 21 22", "C 11 21"})));
  CHECK_THROWS(piece_map_from_rows(board, parse_rows({"A B 11 12", "C 21 22"})));
  // anonymous rows get distinct synthetic pieces
  auto anon = piece_map_from_rows(board, parse_rows({"11 12", "21 22"}));
  CHECK(anon.piece[0] != anon.piece[2]);
}

TEST_CASE("between-piece edges on a 2x2 split") {
  auto board = board_from_spec("rect:2x2");
  CHECK(internal_edges(board).size() == 4);
  auto horizontal = piece_map_from_rows(board, parse_rows({"A 11 12", "B 21 22"}));
  CHECK(between_piece_edges(horizontal).size() == 2);
  auto scores = symmetry_scores(horizontal);
  // the horizontal cut line maps to itself under both reflections
  CHECK(scores.hsym == 2);
  CHECK(scores.vsym == 2);
}

TEST_CASE("asymmetric cut scores lower") {
  auto board = board_from_spec("rect:2x3");
  // L-shaped split of the 2x3 box
  auto map = piece_map_from_rows(board, parse_rows({"A 11 12 13 21", "B 22 23"}));
  auto scores = symmetry_scores(map);
  CHECK(internal_edges(board).size() == 7);
  // cut edges: 12-22, 13-23, 21-22
  CHECK(between_piece_edges(map).size() == 3);
  // left-right keeps only the centered 12-22; top-bottom keeps the two
  // vertical cut edges
  CHECK(scores.hsym == 1);
  CHECK(scores.vsym == 2);
}

TEST_CASE("reference packing scores 30 left-right and 36 top-bottom") {
  auto board = board_from_spec("scott8x8");
  auto map = piece_map_from_rows(board, parse_rows(kReferencePacking));
  auto scores = symmetry_scores(map);
  CHECK(scores.hsym == 30);
  CHECK(scores.vsym == 36);
}

TEST_CASE("triangular boards score through both reflections") {
  // the snowflake hexagon is closed under both reflections; a single
  // anonymous cover has no between-piece edges and scores zero
  auto board = board_from_spec("obeirne-hexagon");
  std::string line;
  for (const Tri& t : board.triangles) line += cell_name(t) + " ";
  auto map = piece_map_from_rows(board, parse_rows({line}));
  CHECK(between_piece_edges(map).empty());
  auto scores = symmetry_scores(map);
  CHECK(scores.hsym == 0);
  CHECK(scores.vsym == 0);

  // the slanted rhombus is not mirror-closed in either direction
  auto rhombus = board_from_spec("rhombus6x6");
  std::string rline;
  for (const Tri& t : rhombus.triangles) rline += cell_name(t) + " ";
  auto rmap = piece_map_from_rows(rhombus, parse_rows({rline}));
  CHECK_THROWS(symmetry_scores(rmap));
}

TEST_CASE("non-mirror-closed boards are rejected") {
  auto board = board_from_shape_text("##\n#.\n", GridKind::Square);
  auto map = piece_map_from_rows(board, parse_rows({"A 11 12 21"}));
  CHECK_THROWS(symmetry_scores(map));
}

TEST_CASE("streaming best tracker keys on max then min") {
  MaxSymmetric best;
  best.add(1, {3, 1});
  best.add(2, {1, 3});
  CHECK(best.best_ids() == std::vector<uint64_t>{1, 2});
  best.add(3, {3, 2});
  CHECK(best.best_ids() == std::vector<uint64_t>{3});
  best.add(4, {4, 0});
  CHECK(best.best_ids() == std::vector<uint64_t>{4});
}
