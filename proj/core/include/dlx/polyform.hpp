#pragma once

#include <string>
#include <vector>

#include "dlx/cover_problem.hpp"
#include "dlx/grid.hpp"

namespace dlx {

struct Board {
  GridKind kind = GridKind::Square;
  std::vector<Sq> squares;
  std::vector<Tri> triangles;
  std::vector<Seg> segments;
  size_t size() const;
};

// Built-in names: scott8x8, rect:RxC, mutilated-chessboard, rhombus6x6,
// obeirne-hexagon, grid:NxN-segments, aztec-diamond. Anything else is read as
// a shape file ('#' cell, '.' hole).
Board board_from_spec(const std::string& spec);
Board board_from_shape_text(const std::string& text, GridKind kind);

enum class Chirality { Free, OneSided };
enum class ColumnOrder { PiecesFirst, Lexicographic };

struct SquarePiece {
  std::string name;
  std::vector<Sq> cells;
};
struct TriPiece {
  std::string name;
  std::vector<Tri> cells;
};
struct SegPiece {
  std::string name;
  std::vector<Seg> segments;
};

const std::vector<SquarePiece>& pentominoes();
const std::vector<TriPiece>& hexiamonds();
const std::vector<SegPiece>& tetrasticks();
// Mirror-image partners of chiral pieces are appended with a ' suffix.
std::vector<SquarePiece> one_sided_pentominoes();
std::vector<TriPiece> one_sided_hexiamonds();
std::vector<SegPiece> one_sided_tetrasticks();
// A piece is welded when some lattice point has three or four of its segments.
bool is_welded(const SegPiece& piece);

// Distinct translation-normalized images under rotation (plus reflection for
// Chirality::Free), sorted.
std::vector<std::vector<Sq>> orientations(const std::vector<Sq>& cells, Chirality mode);
std::vector<std::vector<Tri>> orientations(const std::vector<Tri>& cells, Chirality mode);
std::vector<std::vector<Seg>> orientations(const std::vector<Seg>& segs, Chirality mode);

std::vector<Sq> mirrored(const std::vector<Sq>& cells);
std::vector<Tri> mirrored(const std::vector<Tri>& cells);
std::vector<Seg> mirrored(const std::vector<Seg>& segs);

std::vector<Sq> normalized(std::vector<Sq> cells);
std::vector<Tri> normalized(std::vector<Tri> cells);
std::vector<Seg> normalized(std::vector<Seg> segs);

// Absolute transform about the origin (mirror first, then rotation steps);
// not normalized, so whole configurations can be transformed coherently.
std::vector<Sq> transformed(const std::vector<Sq>& cells, int rotations, bool mirror);
std::vector<Tri> transformed(const std::vector<Tri>& cells, int rotations, bool mirror);
std::vector<Seg> transformed(const std::vector<Seg>& segs, int rotations, bool mirror);

// Restrictions only remove placement rows: a piece may be limited to a subset
// of its orientations and/or to an explicit list of absolute placements.
struct SquareRestriction {
  std::string piece;
  std::vector<std::vector<Sq>> orientations;
  std::vector<std::vector<Sq>> placements;
};
struct TriRestriction {
  std::string piece;
  std::vector<std::vector<Tri>> orientations;
  std::vector<std::vector<Tri>> placements;
};
struct SegRestriction {
  std::string piece;
  std::vector<std::vector<Seg>> orientations;
  std::vector<std::vector<Seg>> placements;
};

struct PolyformOptions {
  Chirality chirality = Chirality::Free;
  bool anonymous = false;  // no piece columns (indistinguishable pieces)
  ColumnOrder order = ColumnOrder::PiecesFirst;
};

CoverProblem placements(const std::vector<SquarePiece>& pieces, const Board& board,
                        const std::vector<SquareRestriction>& restrictions = {},
                        const PolyformOptions& options = {});
CoverProblem polyiamond_problem(const std::vector<TriPiece>& pieces, const Board& board,
                                const std::vector<TriRestriction>& restrictions = {},
                                const PolyformOptions& options = {});
// Segment boards get a secondary interior-junction column Ixy wherever both
// collinear pairs through (x,y) lie on the board; a row claims Ixy when the
// placement runs straight through (x,y).
CoverProblem polystick_problem(const std::vector<SegPiece>& pieces, const Board& board,
                               const std::vector<SegRestriction>& restrictions = {},
                               const PolyformOptions& options = {});

// Canned symmetry-reduced setups; each is a ready-to-solve problem.
struct Preset {
  CoverProblem problem;
  Board board;
  std::vector<int> forced_rows;  // commit before searching
};
Preset make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace dlx
