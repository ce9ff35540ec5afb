#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dlx/polyform.hpp"

namespace dlx {

// A solved packing as a total cell -> piece assignment over a board.
struct PieceMap {
  Board board;
  std::vector<std::string> piece;  // parallel to the board's cell list
};

// Builds the map from solution rows given as column-name lists (the
// generators' "PIECE cell cell ..." labels, in any token order). Rows with no
// piece token (anonymous pieces) get synthetic distinct identities.
PieceMap piece_map_from_rows(const Board& board,
                             const std::vector<std::vector<std::string>>& rows);

using CellEdge = std::pair<int, int>;  // board cell indices, first < second

// Edges with both incident cells on the board.
std::vector<CellEdge> internal_edges(const Board& board);
// Internal edges whose two cells carry different pieces.
std::vector<CellEdge> between_piece_edges(const PieceMap& map);

struct SymmetryScore {
  int hsym = 0, vsym = 0;
};

// hsym counts between-piece edges that are also between-piece edges in the
// left-right reflection; vsym likewise for top-bottom. The board must be
// closed under the reflection.
SymmetryScore symmetry_scores(const PieceMap& map);

// Streaming selector: keeps the ids maximizing max(hsym, vsym), ties broken
// by larger min(hsym, vsym).
class MaxSymmetric {
 public:
  void add(uint64_t id, SymmetryScore s);
  const std::vector<uint64_t>& best_ids() const { return ids_; }
  SymmetryScore best_score() const { return best_; }
  bool empty() const { return ids_.empty(); }

 private:
  std::vector<uint64_t> ids_;
  SymmetryScore best_{-1, -1};
};

}  // namespace dlx
