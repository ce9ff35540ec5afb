#include "dlx/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dlx {

namespace {

std::vector<std::string> board_cell_names(const Board& b) {
  std::vector<std::string> out;
  switch (b.kind) {
    case GridKind::Square:
      for (Sq s : b.squares) out.push_back(cell_name(s));
      break;
    case GridKind::Triangular:
      for (Tri t : b.triangles) out.push_back(cell_name(t));
      break;
    case GridKind::Segment:
      for (Seg s : b.segments) out.push_back(cell_name(s));
      break;
  }
  return out;
}

bool is_junction_token(const Board& b, const std::string& tok) {
  return b.kind == GridKind::Segment && tok.size() >= 3 && tok[0] == 'I';
}

}  // namespace

PieceMap piece_map_from_rows(const Board& board,
                             const std::vector<std::vector<std::string>>& rows) {
  auto names = board_cell_names(board);
  std::map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);

  PieceMap map;
  map.board = board;
  map.piece.assign(names.size(), "");
  for (size_t ri = 0; ri < rows.size(); ++ri) {
    std::string piece;
    std::vector<int> cells;
    for (const auto& tok : rows[ri]) {
      auto it = index.find(tok);
      if (it != index.end()) {
        cells.push_back(it->second);
      } else if (!is_junction_token(board, tok)) {
        if (!piece.empty())
          throw std::invalid_argument("row has two piece tokens: " + piece + ", " + tok);
        piece = tok;
      }
    }
    if (piece.empty()) piece = "#" + std::to_string(ri + 1);
    for (int c : cells) {
      if (!map.piece[c].empty())
        throw std::invalid_argument("cell covered twice: " + names[c]);
      map.piece[c] = piece;
    }
  }
  for (size_t i = 0; i < map.piece.size(); ++i)
    if (map.piece[i].empty())
      throw std::invalid_argument("cell not covered: " + names[i]);
  return map;
}

std::vector<CellEdge> internal_edges(const Board& board) {
  std::vector<CellEdge> out;
  if (board.kind == GridKind::Square) {
    std::map<Sq, int> index;
    for (size_t i = 0; i < board.squares.size(); ++i)
      index[board.squares[i]] = static_cast<int>(i);
    for (size_t i = 0; i < board.squares.size(); ++i)
      for (Sq nb : neighbors(board.squares[i])) {
        auto it = index.find(nb);
        if (it != index.end() && static_cast<int>(i) < it->second)
          out.emplace_back(static_cast<int>(i), it->second);
      }
  } else if (board.kind == GridKind::Triangular) {
    std::map<Tri, int> index;
    for (size_t i = 0; i < board.triangles.size(); ++i)
      index[board.triangles[i]] = static_cast<int>(i);
    for (size_t i = 0; i < board.triangles.size(); ++i)
      for (Tri nb : neighbors(board.triangles[i])) {
        auto it = index.find(nb);
        if (it != index.end() && static_cast<int>(i) < it->second)
          out.emplace_back(static_cast<int>(i), it->second);
      }
  } else {
    throw std::invalid_argument("no cell adjacency on segment boards");
  }
  return out;
}

std::vector<CellEdge> between_piece_edges(const PieceMap& map) {
  std::vector<CellEdge> out;
  for (CellEdge e : internal_edges(map.board))
    if (map.piece[e.first] != map.piece[e.second]) out.push_back(e);
  return out;
}

namespace {

// Cell-index permutations for the two reflections; throws when the board is
// not closed under one.
std::vector<int> square_reflection(const Board& b, bool left_right) {
  int lo = left_right ? b.squares[0].c : b.squares[0].r;
  int hi = lo;
  for (Sq s : b.squares) {
    int v = left_right ? s.c : s.r;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::map<Sq, int> index;
  for (size_t i = 0; i < b.squares.size(); ++i) index[b.squares[i]] = static_cast<int>(i);
  std::vector<int> out(b.squares.size());
  for (size_t i = 0; i < b.squares.size(); ++i) {
    Sq s = b.squares[i];
    Sq m = left_right ? Sq{s.r, lo + hi - s.c} : Sq{lo + hi - s.r, s.c};
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("board is not mirror-closed");
    out[i] = it->second;
  }
  return out;
}

std::vector<int> tri_reflection(const Board& b, bool left_right) {
  // left-right: screen x -> K - x with pointing kept; top-bottom: row
  // r -> R - r and x kept with pointing swapped.
  auto screen_x = [](Tri t) { return 2 * t.c + t.p - t.r; };
  int xlo = screen_x(b.triangles[0]), xhi = xlo;
  int rlo = b.triangles[0].r, rhi = rlo;
  for (Tri t : b.triangles) {
    xlo = std::min(xlo, screen_x(t));
    xhi = std::max(xhi, screen_x(t));
    rlo = std::min(rlo, t.r);
    rhi = std::max(rhi, t.r);
  }
  int K = xlo + xhi, R = rlo + rhi;
  if (left_right ? (K % 2 != 0) : (((R % 2) + 2) % 2 != 1))
    throw std::invalid_argument("board is not mirror-closed");
  std::map<Tri, int> index;
  for (size_t i = 0; i < b.triangles.size(); ++i) index[b.triangles[i]] = static_cast<int>(i);
  std::vector<int> out(b.triangles.size());
  for (size_t i = 0; i < b.triangles.size(); ++i) {
    Tri t = b.triangles[i];
    Tri m;
    if (left_right) {
      m = Tri{t.r, K / 2 - t.c - t.p + t.r, t.p};
    } else {
      m = Tri{R - t.r, t.c + t.p - t.r + (R - 1) / 2, 1 - t.p};
    }
    auto it = index.find(m);
    if (it == index.end()) throw std::invalid_argument("board is not mirror-closed");
    out[i] = it->second;
  }
  return out;
}

int preserved_edges(const std::vector<CellEdge>& edges, const std::vector<int>& refl) {
  std::set<CellEdge> have(edges.begin(), edges.end());
  int n = 0;
  for (CellEdge e : edges) {
    int a = refl[e.first], b = refl[e.second];
    if (have.count({std::min(a, b), std::max(a, b)})) ++n;
  }
  return n;
}

}  // namespace

SymmetryScore symmetry_scores(const PieceMap& map) {
  auto edges = between_piece_edges(map);
  std::vector<int> lr, tb;
  if (map.board.kind == GridKind::Square) {
    lr = square_reflection(map.board, true);
    tb = square_reflection(map.board, false);
  } else if (map.board.kind == GridKind::Triangular) {
    lr = tri_reflection(map.board, true);
    tb = tri_reflection(map.board, false);
  } else {
    throw std::invalid_argument("no symmetry scores on segment boards");
  }
  return {preserved_edges(edges, lr), preserved_edges(edges, tb)};
}

void MaxSymmetric::add(uint64_t id, SymmetryScore s) {
  auto key = [](SymmetryScore x) {
    return std::pair{std::max(x.hsym, x.vsym), std::min(x.hsym, x.vsym)};
  };
  if (ids_.empty() || key(s) > key(best_)) {
    best_ = s;
    ids_ = {id};
  } else if (key(s) == key(best_)) {
    ids_.push_back(id);
  }
}

}  // namespace dlx
