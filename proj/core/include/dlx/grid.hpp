#pragma once

#include <array>
#include <compare>
#include <string>

namespace dlx {

enum class GridKind { Square, Triangular, Segment };

struct Sq {
  int r = 0, c = 0;
  auto operator<=>(const Sq&) const = default;
};

// Triangle cell; p = 0 points up, p = 1 points down. Rows grow downward on
// screen, up (r,c) borders down (r,c-1), down (r,c) and down (r+1,c), and the
// screen x position of a triangle is 2c + p - r.
struct Tri {
  int r = 0, c = 0, p = 0;
  auto operator<=>(const Tri&) const = default;
};

// Unit grid segment: horizontal (x,y)-(x+1,y) or vertical (x,y)-(x,y+1).
struct Seg {
  int x = 0, y = 0;
  int vertical = 0;
  auto operator<=>(const Seg&) const = default;
};

std::array<Sq, 4> neighbors(Sq s);
std::array<Tri, 3> neighbors(Tri t);

// Oblique coordinates (a,b,g) with a+b+g = 1+p; rotations and mirrors are
// coordinate permutations there, which keeps the transform code short.
std::array<int, 3> to_triple(Tri t);
Tri from_triple(const std::array<int, 3>& abg);
std::array<int, 3> triple_rot60(const std::array<int, 3>& t);
std::array<int, 3> triple_mirror(const std::array<int, 3>& t);  // up-preserving

// Compact names ("23", "u05", "H23") when both coordinates are single
// digits, dotted ("2.13", "u0.13", "H2.13") otherwise.
std::string cell_name(Sq s);
std::string cell_name(Tri t);
std::string cell_name(Seg s);
std::string junction_name(int x, int y);

}  // namespace dlx
