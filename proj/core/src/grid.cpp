#include "dlx/grid.hpp"

namespace dlx {

std::array<Sq, 4> neighbors(Sq s) {
  return {Sq{s.r - 1, s.c}, Sq{s.r, s.c - 1}, Sq{s.r, s.c + 1}, Sq{s.r + 1, s.c}};
}

std::array<Tri, 3> neighbors(Tri t) {
  if (t.p == 0)
    return {Tri{t.r, t.c - 1, 1}, Tri{t.r, t.c, 1}, Tri{t.r + 1, t.c, 1}};
  return {Tri{t.r, t.c, 0}, Tri{t.r, t.c + 1, 0}, Tri{t.r - 1, t.c, 0}};
}

std::array<int, 3> to_triple(Tri t) { return {t.c - t.r + t.p, 1 - t.c, t.r}; }

Tri from_triple(const std::array<int, 3>& abg) {
  int sum = abg[0] + abg[1] + abg[2];
  return Tri{abg[2], 1 - abg[1], sum - 1};
}

std::array<int, 3> triple_rot60(const std::array<int, 3>& t) {
  return {1 - t[1], 1 - t[2], 1 - t[0]};
}

std::array<int, 3> triple_mirror(const std::array<int, 3>& t) {
  return {t[0], t[2], t[1]};
}

namespace {

std::string coord_pair(int a, int b) {
  if (a >= 0 && a <= 9 && b >= 0 && b <= 9)
    return std::to_string(a) + std::to_string(b);
  return std::to_string(a) + "." + std::to_string(b);
}

}  // namespace

std::string cell_name(Sq s) { return coord_pair(s.r, s.c); }

std::string cell_name(Tri t) {
  return (t.p ? "d" : "u") + coord_pair(t.r, t.c);
}

std::string cell_name(Seg s) {
  return (s.vertical ? "V" : "H") + coord_pair(s.x, s.y);
}

std::string junction_name(int x, int y) { return "I" + coord_pair(x, y); }

}  // namespace dlx
