#pragma once

#include <istream>
#include <string>
#include <vector>

#include "dlx/cover_problem.hpp"

namespace dlx {

struct WordSquareSpec {
  int n = 3;
  std::vector<std::string> words;  // lowercase, all of length n
  bool distinct_words = false;
};

// Word square with both diagonals as generalized cover. Primary columns are
// the 2n+2 slots (rows, columns, main diagonal, antidiagonal read upward from
// bottom left); rows of the matrix are (slot, word) pairs. Cell agreement is
// enforced through layered secondary columns: the slots covering a cell are
// ordered, the first claims the layer-1 (cell, letter) column for its letter,
// and each later slot at position i claims every layer-(i-1) column whose
// letter differs from its own plus, when another slot follows, the layer-i
// column for its letter. Two placements then conflict exactly when they
// disagree at a shared cell.
CoverProblem word_square_problem(const WordSquareSpec& spec);

// One word per line; blank lines skipped.
std::vector<std::string> load_dictionary(std::istream& in);

}  // namespace dlx
