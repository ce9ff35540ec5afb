#include "doctest.h"

#include <set>
#include <sstream>

#include "dlx/search.hpp"
#include "dlx/word_square.hpp"

using namespace dlx;

namespace {

uint64_t dlx_count(const CoverProblem& p) {
  LinkedMatrix m(p);
  return search(m, {}).total_solutions;
}

// Oracle: enumerate letter grids over the words' alphabet and accept a grid
// when every row, column and both diagonals read as dictionary words.
uint64_t brute_force_squares(int n, const std::vector<std::string>& words, bool distinct) {
  std::set<std::string> dict(words.begin(), words.end());
  std::set<char> alphabet_set;
  for (const auto& w : words)
    for (char c : w) alphabet_set.insert(c);
  std::vector<char> alphabet(alphabet_set.begin(), alphabet_set.end());

  int cells = n * n;
  uint64_t count = 0;
  std::vector<int> grid(cells, 0);
  auto slot_words = [&](const std::vector<char>& g) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
      std::string w;
      for (int j = 0; j < n; ++j) w += g[i * n + j];
      out.push_back(w);
    }
    for (int j = 0; j < n; ++j) {
      std::string w;
      for (int i = 0; i < n; ++i) w += g[i * n + j];
      out.push_back(w);
    }
    std::string dm, da;
    for (int t = 0; t < n; ++t) dm += g[t * n + t];
    for (int t = 0; t < n; ++t) da += g[(n - 1 - t) * n + t];
    out.push_back(dm);
    out.push_back(da);
    return out;
  };
  uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= alphabet.size();
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t x = code;
    std::vector<char> g(cells);
    for (int i = 0; i < cells; ++i) {
      g[i] = alphabet[x % alphabet.size()];
      x /= alphabet.size();
    }
    auto slots = slot_words(g);
    bool ok = true;
    for (const auto& w : slots)
      if (!dict.count(w)) {
        ok = false;
        break;
      }
    if (ok && distinct) {
      std::set<std::string> used(slots.begin(), slots.end());
      if (used.size() != slots.size()) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("slot and secondary column layout") {
  WordSquareSpec spec;
  spec.n = 2;
  spec.words = {"ab", "ba"};
  auto p = word_square_problem(spec);
  // 2n + 2 = 6 primary slot columns
  CHECK(p.primary_count() == 6);
  // every cell is covered by a row, a column and exactly one diagonal, so
  // each of the 4 cells gets 2 layers of 2 letters
  CHECK(p.secondary_count() == 16);
  // one row per (slot, word) pair
  CHECK(p.row_count() == 12);
}

TEST_CASE("n=2 counts match grid enumeration") {
  std::vector<std::vector<std::string>> dicts{
      {"aa"},
      {"ab", "ba"},
      {"aa", "ab", "ba", "bb"},
      {"aa", "ab", "bb"},
      {"ab", "ba", "bb", "ca", "ac"},
  };
  for (const auto& words : dicts) {
    WordSquareSpec spec;
    spec.n = 2;
    spec.words = words;
    spec.distinct_words = false;
    CHECK(dlx_count(word_square_problem(spec)) == brute_force_squares(2, words, false));
    spec.distinct_words = true;
    CHECK(dlx_count(word_square_problem(spec)) == brute_force_squares(2, words, true));
  }
}

TEST_CASE("n=3 counts match grid enumeration") {
  std::vector<std::string> words{"aab", "aba", "baa", "bab", "bba", "abb", "aaa"};
  WordSquareSpec spec;
  spec.n = 3;
  spec.words = words;
  CHECK(dlx_count(word_square_problem(spec)) == brute_force_squares(3, words, false));
  spec.distinct_words = true;
  CHECK(dlx_count(word_square_problem(spec)) == brute_force_squares(3, words, true));
}

TEST_CASE("all-same-letter square solves trivially") {
  WordSquareSpec spec;
  spec.n = 3;
  spec.words = {"aaa"};
  CHECK(dlx_count(word_square_problem(spec)) == 1);
  spec.distinct_words = true;
  CHECK(dlx_count(word_square_problem(spec)) == 0);
}

TEST_CASE("input validation") {
  WordSquareSpec spec;
  spec.n = 3;
  spec.words = {"ab"};
  CHECK_THROWS(word_square_problem(spec));
  spec.words = {"aBc"};
  CHECK_THROWS(word_square_problem(spec));
  spec.words = {};
  CHECK_THROWS(word_square_problem(spec));
}

TEST_CASE("load_dictionary strips blank lines and carriage returns") {
  std::istringstream in("cat\r\n\ndog\n");
  auto words = load_dictionary(in);
  CHECK(words == std::vector<std::string>{"cat", "dog"});
}
