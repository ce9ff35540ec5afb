#include "dlx/word_square.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dlx {

namespace {

struct Slot {
  std::string name;
  std::vector<std::pair<int, int>> cells;  // position t -> (i, j)
};

std::string cell_tag(int i, int j) {
  if (i <= 9 && j <= 9) return "c" + std::to_string(i) + std::to_string(j);
  return "c" + std::to_string(i) + "." + std::to_string(j) + ".";
}

std::string layer_column(int i, int j, char letter, int layer) {
  return cell_tag(i, j) + letter + std::to_string(layer);
}

}  // namespace

CoverProblem word_square_problem(const WordSquareSpec& spec) {
  int n = spec.n;
  if (n < 1) throw std::invalid_argument("word square side must be >= 1");
  if (spec.words.empty()) throw std::invalid_argument("empty dictionary");
  std::set<char> alphabet;
  for (const auto& w : spec.words) {
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("word of wrong length: " + w);
    for (char ch : w) {
      if (ch < 'a' || ch > 'z')
        throw std::invalid_argument("word outside alphabet: " + w);
      alphabet.insert(ch);
    }
  }

  std::vector<Slot> slots;
  for (int i = 0; i < n; ++i) {
    Slot s{"R" + std::to_string(i), {}};
    for (int t = 0; t < n; ++t) s.cells.emplace_back(i, t);
    slots.push_back(std::move(s));
  }
  for (int j = 0; j < n; ++j) {
    Slot s{"C" + std::to_string(j), {}};
    for (int t = 0; t < n; ++t) s.cells.emplace_back(t, j);
    slots.push_back(std::move(s));
  }
  {
    Slot dm{"DM", {}};
    for (int t = 0; t < n; ++t) dm.cells.emplace_back(t, t);
    slots.push_back(std::move(dm));
    Slot da{"DA", {}};
    for (int t = 0; t < n; ++t) da.cells.emplace_back(n - 1 - t, t);
    slots.push_back(std::move(da));
  }

  // slots covering each cell, in slot index order
  std::map<std::pair<int, int>, std::vector<int>> covering;
  for (size_t si = 0; si < slots.size(); ++si)
    for (auto& cell : slots[si].cells) covering[cell].push_back(static_cast<int>(si));

  CoverProblem p;
  for (const Slot& s : slots) p.add_column(s.name);
  for (const auto& [cell, through] : covering) {
    int k = static_cast<int>(through.size());
    for (int layer = 1; layer < k; ++layer)
      for (char ch : alphabet)
        p.add_column(layer_column(cell.first, cell.second, ch, layer),
                     ColumnKind::Secondary);
  }
  if (spec.distinct_words)
    for (size_t w = 0; w < spec.words.size(); ++w)
      p.add_column("w" + std::to_string(w), ColumnKind::Secondary);

  for (size_t si = 0; si < slots.size(); ++si) {
    const Slot& slot = slots[si];
    for (size_t wi = 0; wi < spec.words.size(); ++wi) {
      const std::string& word = spec.words[wi];
      std::vector<std::string> row{slot.name};
      for (int t = 0; t < n; ++t) {
        auto [i, j] = slot.cells[t];
        char letter = word[t];
        const auto& through = covering.at({i, j});
        int k = static_cast<int>(through.size());
        int pos = static_cast<int>(std::find(through.begin(), through.end(),
                                             static_cast<int>(si)) -
                                   through.begin()) + 1;
        if (pos == 1) {
          row.push_back(layer_column(i, j, letter, 1));
        } else {
          for (char ch : alphabet)
            if (ch != letter) row.push_back(layer_column(i, j, ch, pos - 1));
          if (pos < k) row.push_back(layer_column(i, j, letter, pos));
        }
      }
      if (spec.distinct_words) row.push_back("w" + std::to_string(wi));
      p.add_row(std::span<const std::string>(row));
      p.set_row_label(p.row_count(), slot.name + " " + word);
    }
  }
  return p;
}

std::vector<std::string> load_dictionary(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace dlx
