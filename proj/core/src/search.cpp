#include "dlx/search.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dlx {

void SearchStats::merge(const SearchStats& o, size_t level_shift) {
  for (size_t i = 0; i < o.nodes_per_level.size(); ++i) {
    size_t lv = i + level_shift;
    if (nodes_per_level.size() <= lv) nodes_per_level.resize(lv + 1);
    nodes_per_level[lv] += o.nodes_per_level[i];
  }
  for (size_t i = 0; i < o.updates_per_level.size(); ++i) {
    size_t lv = i + level_shift;
    if (updates_per_level.size() <= lv) updates_per_level.resize(lv + 1);
    updates_per_level[lv] += o.updates_per_level[i];
  }
  total_nodes += o.total_nodes;
  total_updates += o.total_updates;
  total_undos += o.total_undos;
  total_solutions += o.total_solutions;
}

SearchStats search(LinkedMatrix& m, const SearchOptions& opt,
                   const SolutionVisitor& visitor) {
  SearchStats st;
  st.add_node(0);
  struct Frame {
    ColumnHandle col;
    CellHandle cur;
  };
  std::vector<Frame> fr;
  bool stopping = false;

  auto emit = [&]() {
    Solution s;
    s.discovery_index = st.total_solutions;
    ++st.total_solutions;
    if (visitor) {
      s.rows.reserve(fr.size());
      for (const Frame& f : fr) {
        Solution::Row r;
        r.ordinal = m.row_of(f.cur);
        if (opt.collect_names) r.names = m.row_names_from(f.cur);
        s.rows.push_back(std::move(r));
      }
      if (!visitor(s)) stopping = true;
    }
    if (opt.solution_limit && st.total_solutions >= *opt.solution_limit)
      stopping = true;
  };

  bool descend = true;
  for (;;) {
    if (descend) {
      descend = false;
      ColumnHandle c = m.choose_column(opt.heuristic);
      if (c == kNoColumn) {
        emit();
      } else if (!(m.column(c).size == 0 && opt.skip_empty_branch_column)) {
        st.add_updates(fr.size(), m.cover(c));
        fr.push_back({c, m.down(m.head(c))});
        goto advance;
      }
      // dead end or solution: fall through and resume the parent frame
    }
    if (fr.empty()) return st;
    {
      Frame& f = fr.back();
      // Undo the covers of the row we just finished exploring.
      for (CellHandle j = m.left(f.cur); j != f.cur; j = m.left(j))
        st.total_undos += m.uncover(m.column_of(j));
      f.cur = m.down(f.cur);
    }
  advance : {
    Frame& f = fr.back();
    if (stopping || f.cur == m.head(f.col)) {
      st.total_undos += m.uncover(f.col);
      fr.pop_back();
      continue;
    }
    st.add_node(fr.size());
    for (CellHandle j = m.right(f.cur); j != f.cur; j = m.right(j))
      st.add_updates(fr.size() - 1, m.cover(m.column_of(j)));
    descend = true;
  }
  }
}

ForcedPrefix::ForcedPrefix(ForcedPrefix&& o) noexcept { *this = std::move(o); }

ForcedPrefix& ForcedPrefix::operator=(ForcedPrefix&& o) noexcept {
  release();
  m_ = o.m_;
  covered_ = std::move(o.covered_);
  rows_ = std::move(o.rows_);
  updates_ = o.updates_;
  o.m_ = nullptr;
  o.covered_.clear();
  return *this;
}

void ForcedPrefix::release() {
  if (!m_) return;
  for (auto it = covered_.rbegin(); it != covered_.rend(); ++it) m_->uncover(*it);
  covered_.clear();
  m_ = nullptr;
}

ForcedPrefix force_rows(LinkedMatrix& m, std::span<const int> row_ordinals) {
  ForcedPrefix p;
  p.m_ = &m;
  try {
    for (int r : row_ordinals) {
      if (r < 1 || r > m.row_count())
        throw std::invalid_argument("forced row ordinal out of range: " +
                                    std::to_string(r));
      CellHandle first = m.row_first_cell(r);
      std::vector<ColumnHandle> cols{m.column_of(first)};
      for (CellHandle j = m.right(first); j != first; j = m.right(j))
        cols.push_back(m.column_of(j));
      for (ColumnHandle c : cols)
        if (m.column(c).covered)
          throw std::invalid_argument("forced row " + std::to_string(r) +
                                      " hits already covered column " +
                                      m.column_name(c));
      Solution::Row row{r, m.row_names_from(first)};
      for (ColumnHandle c : cols) {
        p.updates_ += m.cover(c);
        p.covered_.push_back(c);
      }
      p.rows_.push_back(std::move(row));
    }
  } catch (...) {
    p.release();
    throw;
  }
  return p;
}

std::vector<SplitDescriptor> split(const CoverProblem& problem,
                                   const SearchOptions& opt, int depth) {
  if (depth < 1) throw std::invalid_argument("split depth must be >= 1");
  LinkedMatrix m(problem);
  std::vector<SplitDescriptor> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, int d) -> void {
    ColumnHandle c = m.choose_column(opt.heuristic);
    if (c == kNoColumn) {
      // The prefix already solves the problem; keep it as its own subproblem.
      out.push_back({prefix});
      return;
    }
    if (m.column(c).size == 0) return;
    m.cover(c);
    for (CellHandle i = m.down(m.head(c)); i != m.head(c); i = m.down(i)) {
      prefix.push_back(m.row_of(i));
      if (d == 1) {
        out.push_back({prefix});
      } else {
        for (CellHandle j = m.right(i); j != i; j = m.right(j))
          m.cover(m.column_of(j));
        self(self, d - 1);
        for (CellHandle j = m.left(i); j != i; j = m.left(j))
          m.uncover(m.column_of(j));
      }
      prefix.pop_back();
    }
    m.uncover(c);
  };
  rec(rec, depth);
  return out;
}

EstimateReport estimate(LinkedMatrix& m, const SearchOptions& opt,
                        uint64_t probes) {
  if (probes < 1) throw std::invalid_argument("probes must be >= 1");
  std::mt19937_64 rng(opt.rng_seed);
  double n_sum = 0, n_sumsq = 0, u_sum = 0, u_sumsq = 0;
  std::vector<ColumnHandle> covered;
  for (uint64_t probe = 0; probe < probes; ++probe) {
    double w = 1, nodes = 1, updates = 0;
    covered.clear();
    for (;;) {
      ColumnHandle c = m.choose_column(opt.heuristic);
      if (c == kNoColumn) break;
      int32_t d = m.column(c).size;
      if (d == 0 && opt.skip_empty_branch_column) break;
      updates += w * static_cast<double>(m.cover(c));
      covered.push_back(c);
      if (d == 0) break;
      nodes += w * d;
      std::uniform_int_distribution<int32_t> pick(0, d - 1);
      CellHandle i = m.down(m.head(c));
      for (int32_t k = pick(rng); k > 0; --k) i = m.down(i);
      double wd = w * d;
      for (CellHandle j = m.right(i); j != i; j = m.right(j)) {
        ColumnHandle cj = m.column_of(j);
        updates += wd * static_cast<double>(m.cover(cj));
        covered.push_back(cj);
      }
      w = wd;
    }
    for (auto it = covered.rbegin(); it != covered.rend(); ++it) m.uncover(*it);
    n_sum += nodes;
    n_sumsq += nodes * nodes;
    u_sum += updates;
    u_sumsq += updates * updates;
  }
  EstimateReport rep;
  rep.probes = probes;
  double n = static_cast<double>(probes);
  rep.nodes_mean = n_sum / n;
  rep.updates_mean = u_sum / n;
  if (probes > 1) {
    double nvar = std::max(0.0, (n_sumsq - n_sum * n_sum / n) / (n - 1));
    double uvar = std::max(0.0, (u_sumsq - u_sum * u_sum / n) / (n - 1));
    rep.nodes_stderr = std::sqrt(nvar / n);
    rep.updates_stderr = std::sqrt(uvar / n);
  }
  return rep;
}

}  // namespace dlx
