#include "dlx/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

namespace dlx {

std::string format_profile(const SearchStats& st) {
  size_t levels = std::max(st.nodes_per_level.size(), st.updates_per_level.size());
  auto at = [](const std::vector<uint64_t>& v, size_t i) -> uint64_t {
    return i < v.size() ? v[i] : 0;
  };
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%5s %12s %8s %15s %8s %10s\n", "level",
                "nodes", "nodes%", "updates", "upd%", "upd/node");
  out += buf;
  double tn = static_cast<double>(std::max<uint64_t>(st.total_nodes, 1));
  double tu = static_cast<double>(std::max<uint64_t>(st.total_updates, 1));
  for (size_t i = 0; i < levels; ++i) {
    uint64_t n = at(st.nodes_per_level, i);
    uint64_t u = at(st.updates_per_level, i);
    std::snprintf(buf, sizeof buf, "%5zu %12llu %7.1f%% %15llu %7.1f%% %10.1f\n",
                  i, static_cast<unsigned long long>(n), 100.0 * n / tn,
                  static_cast<unsigned long long>(u), 100.0 * u / tu,
                  n ? static_cast<double>(u) / n : 0.0);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%5s %12llu %7.1f%% %15llu %7.1f%% %10.1f\n",
                "total", static_cast<unsigned long long>(st.total_nodes), 100.0,
                static_cast<unsigned long long>(st.total_updates), 100.0,
                st.total_nodes ? static_cast<double>(st.total_updates) / st.total_nodes
                               : 0.0);
  out += buf;
  return out;
}

namespace {

struct SubResult {
  SearchStats stats;
  std::vector<Solution> solutions;
};

SubResult run_one(const CoverProblem& problem, const RunOptions& ro,
                  const std::vector<int>& extra_forced,
                  std::atomic<uint64_t>* global_found) {
  LinkedMatrix m(problem);
  std::vector<int> forced = ro.forced_rows;
  forced.insert(forced.end(), extra_forced.begin(), extra_forced.end());
  ForcedPrefix prefix = force_rows(m, forced);

  SubResult sub;
  SearchOptions so = ro.search;
  so.solution_limit.reset();  // the run-level limit is enforced by the visitor
  bool need_visitor = ro.collect_solutions || ro.solution_limit.has_value();
  SolutionVisitor visitor;
  if (need_visitor)
    visitor = [&](const Solution& s) {
      uint64_t idx = global_found->fetch_add(1);
      if (ro.solution_limit && idx >= *ro.solution_limit) return false;
      if (ro.collect_solutions) {
        Solution full;
        full.rows.reserve(prefix.rows().size() + s.rows.size());
        for (const auto& r : prefix.rows()) full.rows.push_back(r);
        for (const auto& r : s.rows) full.rows.push_back(r);
        sub.solutions.push_back(std::move(full));
      }
      return !(ro.solution_limit && idx + 1 >= *ro.solution_limit);
    };
  sub.stats = search(m, so, visitor);
  sub.stats.add_updates(0, prefix.updates());
  return sub;
}

}  // namespace

RunResult run_search(const CoverProblem& problem, const RunOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  RunResult result;
  std::atomic<uint64_t> found{0};

  if (options.split_depth <= 0) {
    SubResult sub = run_one(problem, options, {}, &found);
    result.stats = std::move(sub.stats);
    result.solutions = std::move(sub.solutions);
  } else {
    // Descriptors are computed on the forced problem so split and force
    // compose; each worker owns its matrix and claims descriptors in order.
    std::vector<SplitDescriptor> descs;
    {
      LinkedMatrix m(problem);
      ForcedPrefix prefix = force_rows(m, options.forced_rows);
      std::vector<int> cur;
      auto rec = [&](auto&& self, int d) -> void {
        ColumnHandle c = m.choose_column(options.search.heuristic);
        if (c == kNoColumn) {
          descs.push_back({cur});
          return;
        }
        if (m.column(c).size == 0) return;
        m.cover(c);
        for (CellHandle i = m.down(m.head(c)); i != m.head(c); i = m.down(i)) {
          cur.push_back(m.row_of(i));
          if (d == 1) {
            descs.push_back({cur});
          } else {
            for (CellHandle j = m.right(i); j != i; j = m.right(j))
              m.cover(m.column_of(j));
            self(self, d - 1);
            for (CellHandle j = m.left(i); j != i; j = m.left(j))
              m.uncover(m.column_of(j));
          }
          cur.pop_back();
        }
        m.uncover(c);
      };
      rec(rec, options.split_depth);
    }

    std::vector<SubResult> subs(descs.size());
    std::atomic<size_t> next{0};
    int jobs = std::max(1, options.jobs);
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= descs.size()) return;
        if (options.solution_limit && found.load() >= *options.solution_limit)
          return;
        subs[i] = run_one(problem, options, descs[i].forced_rows, &found);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    size_t shift = options.split_depth;
    for (auto& sub : subs) {
      result.stats.merge(sub.stats, shift);
      for (auto& s : sub.solutions) result.solutions.push_back(std::move(s));
    }
  }

  if (options.solution_limit &&
      result.solutions.size() > *options.solution_limit)
    result.solutions.resize(*options.solution_limit);
  for (size_t i = 0; i < result.solutions.size(); ++i)
    result.solutions[i].discovery_index = i;
  if (options.solution_limit)
    result.stats.total_solutions =
        std::min<uint64_t>(result.stats.total_solutions,
                           *options.solution_limit);

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return result;
}

}  // namespace dlx
