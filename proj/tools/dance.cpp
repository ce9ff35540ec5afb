// Command-line front end: cover-matrix solving, puzzle generators, tree-size
// estimation, and solution symmetry scoring.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dlx/polyform.hpp"
#include "dlx/queens.hpp"
#include "dlx/report.hpp"
#include "dlx/symmetry.hpp"
#include "dlx/word_square.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dlx::Heuristic parse_heuristic(const std::string& s) {
  if (s == "s" || s == "min" || s == "min-size") return dlx::Heuristic::MinSize;
  if (s == "leftmost" || s == "l") return dlx::Heuristic::Leftmost;
  throw std::runtime_error("unknown heuristic: " + s);
}

// A --force argument is either a 1-based row ordinal or a space-separated
// list of column names identifying a unique row.
int resolve_forced_row(const dlx::CoverProblem& p, const std::string& spec) {
  try {
    size_t pos = 0;
    int ordinal = std::stoi(spec, &pos);
    if (pos == spec.size()) {
      if (ordinal < 1 || ordinal > p.row_count())
        throw std::runtime_error("forced row ordinal out of range: " + spec);
      return ordinal;
    }
  } catch (const std::invalid_argument&) {
  }
  std::istringstream iss(spec);
  std::vector<std::string> names;
  std::string tok;
  while (iss >> tok) names.push_back(tok);
  auto rows = p.rows_containing(names);
  std::vector<int> exact;
  for (int r : rows)
    if (p.row(r).size() == names.size()) exact.push_back(r);
  if (exact.size() == 1) return exact[0];
  if (rows.size() == 1) return rows[0];
  if (rows.empty()) throw std::runtime_error("no row matches --force \"" + spec + "\"");
  throw std::runtime_error("ambiguous --force \"" + spec + "\" (" +
                           std::to_string(rows.size()) + " rows match)");
}

std::string solution_line(const dlx::Solution& s) {
  std::string out;
  for (const auto& row : s.rows) {
    if (!out.empty()) out += " / ";
    for (size_t i = 0; i < row.names.size(); ++i) {
      if (i) out += ' ';
      out += row.names[i];
    }
  }
  return out;
}

struct SolveArgs {
  std::string input;
  std::string preset;
  std::string heuristic = "s";
  bool no_skip_empty = false;
  bool stats = false;
  bool machine = false;
  bool quiet = false;
  std::optional<uint64_t> limit;
  std::vector<std::string> force;
  int split_depth = 0;
  int jobs = 1;
  uint64_t seed = 1;
};

int cmd_solve(const SolveArgs& a) {
  dlx::CoverProblem problem;
  std::vector<int> forced;
  if (!a.preset.empty()) {
    auto preset = dlx::make_preset(a.preset);
    problem = std::move(preset.problem);
    forced = preset.forced_rows;
  } else {
    problem = dlx::parse_cover_text(read_input(a.input));
  }
  for (const auto& f : a.force) forced.push_back(resolve_forced_row(problem, f));

  dlx::RunOptions opt;
  opt.search.heuristic = parse_heuristic(a.heuristic);
  opt.search.skip_empty_branch_column = !a.no_skip_empty;
  opt.search.rng_seed = a.seed;
  opt.forced_rows = forced;
  opt.split_depth = a.split_depth;
  opt.jobs = a.jobs;
  opt.solution_limit = a.limit;
  opt.collect_solutions = !a.quiet || a.machine;

  auto result = dlx::run_search(problem, opt);

  if (a.machine) {
    for (const auto& s : result.solutions) {
      json rows = json::array();
      for (const auto& r : s.rows) rows.push_back({{"ordinal", r.ordinal}, {"names", r.names}});
      std::cout << json{{"event", "solution"}, {"index", s.discovery_index}, {"rows", rows}}
                << '\n';
    }
    json summary{{"event", "summary"},
                 {"solutions", result.stats.total_solutions},
                 {"nodes", result.stats.total_nodes},
                 {"updates", result.stats.total_updates},
                 {"nodes_per_level", result.stats.nodes_per_level},
                 {"updates_per_level", result.stats.updates_per_level},
                 {"wall_seconds", result.wall_seconds}};
    std::cout << summary << '\n';
  } else {
    if (!a.quiet)
      for (const auto& s : result.solutions) std::cout << solution_line(s) << '\n';
    if (a.stats) {
      std::cout << "solutions " << result.stats.total_solutions << ", nodes "
                << result.stats.total_nodes << ", updates " << result.stats.total_updates
                << '\n';
      std::cout << dlx::format_profile(result.stats);
      double mups = result.wall_seconds > 0
                        ? result.stats.total_updates / result.wall_seconds / 1e6
                        : 0;
      std::cout << "wall " << result.wall_seconds << " s, " << mups << " Mupdates/s\n";
    }
  }
  return result.stats.total_solutions > 0 ? 0 : 1;
}

void print_problem(const dlx::CoverProblem& p, const std::vector<int>& forced) {
  if (!forced.empty()) {
    std::cout << "# force:";
    for (int r : forced) std::cout << ' ' << r;
    std::cout << '\n';
  }
  std::cout << dlx::emit_cover_text(p);
}

void exclude_pieces(const std::vector<std::string>& excluded, auto& pieces) {
  for (const auto& x : excluded) {
    bool found = false;
    for (size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].name == x) {
        pieces.erase(pieces.begin() + i);
        found = true;
        break;
      }
    if (!found) throw std::runtime_error("no piece named " + x);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dance: generalized exact cover via dancing links"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve a cover matrix");
  solve->add_option("input", sa.input, "matrix file, or - for stdin");
  solve->add_option("--preset", sa.preset, "built-in problem preset");
  solve->add_option("--heuristic", sa.heuristic, "s (min column size) or leftmost");
  solve->add_flag("--no-skip-empty", sa.no_skip_empty,
                  "cover an empty chosen column instead of pruning in place");
  solve->add_flag("--stats", sa.stats, "print search profile");
  solve->add_flag("--machine", sa.machine, "JSON lines output");
  solve->add_flag("--quiet", sa.quiet, "suppress solution lines");
  uint64_t limit_val = 0;
  auto* limit_opt = solve->add_option("--limit", limit_val, "stop after this many solutions");
  solve->add_option("--force", sa.force,
                    "commit a row first (ordinal or quoted column names); repeatable");
  solve->add_option("--split-depth", sa.split_depth, "partition the search at this depth");
  solve->add_option("--jobs", sa.jobs, "parallel workers over split parts");
  solve->add_option("--seed", sa.seed, "random seed (tie-breaking and estimation)");

  std::string est_input, est_preset, est_heuristic = "s";
  bool est_no_skip = false;
  uint64_t est_probes = 1000, est_seed = 1;
  auto* est = app.add_subcommand("estimate", "Monte Carlo search-tree size estimate");
  est->add_option("input", est_input, "matrix file, or - for stdin");
  est->add_option("--preset", est_preset, "built-in problem preset");
  est->add_option("--probes", est_probes, "number of random descents");
  est->add_option("--seed", est_seed, "random seed");
  est->add_option("--heuristic", est_heuristic, "s or leftmost");
  est->add_flag("--no-skip-empty", est_no_skip, "match solve --no-skip-empty");

  std::string score_board, score_input;
  auto* score = app.add_subcommand("score", "symmetry scores for packing solutions");
  score->add_option("--board", score_board, "board spec the solutions tile")->required();
  score->add_option("input", score_input, "solution lines, or - for stdin");

  auto* presets = app.add_subcommand("presets", "list built-in presets");

  std::string conv_input;
  auto* convert = app.add_subcommand("convert", "generalized cover to pure exact cover");
  convert->add_option("input", conv_input, "matrix file, or - for stdin");

  // generators
  std::string po_board = "scott8x8", po_order = "pieces";
  bool po_one_sided = false;
  std::vector<std::string> po_exclude;
  auto* gp = app.add_subcommand("gen-polyomino", "pentomino packing matrix");
  gp->add_option("--board", po_board, "board spec (scott8x8, rect:RxC, shape file)");
  gp->add_flag("--one-sided", po_one_sided, "distinguish mirror images");
  gp->add_option("--exclude", po_exclude, "drop a piece by name; repeatable");
  gp->add_option("--order", po_order, "column order: pieces or lex");

  std::string pi_board = "rhombus6x6", pi_order = "pieces";
  bool pi_one_sided = false;
  std::vector<std::string> pi_exclude;
  auto* gi = app.add_subcommand("gen-polyiamond", "hexiamond packing matrix");
  gi->add_option("--board", pi_board, "board spec (rhombus6x6, obeirne-hexagon, shape file)");
  gi->add_flag("--one-sided", pi_one_sided, "distinguish mirror images");
  gi->add_option("--exclude", pi_exclude, "drop a piece by name; repeatable");
  gi->add_option("--order", pi_order, "column order: pieces or lex");

  std::string ps_board = "grid:5x5-segments", ps_order = "pieces";
  bool ps_one_sided = false, ps_welded = false;
  std::vector<std::string> ps_exclude;
  auto* gs = app.add_subcommand("gen-polystick", "tetrastick packing matrix");
  gs->add_option("--board", ps_board, "board spec (grid:NxN-segments, aztec-diamond)");
  gs->add_flag("--one-sided", ps_one_sided, "distinguish mirror images");
  gs->add_flag("--welded-only", ps_welded, "keep only pieces with a 3- or 4-way joint");
  gs->add_option("--exclude", ps_exclude, "drop a piece by name; repeatable");
  gs->add_option("--order", ps_order, "column order: pieces or lex");

  int q_n = 8;
  bool q_natural = false, q_files_secondary = false;
  auto* gq = app.add_subcommand("gen-queens", "n-queens matrix with secondary diagonals");
  gq->add_option("n", q_n, "board size")->required();
  gq->add_flag("--natural", q_natural, "rank/file columns in natural order, not organ-pipe");
  gq->add_flag("--files-secondary", q_files_secondary, "make file columns secondary");

  int ws_n = 4;
  std::string ws_dict;
  bool ws_distinct = false;
  auto* gw = app.add_subcommand("gen-wordsquare", "double word square with both diagonals");
  gw->add_option("--n", ws_n, "square side");
  gw->add_option("--dict", ws_dict, "word list, one per line")->required();
  gw->add_flag("--distinct", ws_distinct, "forbid reusing a word in two slots");

  std::string dom_board = "mutilated-chessboard";
  auto* gd = app.add_subcommand("gen-dominoes", "indistinguishable-domino tiling matrix");
  gd->add_option("--board", dom_board, "board spec");

  try {
    app.parse(argc, argv);

    if (*solve) {
      if (*limit_opt) sa.limit = limit_val;
      return cmd_solve(sa);
    }
    if (*est) {
      dlx::CoverProblem problem = est_preset.empty()
                                      ? dlx::parse_cover_text(read_input(est_input))
                                      : dlx::make_preset(est_preset).problem;
      dlx::SearchOptions opt;
      opt.heuristic = parse_heuristic(est_heuristic);
      opt.skip_empty_branch_column = !est_no_skip;
      opt.rng_seed = est_seed;
      dlx::LinkedMatrix m(problem);
      auto r = dlx::estimate(m, opt, est_probes);
      std::cout << "nodes " << r.nodes_mean << " +- " << r.nodes_stderr << '\n'
                << "updates " << r.updates_mean << " +- " << r.updates_stderr << '\n'
                << "probes " << r.probes << '\n';
      return 0;
    }
    if (*score) {
      dlx::Board board = dlx::board_from_spec(score_board);
      std::istringstream in(read_input(score_input));
      std::string line;
      uint64_t lineno = 0;
      dlx::MaxSymmetric best;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::vector<std::string>> rows(1);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
          if (tok == "/")
            rows.emplace_back();
          else
            rows.back().push_back(tok);
        }
        auto scores = dlx::symmetry_scores(dlx::piece_map_from_rows(board, rows));
        std::cout << lineno << " hsym " << scores.hsym << " vsym " << scores.vsym << '\n';
        best.add(lineno, scores);
      }
      if (!best.empty()) {
        std::cout << "best hsym " << best.best_score().hsym << " vsym "
                  << best.best_score().vsym << " at";
        for (auto id : best.best_ids()) std::cout << ' ' << id;
        std::cout << '\n';
      }
      return 0;
    }
    if (*presets) {
      for (const auto& n : dlx::preset_names()) std::cout << n << '\n';
      return 0;
    }
    if (*convert) {
      std::cout << dlx::emit_cover_text(
          dlx::to_pure_exact_cover(dlx::parse_cover_text(read_input(conv_input))));
      return 0;
    }

    auto order_of = [](const std::string& s) {
      if (s == "pieces") return dlx::ColumnOrder::PiecesFirst;
      if (s == "lex") return dlx::ColumnOrder::Lexicographic;
      throw std::runtime_error("unknown column order: " + s);
    };

    if (*gp) {
      auto pieces = po_one_sided ? dlx::one_sided_pentominoes() : dlx::pentominoes();
      exclude_pieces(po_exclude, pieces);
      dlx::PolyformOptions opt;
      opt.chirality = po_one_sided ? dlx::Chirality::OneSided : dlx::Chirality::Free;
      opt.order = order_of(po_order);
      print_problem(dlx::placements(pieces, dlx::board_from_spec(po_board), {}, opt), {});
      return 0;
    }
    if (*gi) {
      auto pieces = pi_one_sided ? dlx::one_sided_hexiamonds() : dlx::hexiamonds();
      exclude_pieces(pi_exclude, pieces);
      dlx::PolyformOptions opt;
      opt.chirality = pi_one_sided ? dlx::Chirality::OneSided : dlx::Chirality::Free;
      opt.order = order_of(pi_order);
      print_problem(dlx::polyiamond_problem(pieces, dlx::board_from_spec(pi_board), {}, opt),
                    {});
      return 0;
    }
    if (*gs) {
      auto pieces = ps_one_sided ? dlx::one_sided_tetrasticks() : dlx::tetrasticks();
      if (ps_welded)
        std::erase_if(pieces, [](const dlx::SegPiece& p) { return !dlx::is_welded(p); });
      exclude_pieces(ps_exclude, pieces);
      dlx::PolyformOptions opt;
      opt.chirality = ps_one_sided ? dlx::Chirality::OneSided : dlx::Chirality::Free;
      opt.order = order_of(ps_order);
      print_problem(dlx::polystick_problem(pieces, dlx::board_from_spec(ps_board), {}, opt),
                    {});
      return 0;
    }
    if (*gq) {
      dlx::QueensSpec spec;
      spec.n = q_n;
      spec.ordering = q_natural ? dlx::QueensOrdering::Natural : dlx::QueensOrdering::OrganPipe;
      spec.file_mode = q_files_secondary ? dlx::QueensFileMode::FilesSecondary
                                         : dlx::QueensFileMode::FilesPrimary;
      print_problem(dlx::queens_problem(spec), {});
      return 0;
    }
    if (*gw) {
      std::ifstream in(ws_dict);
      if (!in) throw std::runtime_error("cannot open " + ws_dict);
      dlx::WordSquareSpec spec;
      spec.n = ws_n;
      spec.words = dlx::load_dictionary(in);
      spec.distinct_words = ws_distinct;
      print_problem(dlx::word_square_problem(spec), {});
      return 0;
    }
    if (*gd) {
      std::vector<dlx::SquarePiece> domino{{"D", {{0, 0}, {0, 1}}}};
      dlx::PolyformOptions opt;
      opt.anonymous = true;
      print_problem(dlx::placements(domino, dlx::board_from_spec(dom_board), {}, opt), {});
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
