// Command-line front end: solve, classify, generate, bench.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssg/dichotomy.hpp"
#include "ssg/errors.hpp"
#include "ssg/eval.hpp"
#include "ssg/generator.hpp"
#include "ssg/io.hpp"
#include "ssg/solver.hpp"
#include "ssg/structure.hpp"

namespace {

using namespace ssg;

std::size_t parse_chain_length(const std::string& text, const Game& game) {
  if (text == "auto") return default_chain_length(game);
  std::size_t used = 0;
  unsigned long m = 0;
  try {
    m = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || m == 0) throw InputError("--make-stopping expects 'auto' or an integer >= 1");
  return m;
}

int cmd_solve(const std::string& file, const std::string& algorithm, bool strategies,
              const std::string& make_stopping_arg, std::size_t fork_limit, std::size_t fvs_max) {
  const Game game = read_game_file(file);
  SolveOptions options;
  options.algorithm = parse_algorithm(algorithm);
  options.strategies = strategies;
  options.fork_limit = fork_limit;
  options.fvs_limit = fvs_max;
  if (!make_stopping_arg.empty()) options.make_stopping = parse_chain_length(make_stopping_arg, game);

  const SolveReport r = solve(game, options);
  std::cout << "algorithm " << to_string(r.algorithm) << '\n'
            << "iterations " << r.stats.iterations << '\n'
            << "subsolver_calls " << r.stats.subsolver_calls << '\n'
            << "time_ms " << std::fixed << std::setprecision(3) << r.seconds * 1e3 << '\n';
  if (options.make_stopping) std::cout << "make_stopping " << *options.make_stopping << '\n';
  std::cout << "values\n";
  for (Eigen::Index x = 0; x < r.values.size(); ++x) std::cout << x << ' ' << to_string(r.values(x)) << '\n';
  if (r.strategies) {
    std::cout << "strategies\n";
    for (VertexId x = 0; x < game.size(); ++x) {
      const Strategy& s = game.kind(x) == Kind::Max ? r.strategies->max : r.strategies->min;
      if (is_positional(game.kind(x))) std::cout << x << ' ' << to_string(game.kind(x)) << ' ' << s[x] << '\n';
    }
  }
  return 0;
}

int cmd_classify(const std::string& file, std::size_t fvs_max) {
  const Game game = read_game_file(file);
  require_valid(game);
  const StructureReport r = analyze(game);
  std::size_t cyclic = 0;
  for (bool c : r.component_cyclic) cyclic += c ? 1 : 0;
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "vertices " << game.size() << '\n'
            << "max " << game.count(Kind::Max) << '\n'
            << "min " << game.count(Kind::Min) << '\n'
            << "ave " << game.count(Kind::Ave) << '\n'
            << "sink " << game.count(Kind::Sink) << '\n'
            << "components " << r.components.size() << '\n'
            << "cyclic_components " << cyclic << '\n'
            << "k_p " << r.k_p << '\n'
            << "k_a " << r.k_a << '\n'
            << "acyclic " << yes(r.is_acyclic) << '\n'
            << "max_acyclic " << yes(r.is_max_acyclic) << '\n'
            << "min_acyclic " << yes(r.is_min_acyclic) << '\n'
            << "almost_acyclic " << yes(r.is_almost_acyclic) << '\n'
            << "strongly_connected " << yes(r.is_strongly_connected) << '\n'
            << "stopping " << yes(check_stopping(game).stopping) << '\n';
  if (const auto fvs = feedback_vertex_set(game, fvs_max)) {
    std::cout << "fvs_size " << fvs->size() << "\nfvs";
    for (VertexId x : *fvs) std::cout << ' ' << x;
    std::cout << '\n';
  } else {
    std::cout << "fvs_size >" << fvs_max << '\n';
  }
  return 0;
}

int cmd_generate(const std::string& family, std::size_t n, std::uint64_t seed, std::size_t k,
                 const Proportions& p, const std::string& out) {
  GeneratorSpec spec;
  spec.family = parse_family(family);
  spec.n = n;
  spec.seed = seed;
  spec.k = k;
  spec.proportions = p;
  const Game game = generate(spec);
  if (out.empty() || out == "-") {
    std::cout << serialize_game(game);
  } else {
    write_game_file(out, game);
  }
  return 0;
}

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::string solver;
  std::size_t n_max = 0;
  std::size_t n_ave = 0;
  std::size_t iterations = 0;
  std::size_t subsolver_calls = 0;
  double seconds = 0;
  std::string ratio = "-";
  std::string status = "ok";
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_bench(const std::string& family, const std::string& sizes, const std::string& solvers,
              std::uint64_t seed, std::size_t reps, std::size_t k, const std::string& csv) {
  const Family fam = parse_family(family);
  std::vector<std::size_t> ns;
  for (const auto& s : split_list(sizes)) ns.push_back(std::stoul(s));
  std::vector<Algorithm> algs;
  for (const auto& s : split_list(solvers)) algs.push_back(parse_algorithm(s));
  if (ns.empty() || algs.empty() || reps == 0) throw InputError("bench needs sizes, solvers and reps >= 1");

  std::vector<BenchRow> rows;
  std::map<std::string, double> previous;
  for (std::size_t n : ns) {
    GeneratorSpec spec;
    spec.family = fam;
    spec.n = n;
    spec.seed = seed;
    spec.k = k;
    const Game game = generate(spec);
    for (Algorithm a : algs) {
      BenchRow row;
      row.family = to_string(fam);
      row.n = n;
      row.solver = to_string(a);
      row.n_max = game.count(Kind::Max);
      row.n_ave = game.count(Kind::Ave);
      SolveOptions options;
      options.algorithm = a;
      double best = -1;
      try {
        for (std::size_t rep = 0; rep < reps; ++rep) {
          const SolveReport r = solve(game, options);
          if (best < 0 || r.seconds < best) best = r.seconds;
          row.iterations = r.stats.iterations;
          row.subsolver_calls = r.stats.subsolver_calls;
        }
        row.seconds = best;
        if (const auto it = previous.find(row.solver); it != previous.end() && it->second > 0) {
          std::ostringstream ratio;
          ratio << std::fixed << std::setprecision(2) << best / it->second;
          row.ratio = ratio.str();
        }
        previous[row.solver] = best;
      } catch (const Error& e) {
        row.status = std::string("error: ") + e.what();
      } catch (const std::bad_alloc&) {
        row.status = "error: out of memory";
      }
      rows.push_back(row);
    }
  }

  std::cout << std::left << std::setw(14) << "family" << std::setw(9) << "n" << std::setw(16) << "solver"
            << std::setw(8) << "n_M" << std::setw(8) << "n_a" << std::setw(11) << "iterations"
            << std::setw(10) << "calls" << std::setw(13) << "seconds" << std::setw(8) << "ratio"
            << "status\n";
  for (const auto& r : rows) {
    std::cout << std::left << std::setw(14) << r.family << std::setw(9) << r.n << std::setw(16) << r.solver
              << std::setw(8) << r.n_max << std::setw(8) << r.n_ave << std::setw(11) << r.iterations
              << std::setw(10) << r.subsolver_calls << std::setw(13) << std::fixed << std::setprecision(6)
              << r.seconds << std::setw(8) << r.ratio << r.status << '\n';
  }
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw InputError("cannot write " + csv);
    out << "family,n,seed,solver,n_M,n_a,iterations,subsolver_calls,seconds,ratio,status\n";
    for (const auto& r : rows) {
      out << r.family << ',' << r.n << ',' << seed << ',' << r.solver << ',' << r.n_max << ',' << r.n_ave
          << ',' << r.iterations << ',' << r.subsolver_calls << ',' << std::setprecision(9) << r.seconds
          << ',' << r.ratio << ",\"" << r.status << "\"\n";
    }
  }
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.status == "ok"; }) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple stochastic game solver"};
  app.require_subcommand(1);

  std::string file, algorithm = "AUTO", make_stopping_arg;
  bool strategies = false;
  std::size_t fork_limit = 10, fvs_max = 3;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a game file exactly");
  solve_cmd->add_option("file", file, "game file")->required();
  solve_cmd->add_option("--algorithm", algorithm,
                        "AUTO ORACLE HK ACYCLIC MAX_ACYCLIC ALMOST_ACYCLIC FORK_FPT DICHOTOMY FEEDBACK");
  solve_cmd->add_flag("--strategies", strategies, "print greedy optimal strategies");
  solve_cmd->add_option("--make-stopping", make_stopping_arg,
                        "route arcs through leaking chains of length m ('auto' for 2n + ceil(log2 q))");
  solve_cmd->add_option("--fork-limit", fork_limit, "AUTO uses FORK_FPT up to this k_p + k_a");
  solve_cmd->add_option("--fvs-max", fvs_max, "largest feedback vertex set to search for");

  std::size_t classify_fvs = 3;
  auto* classify_cmd = app.add_subcommand("classify", "Report structure parameters");
  classify_cmd->add_option("file", file, "game file")->required();
  classify_cmd->add_option("--fvs-max", classify_fvs, "largest feedback vertex set to search for");

  std::string family = "RANDOM", out;
  std::size_t n = 8, k = 1;
  std::uint64_t seed = 0;
  Proportions proportions;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random game");
  generate_cmd->add_option("--family", family, "RANDOM ACYCLIC SINGLE_CYCLE MAX_ACYCLIC DAG_PLUS_K CATERPILLAR");
  generate_cmd->add_option("--n", n, "vertex count");
  generate_cmd->add_option("--seed", seed, "random seed");
  generate_cmd->add_option("-k", k, "feedback set size for DAG_PLUS_K");
  generate_cmd->add_option("--p-max", proportions.max);
  generate_cmd->add_option("--p-min", proportions.min);
  generate_cmd->add_option("--p-ave", proportions.ave);
  generate_cmd->add_option("--p-sink", proportions.sink);
  generate_cmd->add_option("-o,--output", out, "output file (stdout when omitted)");

  std::string sizes = "1000,10000", solvers = "AUTO", csv;
  std::size_t reps = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time solvers on generated games");
  bench_cmd->add_option("--family", family);
  bench_cmd->add_option("--sizes", sizes, "comma-separated sizes");
  bench_cmd->add_option("--solvers", solvers, "comma-separated algorithms");
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--reps", reps, "repetitions; the fastest is reported");
  bench_cmd->add_option("-k", k, "feedback set size for DAG_PLUS_K");
  bench_cmd->add_option("--csv", csv, "also write machine-readable rows here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return cmd_solve(file, algorithm, strategies, make_stopping_arg, fork_limit, fvs_max);
    if (*classify_cmd) return cmd_classify(file, classify_fvs);
    if (*generate_cmd) return cmd_generate(family, n, seed, k, proportions, out);
    if (*bench_cmd) return cmd_bench(family, sizes, solvers, seed, reps, k, csv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
