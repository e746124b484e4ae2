#include "ssg/solver.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <string>

#include "ssg/dichotomy.hpp"
#include "ssg/errors.hpp"
#include "ssg/eval.hpp"
#include "ssg/hoffman_karp.hpp"
#include "ssg/oracle.hpp"

namespace ssg {

namespace {

constexpr Algorithm kAll[] = {Algorithm::Auto,       Algorithm::Oracle,        Algorithm::HK,
                              Algorithm::Acyclic,    Algorithm::MaxAcyclic,    Algorithm::AlmostAcyclic,
                              Algorithm::ForkFpt,    Algorithm::Dichotomy,     Algorithm::Feedback};

std::size_t on_cycle_count(const Game& game, const StructureReport& report) {
  std::size_t c = 0;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (!game.is_sink(x) && report.component_cyclic[report.scc_of[x]]) ++c;
  }
  return c;
}

ValueVector hk_values(const Game& game, SolveStats& stats) {
  const HKTrace t = hoffman_karp(game, all_open_strategy(game));
  stats.iterations += t.iterations;
  return t.values;
}

ValueVector run_dichotomy(const Game& game, const StructureReport& report, SolveStats& stats) {
  VertexId x = kNoVertex;
  if (const auto fvs = feedback_vertex_set(game, 1); fvs && !fvs->empty()) x = fvs->front();
  for (VertexId v = 0; v < game.size() && x == kNoVertex; ++v) {
    if (!game.is_sink(v) && report.component_cyclic[report.scc_of[v]]) x = v;
  }
  for (VertexId v = 0; v < game.size() && x == kNoVertex; ++v) {
    if (!game.is_sink(v)) x = v;
  }
  if (x == kNoVertex) return solve_acyclic(game);
  DichotomyResult r = dichotomy_solve(game, x, [&stats](const Game& g) {
    if (analyze(g).is_acyclic) return solve_acyclic(g);
    return hk_values(g, stats);
  });
  stats.subsolver_calls += r.subsolver_calls;
  return std::move(r.values);
}

ValueVector run(Algorithm a, const Game& game, const StructureReport& report,
                const SolveOptions& options, SolveStats& stats) {
  switch (a) {
    case Algorithm::Oracle:
      return oracle_solve(game).values;
    case Algorithm::Acyclic:
      return solve_acyclic(game);
    case Algorithm::HK:
      return hk_values(game, stats);
    case Algorithm::MaxAcyclic:
      if (!report.is_max_acyclic) throw PreconditionError("MAX_ACYCLIC: game is not MAX-acyclic");
      return solve_max_acyclic(game, &stats);
    case Algorithm::AlmostAcyclic:
      if (!report.is_almost_acyclic) {
        throw PreconditionError("ALMOST_ACYCLIC: some component is not a single cycle");
      }
      return solve_almost_acyclic(game, &stats);
    case Algorithm::ForkFpt:
      return solve_fork_fpt(game, &stats);
    case Algorithm::Dichotomy:
      return run_dichotomy(game, report, stats);
    case Algorithm::Feedback: {
      const auto fvs = feedback_vertex_set(game, options.fvs_limit);
      if (!fvs) {
        throw PreconditionError("FEEDBACK: no feedback vertex set of size <= " +
                                std::to_string(options.fvs_limit));
      }
      return solve_feedback(game, *fvs, &stats.subsolver_calls);
    }
    case Algorithm::Auto:
      break;
  }
  throw InputError("no algorithm chosen");
}

// A positional choice in the transformed game points at a chain head; map
// it back to the original successor at the same position.
Strategy project(const Game& original, const Game& transformed, const Strategy& s) {
  Strategy out(s.owner(), original.size());
  for (VertexId x = 0; x < original.size(); ++x) {
    if (!s.defined(x)) continue;
    const auto& routed = transformed.successors(x);
    const auto i = static_cast<std::size_t>(std::find(routed.begin(), routed.end(), s[x]) - routed.begin());
    out.set(x, original.successors(x)[i]);
  }
  return out;
}

}  // namespace

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Auto: return "AUTO";
    case Algorithm::Oracle: return "ORACLE";
    case Algorithm::HK: return "HK";
    case Algorithm::Acyclic: return "ACYCLIC";
    case Algorithm::MaxAcyclic: return "MAX_ACYCLIC";
    case Algorithm::AlmostAcyclic: return "ALMOST_ACYCLIC";
    case Algorithm::ForkFpt: return "FORK_FPT";
    case Algorithm::Dichotomy: return "DICHOTOMY";
    case Algorithm::Feedback: return "FEEDBACK";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string key(name);
  for (char& c : key) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Algorithm a : kAll) {
    if (key == to_string(a)) return a;
  }
  throw InputError("unknown algorithm '" + std::string(name) + "'");
}

Algorithm choose_algorithm(const Game& game, const StructureReport& report, const SolveOptions& options) {
  if (report.is_acyclic) return Algorithm::Acyclic;
  if (report.is_almost_acyclic) return Algorithm::AlmostAcyclic;
  if (report.is_max_acyclic) return Algorithm::MaxAcyclic;
  if (report.k_p + report.k_a <= options.fork_limit) return Algorithm::ForkFpt;
  if (on_cycle_count(game, report) <= options.fvs_candidate_limit &&
      feedback_vertex_set(game, options.fvs_limit)) {
    return Algorithm::Feedback;
  }
  return Algorithm::HK;
}

SolveReport solve(const Game& input, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  require_valid(input);
  const Game game = options.make_stopping ? make_stopping(input, *options.make_stopping) : input;
  const StructureReport report = analyze(game);

  SolveReport out;
  out.algorithm = options.algorithm == Algorithm::Auto ? choose_algorithm(game, report, options)
                                                       : options.algorithm;
  const bool needs_stopping = out.algorithm != Algorithm::Acyclic && out.algorithm != Algorithm::Oracle;
  if (needs_stopping && !check_stopping(game).stopping) {
    throw PreconditionError(std::string(to_string(out.algorithm)) +
                            " requires a stopping game; this one is not (try --make-stopping)");
  }
  ValueVector values = run(out.algorithm, game, report, options, out.stats);
  if (options.strategies) {
    StrategyPair pair = greedy_strategies(game, values);
    if (options.make_stopping) {
      pair.max = project(input, game, pair.max);
      pair.min = project(input, game, pair.min);
    }
    out.strategies = std::move(pair);
  }
  out.values = values.head(static_cast<Eigen::Index>(input.size()));
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return out;
}

}  // namespace ssg
