#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "ssg/game.hpp"
#include "ssg/rational.hpp"

namespace ssg {

/// Work counters filled in by the solvers that accept them.
struct SolveStats {
  /// Strategy-improvement steps.
  std::size_t iterations = 0;
  /// Calls to an inner solver (acyclic solves, dichotomy probes).
  std::size_t subsolver_calls = 0;
};

/// Solves a strongly connected game (plus frontier sinks).
using ComponentSolver = std::function<ValueVector(const Game&)>;

/// One backward pass over a game whose sink-removed graph is a DAG.
/// Throws PreconditionError on a cycle.
ValueVector solve_acyclic(const Game& game);

/// Solves the components leaves first. Trivial components are settled by
/// their local equation; cyclic ones go to `solver` as a ComponentGame.
ValueVector solve_by_scc(const Game& game, const ComponentSolver& solver);

/// Strongly connected MAX-acyclic game: merge sink neighbours, then
/// Hoffman-Karp from the all-open strategy (at most n_M steps).
ValueVector solve_max_acyclic_scc(const Game& game, SolveStats* stats = nullptr);

/// solve_by_scc over solve_max_acyclic_scc.
ValueVector solve_max_acyclic(const Game& game, SolveStats* stats = nullptr);

/// Value at the start of a closed cycle whose AVE vertices leak to sinks of
/// value s_1..s_l in walk order:
///   2^l / (2^l - 1) * sum_i 2^-i s_i.
/// `sinks` must be nonempty.
template <typename Scalar>
Scalar cycle_value(std::span<const Scalar> sinks) {
  Scalar acc(0);
  for (auto it = sinks.rbegin(); it != sinks.rend(); ++it) acc = (*it + acc) / Scalar(2);
  Scalar scale(1);
  for (std::size_t i = 0; i < sinks.size(); ++i) scale *= Scalar(2);
  return acc * scale / (scale - Scalar(1));
}

/// Values when every positional vertex of a strongly connected game with
/// k_p = 0 follows its cycle arc. Uses the cycle formula for k_a = 0 and an
/// exact k_a x k_a system over the fork vertices otherwise.
ValueVector closed_values(const Game& game);

/// Linear-time solver for a strongly connected game that is a single cycle
/// (k_p = k_a = 0): all closed, else open a MAX vertex, else a MIN vertex.
ValueVector solve_almost_acyclic_scc(const Game& game, SolveStats* stats = nullptr);

/// solve_by_scc over solve_almost_acyclic_scc.
ValueVector solve_almost_acyclic(const Game& game, SolveStats* stats = nullptr);

struct ForkBudget {
  std::size_t k_p = 0;
  std::size_t k_a = 0;
  std::size_t depth = 0;
};

/// Fork-vertex recursion: enumerate cycle-arc choices at positional forks,
/// then peel average forks one opened vertex at a time. Requires a stopping
/// game.
ValueVector solve_fork_fpt(const Game& game, SolveStats* stats = nullptr);

}  // namespace ssg
