#pragma once

#include <cstddef>
#include <vector>

#include "ssg/game.hpp"
#include "ssg/rational.hpp"

namespace ssg {

/// z = A z + b over the AVE vertices that remain after the zero set and
/// deterministic vertices are eliminated. Row i belongs to variables[i].
struct LinearSystem {
  Matrix<Rational> a;
  Vector<Rational> b;
  std::vector<VertexId> variables;
};

/// Vertices whose value is 0 under (sigma, tau), by iterated removal.
/// Sorted. Throws InputError if either strategy is not total.
std::vector<VertexId> zero_set(const Game& game, const Strategy& sigma, const Strategy& tau);

LinearSystem build_linear_system(const Game& game, const Strategy& sigma, const Strategy& tau);

/// Val_{sigma,tau}, exactly.
ValueVector evaluate(const Game& game, const Strategy& sigma, const Strategy& tau);

struct OptimalityViolation {
  VertexId vertex;
  Rational expected;
  Rational found;
};

struct OptimalityReport {
  bool satisfied = true;
  std::vector<OptimalityViolation> violations;
};

/// Checks the max / min / average / sink equations at every vertex.
OptimalityReport check_local_optimality(const Game& game, const ValueVector& w);

/// Argmax (MAX) and argmin (MIN) successors of w, smallest id on ties.
/// Throws InputError if w is not locally optimal.
StrategyPair greedy_strategies(const Game& game, const ValueVector& w);

struct BestResponse {
  Strategy strategy;
  ValueVector values;
  std::size_t rounds = 0;
};

/// MIN's best response to sigma, by policy iteration with exact evaluation.
/// Vertices where MIN can hold the value at 0 are settled first, which makes
/// the remaining fixpoint unique.
BestResponse best_response_min(const Game& game, const Strategy& sigma);

/// MAX's best response to tau, by policy iteration.
BestResponse best_response_max(const Game& game, const Strategy& tau);

struct StoppingReport {
  bool stopping = true;
  /// Largest sink-free set some strategy pair can keep the play in.
  std::vector<VertexId> witness;
};

StoppingReport check_stopping(const Game& game);

/// 6^ceil(n_a/2) * q with q the lcm of sink denominators.
Integer denominator_bound(const Game& game);

}  // namespace ssg
