#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "ssg/game.hpp"
#include "ssg/rational.hpp"

namespace ssg {

/// Exact solver for the games G[v] probed by the search.
using Subsolver = std::function<ValueVector(const Game&)>;

/// f(v): replace x by SINK(v), solve, and recombine x's original successors
/// (max for MAX, min for MIN, half-sum for AVE). x must not be a sink.
Rational fixed_point_f(const Game& game, VertexId x, const Rational& v, const Subsolver& subsolver);

struct DichotomyState {
  Rational lo{0};
  Rational hi{1};
  Rational target_width;
  std::size_t iterations = 0;
};

struct DichotomyResult {
  ValueVector values;
  Rational v0;
  DichotomyState state;
  /// Every call into the subsolver, the final G[v0] solve included.
  std::size_t subsolver_calls = 0;
  /// The search hit f(v) = v at a midpoint and skipped reconstruction.
  bool exact_hit = false;
};

/// Denominator bound for Val(x): max(2, 6^ceil(n_a/2) * q).
Integer dichotomy_bound(const Game& game);

/// Binary search for the fixed point of f on [0, 1] down to width 1/B^2,
/// B = dichotomy_bound(game); then Stern-Brocot reconstruction and one
/// verifying solve of G[v0]. Requires a stopping game.
DichotomyResult dichotomy_solve(const Game& game, VertexId x, const Subsolver& subsolver);

/// The unique simplest rational in [lo, hi] (the first Stern-Brocot node
/// inside the interval), found by batched mediant steps. Throws
/// PreconditionError if its denominator exceeds `max_denominator`.
Rational stern_brocot(const Rational& lo, const Rational& hi, const Integer& max_denominator);

/// p_i = 6^((2^(i+1) - 1) n_a) * q0, the a-priori denominator bound at
/// recursion level i.
struct PrecisionSchedule {
  std::size_t n_a = 0;
  Integer q0{1};

  static PrecisionSchedule of(const Game& game);
  Integer bound(std::size_t level) const;
};

/// Recursive dichotomy over `feedback` (eliminated in increasing id order)
/// with solve_acyclic innermost. Requires a stopping game and a feedback
/// vertex set.
ValueVector solve_feedback(const Game& game, std::span<const VertexId> feedback,
                           std::size_t* subsolver_calls = nullptr);

/// Routes every arc out of a non-sink vertex through a chain of m fresh AVE
/// vertices that each leak to one new SINK(0) with probability 1/2 at the
/// last step. Original ids are kept; the sink comes next, then the chains.
Game make_stopping(const Game& game, std::size_t m);

/// 2n + ceil(log2 q0).
std::size_t default_chain_length(const Game& game);

}  // namespace ssg
