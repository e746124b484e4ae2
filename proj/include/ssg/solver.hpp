#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ssg/acyclic_family.hpp"
#include "ssg/game.hpp"
#include "ssg/structure.hpp"

namespace ssg {

enum class Algorithm {
  Auto,
  Oracle,
  HK,
  Acyclic,
  MaxAcyclic,
  AlmostAcyclic,
  ForkFpt,
  Dichotomy,
  Feedback,
};

/// Upper-case names with underscores: AUTO, HK, MAX_ACYCLIC, ...
const char* to_string(Algorithm a);
/// Case-insensitive; '-' and '_' are interchangeable.
Algorithm parse_algorithm(std::string_view name);

struct SolveOptions {
  Algorithm algorithm = Algorithm::Auto;
  /// Route every arc through a leaking chain of this length first.
  std::optional<std::size_t> make_stopping;
  /// AUTO uses FORK_FPT when k_p + k_a is at most this.
  std::size_t fork_limit = 10;
  /// Largest feedback vertex set AUTO and FEEDBACK search for.
  std::size_t fvs_limit = 3;
  /// AUTO skips the feedback search when more vertices than this lie on
  /// cycles.
  std::size_t fvs_candidate_limit = 60;
  bool strategies = false;
};

struct SolveReport {
  Algorithm algorithm = Algorithm::Auto;
  /// Values of the input's vertices (the chain vertices of make_stopping
  /// are dropped).
  ValueVector values;
  SolveStats stats;
  std::optional<StrategyPair> strategies;
  double seconds = 0;
};

/// AUTO's choice for a stopping game: acyclic, then single-cycle
/// components, then MAX-acyclic, then few forks, then a small feedback
/// vertex set, else Hoffman-Karp.
Algorithm choose_algorithm(const Game& game, const StructureReport& report,
                           const SolveOptions& options = {});

/// Runs the requested algorithm. Throws PreconditionError naming the class
/// the input falls outside of.
SolveReport solve(const Game& game, const SolveOptions& options = {});

}  // namespace ssg
