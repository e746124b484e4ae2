#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ssg/eval.hpp"
#include "ssg/game.hpp"

namespace ssg {

struct Arc {
  VertexId from;
  VertexId to;

  auto operator<=>(const Arc&) const = default;
};

/// Graph analysis of the sink-removed game.
///
/// Components are numbered in topological order: every condensation edge
/// goes from a lower to a higher component id. Sinks are singleton,
/// non-cyclic components; their self-loops never count as cycles.
/// An arc lies on a cycle exactly when both endpoints share a cyclic
/// component. Cycle outdegrees count distinct successors.
struct StructureReport {
  std::vector<std::size_t> scc_of;
  std::vector<std::vector<VertexId>> components;
  std::vector<bool> component_cyclic;
  std::vector<std::vector<std::size_t>> condensation;

  std::vector<Arc> cycle_arcs;
  std::vector<std::size_t> cycle_outdegree;
  /// Positional vertices with at least two cycle arcs, and that count.
  std::vector<std::pair<VertexId, std::size_t>> fork_positional;
  std::vector<VertexId> fork_average;
  std::size_t k_p = 0;
  std::size_t k_a = 0;

  bool is_acyclic = true;
  bool is_max_acyclic = true;
  bool is_min_acyclic = true;
  bool is_pos_acyclic = true;
  bool is_almost_acyclic = true;
  /// All non-sink vertices form one component (at least one such vertex).
  bool is_strongly_connected = false;

  bool on_cycle(VertexId from, VertexId to) const {
    return scc_of[from] == scc_of[to] && component_cyclic[scc_of[from]];
  }
};

StructureReport analyze(const Game& game);

/// One strongly connected component as a game of its own. Local ids
/// [0, members) are the component's vertices in increasing global id;
/// the rest are frontier sinks, one per distinct vertex outside the
/// component that a member points to.
struct ComponentGame {
  std::size_t component = 0;
  Game game;
  std::vector<VertexId> global;
  std::size_t members = 0;
};

/// Induced game of `component`. Frontier sinks copy the value of sinks of
/// the parent and carry `solved` values elsewhere (0 when `solved` is empty).
ComponentGame component_game(const Game& game, const StructureReport& report,
                             std::size_t component, const ValueVector* solved = nullptr);

/// Copies solved values of the parent into the frontier sinks.
void fill_frontier(ComponentGame& cg, const ValueVector& solved);

/// Every component, sinks first: reverse topological order, so each
/// component comes after everything it can reach. Frontier sinks of
/// non-sink targets hold 0 until fill_frontier.
std::vector<ComponentGame> scc_subgames(const Game& game);

/// Removing `removed` and the sinks leaves a DAG.
bool is_feedback_vertex_set(const Game& game, std::span<const VertexId> removed);

/// A minimum feedback vertex set of the sink-removed graph if one of size
/// <= k_max exists: subsets by increasing size, lexicographically smallest
/// sorted id sequence first.
std::optional<std::vector<VertexId>> feedback_vertex_set(const Game& game, std::size_t k_max);

}  // namespace ssg
