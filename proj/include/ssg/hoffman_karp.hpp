#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ssg/eval.hpp"
#include "ssg/game.hpp"

namespace ssg {

struct Switch {
  VertexId vertex;
  VertexId successor;

  bool operator==(const Switch&) const = default;
};

/// MAX vertices with a successor strictly better than their current choice,
/// each paired with its best successor (smallest id on ties). `values` are
/// the best-response values Val_sigma.
std::vector<Switch> switchable(const Game& game, const Strategy& sigma, const ValueVector& values);

/// sigma with the switches applied. Throws InputError if a switch is not a
/// strict improvement under `values`.
Strategy apply_switches(const Game& game, const Strategy& sigma, const ValueVector& values,
                        std::span<const Switch> switches);

enum class SwitchPolicy { All, Single };

struct HKStep {
  Strategy sigma;
  ValueVector values;
};

struct HKTrace {
  std::size_t iterations = 0;
  /// sigma_0 .. sigma_T with their best-response values, when recorded.
  std::vector<HKStep> steps;
  Strategy sigma;
  Strategy tau;
  ValueVector values;
};

/// Each MAX vertex points to its best sink neighbour when it has one and to
/// its smallest successor otherwise.
Strategy all_open_strategy(const Game& game);

/// Hoffman-Karp strategy iteration. Requires a stopping game.
HKTrace hoffman_karp(const Game& game, const Strategy& sigma0,
                     SwitchPolicy policy = SwitchPolicy::All, bool record = false);

}  // namespace ssg
