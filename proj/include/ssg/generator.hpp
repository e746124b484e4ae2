#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ssg/game.hpp"

namespace ssg {

enum class Family { Random, Acyclic, SingleCycle, MaxAcyclic, DagPlusK, Caterpillar };

const char* to_string(Family family);
/// Accepts the upper-case names (RANDOM, DAG_PLUS_K, ...) in any case.
Family parse_family(std::string_view name);

struct Proportions {
  double max = 0.25;
  double min = 0.25;
  double ave = 0.30;
  double sink = 0.20;
};

/// `n` is the total vertex count, except for CATERPILLAR where it is the
/// number of AVE vertices (two sinks are added). `k` is used by DAG_PLUS_K.
struct GeneratorSpec {
  std::size_t n = 8;
  Proportions proportions;
  Family family = Family::Random;
  std::size_t k = 1;
  std::uint64_t seed = 0;
};

/// Deterministic in the spec: the same spec always gives the same game on
/// every platform.
///   RANDOM       arbitrary arcs, may be non-stopping
///   ACYCLIC      arcs only go to higher ids
///   SINGLE_CYCLE one cycle through every non-sink, stopping
///   MAX_ACYCLIC  strongly connected over the non-sinks, stopping
///   DAG_PLUS_K   stopping, minimum feedback vertex set of size exactly k
///   CATERPILLAR  a_i -> {SINK(0), a_(i+1)}; root 0 is worth 2^-n
Game generate(const GeneratorSpec& spec);

}  // namespace ssg
