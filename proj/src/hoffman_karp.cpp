#include "ssg/hoffman_karp.hpp"

#include <algorithm>
#include <limits>

#include "ssg/errors.hpp"

namespace ssg {

std::vector<Switch> switchable(const Game& game, const Strategy& sigma, const ValueVector& values) {
  std::vector<Switch> out;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) != Kind::Max) continue;
    VertexId best = kNoVertex;
    for (VertexId y : distinct_successors(game, x)) {
      if (best == kNoVertex || values(y) > values(best)) best = y;
    }
    if (values(best) > values(sigma[x])) out.push_back({x, best});
  }
  return out;
}

Strategy apply_switches(const Game& game, const Strategy& sigma, const ValueVector& values,
                        std::span<const Switch> switches) {
  Strategy out = sigma;
  for (const Switch& s : switches) {
    const auto& succ = game.successors(s.vertex);
    const bool is_arc = game.kind(s.vertex) == Kind::Max &&
                        std::find(succ.begin(), succ.end(), s.successor) != succ.end();
    if (!is_arc || !(values(s.successor) > values(sigma[s.vertex]))) {
      throw InputError("vertex " + std::to_string(s.vertex) + " is not switchable to " +
                       std::to_string(s.successor));
    }
    out.set(s.vertex, s.successor);
  }
  return out;
}

Strategy all_open_strategy(const Game& game) {
  Strategy sigma = empty_strategy(game, Player::Max);
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) != Kind::Max) continue;
    const VertexId sink = best_sink_neighbor(game, x);
    sigma.set(x, sink != kNoVertex ? sink : distinct_successors(game, x).front());
  }
  return sigma;
}

namespace {

// Number of total MAX strategies, saturating.
std::size_t strategy_count(const Game& game) {
  constexpr auto cap = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) != Kind::Max) continue;
    const std::size_t d = distinct_successors(game, x).size();
    if (total > cap / d) return cap;
    total *= d;
  }
  return total;
}

}  // namespace

HKTrace hoffman_karp(const Game& game, const Strategy& sigma0, SwitchPolicy policy, bool record) {
  require_valid(game);
  check_strategy(game, sigma0);
  if (sigma0.owner() != Player::Max || !is_total(game, sigma0)) {
    throw InputError("hoffman_karp needs a total MAX strategy to start from");
  }
  if (!check_stopping(game).stopping) {
    throw PreconditionError("hoffman_karp requires a stopping game");
  }
  const std::size_t limit = strategy_count(game);
  HKTrace trace;
  Strategy sigma = sigma0;
  while (true) {
    BestResponse br = best_response_min(game, sigma);
    if (record) trace.steps.push_back({sigma, br.values});
    auto switches = switchable(game, sigma, br.values);
    if (switches.empty()) {
      trace.sigma = std::move(sigma);
      trace.tau = std::move(br.strategy);
      trace.values = std::move(br.values);
      return trace;
    }
    if (policy == SwitchPolicy::Single) switches.resize(1);
    sigma = apply_switches(game, sigma, br.values, switches);
    if (++trace.iterations > limit) {
      throw InvariantError("strategy iteration exceeded the number of MAX strategies");
    }
  }
}

}  // namespace ssg
