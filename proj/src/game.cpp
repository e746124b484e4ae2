#include "ssg/game.hpp"

#include <algorithm>

#include "ssg/errors.hpp"

namespace ssg {

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Max: return "max";
    case Kind::Min: return "min";
    case Kind::Ave: return "ave";
    case Kind::Sink: return "sink";
  }
  return "?";
}

const char* to_string(Player player) { return player == Player::Max ? "MAX" : "MIN"; }

VertexId Game::add_vertex(Vertex v) {
  vertices_.push_back(std::move(v));
  return static_cast<VertexId>(vertices_.size() - 1);
}

VertexId Game::add_max(std::vector<VertexId> successors) {
  return add_vertex({Kind::Max, Rational(0), std::move(successors)});
}

VertexId Game::add_min(std::vector<VertexId> successors) {
  return add_vertex({Kind::Min, Rational(0), std::move(successors)});
}

VertexId Game::add_ave(VertexId first, VertexId second) {
  return add_vertex({Kind::Ave, Rational(0), {first, second}});
}

VertexId Game::add_sink(const Rational& value) {
  const auto id = static_cast<VertexId>(vertices_.size());
  return add_vertex({Kind::Sink, value, {id}});
}

std::size_t Game::count(Kind k) const {
  return static_cast<std::size_t>(std::count_if(
      vertices_.begin(), vertices_.end(), [k](const Vertex& v) { return v.kind == k; }));
}

std::vector<Violation> validate(const Game& game) {
  std::vector<Violation> out;
  const auto n = game.size();
  for (VertexId x = 0; x < n; ++x) {
    const Vertex& v = game.vertex(x);
    for (VertexId y : v.successors) {
      if (y >= n) out.push_back({x, "successor " + std::to_string(y) + " is not a vertex"});
    }
    switch (v.kind) {
      case Kind::Ave:
        if (v.successors.size() != 2) {
          out.push_back({x, "AVE outdegree is " + std::to_string(v.successors.size()) +
                                ", must be 2"});
        }
        break;
      case Kind::Sink:
        if (v.successors.size() != 1 || v.successors[0] != x) {
          out.push_back({x, "sink must have exactly one arc, a self-loop"});
        }
        if (v.value < 0 || v.value > 1) {
          out.push_back({x, "sink value " + to_string(v.value) + " outside [0,1]"});
        }
        break;
      case Kind::Max:
      case Kind::Min:
        if (v.successors.empty()) {
          out.push_back({x, std::string(to_string(v.kind)) + " vertex has no successor"});
        }
        break;
    }
  }
  return out;
}

void require_valid(const Game& game) {
  const auto violations = validate(game);
  if (violations.empty()) return;
  std::string msg = "invalid game:";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
    msg += " [vertex " + std::to_string(violations[i].vertex) + ": " + violations[i].reason + "]";
  }
  throw InputError(msg);
}

std::vector<VertexId> Strategy::support() const {
  std::vector<VertexId> out;
  for (VertexId x = 0; x < choice_.size(); ++x) {
    if (choice_[x] != kNoVertex) out.push_back(x);
  }
  return out;
}

Strategy empty_strategy(const Game& game, Player owner) { return Strategy(owner, game.size()); }

void check_strategy(const Game& game, const Strategy& s) {
  if (s.vertex_count() != game.size()) {
    throw InputError("strategy sized for " + std::to_string(s.vertex_count()) +
                     " vertices, game has " + std::to_string(game.size()));
  }
  const Kind owned = kind_of(s.owner());
  for (VertexId x : s.support()) {
    if (game.kind(x) != owned) {
      throw InputError(std::string(to_string(s.owner())) + " strategy defined on vertex " +
                       std::to_string(x) + " of kind " + to_string(game.kind(x)));
    }
    const auto& succ = game.successors(x);
    if (std::find(succ.begin(), succ.end(), s[x]) == succ.end()) {
      throw InputError("strategy choice " + std::to_string(x) + " -> " + std::to_string(s[x]) +
                       " is not an arc");
    }
  }
}

bool is_total(const Game& game, const Strategy& s) {
  if (s.vertex_count() != game.size()) return false;
  const Kind owned = kind_of(s.owner());
  for (VertexId x = 0; x < game.size(); ++x) {
    if ((game.kind(x) == owned) != s.defined(x)) return false;
  }
  return true;
}

Game restrict(const Game& game, const Strategy& partial) {
  check_strategy(game, partial);
  Game out = game;
  for (VertexId x : partial.support()) out.vertex(x).successors = {partial[x]};
  return out;
}

Game vertex_to_sink(const Game& game, VertexId x, const Rational& v) {
  if (x >= game.size()) throw InputError("vertex " + std::to_string(x) + " out of range");
  if (game.is_sink(x)) throw InputError("vertex " + std::to_string(x) + " is already a sink");
  if (v < 0 || v > 1) throw InputError("sink value " + to_string(v) + " outside [0,1]");
  Game out = game;
  out.vertex(x) = Vertex{Kind::Sink, v, {x}};
  return out;
}

VertexId best_sink_neighbor(const Game& game, VertexId x) {
  const Kind k = game.kind(x);
  VertexId best = kNoVertex;
  for (VertexId y : game.successors(x)) {
    if (!game.is_sink(y)) continue;
    if (best == kNoVertex) {
      best = y;
      continue;
    }
    const Rational& vy = game.sink_value(y);
    const Rational& vb = game.sink_value(best);
    const bool better = k == Kind::Min ? vy < vb : vy > vb;
    if (better || (vy == vb && y < best)) best = y;
  }
  return best;
}

Game merge_sink_neighbors(const Game& game) {
  Game out = game;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (!is_positional(game.kind(x))) continue;
    const auto& succ = game.successors(x);
    const auto sinks = std::count_if(succ.begin(), succ.end(),
                                     [&](VertexId y) { return game.is_sink(y); });
    if (sinks < 2) continue;
    const VertexId keep = best_sink_neighbor(game, x);
    std::vector<VertexId> merged;
    for (VertexId y : succ) {
      if (!game.is_sink(y) || y == keep) {
        if (y == keep && std::find(merged.begin(), merged.end(), keep) != merged.end()) continue;
        merged.push_back(y);
      }
    }
    out.vertex(x).successors = std::move(merged);
  }
  return out;
}

std::vector<VertexId> distinct_successors(const Game& game, VertexId x) {
  std::vector<VertexId> out = game.successors(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integer sink_denominator_lcm(const Game& game) {
  Integer q = 1;
  for (const Vertex& v : game.vertices()) {
    if (v.kind == Kind::Sink) q = lcm(q, denominator_of(v.value));
  }
  return q;
}

}  // namespace ssg
