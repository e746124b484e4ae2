#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ssg/rational.hpp"

namespace ssg {

/// Dense index 0..n-1. Subgame constructions keep parent ids.
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Kind : std::uint8_t { Max, Min, Ave, Sink };
enum class Player : std::uint8_t { Max, Min };

const char* to_string(Kind kind);
const char* to_string(Player player);

inline bool is_positional(Kind kind) { return kind == Kind::Max || kind == Kind::Min; }
inline Kind kind_of(Player p) { return p == Player::Max ? Kind::Max : Kind::Min; }

struct Vertex {
  Kind kind = Kind::Sink;
  /// Meaningful for sinks only; zero elsewhere.
  Rational value;
  std::vector<VertexId> successors;

  bool operator==(const Vertex&) const = default;
};

/// A simple stochastic game: a digraph whose vertices are MAX, MIN, AVE
/// (fair coin) or SINK. Values are plain data; validate() reports whether
/// the structural rules hold, solvers assume they do.
class Game {
 public:
  Game() = default;
  explicit Game(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  VertexId add_max(std::vector<VertexId> successors);
  VertexId add_min(std::vector<VertexId> successors);
  VertexId add_ave(VertexId first, VertexId second);
  /// Adds the self-loop itself.
  VertexId add_sink(const Rational& value);
  VertexId add_vertex(Vertex v);

  std::size_t size() const { return vertices_.size(); }
  const Vertex& vertex(VertexId x) const { return vertices_[x]; }
  Vertex& vertex(VertexId x) { return vertices_[x]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  Kind kind(VertexId x) const { return vertices_[x].kind; }
  const std::vector<VertexId>& successors(VertexId x) const { return vertices_[x].successors; }
  const Rational& sink_value(VertexId x) const { return vertices_[x].value; }
  bool is_sink(VertexId x) const { return kind(x) == Kind::Sink; }

  std::size_t count(Kind k) const;

  bool operator==(const Game&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

struct Violation {
  VertexId vertex;
  std::string reason;
};

/// Every structural rule the game breaks; empty for a valid game.
std::vector<Violation> validate(const Game& game);

/// Throws InputError listing the first violations, if any.
void require_valid(const Game& game);

/// Successor choices for one player. Undefined entries make it partial.
class Strategy {
 public:
  Strategy() = default;
  Strategy(Player owner, std::size_t vertex_count)
      : owner_(owner), choice_(vertex_count, kNoVertex) {}

  Player owner() const { return owner_; }
  std::size_t vertex_count() const { return choice_.size(); }

  bool defined(VertexId x) const { return x < choice_.size() && choice_[x] != kNoVertex; }
  VertexId operator[](VertexId x) const { return choice_[x]; }
  void set(VertexId x, VertexId successor) { choice_[x] = successor; }
  void clear(VertexId x) { choice_[x] = kNoVertex; }

  /// Vertices where a choice is defined, increasing.
  std::vector<VertexId> support() const;

  bool operator==(const Strategy&) const = default;

 private:
  Player owner_ = Player::Max;
  std::vector<VertexId> choice_;
};

struct StrategyPair {
  Strategy max;
  Strategy min;
};

/// Empty strategy for `owner` sized to `game`.
Strategy empty_strategy(const Game& game, Player owner);

/// Throws InputError unless every defined choice sits on an owned vertex
/// and follows an arc.
void check_strategy(const Game& game, const Strategy& s);

/// Defined on every vertex the owner controls (and only there).
bool is_total(const Game& game, const Strategy& s);

/// G[sigma]: vertices in the support keep only their chosen arc.
Game restrict(const Game& game, const Strategy& partial);

/// G[v]: x becomes SINK(v); its out-arcs are replaced by the self-loop.
Game vertex_to_sink(const Game& game, VertexId x, const Rational& v);

/// Collapses several sink neighbours of a MAX (resp. MIN) vertex onto the
/// best (resp. worst) one; values are unchanged. No vertex is created.
Game merge_sink_neighbors(const Game& game);

/// The sink successor a positional vertex prefers (max value for MAX,
/// min for MIN; smallest id on ties), or kNoVertex.
VertexId best_sink_neighbor(const Game& game, VertexId x);

/// Successor ids, sorted and deduplicated.
std::vector<VertexId> distinct_successors(const Game& game, VertexId x);

/// lcm of sink denominators (1 for a game without sinks).
Integer sink_denominator_lcm(const Game& game);

}  // namespace ssg
