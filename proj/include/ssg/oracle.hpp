#pragma once

#include <cstddef>
#include <iterator>
#include <vector>

#include "ssg/game.hpp"
#include "ssg/rational.hpp"

namespace ssg {

inline constexpr std::size_t kDefaultStrategyCap = 1'000'000;

/// Every total pure strategy of one player, in lexicographic order: the
/// owned vertices by increasing id, each running through its distinct
/// successors in increasing id, the last vertex varying fastest.
class StrategySpace {
 public:
  /// Throws PreconditionError when the count exceeds `cap`.
  StrategySpace(const Game& game, Player owner, std::size_t cap = kDefaultStrategyCap);

  std::size_t size() const { return size_; }
  Strategy operator[](std::size_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Strategy;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Strategy;

    iterator(const StrategySpace* space, std::size_t index) : space_(space), index_(index) {}
    Strategy operator*() const { return (*space_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }

   private:
    const StrategySpace* space_;
    std::size_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  Player owner_;
  std::size_t vertex_count_;
  std::vector<VertexId> owned_;
  std::vector<std::vector<VertexId>> choices_;
  std::size_t size_ = 1;
};

struct OracleResult {
  ValueVector values;
  StrategyPair witness;
  bool minimax_equals_maximin = false;
};

/// Exhaustive minimax over all pure stationary pairs, vertex by vertex.
/// Throws InvariantError if max-min and min-max differ anywhere.
OracleResult oracle_solve(const Game& game, std::size_t cap = kDefaultStrategyCap);

}  // namespace ssg
