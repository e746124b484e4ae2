#include "ssg/oracle.hpp"

#include <optional>

#include "ssg/errors.hpp"
#include "ssg/eval.hpp"

namespace ssg {

StrategySpace::StrategySpace(const Game& game, Player owner, std::size_t cap)
    : owner_(owner), vertex_count_(game.size()) {
  const Kind kind = kind_of(owner);
  double estimate = 1;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) != kind) continue;
    owned_.push_back(x);
    choices_.push_back(distinct_successors(game, x));
    estimate *= static_cast<double>(choices_.back().size());
  }
  if (estimate > static_cast<double>(cap)) {
    throw PreconditionError(std::string(to_string(owner)) + " has about " +
                            std::to_string(static_cast<long double>(estimate)) +
                            " strategies, over the cap of " + std::to_string(cap));
  }
  for (const auto& c : choices_) size_ *= c.size();
}

Strategy StrategySpace::operator[](std::size_t index) const {
  if (index >= size_) throw InputError("strategy index out of range");
  Strategy s(owner_, vertex_count_);
  for (std::size_t i = owned_.size(); i-- > 0;) {
    const auto& c = choices_[i];
    s.set(owned_[i], c[index % c.size()]);
    index /= c.size();
  }
  return s;
}

OracleResult oracle_solve(const Game& game, std::size_t cap) {
  require_valid(game);
  const StrategySpace sigmas(game, Player::Max, cap);
  const StrategySpace taus(game, Player::Min, cap);
  const auto n = static_cast<Eigen::Index>(game.size());

  // max over sigma of (min over tau), and min over tau of (max over sigma),
  // both vertexwise, in one sweep over all pairs.
  std::optional<ValueVector> maximin;
  std::vector<std::optional<ValueVector>> col_max(taus.size());
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    const Strategy sigma = sigmas[i];
    std::optional<ValueVector> row_min;
    for (std::size_t j = 0; j < taus.size(); ++j) {
      const ValueVector v = evaluate(game, sigma, taus[j]);
      row_min = row_min ? ValueVector(row_min->cwiseMin(v)) : v;
      col_max[j] = col_max[j] ? ValueVector(col_max[j]->cwiseMax(v)) : v;
    }
    maximin = maximin ? ValueVector(maximin->cwiseMax(*row_min)) : *row_min;
  }
  ValueVector minimax = *col_max[0];
  for (const auto& c : col_max) minimax = minimax.cwiseMin(*c);

  OracleResult r;
  r.minimax_equals_maximin = minimax == *maximin;
  if (!r.minimax_equals_maximin) throw InvariantError("max-min and min-max values differ");
  r.values = std::move(minimax);

  // A tau whose column max is the value and a sigma whose row min is the
  // value attain it together.
  for (std::size_t j = 0; j < taus.size(); ++j) {
    if (*col_max[j] == r.values) {
      r.witness.min = taus[j];
      break;
    }
  }
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    const Strategy sigma = sigmas[i];
    bool attains = true;
    for (std::size_t j = 0; j < taus.size() && attains; ++j) {
      const ValueVector v = evaluate(game, sigma, taus[j]);
      for (Eigen::Index x = 0; x < n; ++x) {
        if (v(x) < r.values(x)) {
          attains = false;
          break;
        }
      }
    }
    if (attains) {
      r.witness.max = sigma;
      break;
    }
  }
  if (r.witness.max.vertex_count() == 0 || r.witness.min.vertex_count() == 0) {
    throw InvariantError("no strategy pair attains the values at every vertex");
  }
  return r;
}

}  // namespace ssg
