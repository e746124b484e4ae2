#include "ssg/eval.hpp"

#include <algorithm>
#include <deque>

#include "ssg/errors.hpp"
#include "ssg/linear_solve.hpp"

namespace ssg {

namespace {

void require_total(const Game& game, const Strategy& s, Player owner) {
  if (s.owner() != owner) {
    throw InputError(std::string("expected a ") + to_string(owner) + " strategy");
  }
  check_strategy(game, s);
  if (!is_total(game, s)) {
    throw InputError(std::string(to_string(owner)) + " strategy is partial; a total one is required");
  }
}

/// The arc a vertex follows under (sigma, tau); AVE and sinks use their own arcs.
const Strategy& chooser(const Game& game, VertexId x, const Strategy& sigma, const Strategy& tau) {
  return game.kind(x) == Kind::Max ? sigma : tau;
}

std::vector<char> zero_mask(const Game& game, const Strategy& sigma, const Strategy& tau) {
  const auto n = game.size();
  std::vector<std::vector<VertexId>> preds(n);
  for (VertexId x = 0; x < n; ++x) {
    switch (game.kind(x)) {
      case Kind::Ave:
        for (VertexId y : game.successors(x)) preds[y].push_back(x);
        break;
      case Kind::Max:
      case Kind::Min:
        preds[chooser(game, x, sigma, tau)[x]].push_back(x);
        break;
      case Kind::Sink:
        break;
    }
  }
  std::vector<char> in_z(n, 1);
  std::deque<VertexId> removed;
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x) && game.sink_value(x) > 0) {
      in_z[x] = 0;
      removed.push_back(x);
    }
  }
  while (!removed.empty()) {
    const VertexId y = removed.front();
    removed.pop_front();
    for (VertexId x : preds[y]) {
      if (!in_z[x]) continue;
      in_z[x] = 0;
      removed.push_back(x);
    }
  }
  return in_z;
}

bool is_deterministic_ave(const Game& game, VertexId x) {
  const auto& s = game.successors(x);
  return game.kind(x) == Kind::Ave && s[0] == s[1];
}

// Everything evaluate() needs besides the solved AVE values.
struct Plan {
  std::vector<char> in_z;
  // First vertex reached that is a sink, a zero-set vertex or a proper AVE.
  std::vector<VertexId> target;
  std::vector<std::size_t> variable_index;
  LinearSystem system;
};

Plan make_plan(const Game& game, const Strategy& sigma, const Strategy& tau) {
  require_total(game, sigma, Player::Max);
  require_total(game, tau, Player::Min);
  const auto n = game.size();
  Plan plan;
  plan.in_z = zero_mask(game, sigma, tau);

  auto terminal = [&](VertexId x) {
    return game.is_sink(x) || plan.in_z[x] ||
           (game.kind(x) == Kind::Ave && !is_deterministic_ave(game, x));
  };
  auto forward = [&](VertexId x) {
    return game.kind(x) == Kind::Ave ? game.successors(x)[0] : chooser(game, x, sigma, tau)[x];
  };

  plan.target.assign(n, kNoVertex);
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> path;
  for (VertexId start = 0; start < n; ++start) {
    if (plan.target[start] != kNoVertex) continue;
    VertexId x = start;
    while (plan.target[x] == kNoVertex && !terminal(x)) {
      if (on_path[x]) throw InvariantError("positional cycle outside the zero set");
      on_path[x] = 1;
      path.push_back(x);
      x = forward(x);
    }
    const VertexId t = plan.target[x] != kNoVertex ? plan.target[x] : x;
    plan.target[x] = t;
    for (VertexId p : path) {
      plan.target[p] = t;
      on_path[p] = 0;
    }
    path.clear();
  }

  plan.variable_index.assign(n, static_cast<std::size_t>(-1));
  auto& vars = plan.system.variables;
  for (VertexId x = 0; x < n; ++x) {
    if (game.kind(x) == Kind::Ave && !plan.in_z[x] && !is_deterministic_ave(game, x)) {
      plan.variable_index[x] = vars.size();
      vars.push_back(x);
    }
  }
  const auto m = static_cast<Eigen::Index>(vars.size());
  plan.system.a = Matrix<Rational>::Zero(m, m);
  plan.system.b = Vector<Rational>::Zero(m);
  const Rational half_one(1, 2);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (VertexId y : game.successors(vars[static_cast<std::size_t>(i)])) {
      const VertexId t = plan.target[y];
      if (plan.in_z[t]) continue;
      if (game.is_sink(t)) {
        plan.system.b(i) += halve(game.sink_value(t));
      } else {
        plan.system.a(i, static_cast<Eigen::Index>(plan.variable_index[t])) += half_one;
      }
    }
  }
  return plan;
}

}  // namespace

std::vector<VertexId> zero_set(const Game& game, const Strategy& sigma, const Strategy& tau) {
  require_total(game, sigma, Player::Max);
  require_total(game, tau, Player::Min);
  const auto mask = zero_mask(game, sigma, tau);
  std::vector<VertexId> out;
  for (VertexId x = 0; x < game.size(); ++x) {
    if (mask[x]) out.push_back(x);
  }
  return out;
}

LinearSystem build_linear_system(const Game& game, const Strategy& sigma, const Strategy& tau) {
  return make_plan(game, sigma, tau).system;
}

ValueVector evaluate(const Game& game, const Strategy& sigma, const Strategy& tau) {
  const Plan plan = make_plan(game, sigma, tau);
  const auto& sys = plan.system;
  const auto m = sys.a.rows();
  Matrix<Rational> lhs = -sys.a;
  for (Eigen::Index i = 0; i < m; ++i) lhs(i, i) += 1;
  const Vector<Rational> z = m > 0 ? solve_exact<Rational>(std::move(lhs), sys.b) : Vector<Rational>();

  const auto n = game.size();
  ValueVector values(static_cast<Eigen::Index>(n));
  for (VertexId x = 0; x < n; ++x) {
    const VertexId t = plan.target[x];
    if (plan.in_z[t]) {
      values(x) = 0;
    } else if (game.is_sink(t)) {
      values(x) = game.sink_value(t);
    } else {
      values(x) = z(static_cast<Eigen::Index>(plan.variable_index[t]));
    }
  }
  return values;
}

OptimalityReport check_local_optimality(const Game& game, const ValueVector& w) {
  if (static_cast<std::size_t>(w.size()) != game.size()) {
    throw InputError("value vector has " + std::to_string(w.size()) + " entries, game has " +
                     std::to_string(game.size()) + " vertices");
  }
  OptimalityReport report;
  for (VertexId x = 0; x < game.size(); ++x) {
    const auto& succ = game.successors(x);
    Rational expected;
    switch (game.kind(x)) {
      case Kind::Sink:
        expected = game.sink_value(x);
        break;
      case Kind::Ave:
        expected = halve(w(succ[0]) + w(succ[1]));
        break;
      case Kind::Max:
        expected = w(succ[0]);
        for (VertexId y : succ) {
          if (w(y) > expected) expected = w(y);
        }
        break;
      case Kind::Min:
        expected = w(succ[0]);
        for (VertexId y : succ) {
          if (w(y) < expected) expected = w(y);
        }
        break;
    }
    if (expected != w(x)) report.violations.push_back({x, expected, w(x)});
  }
  report.satisfied = report.violations.empty();
  return report;
}

namespace {

// Smallest-id successor with the best value for the vertex's owner.
VertexId greedy_choice(const Game& game, VertexId x, const ValueVector& w, bool maximize) {
  VertexId best = kNoVertex;
  for (VertexId y : distinct_successors(game, x)) {
    if (best == kNoVertex || (maximize ? w(y) > w(best) : w(y) < w(best))) best = y;
  }
  return best;
}

}  // namespace

StrategyPair greedy_strategies(const Game& game, const ValueVector& w) {
  if (!check_local_optimality(game, w).satisfied) {
    throw InputError("greedy_strategies: value vector is not locally optimal");
  }
  StrategyPair out{empty_strategy(game, Player::Max), empty_strategy(game, Player::Min)};
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) == Kind::Max) out.max.set(x, greedy_choice(game, x, w, true));
    if (game.kind(x) == Kind::Min) out.min.set(x, greedy_choice(game, x, w, false));
  }
  return out;
}

namespace {

// Greatest set where MIN can keep the value at 0 against sigma: AVE vertices
// need both successors inside, MAX its sigma-successor, MIN at least one.
std::vector<char> min_zero_region(const Game& game, const Strategy& sigma) {
  const auto n = game.size();
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<std::size_t> remaining(n, 0);
  for (VertexId x = 0; x < n; ++x) {
    switch (game.kind(x)) {
      case Kind::Max:
        preds[sigma[x]].push_back(x);
        break;
      case Kind::Ave:
      case Kind::Min:
        for (VertexId y : game.successors(x)) preds[y].push_back(x);
        remaining[x] = game.successors(x).size();
        break;
      case Kind::Sink:
        break;
    }
  }
  std::vector<char> in(n, 1);
  std::deque<VertexId> removed;
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x) && game.sink_value(x) > 0) {
      in[x] = 0;
      removed.push_back(x);
    }
  }
  while (!removed.empty()) {
    const VertexId y = removed.front();
    removed.pop_front();
    for (VertexId x : preds[y]) {
      if (!in[x]) continue;
      if (game.kind(x) == Kind::Min && --remaining[x] > 0) continue;
      in[x] = 0;
      removed.push_back(x);
    }
  }
  return in;
}

}  // namespace

BestResponse best_response_min(const Game& game, const Strategy& sigma) {
  require_total(game, sigma, Player::Max);
  const auto zero_region = min_zero_region(game, sigma);
  BestResponse br{empty_strategy(game, Player::Min), {}, 0};
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) != Kind::Min) continue;
    const auto succ = distinct_successors(game, x);
    VertexId pick = succ.front();
    if (zero_region[x]) {
      pick = *std::find_if(succ.begin(), succ.end(), [&](VertexId y) { return zero_region[y]; });
    }
    br.strategy.set(x, pick);
  }
  while (true) {
    br.values = evaluate(game, sigma, br.strategy);
    ++br.rounds;
    bool switched = false;
    for (VertexId x = 0; x < game.size(); ++x) {
      if (game.kind(x) != Kind::Min) continue;
      const VertexId best = greedy_choice(game, x, br.values, false);
      if (br.values(best) < br.values(br.strategy[x])) {
        br.strategy.set(x, best);
        switched = true;
      }
    }
    if (!switched) return br;
  }
}

BestResponse best_response_max(const Game& game, const Strategy& tau) {
  require_total(game, tau, Player::Min);
  BestResponse br{empty_strategy(game, Player::Max), {}, 0};
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) == Kind::Max) br.strategy.set(x, distinct_successors(game, x).front());
  }
  while (true) {
    br.values = evaluate(game, br.strategy, tau);
    ++br.rounds;
    bool switched = false;
    for (VertexId x = 0; x < game.size(); ++x) {
      if (game.kind(x) != Kind::Max) continue;
      const VertexId best = greedy_choice(game, x, br.values, true);
      if (br.values(best) > br.values(br.strategy[x])) {
        br.strategy.set(x, best);
        switched = true;
      }
    }
    if (!switched) return br;
  }
}

StoppingReport check_stopping(const Game& game) {
  const auto n = game.size();
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<std::size_t> remaining(n, 0);
  std::vector<char> in(n, 0);
  std::deque<VertexId> removed;
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x)) {
      removed.push_back(x);
      continue;
    }
    in[x] = 1;
    for (VertexId y : game.successors(x)) preds[y].push_back(x);
    remaining[x] = game.successors(x).size();
  }
  while (!removed.empty()) {
    const VertexId y = removed.front();
    removed.pop_front();
    for (VertexId x : preds[y]) {
      if (!in[x]) continue;
      // An AVE vertex leaves as soon as one arc leaves; a positional vertex
      // only when all of its arcs have.
      if (game.kind(x) != Kind::Ave && --remaining[x] > 0) continue;
      in[x] = 0;
      removed.push_back(x);
    }
  }
  StoppingReport report;
  for (VertexId x = 0; x < n; ++x) {
    if (in[x]) report.witness.push_back(x);
  }
  report.stopping = report.witness.empty();
  return report;
}

Integer denominator_bound(const Game& game) {
  return six_pow_half_ceil(game.count(Kind::Ave)) * sink_denominator_lcm(game);
}

}  // namespace ssg
