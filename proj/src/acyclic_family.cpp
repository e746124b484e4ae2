#include "ssg/acyclic_family.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "ssg/errors.hpp"
#include "ssg/eval.hpp"
#include "ssg/hoffman_karp.hpp"
#include "ssg/linear_solve.hpp"
#include "ssg/structure.hpp"

namespace ssg {

namespace {

Rational local_value(const Game& game, VertexId x, const ValueVector& w) {
  const auto& succ = game.successors(x);
  switch (game.kind(x)) {
    case Kind::Sink:
      return game.sink_value(x);
    case Kind::Ave:
      return halve(w(succ[0]) + w(succ[1]));
    case Kind::Max: {
      Rational best = w(succ[0]);
      for (VertexId y : succ) best = std::max(best, w(y));
      return best;
    }
    case Kind::Min: {
      Rational best = w(succ[0]);
      for (VertexId y : succ) best = std::min(best, w(y));
      return best;
    }
  }
  return Rational(0);
}

void require_stopping(const Game& game, const char* who) {
  if (!check_stopping(game).stopping) {
    throw PreconditionError(std::string(who) + " requires a stopping game");
  }
}

// Unique non-sink successor of a vertex with at most one cycle arc, or
// kNoVertex when every arc leads to a sink.
VertexId cycle_successor(const Game& game, VertexId x) {
  VertexId out = kNoVertex;
  for (VertexId y : game.successors(x)) {
    if (game.is_sink(y)) continue;
    if (out != kNoVertex && out != y) return kNoVertex;
    out = y;
  }
  return out;
}

// Sink value an AVE vertex on a cycle leaks to, if any.
const Rational* leak_of(const Game& game, VertexId x) {
  for (VertexId y : game.successors(x)) {
    if (game.is_sink(y)) return &game.sink_value(y);
  }
  return nullptr;
}

bool prefers(Player p, const Rational& a, const Rational& b) { return p == Player::Max ? a > b : a < b; }

// Closed values on a single cycle, walking backward from `start`. With
// `stop_early`, gives up as soon as a positional vertex would rather take
// its sink, before the remaining values are built.
std::optional<ValueVector> closed_cycle(const Game& game, const std::vector<VertexId>& next,
                                        VertexId start, bool stop_early) {
  std::vector<VertexId> order{start};
  for (VertexId v = next[start]; v != start; v = next[v]) order.push_back(v);

  ValueVector w = ValueVector::Zero(static_cast<Eigen::Index>(game.size()));
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.is_sink(x)) w(x) = game.sink_value(x);
  }
  std::vector<Rational> leaks;
  for (VertexId v : order) {
    if (game.kind(v) == Kind::Ave) {
      if (const Rational* s = leak_of(game, v)) leaks.push_back(*s);
    }
  }

  auto violates = [&](VertexId v) {
    if (!is_positional(game.kind(v))) return false;
    const VertexId s = best_sink_neighbor(game, v);
    if (s == kNoVertex) return false;
    const Player p = game.kind(v) == Kind::Max ? Player::Max : Player::Min;
    return prefers(p, game.sink_value(s), w(v));
  };

  if (leaks.empty()) {
    // Nothing ever leaves the cycle: every member is worth 0.
    if (stop_early) {
      for (VertexId v : order) {
        if (violates(v)) return std::nullopt;
      }
    }
    return w;
  }
  w(start) = cycle_value<Rational>(leaks);
  const std::size_t len = order.size();
  for (std::size_t j = len; j-- > 1;) {
    const VertexId v = order[j];
    const Rational& after = w(order[(j + 1) % len]);
    const Rational* s = game.kind(v) == Kind::Ave ? leak_of(game, v) : nullptr;
    w(v) = s != nullptr ? halve(*s + after) : after;
    if (stop_early && violates(v)) return std::nullopt;
  }
  if (stop_early && violates(start)) return std::nullopt;
  return w;
}

std::vector<VertexId> cycle_successors(const Game& game) {
  std::vector<VertexId> next(game.size(), kNoVertex);
  for (VertexId x = 0; x < game.size(); ++x) {
    if (!game.is_sink(x)) next[x] = cycle_successor(game, x);
  }
  return next;
}

Strategy open_at(const Game& game, VertexId x) {
  const Player owner = game.kind(x) == Kind::Max ? Player::Max : Player::Min;
  Strategy s = empty_strategy(game, owner);
  s.set(x, best_sink_neighbor(game, x));
  return s;
}

VertexId smallest_id_leaking(const Game& game) {
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.kind(x) == Kind::Ave && leak_of(game, x) != nullptr) return x;
  }
  return kNoVertex;
}

}  // namespace

ValueVector solve_acyclic(const Game& game) {
  require_valid(game);
  const auto n = game.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<VertexId> ready;
  ValueVector w = ValueVector::Zero(static_cast<Eigen::Index>(n));
  std::size_t non_sink = 0;
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x)) {
      w(x) = game.sink_value(x);
      continue;
    }
    ++non_sink;
    for (VertexId y : game.successors(x)) {
      if (game.is_sink(y)) continue;
      ++pending[x];
      preds[y].push_back(x);
    }
    if (pending[x] == 0) ready.push_back(x);
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    const VertexId x = ready.back();
    ready.pop_back();
    w(x) = local_value(game, x, w);
    ++done;
    for (VertexId p : preds[x]) {
      if (--pending[p] == 0) ready.push_back(p);
    }
  }
  if (done != non_sink) throw PreconditionError("solve_acyclic: the game has a cycle");
  return w;
}

ValueVector solve_by_scc(const Game& game, const ComponentSolver& solver) {
  require_valid(game);
  const StructureReport report = analyze(game);
  ValueVector w = ValueVector::Zero(static_cast<Eigen::Index>(game.size()));
  for (std::size_t id = report.components.size(); id-- > 0;) {
    const auto& comp = report.components[id];
    if (!report.component_cyclic[id]) {
      w(comp[0]) = local_value(game, comp[0], w);
      continue;
    }
    const ComponentGame cg = component_game(game, report, id, &w);
    const ValueVector local = solver(cg.game);
    if (static_cast<std::size_t>(local.size()) != cg.game.size()) {
      throw InvariantError("component solver returned a vector of the wrong size");
    }
    for (std::size_t i = 0; i < cg.members; ++i) {
      w(cg.global[i]) = local(static_cast<Eigen::Index>(i));
    }
  }
  return w;
}

ValueVector solve_max_acyclic_scc(const Game& game, SolveStats* stats) {
  require_valid(game);
  const StructureReport report = analyze(game);
  if (!report.is_strongly_connected) {
    throw PreconditionError("solve_max_acyclic_scc: game is not strongly connected");
  }
  if (!report.is_max_acyclic) {
    throw PreconditionError("solve_max_acyclic_scc: game is not MAX-acyclic");
  }
  const Game merged = merge_sink_neighbors(game);
  const HKTrace trace = hoffman_karp(merged, all_open_strategy(merged));
  if (trace.iterations > merged.count(Kind::Max)) {
    throw InvariantError("MAX-acyclic strategy iteration took more than n_M steps");
  }
  if (stats != nullptr) stats->iterations += trace.iterations;
  return trace.values;
}

ValueVector solve_max_acyclic(const Game& game, SolveStats* stats) {
  return solve_by_scc(game, [stats](const Game& c) { return solve_max_acyclic_scc(c, stats); });
}

ValueVector closed_values(const Game& game) {
  require_valid(game);
  const StructureReport report = analyze(game);
  if (!report.is_strongly_connected || report.k_p != 0) {
    throw PreconditionError("closed_values needs a strongly connected game with k_p = 0");
  }
  for (std::size_t id = 0; id < report.components.size(); ++id) {
    if (!game.is_sink(report.components[id][0]) && !report.component_cyclic[id]) {
      throw PreconditionError("closed_values: the component has no cycle");
    }
  }
  const auto next = cycle_successors(game);
  const VertexId start = smallest_id_leaking(game);

  if (report.k_a == 0) {
    if (start == kNoVertex) {
      VertexId any = 0;
      while (game.is_sink(any)) ++any;
      return *closed_cycle(game, next, any, false);
    }
    return *closed_cycle(game, next, start, false);
  }

  const auto n = game.size();
  ValueVector w = ValueVector::Zero(static_cast<Eigen::Index>(n));
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x)) w(x) = game.sink_value(x);
  }
  if (start == kNoVertex) return w;

  // Every non-fork vertex is alpha + beta * value(target) for the first fork
  // reached along its closed path.
  std::vector<char> is_fork(n, 0);
  std::vector<std::size_t> fork_index(n, 0);
  const auto& forks = report.fork_average;
  for (std::size_t i = 0; i < forks.size(); ++i) {
    is_fork[forks[i]] = 1;
    fork_index[forks[i]] = i;
  }
  struct Affine {
    Rational alpha;
    Rational beta;
    VertexId target = kNoVertex;
  };
  std::vector<Affine> affine(n);
  std::vector<char> state(n, 0);  // 0 new, 1 on the current walk, 2 done
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x) || is_fork[x] || state[x] == 2) continue;
    std::vector<VertexId> walk;
    VertexId v = x;
    while (!is_fork[v] && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = next[v];
    }
    if (!is_fork[v] && state[v] == 1) {
      throw InvariantError("closed path avoids every fork vertex");
    }
    Affine tail = is_fork[v] ? Affine{Rational(0), Rational(1), v} : affine[v];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
      const VertexId u = *it;
      const Rational* s = game.kind(u) == Kind::Ave ? leak_of(game, u) : nullptr;
      if (s != nullptr) tail = Affine{halve(*s + tail.alpha), halve(tail.beta), tail.target};
      affine[u] = tail;
      state[u] = 2;
    }
  }

  const auto k = static_cast<Eigen::Index>(forks.size());
  Matrix<Rational> a = Matrix<Rational>::Identity(k, k);
  Vector<Rational> b = Vector<Rational>::Zero(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (VertexId y : game.successors(forks[static_cast<std::size_t>(i)])) {
      const Rational half(1, 2);
      if (game.is_sink(y)) {
        b(i) += half * game.sink_value(y);
      } else if (is_fork[y]) {
        a(i, static_cast<Eigen::Index>(fork_index[y])) -= half;
      } else {
        b(i) += half * affine[y].alpha;
        a(i, static_cast<Eigen::Index>(fork_index[affine[y].target])) -= half * affine[y].beta;
      }
    }
  }
  const Vector<Rational> z = solve_exact<Rational>(a, b);
  for (Eigen::Index i = 0; i < k; ++i) w(forks[static_cast<std::size_t>(i)]) = z(i);
  for (VertexId x = 0; x < n; ++x) {
    if (game.is_sink(x) || is_fork[x]) continue;
    w(x) = affine[x].alpha + affine[x].beta * z(static_cast<Eigen::Index>(fork_index[affine[x].target]));
  }
  return w;
}

namespace {

// Opens the first vertex after `x` (in cycle order) of the same kind that is
// weakly open under `w1`, or `x` itself when none is.
VertexId first_weakly_open_after(const Game& game, const std::vector<VertexId>& next,
                                 VertexId x, const ValueVector& w1) {
  const Kind kind = game.kind(x);
  const Player p = kind == Kind::Max ? Player::Max : Player::Min;
  for (VertexId v = next[x]; v != x; v = next[v]) {
    if (game.kind(v) != kind) continue;
    const VertexId s = best_sink_neighbor(game, v);
    if (s == kNoVertex) continue;
    if (!prefers(p, w1(next[v]), game.sink_value(s))) return v;
  }
  return x;
}

std::optional<ValueVector> try_open(const Game& game, const std::vector<VertexId>& next, Kind kind,
                                    SolveStats* stats) {
  VertexId x = kNoVertex;
  for (VertexId v = 0; v < game.size(); ++v) {
    if (game.kind(v) == kind && best_sink_neighbor(game, v) != kNoVertex) {
      x = v;
      break;
    }
  }
  if (x == kNoVertex) return std::nullopt;
  ValueVector w1 = solve_acyclic(restrict(game, open_at(game, x)));
  if (stats != nullptr) ++stats->subsolver_calls;
  const VertexId y = first_weakly_open_after(game, next, x, w1);
  ValueVector w2 = y == x ? std::move(w1) : solve_acyclic(restrict(game, open_at(game, y)));
  if (stats != nullptr && y != x) ++stats->subsolver_calls;
  if (check_local_optimality(game, w2).satisfied) return w2;
  return std::nullopt;
}

}  // namespace

ValueVector solve_almost_acyclic_scc(const Game& game, SolveStats* stats) {
  require_valid(game);
  const StructureReport report = analyze(game);
  if (!report.is_strongly_connected) {
    throw PreconditionError("solve_almost_acyclic_scc: game is not strongly connected");
  }
  if (!report.is_almost_acyclic) {
    throw PreconditionError("solve_almost_acyclic_scc: the component is not a single cycle");
  }
  require_stopping(game, "solve_almost_acyclic_scc");
  if (report.is_acyclic) return solve_acyclic(game);

  const auto next = cycle_successors(game);
  VertexId start = smallest_id_leaking(game);
  if (start == kNoVertex) {
    start = 0;
    while (game.is_sink(start)) ++start;
  }
  if (auto w = closed_cycle(game, next, start, true)) return *w;
  if (auto w = try_open(game, next, Kind::Max, stats)) return *w;
  if (auto w = try_open(game, next, Kind::Min, stats)) return *w;
  throw InvariantError("almost-acyclic solver: no closed or opened solution is optimal");
}

ValueVector solve_almost_acyclic(const Game& game, SolveStats* stats) {
  require_valid(game);
  require_stopping(game, "solve_almost_acyclic");
  return solve_by_scc(game,
                      [stats](const Game& c) { return solve_almost_acyclic_scc(c, stats); });
}

namespace {

class ForkSolver {
 public:
  explicit ForkSolver(SolveStats* stats) : stats_(stats) {}

  ValueVector component(const Game& c) {
    const StructureReport report = analyze(c);
    if (report.fork_positional.empty()) return pos_acyclic(c, ForkBudget{0, report.k_a, 0});

    // One cycle arc per positional fork; sink arcs stay.
    std::vector<VertexId> forks;
    std::vector<std::vector<VertexId>> options;
    for (const auto& [x, d] : report.fork_positional) {
      forks.push_back(x);
      std::vector<VertexId> inner;
      for (VertexId y : distinct_successors(c, x)) {
        if (report.on_cycle(x, y)) inner.push_back(y);
      }
      options.push_back(std::move(inner));
    }
    std::vector<std::size_t> pick(forks.size(), 0);
    while (true) {
      Game pruned = c;
      for (std::size_t i = 0; i < forks.size(); ++i) {
        auto& succ = pruned.vertex(forks[i]).successors;
        std::vector<VertexId> kept;
        for (VertexId y : succ) {
          if (c.is_sink(y) || y == options[i][pick[i]]) kept.push_back(y);
        }
        succ = std::move(kept);
      }
      ValueVector w = solve_by_scc(pruned, [this, k_p = report.k_p](const Game& g) {
        return pos_acyclic(g, ForkBudget{k_p, analyze(g).k_a, 0});
      });
      if (check_local_optimality(c, w).satisfied) return w;
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    throw InvariantError("no positional cycle-arc choice yields an optimal solution");
  }

 private:
  ValueVector pos_acyclic(const Game& c, ForkBudget budget) {
    const StructureReport report = analyze(c);
    if (report.k_p != 0) throw InvariantError("positional fork left after enumeration");
    if (report.k_a == 0) return solve_almost_acyclic_scc(c, stats_);
    if (budget.depth > budget.k_a + 1) throw InvariantError("fork recursion too deep");

    ValueVector closed = closed_values(c);
    if (check_local_optimality(c, closed).satisfied) return closed;

    const auto n = c.size();
    std::vector<char> is_fork(n, 0);
    for (VertexId f : report.fork_average) is_fork[f] = 1;
    const auto next = cycle_successors(c);

    for (Kind kind : {Kind::Max, Kind::Min}) {
      const Player p = kind == Kind::Max ? Player::Max : Player::Min;
      std::vector<char> openable(n, 0);
      std::vector<VertexId> open_list;
      for (VertexId v = 0; v < n; ++v) {
        if (c.kind(v) == kind && best_sink_neighbor(c, v) != kNoVertex) {
          openable[v] = 1;
          open_list.push_back(v);
        }
      }
      if (open_list.empty()) continue;

      // x: an openable vertex whose closed path meets a fork before any
      // other openable vertex; smallest fork id, then smallest x.
      VertexId x = kNoVertex, fork = kNoVertex;
      for (VertexId v : open_list) {
        VertexId cur = next[v];
        for (std::size_t steps = 0; steps <= n && !is_fork[cur] && !openable[cur]; ++steps) {
          cur = next[cur];
        }
        if (!is_fork[cur]) continue;
        if (fork == kNoVertex || cur < fork) {
          fork = cur;
          x = v;
        }
      }
      if (x == kNoVertex) continue;

      auto solve_open = [&](VertexId v) {
        ForkBudget deeper{budget.k_p, budget.k_a, budget.depth + 1};
        if (stats_ != nullptr) ++stats_->subsolver_calls;
        return solve_by_scc(restrict(c, open_at(c, v)),
                            [this, deeper](const Game& g) { return pos_acyclic(g, deeper); });
      };
      ValueVector w1 = solve_open(x);

      std::vector<char> in_s(n, 0);
      for (VertexId v : open_list) {
        const Rational& sink = c.sink_value(best_sink_neighbor(c, v));
        if (v == x || !prefers(p, w1(next[v]), sink)) in_s[v] = 1;
      }
      std::vector<VertexId> candidates;
      for (VertexId f : report.fork_average) {
        for (VertexId u : distinct_successors(c, f)) {
          if (c.is_sink(u)) continue;
          VertexId cur = u;
          for (std::size_t steps = 0; steps <= n && !is_fork[cur]; ++steps) {
            if (in_s[cur]) {
              candidates.push_back(cur);
              break;
            }
            cur = next[cur];
          }
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (VertexId y : candidates) {
        ValueVector w2 = y == x ? w1 : solve_open(y);
        if (check_local_optimality(c, w2).satisfied) return w2;
      }
    }
    throw InvariantError("fork solver: no closed or opened candidate is optimal");
  }

  SolveStats* stats_;
};

}  // namespace

ValueVector solve_fork_fpt(const Game& game, SolveStats* stats) {
  require_valid(game);
  require_stopping(game, "solve_fork_fpt");
  ForkSolver solver(stats);
  return solve_by_scc(game, [&solver](const Game& c) { return solver.component(c); });
}

}  // namespace ssg
