#include "ssg/dichotomy.hpp"

#include <algorithm>
#include <vector>

#include "ssg/acyclic_family.hpp"
#include "ssg/errors.hpp"
#include "ssg/eval.hpp"
#include "ssg/structure.hpp"

namespace ssg {

namespace {

Rational combine(const Game& game, VertexId x, const ValueVector& w) {
  const auto& succ = game.successors(x);
  switch (game.kind(x)) {
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
    case Kind::Sink:
      break;
  }
  throw InputError("vertex " + std::to_string(x) + " is a sink");
}

Integer floor_of(const Rational& r) {
  Integer q = numerator_of(r) / denominator_of(r);
  if (q * denominator_of(r) > numerator_of(r)) q -= 1;
  return q;
}

DichotomyResult search(const Game& game, VertexId x, const Subsolver& subsolver) {
  if (x >= game.size() || game.is_sink(x)) {
    throw InputError("dichotomy vertex must be a non-sink vertex of the game");
  }
  DichotomyResult r;
  const Integer bound = dichotomy_bound(game);
  r.state.target_width = Rational(1) / Rational(bound * bound);

  auto probe = [&](const Rational& v, ValueVector& w) {
    w = subsolver(vertex_to_sink(game, x, v));
    ++r.subsolver_calls;
    return combine(game, x, w);
  };

  ValueVector w;
  while (r.state.hi - r.state.lo > r.state.target_width) {
    const Rational mid = halve(r.state.lo + r.state.hi);
    const Rational fv = probe(mid, w);
    ++r.state.iterations;
    if (fv == mid) {
      r.v0 = mid;
      r.exact_hit = true;
      break;
    }
    (fv > mid ? r.state.lo : r.state.hi) = mid;
  }
  if (!r.exact_hit) {
    r.v0 = stern_brocot(r.state.lo, r.state.hi, bound);
    if (probe(r.v0, w) != r.v0) throw InvariantError("reconstructed value is not a fixed point");
  }
  w(x) = r.v0;
  r.values = std::move(w);
  if (!check_local_optimality(game, r.values).satisfied) {
    throw InvariantError("dichotomy values are not locally optimal");
  }
  return r;
}

}  // namespace

Rational fixed_point_f(const Game& game, VertexId x, const Rational& v, const Subsolver& subsolver) {
  if (x >= game.size() || game.is_sink(x)) throw InputError("f needs a non-sink vertex");
  return combine(game, x, subsolver(vertex_to_sink(game, x, v)));
}

Integer dichotomy_bound(const Game& game) {
  Integer b = six_pow_half_ceil(game.count(Kind::Ave)) * sink_denominator_lcm(game);
  return b < 2 ? Integer(2) : b;
}

DichotomyResult dichotomy_solve(const Game& game, VertexId x, const Subsolver& subsolver) {
  require_valid(game);
  if (!check_stopping(game).stopping) throw PreconditionError("dichotomy requires a stopping game");
  return search(game, x, subsolver);
}

Rational stern_brocot(const Rational& lo, const Rational& hi, const Integer& max_denominator) {
  if (lo > hi) throw InputError("stern_brocot: empty interval");
  // Continued-fraction terms of the simplest rational in [lo, hi]; each term
  // is one run of same-direction mediant steps.
  std::vector<Integer> terms;
  Rational a = lo, b = hi;
  while (true) {
    const Integer f = floor_of(a);
    if (Rational(f) == a) {
      terms.push_back(f);
      break;
    }
    if (Rational(f + 1) <= b) {
      terms.push_back(f + 1);
      break;
    }
    terms.push_back(f);
    const Rational next_a = Rational(1) / (b - Rational(f));
    const Rational next_b = Rational(1) / (a - Rational(f));
    a = next_a;
    b = next_b;
  }
  Rational out(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) out = Rational(terms[i]) + Rational(1) / out;
  if (denominator_of(out) > max_denominator) {
    throw PreconditionError("no rational with denominator <= " + max_denominator.str() +
                            " in [" + to_string(lo) + ", " + to_string(hi) + "]");
  }
  return out;
}

PrecisionSchedule PrecisionSchedule::of(const Game& game) {
  return PrecisionSchedule{game.count(Kind::Ave), sink_denominator_lcm(game)};
}

Integer PrecisionSchedule::bound(std::size_t level) const {
  const std::size_t exponent = ((std::size_t{2} << level) - 1) * n_a;
  return pow_integer(6, exponent) * q0;
}

namespace {

ValueVector feedback_level(const Game& game, const std::vector<VertexId>& order, std::size_t level,
                           std::size_t* calls) {
  if (level == order.size()) return solve_acyclic(game);
  if (game.is_sink(order[level])) return feedback_level(game, order, level + 1, calls);
  DichotomyResult r = search(game, order[level], [&](const Game& g) {
    return feedback_level(g, order, level + 1, calls);
  });
  if (calls != nullptr) *calls += r.subsolver_calls;
  return std::move(r.values);
}

}  // namespace

ValueVector solve_feedback(const Game& game, std::span<const VertexId> feedback,
                           std::size_t* subsolver_calls) {
  require_valid(game);
  if (!is_feedback_vertex_set(game, feedback)) {
    throw InputError("the given vertices are not a feedback vertex set");
  }
  if (!check_stopping(game).stopping) throw PreconditionError("solve_feedback requires a stopping game");
  std::vector<VertexId> order(feedback.begin(), feedback.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  return feedback_level(game, order, 0, subsolver_calls);
}

Game make_stopping(const Game& game, std::size_t m) {
  if (m == 0) throw InputError("make_stopping needs a chain length of at least 1");
  require_valid(game);
  Game out = game;
  const VertexId zero = out.add_sink(Rational(0));
  for (VertexId x = 0; x < game.size(); ++x) {
    if (game.is_sink(x)) continue;
    const auto& succ = game.successors(x);
    std::vector<VertexId> routed;
    routed.reserve(succ.size());
    for (VertexId y : succ) {
      const auto first = static_cast<VertexId>(out.size());
      for (std::size_t j = 0; j < m; ++j) {
        const auto self = static_cast<VertexId>(out.size());
        const VertexId onward = j + 1 < m ? self + 1 : zero;
        out.add_vertex(Vertex{Kind::Ave, Rational(0), {onward, y}});
      }
      routed.push_back(first);
    }
    out.vertex(x).successors = std::move(routed);
  }
  return out;
}

std::size_t default_chain_length(const Game& game) {
  return 2 * game.size() + ceil_log2(sink_denominator_lcm(game));
}

}  // namespace ssg
