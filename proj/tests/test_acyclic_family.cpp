#include <gtest/gtest.h>

#include <random>

#include "ssg/acyclic_family.hpp"
#include "ssg/errors.hpp"
#include "ssg/eval.hpp"
#include "ssg/generator.hpp"
#include "ssg/io.hpp"
#include "ssg/structure.hpp"
#include "support/games.hpp"
#include "support/oracles.hpp"

using namespace ssg;
namespace t = ssg::testing;

namespace {

ValueVector brute(const Game& g) { return t::to_vector(t::brute_values(g)); }

Game family_game(Family f, std::size_t n, std::uint64_t seed, std::size_t k = 1) {
  GeneratorSpec spec;
  spec.family = f;
  spec.n = n;
  spec.seed = seed;
  spec.k = k;
  return generate(spec);
}

Rational random_sink_value(std::mt19937_64& rng) {
  const long den = 1 + static_cast<long>(rng() % 4);
  return Rational(static_cast<long>(rng() % (den + 1)), den);
}

// AVE vertices 0..l-1 in a ring, vertex i leaking to sink l + i.
Game ave_ring(const std::vector<Rational>& leaks) {
  const auto l = static_cast<VertexId>(leaks.size());
  Game g;
  for (VertexId i = 0; i < l; ++i) g.add_ave((i + 1) % l, l + i);
  for (const Rational& s : leaks) g.add_sink(s);
  return g;
}

}  // namespace

TEST(SolveAcyclic, CaterpillarRoot) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(solve_acyclic(t::caterpillar(n))(0), Rational(Integer(1), Integer(1) << n));
  }
}

TEST(SolveAcyclic, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Game g = family_game(Family::Acyclic, 3 + seed % 6, seed);
    ASSERT_EQ(solve_acyclic(g), brute(g)) << serialize_game(g);
  }
}

TEST(SolveAcyclic, RefusesCycles) {
  EXPECT_THROW(solve_acyclic(t::two_ave_cycle()), PreconditionError);
}

TEST(CycleValue, TwoAveCycle) {
  const std::vector<Rational> leaks{Rational(0), Rational(1)};
  EXPECT_EQ(cycle_value<Rational>(leaks), Rational(1, 3));
  const std::vector<double> approx{0.0, 1.0};
  EXPECT_NEAR(cycle_value<double>(approx), 1.0 / 3.0, 1e-15);
}

TEST(CycleValue, MatchesLinearSystemOnRandomRings) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> leaks(1 + rng() % 12);
    for (auto& s : leaks) s = random_sink_value(rng);
    const Game g = ave_ring(leaks);
    const ValueVector w = evaluate(g, empty_strategy(g, Player::Max), empty_strategy(g, Player::Min));
    ASSERT_EQ(cycle_value<Rational>(leaks), w(0));
    ASSERT_EQ(closed_values(g), w);
  }
}

TEST(ClosedValues, AgreeWithEvaluationOfTheClosedPair) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Game g = family_game(Family::SingleCycle, 3 + seed % 15, seed);
    const StructureReport r = analyze(g);
    StrategyPair closed{empty_strategy(g, Player::Max), empty_strategy(g, Player::Min)};
    for (const Arc& a : r.cycle_arcs) {
      if (g.kind(a.from) == Kind::Max) closed.max.set(a.from, a.to);
      if (g.kind(a.from) == Kind::Min) closed.min.set(a.from, a.to);
    }
    ASSERT_EQ(closed_values(g), evaluate(g, closed.max, closed.min)) << serialize_game(g);
  }
}

TEST(ClosedValues, SolvesTheForkSystem) {
  const Game g = t::fork_figure({Rational(1, 2), Rational(1, 3), Rational(1)});
  const StructureReport r = analyze(g);
  Strategy closed = empty_strategy(g, Player::Max);
  for (const Arc& a : r.cycle_arcs) {
    if (g.kind(a.from) == Kind::Max) closed.set(a.from, a.to);
  }
  EXPECT_EQ(closed_values(g), evaluate(g, closed, empty_strategy(g, Player::Min)));
}

TEST(AlmostAcyclic, SingleCycleFamilyMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Game g = family_game(Family::SingleCycle, 3 + seed % 7, seed);
    ASSERT_EQ(solve_almost_acyclic_scc(g), brute(g)) << serialize_game(g);
  }
}

TEST(AlmostAcyclic, RandomAlmostAcyclicGamesMatchBruteForce) {
  std::size_t checked = 0;
  for (const Game& g : t::random_stopping(600, 7, 0)) {
    if (!analyze(g).is_almost_acyclic) continue;
    ++checked;
    ASSERT_EQ(solve_almost_acyclic(g), brute(g)) << serialize_game(g);
  }
  EXPECT_GT(checked, 50u);
}

TEST(AlmostAcyclic, Preconditions) {
  EXPECT_THROW(solve_almost_acyclic_scc(t::fork_figure({Rational(1)})), PreconditionError);
  Game loop;
  loop.add_max({1, 2});
  loop.add_max({0});
  loop.add_sink(Rational(1));
  EXPECT_THROW(solve_almost_acyclic_scc(loop), PreconditionError);
}

TEST(AlmostAcyclic, LargeCycleIsLocallyOptimal) {
  const Game g = family_game(Family::SingleCycle, 2000, 3);
  SolveStats stats;
  const ValueVector w = solve_almost_acyclic_scc(g, &stats);
  EXPECT_TRUE(check_local_optimality(g, w).satisfied);
}

TEST(MaxAcyclic, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Game g = family_game(Family::MaxAcyclic, 3 + seed % 6, seed);
    SolveStats stats;
    ASSERT_EQ(solve_max_acyclic(g, &stats), brute(g)) << serialize_game(g);
    EXPECT_LE(stats.iterations, g.count(Kind::Max));
  }
}

TEST(MaxAcyclic, RefusesMaxForks) {
  Game g;
  g.add_max({1, 2});
  g.add_ave(0, 3);
  g.add_ave(0, 3);
  g.add_sink(Rational(1));
  EXPECT_THROW(solve_max_acyclic_scc(g), PreconditionError);
}

TEST(ForkFpt, FigureShapedGames) {
  const std::vector<std::vector<Rational>> escapes{
      {Rational(1)}, {Rational(1, 2), Rational(3, 4)}, {Rational(0), Rational(1, 4), Rational(1)}};
  for (const auto& e : escapes) {
    const Game g = t::fork_figure(e);
    SolveStats stats;
    ASSERT_EQ(solve_fork_fpt(g, &stats), brute(g)) << serialize_game(g);
  }
}

TEST(ForkFpt, MinForkWithThreeCycleArcs) {
  Game g;
  g.add_min({1, 2, 3});
  g.add_ave(0, 4);
  g.add_ave(0, 5);
  g.add_ave(0, 6);
  g.add_sink(Rational(1, 4));
  g.add_sink(Rational(1));
  g.add_sink(Rational(3, 4));
  EXPECT_EQ(solve_fork_fpt(g), brute(g));
}

TEST(ForkFpt, RandomStoppingGamesMatchBruteForce) {
  std::size_t checked = 0;
  for (const Game& g : t::random_stopping(400, 7, 1000)) {
    const StructureReport r = analyze(g);
    if (r.k_p + r.k_a > 4) continue;
    ++checked;
    SolveStats stats;
    ASSERT_EQ(solve_fork_fpt(g, &stats), brute(g)) << serialize_game(g);
  }
  EXPECT_GT(checked, 100u);
}

TEST(ForkFpt, MaxAcyclicFamilyMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Game g = family_game(Family::MaxAcyclic, 4 + seed % 5, seed + 77);
    ASSERT_EQ(solve_fork_fpt(g), brute(g)) << serialize_game(g);
  }
}

// Raising one sink never lowers a value.
TEST(Monotonicity, RaisingASinkNeverHurts) {
  std::mt19937_64 rng(11);
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; checked < 150; ++seed) {
    const Game g = family_game(Family::SingleCycle, 5 + seed % 20, seed);
    std::vector<VertexId> sinks;
    for (VertexId x = 0; x < g.size(); ++x) {
      if (g.is_sink(x) && g.sink_value(x) < 1) sinks.push_back(x);
    }
    if (sinks.empty()) continue;
    ++checked;
    const VertexId s = sinks[rng() % sinks.size()];
    Game raised = g;
    raised.vertex(s).value += (1 - g.sink_value(s)) * Rational(1 + static_cast<long>(rng() % 4), 4);
    const ValueVector before = solve_almost_acyclic(g), after = solve_almost_acyclic(raised);
    for (Eigen::Index i = 0; i < before.size(); ++i) ASSERT_GE(after(i), before(i));
  }
}
