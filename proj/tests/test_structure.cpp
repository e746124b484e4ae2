#include <gtest/gtest.h>

#include <algorithm>

#include "ssg/generator.hpp"
#include "ssg/io.hpp"
#include "ssg/structure.hpp"
#include "support/games.hpp"
#include "support/oracles.hpp"

using namespace ssg;
namespace t = ssg::testing;

TEST(Analyze, DagHasNoForksAndEmptyFeedbackSet) {
  const Game g = parse_game("ssg 1\n0 max 1 2\n1 ave 2 3\n2 min 3 4\n3 sink 0/1\n4 sink 1/1\n");
  const StructureReport r = analyze(g);
  EXPECT_TRUE(r.is_acyclic);
  EXPECT_TRUE(r.is_almost_acyclic);
  EXPECT_EQ(r.k_p, 0u);
  EXPECT_EQ(r.k_a, 0u);
  EXPECT_TRUE(r.cycle_arcs.empty());
  EXPECT_FALSE(r.is_strongly_connected);
  EXPECT_EQ(feedback_vertex_set(g, 3), std::vector<VertexId>{});
}

TEST(Analyze, SingleCycle) {
  const Game g = t::two_ave_cycle();
  const StructureReport r = analyze(g);
  EXPECT_FALSE(r.is_acyclic);
  EXPECT_TRUE(r.is_almost_acyclic);
  EXPECT_TRUE(r.is_strongly_connected);
  EXPECT_EQ(r.cycle_arcs, (std::vector<Arc>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(r.on_cycle(0, 1));
  EXPECT_FALSE(r.on_cycle(0, 2));
  EXPECT_FALSE(r.on_cycle(2, 2));
}

TEST(Analyze, ForkFigureHasTwoAverageForks) {
  const Game g = t::fork_figure({Rational(1, 2), Rational(3, 4)});
  const StructureReport r = analyze(g);
  EXPECT_EQ(r.k_a, 2u);
  EXPECT_EQ(r.k_p, 0u);
  EXPECT_EQ(r.fork_average, (std::vector<VertexId>{2, 3}));
  EXPECT_TRUE(r.is_max_acyclic);
  EXPECT_FALSE(r.is_almost_acyclic);
  EXPECT_TRUE(r.is_strongly_connected);
}

TEST(Analyze, PositionalForkCountsDistinctCycleArcs) {
  // MIN vertex 0 with three cycle arcs (and a duplicate).
  Game g;
  g.add_min({1, 2, 3, 3, 4});
  g.add_ave(0, 4);
  g.add_ave(0, 4);
  g.add_ave(0, 4);
  g.add_sink(Rational(1));
  const StructureReport r = analyze(g);
  ASSERT_EQ(r.fork_positional.size(), 1u);
  EXPECT_EQ(r.fork_positional[0], (std::pair<VertexId, std::size_t>{0, 3}));
  EXPECT_EQ(r.cycle_outdegree[0], 3u);
  EXPECT_EQ(r.k_p, 2u);
  EXPECT_TRUE(r.is_max_acyclic);
  EXPECT_FALSE(r.is_min_acyclic);
}

TEST(Analyze, ComponentsAreTopologicallyOrdered) {
  GeneratorSpec spec;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    spec.seed = seed;
    spec.n = 4 + seed % 20;
    const Game g = generate(spec);
    const StructureReport r = analyze(g);
    for (VertexId x = 0; x < g.size(); ++x) {
      ASSERT_NE(std::find(r.components[r.scc_of[x]].begin(), r.components[r.scc_of[x]].end(), x),
                r.components[r.scc_of[x]].end());
      for (VertexId y : g.successors(x)) ASSERT_LE(r.scc_of[x], r.scc_of[y]) << "seed " << seed;
    }
    for (std::size_t c = 0; c < r.condensation.size(); ++c) {
      for (std::size_t d : r.condensation[c]) ASSERT_LT(c, d);
    }
  }
}

TEST(Analyze, ArcOnCycleIffInSomeSimpleCycle) {
  GeneratorSpec spec;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    spec.seed = seed;
    spec.n = 3 + seed % 6;
    const Game g = generate(spec);
    const StructureReport r = analyze(g);
    const auto cycles = t::simple_cycles(g);
    for (VertexId x = 0; x < g.size(); ++x) {
      if (g.is_sink(x)) continue;
      for (VertexId y : g.successors(x)) {
        bool in_cycle = false;
        for (const auto& c : cycles) in_cycle = in_cycle || (c.count(x) && c.count(y));
        // An arc x -> y closes a cycle exactly when x and y share one.
        ASSERT_EQ(r.on_cycle(x, y), !g.is_sink(y) && in_cycle) << "seed " << seed;
      }
    }
  }
}

TEST(ComponentGames, FrontierSinksCarrySolvedValues) {
  const Game g = parse_game("ssg 1\n0 ave 1 2\n1 ave 0 3\n2 max 3 4\n3 sink 1/4\n4 sink 1/1\n");
  const StructureReport r = analyze(g);
  ValueVector solved = ValueVector::Zero(5);
  solved(2) = Rational(1);
  solved(3) = Rational(1, 4);
  const ComponentGame cg = component_game(g, r, r.scc_of[0], &solved);
  EXPECT_EQ(cg.members, 2u);
  EXPECT_EQ(cg.global, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_EQ(cg.game.sink_value(2), Rational(1));
  EXPECT_EQ(cg.game.sink_value(3), Rational(1, 4));
  EXPECT_TRUE(validate(cg.game).empty());

  const auto subs = scc_subgames(g);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    EXPECT_GT(r.scc_of[subs[i - 1].global[0]], r.scc_of[subs[i].global[0]]);
  }
}

TEST(FeedbackVertexSet, MinimumMatchesEnumeration) {
  GeneratorSpec spec;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    spec.seed = seed;
    spec.n = 3 + seed % 7;
    const Game g = generate(spec);
    const std::size_t expected = t::brute_min_fvs(g);
    const auto found = feedback_vertex_set(g, 3);
    if (expected > 3) {
      EXPECT_FALSE(found.has_value());
      continue;
    }
    ASSERT_TRUE(found.has_value()) << serialize_game(g);
    EXPECT_EQ(found->size(), expected);
    EXPECT_TRUE(is_feedback_vertex_set(g, *found));
  }
}

TEST(FeedbackVertexSet, DagPlusKHasExactlyK) {
  GeneratorSpec spec;
  spec.family = Family::DagPlusK;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    spec.seed = seed;
    spec.k = 1 + seed % 2;
    spec.n = 10 + seed % 6;
    const Game g = generate(spec);
    const auto f = feedback_vertex_set(g, 3);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->size(), spec.k) << "seed " << seed;
  }
}
