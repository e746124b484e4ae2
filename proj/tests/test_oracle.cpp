#include <gtest/gtest.h>

#include "ssg/errors.hpp"
#include "ssg/eval.hpp"
#include "ssg/io.hpp"
#include "ssg/oracle.hpp"
#include "support/games.hpp"
#include "support/oracles.hpp"

using namespace ssg;
namespace t = ssg::testing;

TEST(StrategySpace, LexicographicLastVertexFastest) {
  Game g;
  g.add_max({2, 3});
  g.add_max({3, 2, 3});
  g.add_sink(Rational(0));
  g.add_sink(Rational(1));
  const StrategySpace space(g, Player::Max);
  ASSERT_EQ(space.size(), 4u);
  std::vector<std::pair<VertexId, VertexId>> seen;
  for (const Strategy& s : space) seen.emplace_back(s[0], s[1]);
  EXPECT_EQ(seen, (std::vector<std::pair<VertexId, VertexId>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}));
  EXPECT_EQ(StrategySpace(g, Player::Min).size(), 1u);
}

TEST(StrategySpace, CapRefusesLargeSpaces) {
  Game g;
  for (VertexId i = 0; i < 21; ++i) g.add_max({21, 22});
  g.add_sink(Rational(0));
  g.add_sink(Rational(1));
  EXPECT_THROW(StrategySpace(g, Player::Max), PreconditionError);
  EXPECT_NO_THROW(StrategySpace(g, Player::Max, std::size_t{1} << 21));
}

TEST(Oracle, Examples) {
  const OracleResult cat = oracle_solve(t::caterpillar(3));
  EXPECT_EQ(cat.values(0), Rational(1, 8));
  EXPECT_TRUE(cat.minimax_equals_maximin);

  Game g;
  g.add_max({1, 2});
  g.add_sink(Rational(1, 4));
  g.add_sink(Rational(3, 4));
  const OracleResult one = oracle_solve(g);
  EXPECT_EQ(one.values(0), Rational(3, 4));
  EXPECT_EQ(one.witness.max[0], 2u);
}

TEST(Oracle, MatchesBruteForceAndWitnessesAreOptimal) {
  for (const Game& g : t::random_stopping(200, 7, 40)) {
    const OracleResult r = oracle_solve(g);
    ASSERT_EQ(r.values, t::to_vector(t::brute_values(g))) << serialize_game(g);
    ASSERT_EQ(evaluate(g, r.witness.max, r.witness.min), r.values);
    ASSERT_TRUE(check_local_optimality(g, r.values).satisfied);
  }
}
