#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "ssg/errors.hpp"
#include "ssg/generator.hpp"
#include "ssg/io.hpp"
#include "ssg/oracle.hpp"
#include "ssg/solver.hpp"
#include "ssg/structure.hpp"
#include "support/games.hpp"
#include "support/oracles.hpp"

using namespace ssg;
namespace t = ssg::testing;

namespace {

std::string run(const std::string& args) {
  const char* exe = std::getenv("SSG_CLI");
  if (exe == nullptr) return {};
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((std::string(exe) + " " + args).c_str(), "r"), pclose);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get()) != nullptr) out += buf.data();
  return out;
}

Game family_game(Family f, std::size_t n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.family = f;
  spec.n = n;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

TEST(Generator, DeterministicPerSpec) {
  for (Family f : {Family::Random, Family::SingleCycle, Family::MaxAcyclic, Family::DagPlusK}) {
    EXPECT_EQ(family_game(f, 20, 7), family_game(f, 20, 7));
  }
  EXPECT_NE(family_game(Family::Random, 20, 7), family_game(Family::Random, 20, 8));
}

TEST(Generator, FamiliesHaveTheirShape) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Game acyclic = family_game(Family::Acyclic, 12, seed);
    EXPECT_TRUE(validate(acyclic).empty());
    EXPECT_TRUE(analyze(acyclic).is_acyclic);

    const Game cycle = family_game(Family::SingleCycle, 12, seed);
    const StructureReport rc = analyze(cycle);
    EXPECT_TRUE(rc.is_almost_acyclic && rc.is_strongly_connected && !rc.is_acyclic);
    EXPECT_TRUE(check_stopping(cycle).stopping);

    const Game max_acyclic = family_game(Family::MaxAcyclic, 30, seed);
    const StructureReport rm = analyze(max_acyclic);
    EXPECT_TRUE(rm.is_max_acyclic && rm.is_strongly_connected);
    EXPECT_TRUE(check_stopping(max_acyclic).stopping);

    const Game dag = family_game(Family::DagPlusK, 14, seed);
    EXPECT_TRUE(check_stopping(dag).stopping);
    EXPECT_EQ(feedback_vertex_set(dag, 2)->size(), 1u);
  }
  const Game cat = family_game(Family::Caterpillar, 5, 0);
  EXPECT_TRUE(validate(cat).empty());
  EXPECT_EQ(solve(cat).values(0), Rational(1, 32));
}

TEST(Generator, RejectsInconsistentSpecs) {
  EXPECT_THROW(family_game(Family::SingleCycle, 1, 0), InputError);
  EXPECT_THROW(parse_family("LOOPY"), InputError);
  EXPECT_EQ(parse_family("dag_plus_k"), Family::DagPlusK);
}

TEST(Solve, AutoChoosesByStructure) {
  EXPECT_EQ(solve(t::caterpillar(3)).algorithm, Algorithm::Acyclic);
  EXPECT_EQ(solve(family_game(Family::SingleCycle, 10, 1)).algorithm, Algorithm::AlmostAcyclic);
  EXPECT_EQ(solve(t::fork_figure({Rational(1, 2), Rational(1)})).algorithm, Algorithm::MaxAcyclic);
  EXPECT_EQ(parse_algorithm("max-acyclic"), Algorithm::MaxAcyclic);
  EXPECT_THROW(parse_algorithm("fastest"), InputError);
}

TEST(Solve, RefusalNamesTheClass) {
  Game g;
  g.add_max({0, 1});
  g.add_sink(Rational(1));
  SolveOptions o;
  o.algorithm = Algorithm::Dichotomy;
  try {
    solve(g, o);
    FAIL() << "expected a refusal";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("stopping"), std::string::npos);
  }
  o.algorithm = Algorithm::Acyclic;
  EXPECT_THROW(solve(t::two_ave_cycle(), o), PreconditionError);
  o.algorithm = Algorithm::Dichotomy;
  o.make_stopping = 3;
  EXPECT_EQ(solve(g, o).values.size(), 2);
}

TEST(Solve, AutoEqualsOracleOnSmallGames) {
  for (const Game& g : t::random_stopping(300, 8, 123)) {
    SolveOptions o;
    o.strategies = true;
    const SolveReport r = solve(g, o);
    ASSERT_EQ(r.values, oracle_solve(g).values) << to_string(r.algorithm) << "\n" << serialize_game(g);
    ASSERT_TRUE(r.strategies.has_value());
  }
}

TEST(Cli, GenerateIsDeterministicAndParses) {
  if (std::getenv("SSG_CLI") == nullptr) GTEST_SKIP() << "SSG_CLI not set";
  const std::string a = run("generate --family SINGLE_CYCLE --n 9 --seed 7");
  EXPECT_EQ(a, run("generate --family SINGLE_CYCLE --n 9 --seed 7"));
  EXPECT_EQ(parse_game(a), family_game(Family::SingleCycle, 9, 7));
}

TEST(Cli, BenchPrintsOneRowPerSizeAndSolver) {
  if (std::getenv("SSG_CLI") == nullptr) GTEST_SKIP() << "SSG_CLI not set";
  const std::string out = run("bench --family MAX_ACYCLIC --sizes 10,20 --solvers HK,MAX_ACYCLIC --seed 1");
  std::size_t rows = 0;
  for (std::size_t p = out.find("\nMAX_ACYCLIC"); p != std::string::npos; p = out.find("\nMAX_ACYCLIC", p + 1)) ++rows;
  EXPECT_EQ(rows, 4u) << out;
}
