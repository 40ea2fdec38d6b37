// Copyright 2026 The qbfgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbfgames/solver.h"

#include <gtest/gtest.h>

#include <functional>

#include "qbfgames/instances.h"
#include "qbfgames/position_io.h"
#include "qbfgames/reductions.h"
#include "test_util.h"

namespace qbfgames {
namespace {

using testing::MakeAssignment;
using testing::SampleFormula;

RulesetConfig Config(std::string_view name) { return *ParseRulesetName(name); }

// Truth of exists x0 forall x1 exists x2 ... f by direct quantifier
// expansion; shares nothing with the game engine except Evaluate.
bool QuantifiedTruth(const Formula& f, Assignment a, std::size_t next) {
  if (next == a.size()) return Evaluate(f, a);
  const bool exists = next % 2 == 0;
  for (bool value : {false, true}) {
    const bool branch = QuantifiedTruth(f, a.With(static_cast<Var>(next), value), next + 1);
    if (branch == exists) return exists;
  }
  return !exists;
}

TEST(SolveTest, ByPlayerLocalSameSample) {
  Outcome o = Solve(Position(SampleFormula(), 7, Config("by-player-local-same")));
  EXPECT_EQ(o.winner, Player::kP2);
  EXPECT_EQ(o.principal_variation,
            (std::vector<Move>{{0, true}, {1, false}, {2, true}, {3, false}}));
}

TEST(SolveTest, OneMoveGame) {
  Outcome o = Solve(Position(ParseFormula("x0", 1), 1, kQbfRuleset));
  EXPECT_EQ(o.winner, Player::kP1);
  EXPECT_EQ(o.principal_variation, (std::vector<Move>{{0, true}}));
}

TEST(SolveTest, SampleQbfMatchesOracles) {
  Position p(SampleFormula(), 7, kQbfRuleset);
  const Player expected =
      QuantifiedTruth(SampleFormula(), Assignment(7), 0) ? Player::kP1 : Player::kP2;
  EXPECT_EQ(Solve(p).winner, expected);
  EXPECT_EQ(SolveNaive(p).winner, expected);
  EXPECT_EQ(expected, Player::kP1);
}

TEST(SolveTest, QbfGameIsQuantifiedTruth) {
  Random rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.Between(1, 8);
    Formula f = RandomFormula(n, 4, rng);
    const bool truth = QuantifiedTruth(f, Assignment(n), 0);
    EXPECT_EQ(Solve(Position(f, n, kQbfRuleset)).winner,
              truth ? Player::kP1 : Player::kP2)
        << ToText(f);
  }
}

TEST(SolveTest, TerminalPositionIsPassthrough) {
  Position blocked(SampleFormula(), MakeAssignment("TFTF..."), Config("by-player-local-same"));
  EXPECT_EQ(Solve(blocked).winner, Player::kP2);
  EXPECT_EQ(SolveNaive(blocked).winner, Player::kP2);
  EXPECT_TRUE(Solve(blocked).principal_variation.empty());
}

TEST(SolveTest, NodeBudgetIsEnforced) {
  Position p(SampleFormula(), 7, Config("either-anywhere-different"));
  SolveOptions options;
  options.node_budget = 50;
  EXPECT_THROW(Solve(p, options), ResourceLimitError);
}

TEST(SolveTest, WarmAndColdMemoAgree) {
  Random rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.Between(1, 7);
    Position p(RandomFormula(n, 3, rng), n, AllRulesets()[rng.Uniform(8)]);
    FormulaGame game(p);
    GameSolver<FormulaGame> solver(game);
    auto cold = solver.Solve();
    auto warm = solver.Solve();
    EXPECT_EQ(cold.winner, warm.winner);
    EXPECT_EQ(cold.principal_variation, warm.principal_variation);
    EXPECT_EQ(cold.principal_variation, Solve(p).principal_variation);
  }
}

TEST(SolveTest, PrincipalVariationReplaysToReportedWinner) {
  Random rng(9);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.Between(0, 7);
    const RulesetConfig config = AllRulesets()[i % 8];
    Position p = RandomPlayout(RandomFormula(n, 3, rng), n, config, n / 2, rng);
    Outcome o = Solve(p);
    ReplayReport r = Replay(GameTrace{p, o.principal_variation, {}});
    ASSERT_TRUE(r.ok());
    ASSERT_TRUE(r.winner.has_value());
    EXPECT_EQ(*r.winner, o.winner);
  }
}

TEST(SolveTest, ThreadedSearchMatchesSingleThreaded) {
  Random rng(10);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = rng.Between(2, 7);
    Position p(RandomFormula(n, 3, rng), n, AllRulesets()[i % 8]);
    SolveOptions threaded;
    threaded.threads = 4;
    Outcome a = Solve(p);
    Outcome b = Solve(p, threaded);
    EXPECT_EQ(a.winner, b.winner);
    EXPECT_EQ(a.principal_variation, b.principal_variation);
  }
}

TEST(SolveTest, ThreadedSearchPropagatesBudgetError) {
  SolveOptions options;
  options.threads = 3;
  options.node_budget = 20;
  EXPECT_THROW(Solve(Position(SampleFormula(), 7, Config("either-anywhere-different")),
                     options),
               ResourceLimitError);
}

TEST(SolveNaiveTest, ByPlayerLocalDifferentSample) {
  EXPECT_EQ(SolveNaive(Position(SampleFormula(), 7, Config("by-player-local-different")))
                .winner,
            Player::kP2);
}

TEST(SolveNaiveTest, BoundExceeded) {
  Position p(Formula::Constant(true), 13, kQbfRuleset);
  EXPECT_THROW(SolveNaive(p), ResourceLimitError);
  EXPECT_NO_THROW(SolveNaive(p, 13));
}

TEST(SolveNaiveTest, AgreesWithMemoizedSolve) {
  Random rng(11);
  for (int i = 0; i < 800; ++i) {
    const std::size_t n = rng.Between(1, 6);
    const RulesetConfig config = AllRulesets()[i % 8];
    Position p = RandomPlayout(RandomFormula(n, 3, rng), n, config, n, rng);
    ASSERT_EQ(Solve(p).winner, SolveNaive(p).winner) << FormatPosition(p);
  }
}

TEST(SimulateTest, ByPlayerLocalSameSample) {
  Simulation s = SimulateLocalByPlayer(
      Position(SampleFormula(), 7, Config("by-player-local-same")));
  EXPECT_EQ(s.outcome.winner, Player::kP2);
  EXPECT_EQ(s.trace.moves,
            (std::vector<Move>{{0, true}, {1, false}, {2, true}, {3, false}}));
  EXPECT_EQ(s.outcome.nodes, 4u);
}

TEST(SimulateTest, ByPlayerLocalDifferentSample) {
  Simulation s = SimulateLocalByPlayer(
      Position(SampleFormula(), 7, Config("by-player-local-different")));
  EXPECT_EQ(s.outcome.winner, Player::kP2);
  ASSERT_EQ(s.trace.moves.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(s.trace.moves[i], (Move{static_cast<Var>(i), i % 2 == 0}));
  }
}

TEST(SimulateTest, ConstantTrue) {
  Simulation s = SimulateLocalByPlayer(
      Position(Formula::Constant(true), 2, Config("by-player-local-different")));
  EXPECT_EQ(s.outcome.winner, Player::kP1);
  EXPECT_EQ(s.trace.moves, (std::vector<Move>{{0, true}, {1, false}}));
}

TEST(SimulateTest, WrongConfig) {
  EXPECT_THROW(SimulateLocalByPlayer(Position(SampleFormula(), 7, kQbfRuleset)),
               ConfigError);
  EXPECT_THROW(SimulateLocalByPlayer(
                   Position(SampleFormula(), 7, Config("by-player-anywhere-same"))),
               ConfigError);
}

TEST(SimulateTest, AgreesWithNaiveSolve) {
  Random rng(12);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = rng.Between(1, 10);
    const RulesetConfig config =
        i % 2 ? Config("by-player-local-same") : Config("by-player-local-different");
    Position p = RandomPlayout(RandomFormula(n, 4, rng), n, config, n, rng);
    Simulation s = SimulateLocalByPlayer(p);
    EXPECT_EQ(s.outcome.winner, SolveNaive(p).winner);
    EXPECT_LE(s.outcome.nodes, n - p.assignment().assigned_count());
  }
}

TEST(MemoKeyTest, DistinguishesAssignments) {
  EXPECT_EQ(MemoKey::FromAssignment(MakeAssignment("T.F")),
            MemoKey::FromAssignment(MakeAssignment("T.F")));
  EXPECT_NE(MemoKey::FromAssignment(MakeAssignment("T.F")),
            MemoKey::FromAssignment(MakeAssignment("F.T")));
  EXPECT_NE(MemoKey::FromAssignment(MakeAssignment("T.")),
            MemoKey::FromAssignment(MakeAssignment("T..")));
  // Keys wider than one word.
  std::string wide(70, '.');
  std::string other = wide;
  other[69] = 'T';
  EXPECT_NE(MemoKey::FromAssignment(MakeAssignment(wide)),
            MemoKey::FromAssignment(MakeAssignment(other)));
}

// A take-away game: remove 1 or 2 from a pile; taking the last one wins.
struct TakeAway {
  using State = std::pair<int, Player>;
  using MoveType = int;
  int start;
  State Initial() const { return {start, Player::kP1}; }
  std::vector<int> LegalMoves(const State& s) const {
    std::vector<int> m;
    for (int k = 1; k <= 2 && k <= s.first; ++k) m.push_back(k);
    return m;
  }
  State Apply(const State& s, int k) const { return {s.first - k, Opponent(s.second)}; }
  Player Mover(const State& s) const { return s.second; }
  bool IsTerminal(const State& s) const { return s.first == 0; }
  Player Winner(const State& s) const { return Opponent(s.second); }
  MemoKey Key(const State& s) const {
    std::vector<std::uint8_t> bits;
    for (int b = 0; b < 8; ++b) bits.push_back((s.first >> b) & 1);
    bits.push_back(s.second == Player::kP1 ? 0 : 1);
    return MemoKey::FromSymbols(bits);
  }
};

TEST(SolveAbstractTest, TakeAwayLosesOnMultiplesOfThree) {
  for (int n = 0; n < 30; ++n) {
    auto o = SolveAbstract(TakeAway{n});
    EXPECT_EQ(o.winner, n % 3 == 0 ? Player::kP2 : Player::kP1) << n;
  }
}

}  // namespace
}  // namespace qbfgames
