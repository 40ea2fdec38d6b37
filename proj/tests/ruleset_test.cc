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

#include "qbfgames/ruleset.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "qbfgames/instances.h"
#include "qbfgames/position_io.h"
#include "test_util.h"

namespace qbfgames {
namespace {

using testing::FixturePath;
using testing::MakeAssignment;
using testing::SampleFormula;

RulesetConfig Config(std::string_view name) { return *ParseRulesetName(name); }

Position Sample(std::string_view ruleset, const std::string& assigned = ".......") {
  return Position(SampleFormula(), MakeAssignment(assigned), Config(ruleset));
}

TEST(RulesetConfigTest, NamesRoundTrip) {
  auto all = AllRulesets();
  for (const RulesetConfig& c : all) {
    EXPECT_EQ(ParseRulesetName(RulesetName(c)), c);
    EXPECT_EQ(std::count(all.begin(), all.end(), c), 1);
  }
  EXPECT_EQ(RulesetName(kQbfRuleset), "either-local-different");
  EXPECT_EQ(RulesetName(all[0]), "by-player-local-same");
  EXPECT_FALSE(ParseRulesetName("either-local").has_value());
}

TEST(PositionTest, MoverFollowsParity) {
  Position p = Sample("either-anywhere-different");
  EXPECT_EQ(p.Mover(), Player::kP1);
  p = p.Extended({4, true});
  EXPECT_EQ(p.Mover(), Player::kP2);
  Position flipped = p.WithMover(Player::kP1);
  EXPECT_TRUE(flipped.mover_flipped());
  EXPECT_EQ(flipped.Mover(), Player::kP1);
  EXPECT_EQ(flipped.Extended({0, false}).Mover(), Player::kP2);
}

TEST(PositionTest, RejectsFormulaBeyondVariableCount) {
  EXPECT_THROW(Position(SampleFormula(), 6, kQbfRuleset), InvalidInputError);
}

TEST(LegalMovesTest, ByPlayerLocalSameBlocked) {
  Position p = Sample("by-player-local-same", "TFTF...");
  EXPECT_EQ(p.Mover(), Player::kP1);
  EXPECT_TRUE(LegalMoves(p).empty());
  EXPECT_EQ(CheckMove(p, {4, true}), IllegalMoveReason::kBlatantlyFalse);
}

TEST(LegalMovesTest, QbfInitialOffersBothValuesOfX0) {
  EXPECT_EQ(LegalMoves(Sample("either-local-different")),
            (std::vector<Move>{{0, false}, {0, true}}));
}

TEST(LegalMovesTest, ByPlayerAnywhereSameInitialOffersEveryVariable) {
  std::vector<Move> expected;
  for (Var v = 0; v < 7; ++v) expected.push_back({v, true});
  EXPECT_EQ(LegalMoves(Sample("by-player-anywhere-same")), expected);
}

TEST(LegalMovesTest, OrderingIsIndexThenFalseFirst) {
  std::vector<Move> moves = LegalMoves(Sample("either-anywhere-different", "T.F...."));
  ASSERT_EQ(moves.size(), 10u);
  EXPECT_EQ(moves.front(), (Move{1, false}));
  EXPECT_EQ(moves[1], (Move{1, true}));
  EXPECT_EQ(moves.back(), (Move{6, true}));
}

TEST(ApplyMoveTest, FirstSampleMove) {
  Position p = ApplyMove(Sample("either-local-different"), {0, true});
  EXPECT_EQ(Canonicalize(p.SimplifiedFormula()),
            Canonicalize(ParseFormula("(and (or x3 (not x1)) (or x2 x1 (not x6)) "
                                      "(or (not x2) (not x4) x3))",
                                      7)));
  EXPECT_EQ(p.Mover(), Player::kP2);
  EXPECT_EQ(p.formula(), SampleFormula());
}

TEST(ApplyMoveTest, ReportsWhichFilterRejected) {
  Position anywhere = ApplyMove(Sample("either-anywhere-different"), {3, true});
  try {
    ApplyMove(anywhere, {3, false});
    FAIL() << "expected IllegalMoveError";
  } catch (const IllegalMoveError& e) {
    EXPECT_EQ(e.reason(), IllegalMoveReason::kOccupied);
    EXPECT_EQ(e.move(), (Move{3, false}));
  }
  auto reason_of = [](const Position& p, Move m) {
    try {
      ApplyMove(p, m);
    } catch (const IllegalMoveError& e) {
      return std::optional(e.reason());
    }
    return std::optional<IllegalMoveReason>();
  };
  EXPECT_EQ(reason_of(Sample("either-local-different"), {1, true}),
            IllegalMoveReason::kWrongLocation);
  Position by_player = ApplyMove(Sample("by-player-anywhere-different"), {0, true});
  EXPECT_EQ(reason_of(by_player, {1, true}), IllegalMoveReason::kWrongValue);
  EXPECT_EQ(reason_of(by_player, {9, false}), IllegalMoveReason::kOutOfRange);
  EXPECT_FALSE(reason_of(by_player, {1, false}).has_value());
}

TEST(TerminalTest, ContradictionUnderSameGoalHasNoMoves) {
  Formula f = ParseFormula("(and x0 (not x0))", 1);
  for (const RulesetConfig& c : AllRulesets()) {
    if (c.goal != Goal::kSame) continue;
    Position p(f, 1, c);
    EXPECT_TRUE(IsTerminal(p)) << RulesetName(c);
    EXPECT_EQ(Winner(p), Player::kP2);
  }
}

TEST(TerminalTest, DifferentGoalRunsToTheEnd) {
  for (const RulesetConfig& c : AllRulesets()) {
    if (c.goal != Goal::kDifferent) continue;
    Position p(Formula::Constant(false), 3, c);
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_FALSE(IsTerminal(p));
      EXPECT_THROW(Winner(p), NonTerminalError);
      p = ApplyMove(p, LegalMoves(p).front());
    }
    EXPECT_TRUE(IsTerminal(p));
  }
}

TEST(WinnerTest, WorkedExampleOutcomes) {
  EXPECT_EQ(Winner(Sample("either-local-different", "TTFFTFF")), Player::kP2);
  EXPECT_EQ(Winner(Sample("by-player-local-same", "TFTF...")), Player::kP2);
  EXPECT_EQ(Winner(Sample("by-player-anywhere-same", "TFTTFTF")), Player::kP1);
}

TEST(ReplayTest, EmptyTraceReturnsInitialPosition) {
  GameTrace trace{Sample("either-anywhere-same"), {}, {}};
  ReplayReport r = Replay(trace);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.steps.empty());
  EXPECT_FALSE(r.winner.has_value());
  EXPECT_EQ(r.final_position.assignment(), Assignment(7));
}

TEST(ReplayTest, StopsAtFirstIllegalMove) {
  GameTrace trace{Sample("by-player-local-same"),
                  {{0, true}, {1, false}, {2, true}, {3, false}, {4, true}},
                  {}};
  ReplayReport r = Replay(trace);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.illegal_index, 4u);
  EXPECT_EQ(*r.illegal_reason, IllegalMoveReason::kBlatantlyFalse);
  EXPECT_EQ(r.steps.size(), 4u);
}

TEST(ReplayTest, EitherLocalSameSample) {
  ReplayReport r = Replay(ParseTrace(ReadFile(FixturePath("either_local_same.trace"))));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.snapshots_match());
  EXPECT_EQ(r.winner, Player::kP1);
}

TEST(ReplayTest, EitherAnywhereSameSample) {
  ReplayReport r =
      Replay(ParseTrace(ReadFile(FixturePath("either_anywhere_same.trace"))));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.winner, Player::kP1);
}

TEST(ReplayTest, DetectsSnapshotMismatch) {
  GameTrace trace{Sample("either-local-different"), {{0, true}},
                  {ParseFormula("x3", 7)}};
  ReplayReport r = Replay(trace);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.snapshots_match());
}

// Random playouts over all rulesets, checking the structural properties of
// move generation.
class RulesetPropertyTest : public ::testing::TestWithParam<RulesetConfig> {};

TEST_P(RulesetPropertyTest, MoveListRelations) {
  const RulesetConfig config = GetParam();
  Random rng(1000 + static_cast<int>(config.choice) * 4 +
             static_cast<int>(config.locality) * 2 + static_cast<int>(config.goal));
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = rng.Between(1, 7);
    Formula f = RandomFormula(n, 3, rng);
    Position p = RandomPlayout(f, n, config, n, rng);
    const std::vector<Move> moves = LegalMoves(p);

    auto with = [&](Locality l, BooleanChoice c, Goal g) {
      return LegalMoves(p.WithConfig(RulesetConfig{c, l, g}));
    };
    auto filtered = [](std::vector<Move> v, auto pred) {
      std::erase_if(v, [&](const Move& m) { return !pred(m); });
      return v;
    };

    const std::size_t lowest = p.assignment().LowestUnassigned();
    // Local = Anywhere restricted to the lowest unassigned index.
    EXPECT_EQ(with(Locality::kLocal, config.choice, config.goal),
              filtered(with(Locality::kAnywhere, config.choice, config.goal),
                       [&](const Move& m) { return m.var == lowest; }));
    // ByPlayer = Either restricted to the mover's value.
    const bool mover_value = p.Mover() == Player::kP1;
    EXPECT_EQ(with(config.locality, BooleanChoice::kByPlayer, config.goal),
              filtered(with(config.locality, BooleanChoice::kEither, config.goal),
                       [&](const Move& m) { return m.value == mover_value; }));
    // Same = Different minus moves that leave the formula blatantly false.
    EXPECT_EQ(with(config.locality, config.choice, Goal::kSame),
              filtered(with(config.locality, config.choice, Goal::kDifferent),
                       [&](const Move& m) {
                         return !BlatantlyFalse(
                             f, p.assignment().With(m.var, m.value));
                       }));
    if (config.choice == BooleanChoice::kByPlayer &&
        config.locality == Locality::kLocal) {
      EXPECT_LE(moves.size(), 1u);
    }
    for (const Move& m : moves) EXPECT_FALSE(CheckMove(p, m).has_value());
  }
}

TEST_P(RulesetPropertyTest, MaximalTracesAlternateAndAreBounded) {
  const RulesetConfig config = GetParam();
  Random rng(77);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = rng.Between(0, 7);
    Position p(RandomFormula(n, 3, rng), n, config);
    std::size_t length = 0;
    Player expected = Player::kP1;
    while (!IsTerminal(p)) {
      EXPECT_EQ(p.Mover(), expected);
      std::vector<Move> moves = LegalMoves(p);
      p = ApplyMove(p, moves[rng.Uniform(moves.size())]);
      expected = Opponent(expected);
      ++length;
    }
    EXPECT_LE(length, n);
    if (config.goal == Goal::kDifferent) EXPECT_EQ(length, n);
    if (config.locality == Locality::kLocal) {
      EXPECT_EQ(p.assignment().LowestUnassigned(), p.assignment().assigned_count());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllRulesets, RulesetPropertyTest,
                         ::testing::ValuesIn(AllRulesets()),
                         [](const auto& info) {
                           std::string name = RulesetName(info.param);
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name;
                         });

}  // namespace
}  // namespace qbfgames
