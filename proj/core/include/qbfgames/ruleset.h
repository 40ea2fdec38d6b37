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

// The eight formula games obtained from three toggles on the classic
// quantified-formula game: where a player may play (locality), which value
// they may write (Boolean choice), and how the game is won (goal).

#ifndef QBFGAMES_RULESET_H_
#define QBFGAMES_RULESET_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qbfgames/errors.h"
#include "qbfgames/formula.h"

namespace qbfgames {

enum class Locality : std::uint8_t { kLocal, kAnywhere };
enum class BooleanChoice : std::uint8_t { kEither, kByPlayer };
enum class Goal : std::uint8_t { kDifferent, kSame };

struct RulesetConfig {
  BooleanChoice choice = BooleanChoice::kEither;
  Locality locality = Locality::kLocal;
  Goal goal = Goal::kDifferent;

  friend bool operator==(const RulesetConfig&, const RulesetConfig&) = default;
};

// All eight rulesets, in the row order of the usual complexity table
// (by-player rows first).
std::array<RulesetConfig, 8> AllRulesets();

// "either-local-different" style names.
std::string RulesetName(const RulesetConfig& config);
// Accepts the hyphenated name; returns nullopt on anything else.
std::optional<RulesetConfig> ParseRulesetName(std::string_view name);

// The classic game: either-local-different.
inline constexpr RulesetConfig kQbfRuleset{};

// P1 is Even/True and moves first from an unassigned start; P2 is Odd/False.
enum class Player : std::uint8_t { kP1, kP2 };

inline Player Opponent(Player p) {
  return p == Player::kP1 ? Player::kP2 : Player::kP1;
}
// "P1" / "P2".
std::string_view PlayerTag(Player p);
// "P1/Even/True" / "P2/Odd/False".
std::string_view PlayerLongName(Player p);

struct Move {
  Var var = 0;
  bool value = false;

  friend bool operator==(const Move&, const Move&) = default;
};

// "x3:=T".
std::string MoveText(const Move& m);

// Full game state. The mover is derived from the parity of the number of
// assigned variables; `mover_flipped` swaps that parity for positions that
// are embedded with the "wrong" player to move (pre-painted Snort graphs,
// reductions with an explicit first mover). It never changes during play.
class Position {
 public:
  Position(Formula formula, std::size_t num_vars, RulesetConfig config);
  Position(Formula formula, Assignment assignment, RulesetConfig config,
           bool mover_flipped = false);

  const Formula& formula() const { return formula_; }
  std::size_t num_vars() const { return assignment_.size(); }
  const Assignment& assignment() const { return assignment_; }
  const RulesetConfig& config() const { return config_; }
  bool mover_flipped() const { return mover_flipped_; }

  Player Mover() const;
  // Same position with the parity flip chosen so that Mover() == mover.
  Position WithMover(Player mover) const;
  Position WithConfig(const RulesetConfig& config) const;

  // Formula partially evaluated under the current assignment.
  Formula SimplifiedFormula() const { return Simplify(formula_, assignment_); }

  // Assigns without any legality check; ApplyMove is the checked entry point.
  Position Extended(const Move& m) const;

 private:
  Formula formula_;
  Assignment assignment_;
  RulesetConfig config_;
  bool mover_flipped_ = false;
};

// Why ApplyMove rejected a move, in the order the filters are checked.
enum class IllegalMoveReason : std::uint8_t {
  kOutOfRange,
  kOccupied,
  kWrongLocation,
  kWrongValue,
  kBlatantlyFalse,
};

std::string_view ReasonText(IllegalMoveReason reason);

class IllegalMoveError : public Error {
 public:
  IllegalMoveError(const Move& move, IllegalMoveReason reason);
  const Move& move() const { return move_; }
  IllegalMoveReason reason() const { return reason_; }

 private:
  Move move_;
  IllegalMoveReason reason_;
};

// nullopt when m is legal in p.
std::optional<IllegalMoveReason> CheckMove(const Position& p, const Move& m);

// Ascending variable index, false before true.
std::vector<Move> LegalMoves(const Position& p);

// Throws IllegalMoveError.
Position ApplyMove(const Position& p, const Move& m);

bool IsTerminal(const Position& p);

// Different goal: P1 wins iff the formula is true under the full assignment.
// Same goal: the player to move has no legal move and loses.
// Throws NonTerminalError on a non-terminal position.
Player Winner(const Position& p);

struct GameTrace {
  Position initial;
  std::vector<Move> moves;
  // Optional expected simplified formula after each move (same length as
  // moves when present; individual entries may be empty).
  std::vector<std::optional<Formula>> expected_snapshots;
};

struct ReplayStep {
  Move move;
  Player mover;
  Formula simplified;
  // Set when an expected snapshot was given and did not match up to
  // ordering and flattening.
  bool snapshot_mismatch = false;
};

struct ReplayReport {
  Position final_position;
  std::vector<ReplayStep> steps;
  // Index into moves of the first illegal move, with its reason.
  std::optional<std::size_t> illegal_index;
  std::optional<IllegalMoveReason> illegal_reason;
  std::optional<Player> winner;  // Set when the final position is terminal.

  bool ok() const { return !illegal_index.has_value(); }
  bool snapshots_match() const;
};

// Applies the moves in order, stopping at the first illegal one.
ReplayReport Replay(const GameTrace& trace);

}  // namespace qbfgames

#endif  // QBFGAMES_RULESET_H_
