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

#include <algorithm>
#include <utility>

namespace qbfgames {

std::array<RulesetConfig, 8> AllRulesets() {
  std::array<RulesetConfig, 8> out;
  std::size_t i = 0;
  for (BooleanChoice choice : {BooleanChoice::kByPlayer, BooleanChoice::kEither}) {
    for (Locality locality : {Locality::kLocal, Locality::kAnywhere}) {
      for (Goal goal : {Goal::kSame, Goal::kDifferent}) {
        out[i++] = RulesetConfig{choice, locality, goal};
      }
    }
  }
  return out;
}

std::string RulesetName(const RulesetConfig& config) {
  std::string name =
      config.choice == BooleanChoice::kEither ? "either-" : "by-player-";
  name += config.locality == Locality::kLocal ? "local-" : "anywhere-";
  name += config.goal == Goal::kSame ? "same" : "different";
  return name;
}

std::optional<RulesetConfig> ParseRulesetName(std::string_view name) {
  for (const RulesetConfig& config : AllRulesets()) {
    if (RulesetName(config) == name) return config;
  }
  return std::nullopt;
}

std::string_view PlayerTag(Player p) { return p == Player::kP1 ? "P1" : "P2"; }

std::string_view PlayerLongName(Player p) {
  return p == Player::kP1 ? "P1/Even/True" : "P2/Odd/False";
}

std::string MoveText(const Move& m) {
  return "x" + std::to_string(m.var) + ":=" + (m.value ? "T" : "F");
}

// ---------------------------------------------------------------------------
// Position

Position::Position(Formula formula, std::size_t num_vars, RulesetConfig config)
    : Position(std::move(formula), Assignment(num_vars), config) {}

Position::Position(Formula formula, Assignment assignment, RulesetConfig config,
                   bool mover_flipped)
    : formula_(std::move(formula)),
      assignment_(std::move(assignment)),
      config_(config),
      mover_flipped_(mover_flipped) {
  if (VariableBound(formula_) > assignment_.size()) {
    throw InvalidInputError("formula mentions variables beyond x" +
                            std::to_string(assignment_.size()));
  }
}

Player Position::Mover() const {
  const bool even = assignment_.assigned_count() % 2 == 0;
  return even != mover_flipped_ ? Player::kP1 : Player::kP2;
}

Position Position::WithMover(Player mover) const {
  Position copy = *this;
  if (copy.Mover() != mover) copy.mover_flipped_ = !copy.mover_flipped_;
  return copy;
}

Position Position::WithConfig(const RulesetConfig& config) const {
  Position copy = *this;
  copy.config_ = config;
  return copy;
}

Position Position::Extended(const Move& m) const {
  Position copy = *this;
  copy.assignment_.Assign(m.var, m.value);
  return copy;
}

// ---------------------------------------------------------------------------
// Move legality

std::string_view ReasonText(IllegalMoveReason reason) {
  switch (reason) {
    case IllegalMoveReason::kOutOfRange:
      return "variable index out of range";
    case IllegalMoveReason::kOccupied:
      return "variable already assigned";
    case IllegalMoveReason::kWrongLocation:
      return "local play requires the lowest unassigned variable";
    case IllegalMoveReason::kWrongValue:
      return "by-player rules fix the value to the mover's identity";
    case IllegalMoveReason::kBlatantlyFalse:
      return "move makes the formula blatantly false";
  }
  return "illegal move";
}

IllegalMoveError::IllegalMoveError(const Move& move, IllegalMoveReason reason)
    : Error("illegal move " + MoveText(move) + ": " +
            std::string(ReasonText(reason))),
      move_(move),
      reason_(reason) {}

namespace {

bool ValueAllowed(const Position& p, bool value) {
  if (p.config().choice == BooleanChoice::kEither) return true;
  return value == (p.Mover() == Player::kP1);
}

bool LeavesBlatantlyFalse(const Position& p, const Move& m) {
  return BlatantlyFalse(p.formula(), p.assignment().With(m.var, m.value));
}

}  // namespace

std::optional<IllegalMoveReason> CheckMove(const Position& p, const Move& m) {
  const Assignment& a = p.assignment();
  if (m.var >= a.size()) return IllegalMoveReason::kOutOfRange;
  if (a.IsAssigned(m.var)) return IllegalMoveReason::kOccupied;
  if (p.config().locality == Locality::kLocal &&
      m.var != a.LowestUnassigned()) {
    return IllegalMoveReason::kWrongLocation;
  }
  if (!ValueAllowed(p, m.value)) return IllegalMoveReason::kWrongValue;
  if (p.config().goal == Goal::kSame && LeavesBlatantlyFalse(p, m)) {
    return IllegalMoveReason::kBlatantlyFalse;
  }
  return std::nullopt;
}

std::vector<Move> LegalMoves(const Position& p) {
  const Assignment& a = p.assignment();
  std::vector<Move> moves;
  std::size_t first = 0;
  std::size_t last = a.size();
  if (p.config().locality == Locality::kLocal) {
    first = a.LowestUnassigned();
    last = std::min(first + 1, a.size());
  }
  for (std::size_t v = first; v < last; ++v) {
    const Var var = static_cast<Var>(v);
    if (a.IsAssigned(var)) continue;
    for (bool value : {false, true}) {
      if (!ValueAllowed(p, value)) continue;
      Move m{var, value};
      if (p.config().goal == Goal::kSame && LeavesBlatantlyFalse(p, m)) {
        continue;
      }
      moves.push_back(m);
    }
  }
  return moves;
}

Position ApplyMove(const Position& p, const Move& m) {
  if (auto reason = CheckMove(p, m)) throw IllegalMoveError(m, *reason);
  return p.Extended(m);
}

bool IsTerminal(const Position& p) {
  if (p.config().goal == Goal::kDifferent) {
    // Every unassigned variable always has at least one legal value.
    return p.assignment().assigned_count() == p.num_vars();
  }
  return LegalMoves(p).empty();
}

Player Winner(const Position& p) {
  if (!IsTerminal(p)) {
    throw NonTerminalError("winner requested for a non-terminal position");
  }
  if (p.config().goal == Goal::kDifferent) {
    return Evaluate(p.formula(), p.assignment()) ? Player::kP1 : Player::kP2;
  }
  return Opponent(p.Mover());
}

// ---------------------------------------------------------------------------
// Replay

bool ReplayReport::snapshots_match() const {
  return std::none_of(steps.begin(), steps.end(),
                      [](const ReplayStep& s) { return s.snapshot_mismatch; });
}

ReplayReport Replay(const GameTrace& trace) {
  ReplayReport report{trace.initial, {}, std::nullopt, std::nullopt,
                      std::nullopt};
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& m = trace.moves[i];
    if (auto reason = CheckMove(report.final_position, m)) {
      report.illegal_index = i;
      report.illegal_reason = reason;
      return report;
    }
    ReplayStep step{m, report.final_position.Mover(), Formula()};
    report.final_position = report.final_position.Extended(m);
    step.simplified = report.final_position.SimplifiedFormula();
    if (i < trace.expected_snapshots.size() && trace.expected_snapshots[i]) {
      step.snapshot_mismatch = Canonicalize(step.simplified) !=
                               Canonicalize(*trace.expected_snapshots[i]);
    }
    report.steps.push_back(std::move(step));
  }
  if (IsTerminal(report.final_position)) {
    report.winner = Winner(report.final_position);
  }
  return report;
}

}  // namespace qbfgames
