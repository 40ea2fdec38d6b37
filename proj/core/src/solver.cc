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

#include <functional>

namespace qbfgames {

MemoKey MemoKey::FromSymbols(std::span<const std::uint8_t> symbols) {
  MemoKey key;
  key.length_ = symbols.size();
  key.words_.assign((symbols.size() + 31) / 32, 0);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    key.words_[i / 32] |= static_cast<std::uint64_t>(symbols[i] & 3u)
                          << (2 * (i % 32));
  }
  return key;
}

MemoKey MemoKey::FromAssignment(const Assignment& a) {
  std::span<const TernaryValue> values = a.values();
  return FromSymbols(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(values.data()), values.size()));
}

std::size_t MemoKey::hash() const {
  std::size_t h = std::hash<std::size_t>{}(length_);
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::optional<bool> MemoTable::Find(const MemoKey& key) const {
  std::shared_lock<std::shared_mutex> lock(mutex_, std::defer_lock);
  if (concurrent_) lock.lock();
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::Publish(const MemoKey& key, bool mover_wins) {
  std::unique_lock<std::shared_mutex> lock(mutex_, std::defer_lock);
  if (concurrent_) lock.lock();
  table_.emplace(key, mover_wins);
}

std::size_t MemoTable::size() const {
  std::shared_lock<std::shared_mutex> lock(mutex_, std::defer_lock);
  if (concurrent_) lock.lock();
  return table_.size();
}

Player FormulaGame::Winner(const Position& p) const {
  // Called only when no legal move exists.
  if (p.config().goal == Goal::kDifferent) {
    return Evaluate(p.formula(), p.assignment()) ? Player::kP1 : Player::kP2;
  }
  return Opponent(p.Mover());
}

Outcome Solve(const Position& p, const SolveOptions& options) {
  FormulaGame game(p);
  return GameSolver<FormulaGame>(game, options).Solve();
}

namespace {

bool NaiveMoverWins(const Position& p, std::uint64_t& nodes) {
  ++nodes;
  std::vector<Move> moves = LegalMoves(p);
  if (moves.empty()) return Winner(p) == p.Mover();
  for (const Move& m : moves) {
    if (!NaiveMoverWins(ApplyMove(p, m), nodes)) return true;
  }
  return false;
}

}  // namespace

Outcome SolveNaive(const Position& p, std::size_t max_vars) {
  if (p.num_vars() > max_vars) {
    throw ResourceLimitError("naive solver is bounded to " +
                             std::to_string(max_vars) + " variables, got " +
                             std::to_string(p.num_vars()));
  }
  Outcome out;
  const bool win = NaiveMoverWins(p, out.nodes);
  out.winner = win ? p.Mover() : Opponent(p.Mover());
  return out;
}

Simulation SimulateLocalByPlayer(const Position& p) {
  const RulesetConfig& c = p.config();
  if (c.choice != BooleanChoice::kByPlayer || c.locality != Locality::kLocal) {
    throw ConfigError("simulation needs a by-player-local ruleset, got " +
                      RulesetName(c));
  }
  Simulation sim{Outcome{}, GameTrace{p, {}, {}}};
  Position current = p;
  for (;;) {
    std::vector<Move> moves = LegalMoves(current);
    if (moves.empty()) break;
    current = current.Extended(moves.front());
    sim.trace.moves.push_back(moves.front());
    ++sim.outcome.nodes;
  }
  sim.outcome.winner = Winner(current);
  sim.outcome.principal_variation = sim.trace.moves;
  return sim;
}

}  // namespace qbfgames
