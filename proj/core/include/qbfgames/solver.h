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

// Exact winner determination for the formula games and for any other finite,
// strictly alternating two-player game exposed through the AbstractGame
// concept.
//
// The memoized search is plain win/loss backward induction: a position is a
// win for the player to move iff some legal move leads to a position that is
// a loss for the (new) player to move. Terminal positions defer to the game's
// own winner rule. Results are memoized by a canonical state key; for formula
// games the key is the assignment vector alone, since formula, ruleset and
// mover parity are fixed for a solve.

#ifndef QBFGAMES_SOLVER_H_
#define QBFGAMES_SOLVER_H_

#include <atomic>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <thread>
#include <unordered_map>
#include <vector>

#include "qbfgames/errors.h"
#include "qbfgames/ruleset.h"

namespace qbfgames {

// Packed vector of small symbols (2 bits each).
class MemoKey {
 public:
  MemoKey() = default;
  // Every symbol must be < 4.
  static MemoKey FromSymbols(std::span<const std::uint8_t> symbols);
  static MemoKey FromAssignment(const Assignment& a);

  std::size_t hash() const;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const { return k.hash(); }
};

// Insert-once map; with `concurrent` set, readers see either no entry or the
// published value.
class MemoTable {
 public:
  explicit MemoTable(bool concurrent = false) : concurrent_(concurrent) {}

  std::optional<bool> Find(const MemoKey& key) const;
  void Publish(const MemoKey& key, bool mover_wins);
  std::size_t size() const;

 private:
  bool concurrent_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> table_;
};

template <typename M>
struct BasicOutcome {
  Player winner = Player::kP1;
  // One optimal line from the solved position to a terminal position.
  std::vector<M> principal_variation;
  // Positions expanded by the search (memo hits are not counted).
  std::uint64_t nodes = 0;
};

using Outcome = BasicOutcome<Move>;

struct SolveOptions {
  std::uint64_t node_budget = 100'000'000;
  // Values > 1 search the root's children in parallel; the result is
  // identical to the single-threaded one.
  unsigned threads = 1;
  bool principal_variation = true;
};

template <typename G>
concept AbstractGame = requires(const G& g, const typename G::State& s,
                                const typename G::MoveType& m) {
  { g.Initial() } -> std::convertible_to<typename G::State>;
  { g.LegalMoves(s) } -> std::convertible_to<std::vector<typename G::MoveType>>;
  { g.Apply(s, m) } -> std::convertible_to<typename G::State>;
  { g.Mover(s) } -> std::same_as<Player>;
  { g.IsTerminal(s) } -> std::same_as<bool>;
  // Only called on terminal states.
  { g.Winner(s) } -> std::same_as<Player>;
  { g.Key(s) } -> std::convertible_to<MemoKey>;
};

template <AbstractGame G>
class GameSolver {
 public:
  using State = typename G::State;
  using MoveType = typename G::MoveType;

  explicit GameSolver(const G& game, SolveOptions options = {})
      : game_(game), options_(options), memo_(options.threads > 1) {}

  BasicOutcome<MoveType> Solve() { return SolveFrom(game_.Initial()); }

  BasicOutcome<MoveType> SolveFrom(const State& root) {
    BasicOutcome<MoveType> out;
    const bool mover_wins = options_.threads > 1 ? RootParallel(root)
                                                 : MoverWins(root);
    const Player mover = game_.Mover(root);
    out.winner = mover_wins ? mover : Opponent(mover);
    if (options_.principal_variation) out.principal_variation = Line(root);
    out.nodes = nodes_.load();
    return out;
  }

  // True iff the player to move in s wins under optimal play.
  bool MoverWins(const State& s) {
    MemoKey key = game_.Key(s);
    if (auto hit = memo_.Find(key)) return *hit;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 >
        options_.node_budget) {
      throw ResourceLimitError("node budget of " +
                               std::to_string(options_.node_budget) +
                               " exceeded");
    }
    std::vector<MoveType> moves = game_.LegalMoves(s);
    bool win;
    if (moves.empty()) {
      win = game_.Winner(s) == game_.Mover(s);
    } else {
      win = false;
      for (const MoveType& m : moves) {
        if (!MoverWins(game_.Apply(s, m))) {
          win = true;
          break;
        }
      }
    }
    memo_.Publish(key, win);
    return win;
  }

  std::uint64_t nodes() const { return nodes_.load(); }
  const MemoTable& memo() const { return memo_; }

 private:
  // First winning move in move order, else the first legal move.
  std::vector<MoveType> Line(const State& root) {
    std::vector<MoveType> line;
    State s = root;
    for (;;) {
      std::vector<MoveType> moves = game_.LegalMoves(s);
      if (moves.empty()) break;
      std::size_t pick = 0;
      for (std::size_t i = 0; i < moves.size(); ++i) {
        if (!MoverWins(game_.Apply(s, moves[i]))) {
          pick = i;
          break;
        }
      }
      line.push_back(moves[pick]);
      s = game_.Apply(s, moves[pick]);
    }
    return line;
  }

  bool RootParallel(const State& root) {
    std::vector<MoveType> moves = game_.LegalMoves(root);
    if (moves.size() < 2) return MoverWins(root);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> found{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      try {
        for (std::size_t i = next++; i < moves.size() && !found; i = next++) {
          if (!MoverWins(game_.Apply(root, moves[i]))) found = true;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        found = true;
      }
    };
    {
      std::vector<std::jthread> pool;
      const unsigned count = std::min<std::size_t>(options_.threads, moves.size());
      for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    memo_.Publish(game_.Key(root), found.load());
    return found.load();
  }

  const G& game_;
  SolveOptions options_;
  MemoTable memo_;
  std::atomic<std::uint64_t> nodes_{0};
};

template <AbstractGame G>
BasicOutcome<typename G::MoveType> SolveAbstract(const G& game,
                                                 const SolveOptions& options = {}) {
  return GameSolver<G>(game, options).Solve();
}

// Formula positions as an AbstractGame.
class FormulaGame {
 public:
  using State = Position;
  using MoveType = Move;

  explicit FormulaGame(Position initial) : initial_(std::move(initial)) {}

  Position Initial() const { return initial_; }
  std::vector<Move> LegalMoves(const Position& p) const {
    return qbfgames::LegalMoves(p);
  }
  Position Apply(const Position& p, const Move& m) const {
    return p.Extended(m);
  }
  Player Mover(const Position& p) const { return p.Mover(); }
  bool IsTerminal(const Position& p) const { return qbfgames::IsTerminal(p); }
  Player Winner(const Position& p) const;
  MemoKey Key(const Position& p) const {
    return MemoKey::FromAssignment(p.assignment());
  }

 private:
  Position initial_;
};

// Memoized exact solve. Throws ResourceLimitError past the node budget.
Outcome Solve(const Position& p, const SolveOptions& options = {});

inline constexpr std::size_t kDefaultNaiveBound = 12;

// Unmemoized recursion straight over the ruleset engine, used as an oracle.
// Reports the winner and node count only. Throws ResourceLimitError when
// p.num_vars() exceeds max_vars.
Outcome SolveNaive(const Position& p, std::size_t max_vars = kDefaultNaiveBound);

struct Simulation {
  Outcome outcome;  // principal_variation holds the forced line
  GameTrace trace;
};

// Plays out a by-player-local game, whose every position has at most one
// legal move. nodes counts the moves played. Throws ConfigError for other
// rulesets.
Simulation SimulateLocalByPlayer(const Position& p);

}  // namespace qbfgames

#endif  // QBFGAMES_SOLVER_H_
