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

// Source games (Snort, Proper 2-Coloring, Positive CNF) and the constructions
// that embed them, or plain CNF formulas, into the formula rulesets. Each
// construction has a dual-solve check that solves the source game directly
// and the constructed position with the formula solver and compares winners.

#ifndef QBFGAMES_REDUCTIONS_H_
#define QBFGAMES_REDUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbfgames/formula.h"
#include "qbfgames/ruleset.h"
#include "qbfgames/solver.h"

namespace qbfgames {

// ---------------------------------------------------------------------------
// Graphs

enum class Paint : std::uint8_t { kUncolored = 0, kBlue = 1, kRed = 2 };

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices)
      : colors_(num_vertices, Paint::kUncolored), adjacency_(num_vertices) {}

  std::size_t num_vertices() const { return colors_.size(); }
  // Edges as (i, j) with i < j, sorted.
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  const std::vector<std::size_t>& Neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  Paint color(std::size_t v) const { return colors_.at(v); }
  const std::vector<Paint>& colors() const { return colors_; }
  bool IsUncolored() const;

  // Throws InvalidInputError on self-loops or out-of-range endpoints.
  // Duplicate edges are ignored.
  void AddEdge(std::size_t i, std::size_t j);
  void SetColor(std::size_t v, Paint paint);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  std::set<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Paint> colors_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// "graph <n>", then "e <i> <j>" and "paint <i> <blue|red>" lines. Blank lines
// and '#' comments are ignored. Throws ParseError.
Graph ParseGraph(std::string_view text);
std::string FormatGraph(const Graph& g);

// Every labelled graph on n vertices (all 2^(n(n-1)/2) edge subsets).
std::vector<Graph> AllGraphs(std::size_t num_vertices);

// Throws InvalidInputError if a Blue vertex is adjacent to a Red one.
void ValidateSnortGraph(const Graph& g);

// ---------------------------------------------------------------------------
// Source games

// Partizan: Blue (P1) and Red (P2) paint uncolored vertices their own color,
// never next to the opposite color. A player who cannot move loses.
class SnortGame {
 public:
  struct State {
    std::vector<Paint> paint;
    Player mover;
  };
  using MoveType = std::size_t;  // vertex; color follows the mover

  explicit SnortGame(Graph g, Player first_mover = Player::kP1);

  State Initial() const;
  std::vector<std::size_t> LegalMoves(const State& s) const;
  State Apply(const State& s, std::size_t vertex) const;
  Player Mover(const State& s) const { return s.mover; }
  bool IsTerminal(const State& s) const { return LegalMoves(s).empty(); }
  Player Winner(const State& s) const { return Opponent(s.mover); }
  MemoKey Key(const State& s) const;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
  Player first_mover_;
};

// Impartial: either player paints any uncolored vertex either color, never
// matching a painted neighbour. The last player to paint wins.
class P2cGame {
 public:
  struct State {
    std::vector<Paint> paint;
    Player mover;
  };
  struct MoveType {
    std::size_t vertex;
    Paint paint;
    friend bool operator==(const MoveType&, const MoveType&) = default;
  };

  // Throws InvalidInputError on pre-colored vertices.
  explicit P2cGame(Graph g);

  State Initial() const;
  // Ascending vertex, Red (false) before Blue (true).
  std::vector<MoveType> LegalMoves(const State& s) const;
  State Apply(const State& s, const MoveType& m) const;
  Player Mover(const State& s) const { return s.mover; }
  bool IsTerminal(const State& s) const { return LegalMoves(s).empty(); }
  Player Winner(const State& s) const { return Opponent(s.mover); }
  MemoKey Key(const State& s) const;

 private:
  Graph graph_;
};

// Negation-free CNF with clauses of width 1..3.
struct PositiveCnfInstance {
  std::size_t num_vars = 0;
  std::vector<std::vector<Var>> clauses;
};

// Throws InvalidInputError for empty or over-wide clauses or out-of-range
// variables.
void ValidatePositiveCnf(const PositiveCnfInstance& inst);

// Single-clause and single-literal parts are unwrapped, so one unit clause
// gives the bare literal.
Formula ToFormula(const PositiveCnfInstance& inst);

// Accepts literals, disjunctions of literals and conjunctions of those.
// Throws InvalidInputError("negation found ...") on negated literals and
// InvalidInputError on anything else that is not a width <= 3 positive CNF.
PositiveCnfInstance PositiveCnfFromFormula(const Formula& f,
                                           std::size_t num_vars);

// True assigns true, False assigns false, on any unassigned variable. When
// all variables are set, True wins iff every clause holds.
class PositiveCnfGame {
 public:
  struct State {
    std::vector<TernaryValue> values;
    Player mover;
  };
  using MoveType = Var;

  explicit PositiveCnfGame(PositiveCnfInstance inst,
                           Player first_mover = Player::kP1);

  State Initial() const;
  std::vector<Var> LegalMoves(const State& s) const;
  State Apply(const State& s, Var v) const;
  Player Mover(const State& s) const { return s.mover; }
  bool IsTerminal(const State& s) const;
  Player Winner(const State& s) const;
  MemoKey Key(const State& s) const;

 private:
  PositiveCnfInstance inst_;
  Player first_mover_;
};

// ---------------------------------------------------------------------------
// General CNF

struct CnfLiteral {
  Var var;
  bool negated;
};

struct Cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<CnfLiteral>> clauses;
};

// Accepts literals, Or of literals, And of those, and Const(true) (no
// clauses). Throws InvalidInputError on anything else.
Cnf CnfFromFormula(const Formula& f, std::size_t num_vars);
Formula CnfToFormula(const Cnf& cnf);

// ---------------------------------------------------------------------------
// Constructions

// by-player-anywhere-same. Each edge (i, j) contributes (xi | ~xj) & (~xi | xj);
// Blue vertices become x=T, Red ones x=F, and Blue plays True. first_mover is
// the Snort player to move.
Position SnortToPosition(const Graph& g, Player first_mover = Player::kP1);

// either-anywhere-same. Each edge contributes (xi & ~xj) | (~xi & xj).
Position P2cToPosition(const Graph& g);

// The padding variable count for the gamma construction: n + 1 for even n,
// n + 2 for odd n. Always odd.
std::size_t GammaVariableCount(std::size_t n);

// gamma = clause when its largest index l is even, otherwise
// clause | (x(l+1) & ~x(l+1)).
Formula GammaClause(const std::vector<CnfLiteral>& clause);

// either-local-same position whose P1 wins iff the alternating quantified
// CNF (exists x0, forall x1, ...) is true.
Position QbfCnfToEitherLocalSame(const Cnf& cnf);

// Identity embedding into by-player-anywhere-different.
Position PositiveCnfToByPlayerAnywhereDifferent(
    const PositiveCnfInstance& inst, Player first_mover = Player::kP1);

// ---------------------------------------------------------------------------
// Dual-solve checks

struct DualSolve {
  Player source_winner;
  Player reduced_winner;
  bool agree() const { return source_winner == reduced_winner; }
};

DualSolve CheckSnort(const Graph& g, Player first_mover = Player::kP1,
                     const SolveOptions& options = {});
DualSolve CheckP2c(const Graph& g, const SolveOptions& options = {});
// Source: the CNF played as either-local-different (the plain quantified
// formula game). Reduced: the gamma construction.
DualSolve CheckQbfCnf(const Cnf& cnf, const SolveOptions& options = {});
// Source: PositiveCnfGame. Reduced: the by-player-anywhere-different embedding.
DualSolve CheckPositiveEmbedding(const PositiveCnfInstance& inst,
                                 Player first_mover = Player::kP1,
                                 const SolveOptions& options = {});

struct ToyEquivalenceReport {
  Player positive_winner;  // by-player-anywhere-different
  Player toy_winner;       // either-anywhere-different
  bool agree() const { return positive_winner == toy_winner; }
};

// Solves the same negation-free formula with and without the by-player value
// restriction.
ToyEquivalenceReport ToyPositiveEquivalenceCheck(
    const PositiveCnfInstance& inst, Player first_mover = Player::kP1,
    const SolveOptions& options = {});

}  // namespace qbfgames

#endif  // QBFGAMES_REDUCTIONS_H_
