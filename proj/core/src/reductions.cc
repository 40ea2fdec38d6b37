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

#include "qbfgames/reductions.h"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qbfgames/errors.h"

namespace qbfgames {

// ---------------------------------------------------------------------------
// Graph

bool Graph::IsUncolored() const {
  return std::all_of(colors_.begin(), colors_.end(),
                     [](Paint p) { return p == Paint::kUncolored; });
}

void Graph::AddEdge(std::size_t i, std::size_t j) {
  if (i >= num_vertices() || j >= num_vertices()) {
    throw InvalidInputError("edge endpoint out of range");
  }
  if (i == j) throw InvalidInputError("self-loop on vertex " + std::to_string(i));
  if (i > j) std::swap(i, j);
  if (edges_.emplace(i, j).second) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
}

void Graph::SetColor(std::size_t v, Paint paint) {
  if (v >= num_vertices()) throw InvalidInputError("vertex out of range");
  colors_[v] = paint;
}

Graph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<Graph> g;
  std::size_t number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword) || keyword[0] == '#') continue;
    auto fail = [&](const std::string& message) {
      throw ParseError(message, number, 1);
    };
    if (!g) {
      long long n = -1;
      if (keyword != "graph" || !(words >> n) || n < 0) {
        fail("expected 'graph <n>'");
      }
      g.emplace(static_cast<std::size_t>(n));
    } else if (keyword == "e") {
      long long i = -1;
      long long j = -1;
      if (!(words >> i >> j) || i < 0 || j < 0) fail("malformed edge line");
      try {
        g->AddEdge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      } catch (const InvalidInputError& e) {
        fail(e.what());
      }
    } else if (keyword == "paint") {
      long long v = -1;
      std::string color;
      if (!(words >> v >> color) || v < 0 ||
          static_cast<std::size_t>(v) >= g->num_vertices() ||
          (color != "blue" && color != "red")) {
        fail("malformed paint line");
      }
      g->SetColor(static_cast<std::size_t>(v),
                  color == "blue" ? Paint::kBlue : Paint::kRed);
    } else {
      fail("unknown line '" + keyword + "'");
    }
    std::string extra;
    if (words >> extra) fail("trailing text '" + extra + "'");
  }
  if (!g) throw ParseError("missing 'graph <n>' line", number + 1, 1);
  return *g;
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.num_vertices() << '\n';
  for (const auto& [i, j] : g.edges()) out << "e " << i << ' ' << j << '\n';
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.color(v) == Paint::kUncolored) continue;
    out << "paint " << v << (g.color(v) == Paint::kBlue ? " blue" : " red")
        << '\n';
  }
  return out.str();
}

std::vector<Graph> AllGraphs(std::size_t num_vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < num_vertices; ++i) {
    for (std::size_t j = i + 1; j < num_vertices; ++j) pairs.emplace_back(i, j);
  }
  if (pairs.size() > 20) throw InvalidInputError("too many graphs to enumerate");
  std::vector<Graph> graphs;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g(num_vertices);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask & (1u << b)) g.AddEdge(pairs[b].first, pairs[b].second);
    }
    graphs.push_back(std::move(g));
  }
  return graphs;
}

void ValidateSnortGraph(const Graph& g) {
  for (const auto& [i, j] : g.edges()) {
    Paint a = g.color(i);
    Paint b = g.color(j);
    if (a != Paint::kUncolored && b != Paint::kUncolored && a != b) {
      throw InvalidInputError("invalid Snort position: vertices " +
                              std::to_string(i) + " and " + std::to_string(j) +
                              " are adjacent with opposite colors");
    }
  }
}

// ---------------------------------------------------------------------------
// Snort

namespace {

MemoKey PaintKey(const std::vector<Paint>& paint, Player mover) {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(paint.size() + 1);
  for (Paint p : paint) symbols.push_back(static_cast<std::uint8_t>(p));
  symbols.push_back(mover == Player::kP1 ? 0 : 1);
  return MemoKey::FromSymbols(symbols);
}

Paint PaintOf(Player p) { return p == Player::kP1 ? Paint::kBlue : Paint::kRed; }

}  // namespace

SnortGame::SnortGame(Graph g, Player first_mover)
    : graph_(std::move(g)), first_mover_(first_mover) {
  ValidateSnortGraph(graph_);
}

SnortGame::State SnortGame::Initial() const {
  return State{graph_.colors(), first_mover_};
}

std::vector<std::size_t> SnortGame::LegalMoves(const State& s) const {
  const Paint opposite = PaintOf(Opponent(s.mover));
  std::vector<std::size_t> moves;
  for (std::size_t v = 0; v < s.paint.size(); ++v) {
    if (s.paint[v] != Paint::kUncolored) continue;
    const auto& nbrs = graph_.Neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](std::size_t u) { return s.paint[u] == opposite; })) {
      moves.push_back(v);
    }
  }
  return moves;
}

SnortGame::State SnortGame::Apply(const State& s, std::size_t vertex) const {
  State next = s;
  next.paint.at(vertex) = PaintOf(s.mover);
  next.mover = Opponent(s.mover);
  return next;
}

MemoKey SnortGame::Key(const State& s) const { return PaintKey(s.paint, s.mover); }

// ---------------------------------------------------------------------------
// Proper 2-Coloring

P2cGame::P2cGame(Graph g) : graph_(std::move(g)) {
  if (!graph_.IsUncolored()) {
    throw InvalidInputError("Proper 2-Coloring starts from an uncolored graph");
  }
}

P2cGame::State P2cGame::Initial() const {
  return State{graph_.colors(), Player::kP1};
}

std::vector<P2cGame::MoveType> P2cGame::LegalMoves(const State& s) const {
  std::vector<MoveType> moves;
  for (std::size_t v = 0; v < s.paint.size(); ++v) {
    if (s.paint[v] != Paint::kUncolored) continue;
    const auto& nbrs = graph_.Neighbors(v);
    for (Paint p : {Paint::kRed, Paint::kBlue}) {
      if (std::none_of(nbrs.begin(), nbrs.end(),
                       [&](std::size_t u) { return s.paint[u] == p; })) {
        moves.push_back(MoveType{v, p});
      }
    }
  }
  return moves;
}

P2cGame::State P2cGame::Apply(const State& s, const MoveType& m) const {
  State next = s;
  next.paint.at(m.vertex) = m.paint;
  next.mover = Opponent(s.mover);
  return next;
}

MemoKey P2cGame::Key(const State& s) const { return PaintKey(s.paint, s.mover); }

// ---------------------------------------------------------------------------
// Positive CNF

void ValidatePositiveCnf(const PositiveCnfInstance& inst) {
  for (const auto& clause : inst.clauses) {
    if (clause.empty() || clause.size() > 3) {
      throw InvalidInputError("positive CNF clauses need 1 to 3 variables");
    }
    for (Var v : clause) {
      if (v >= inst.num_vars) {
        throw InvalidInputError("clause variable x" + std::to_string(v) +
                                " out of range");
      }
    }
  }
}

namespace {

Formula Conjoin(std::vector<Formula> parts) {
  if (parts.size() == 1) return parts.front();
  return Formula::And(std::move(parts));
}

Formula Disjoin(std::vector<Formula> parts) {
  if (parts.size() == 1) return parts.front();
  return Formula::Or(std::move(parts));
}

}  // namespace

Formula ToFormula(const PositiveCnfInstance& inst) {
  std::vector<Formula> clauses;
  for (const auto& clause : inst.clauses) {
    std::vector<Formula> lits;
    for (Var v : clause) lits.push_back(Formula::Literal(v));
    clauses.push_back(Disjoin(std::move(lits)));
  }
  return Conjoin(std::move(clauses));
}

PositiveCnfInstance PositiveCnfFromFormula(const Formula& f,
                                           std::size_t num_vars) {
  Cnf cnf = CnfFromFormula(f, num_vars);
  PositiveCnfInstance inst{num_vars, {}};
  for (const auto& clause : cnf.clauses) {
    std::vector<Var> vars;
    for (const CnfLiteral& lit : clause) {
      if (lit.negated) {
        throw InvalidInputError("negation found on x" + std::to_string(lit.var) +
                                "; positive CNF has no negations");
      }
      vars.push_back(lit.var);
    }
    inst.clauses.push_back(std::move(vars));
  }
  ValidatePositiveCnf(inst);
  return inst;
}

PositiveCnfGame::PositiveCnfGame(PositiveCnfInstance inst, Player first_mover)
    : inst_(std::move(inst)), first_mover_(first_mover) {
  ValidatePositiveCnf(inst_);
}

PositiveCnfGame::State PositiveCnfGame::Initial() const {
  return State{std::vector<TernaryValue>(inst_.num_vars, TernaryValue::kUnassigned),
               first_mover_};
}

std::vector<Var> PositiveCnfGame::LegalMoves(const State& s) const {
  std::vector<Var> moves;
  for (std::size_t v = 0; v < s.values.size(); ++v) {
    if (s.values[v] == TernaryValue::kUnassigned) moves.push_back(static_cast<Var>(v));
  }
  return moves;
}

PositiveCnfGame::State PositiveCnfGame::Apply(const State& s, Var v) const {
  State next = s;
  next.values.at(v) = FromBool(s.mover == Player::kP1);
  next.mover = Opponent(s.mover);
  return next;
}

bool PositiveCnfGame::IsTerminal(const State& s) const {
  return std::none_of(s.values.begin(), s.values.end(), [](TernaryValue t) {
    return t == TernaryValue::kUnassigned;
  });
}

Player PositiveCnfGame::Winner(const State& s) const {
  for (const auto& clause : inst_.clauses) {
    if (std::none_of(clause.begin(), clause.end(), [&](Var v) {
          return s.values[v] == TernaryValue::kTrue;
        })) {
      return Player::kP2;
    }
  }
  return Player::kP1;
}

MemoKey PositiveCnfGame::Key(const State& s) const {
  std::vector<std::uint8_t> symbols;
  symbols.reserve(s.values.size() + 1);
  for (TernaryValue t : s.values) symbols.push_back(static_cast<std::uint8_t>(t));
  symbols.push_back(s.mover == Player::kP1 ? 0 : 1);
  return MemoKey::FromSymbols(symbols);
}

// ---------------------------------------------------------------------------
// CNF

namespace {

std::optional<std::vector<CnfLiteral>> AsClause(const Formula& f) {
  if (f.is_literal()) return std::vector<CnfLiteral>{{f.var(), f.negated()}};
  if (f.kind() != Formula::Kind::kOr) return std::nullopt;
  std::vector<CnfLiteral> clause;
  for (const Formula& c : f.children()) {
    if (!c.is_literal()) return std::nullopt;
    clause.push_back({c.var(), c.negated()});
  }
  return clause;
}

}  // namespace

Cnf CnfFromFormula(const Formula& f, std::size_t num_vars) {
  if (VariableBound(f) > num_vars) {
    throw InvalidInputError("formula mentions variables beyond x" +
                            std::to_string(num_vars));
  }
  Cnf cnf{num_vars, {}};
  if (f.is_const() && f.const_value()) return cnf;
  if (f.kind() == Formula::Kind::kAnd) {
    for (const Formula& c : f.children()) {
      auto clause = AsClause(c);
      if (!clause) {
        throw InvalidInputError("not in CNF: conjunct " + ToText(c) +
                                " is not a clause of literals");
      }
      cnf.clauses.push_back(std::move(*clause));
    }
    return cnf;
  }
  auto clause = AsClause(f);
  if (!clause) throw InvalidInputError("not in CNF: " + ToText(f));
  cnf.clauses.push_back(std::move(*clause));
  return cnf;
}

Formula CnfToFormula(const Cnf& cnf) {
  std::vector<Formula> clauses;
  for (const auto& clause : cnf.clauses) {
    std::vector<Formula> lits;
    for (const CnfLiteral& l : clause) lits.push_back(Formula::Literal(l.var, l.negated));
    clauses.push_back(Disjoin(std::move(lits)));
  }
  return Conjoin(std::move(clauses));
}

// ---------------------------------------------------------------------------
// Constructions

Position SnortToPosition(const Graph& g, Player first_mover) {
  ValidateSnortGraph(g);
  std::vector<Formula> clauses;
  for (const auto& [i, j] : g.edges()) {
    const Var a = static_cast<Var>(i);
    const Var b = static_cast<Var>(j);
    clauses.push_back(Formula::Or({Formula::Literal(a), Formula::Literal(b, true)}));
    clauses.push_back(Formula::Or({Formula::Literal(a, true), Formula::Literal(b)}));
  }
  Assignment assignment(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.color(v) != Paint::kUncolored) {
      assignment.Assign(static_cast<Var>(v), g.color(v) == Paint::kBlue);
    }
  }
  constexpr RulesetConfig kConfig{BooleanChoice::kByPlayer, Locality::kAnywhere,
                                  Goal::kSame};
  return Position(Conjoin(std::move(clauses)), std::move(assignment), kConfig)
      .WithMover(first_mover);
}

Position P2cToPosition(const Graph& g) {
  if (!g.IsUncolored()) {
    throw InvalidInputError("Proper 2-Coloring starts from an uncolored graph");
  }
  std::vector<Formula> gadgets;
  for (const auto& [i, j] : g.edges()) {
    const Var a = static_cast<Var>(i);
    const Var b = static_cast<Var>(j);
    gadgets.push_back(Formula::Or(
        {Formula::And({Formula::Literal(a), Formula::Literal(b, true)}),
         Formula::And({Formula::Literal(a, true), Formula::Literal(b)})}));
  }
  constexpr RulesetConfig kConfig{BooleanChoice::kEither, Locality::kAnywhere,
                                  Goal::kSame};
  return Position(Conjoin(std::move(gadgets)), g.num_vertices(), kConfig);
}

std::size_t GammaVariableCount(std::size_t n) {
  return n % 2 == 0 ? n + 1 : n + 2;
}

Formula GammaClause(const std::vector<CnfLiteral>& clause) {
  if (clause.empty()) throw InvalidInputError("empty clause");
  std::vector<Formula> lits;
  Var largest = 0;
  for (const CnfLiteral& l : clause) {
    lits.push_back(Formula::Literal(l.var, l.negated));
    largest = std::max(largest, l.var);
  }
  if (largest % 2 == 1) {
    const Var pad = largest + 1;
    lits.push_back(
        Formula::And({Formula::Literal(pad), Formula::Literal(pad, true)}));
  }
  return Disjoin(std::move(lits));
}

Position QbfCnfToEitherLocalSame(const Cnf& cnf) {
  std::vector<Formula> gammas;
  for (const auto& clause : cnf.clauses) {
    for (const CnfLiteral& l : clause) {
      if (l.var >= cnf.num_vars) {
        throw InvalidInputError("clause variable x" + std::to_string(l.var) +
                                " out of range");
      }
    }
    gammas.push_back(GammaClause(clause));
  }
  constexpr RulesetConfig kConfig{BooleanChoice::kEither, Locality::kLocal,
                                  Goal::kSame};
  return Position(Conjoin(std::move(gammas)), GammaVariableCount(cnf.num_vars),
                  kConfig);
}

Position PositiveCnfToByPlayerAnywhereDifferent(const PositiveCnfInstance& inst,
                                                Player first_mover) {
  ValidatePositiveCnf(inst);
  constexpr RulesetConfig kConfig{BooleanChoice::kByPlayer, Locality::kAnywhere,
                                  Goal::kDifferent};
  return Position(ToFormula(inst), inst.num_vars, kConfig).WithMover(first_mover);
}

// ---------------------------------------------------------------------------
// Dual-solve checks

DualSolve CheckSnort(const Graph& g, Player first_mover,
                     const SolveOptions& options) {
  SolveOptions opts = options;
  opts.principal_variation = false;
  SnortGame game(g, first_mover);
  return DualSolve{SolveAbstract(game, opts).winner,
                   Solve(SnortToPosition(g, first_mover), opts).winner};
}

DualSolve CheckP2c(const Graph& g, const SolveOptions& options) {
  SolveOptions opts = options;
  opts.principal_variation = false;
  P2cGame game(g);
  return DualSolve{SolveAbstract(game, opts).winner,
                   Solve(P2cToPosition(g), opts).winner};
}

DualSolve CheckQbfCnf(const Cnf& cnf, const SolveOptions& options) {
  SolveOptions opts = options;
  opts.principal_variation = false;
  Position qbf(CnfToFormula(cnf), cnf.num_vars, kQbfRuleset);
  return DualSolve{Solve(qbf, opts).winner,
                   Solve(QbfCnfToEitherLocalSame(cnf), opts).winner};
}

DualSolve CheckPositiveEmbedding(const PositiveCnfInstance& inst,
                                 Player first_mover,
                                 const SolveOptions& options) {
  SolveOptions opts = options;
  opts.principal_variation = false;
  PositiveCnfGame game(inst, first_mover);
  return DualSolve{
      SolveAbstract(game, opts).winner,
      Solve(PositiveCnfToByPlayerAnywhereDifferent(inst, first_mover), opts)
          .winner};
}

ToyEquivalenceReport ToyPositiveEquivalenceCheck(const PositiveCnfInstance& inst,
                                                 Player first_mover,
                                                 const SolveOptions& options) {
  SolveOptions opts = options;
  opts.principal_variation = false;
  Position positive = PositiveCnfToByPlayerAnywhereDifferent(inst, first_mover);
  Position toy = positive.WithConfig(
      RulesetConfig{BooleanChoice::kEither, Locality::kAnywhere, Goal::kDifferent});
  return ToyEquivalenceReport{Solve(positive, opts).winner,
                              Solve(toy, opts).winner};
}

}  // namespace qbfgames
