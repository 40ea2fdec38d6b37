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

#include "qbfgames/instances.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "qbfgames/errors.h"

namespace qbfgames {

std::uint64_t Random::Uniform(std::uint64_t bound) {
  if (bound == 0) throw InvalidInputError("empty range");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

bool Random::Bernoulli(double p) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

std::vector<Var> DistinctVars(std::size_t num_vars, std::size_t count,
                              Random& rng) {
  std::vector<Var> chosen;
  while (chosen.size() < count) {
    Var v = static_cast<Var>(rng.Uniform(num_vars));
    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) {
      chosen.push_back(v);
    }
  }
  return chosen;
}

}  // namespace

Cnf RandomCnf(std::size_t num_vars, std::size_t num_clauses, std::size_t width,
              Random& rng) {
  if (width == 0 || width > num_vars) {
    throw InvalidInputError("clause width must be in 1..num_vars");
  }
  Cnf cnf{num_vars, {}};
  for (std::size_t c = 0; c < num_clauses; ++c) {
    std::vector<CnfLiteral> clause;
    for (Var v : DistinctVars(num_vars, width, rng)) {
      clause.push_back({v, rng.Coin()});
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

PositiveCnfInstance RandomPositiveCnf(std::size_t num_vars,
                                      std::size_t num_clauses,
                                      std::size_t width, Random& rng) {
  if (width == 0 || width > 3 || width > num_vars) {
    throw InvalidInputError("positive CNF width must be in 1..min(3, num_vars)");
  }
  PositiveCnfInstance inst{num_vars, {}};
  for (std::size_t c = 0; c < num_clauses; ++c) {
    inst.clauses.push_back(DistinctVars(num_vars, width, rng));
  }
  return inst;
}

Graph RandomGraph(std::size_t num_vertices, double edge_probability,
                  Random& rng) {
  if (edge_probability < 0.0 || edge_probability > 1.0) {
    throw InvalidInputError("edge probability must be in [0, 1]");
  }
  Graph g(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) {
    for (std::size_t j = i + 1; j < num_vertices; ++j) {
      if (rng.Bernoulli(edge_probability)) g.AddEdge(i, j);
    }
  }
  return g;
}

Formula RandomFormula(std::size_t num_vars, std::size_t max_depth,
                      Random& rng) {
  const bool leaf = max_depth == 0 || rng.Uniform(3) == 0;
  if (leaf) {
    if (num_vars == 0 || rng.Uniform(8) == 0) {
      return Formula::Constant(rng.Coin());
    }
    return Formula::Literal(static_cast<Var>(rng.Uniform(num_vars)), rng.Coin());
  }
  switch (rng.Uniform(3)) {
    case 0:
      return Formula::Not(RandomFormula(num_vars, max_depth - 1, rng));
    case 1:
    case 2: {
      const bool is_and = rng.Coin();
      std::vector<Formula> children(rng.Between(1, 3));
      for (Formula& c : children) c = RandomFormula(num_vars, max_depth - 1, rng);
      return is_and ? Formula::And(std::move(children))
                    : Formula::Or(std::move(children));
    }
  }
  return Formula::Constant(true);
}

Position RandomPlayout(const Formula& formula, std::size_t num_vars,
                       const RulesetConfig& config, std::size_t max_moves,
                       Random& rng) {
  Position p(formula, num_vars, config);
  const std::size_t moves = rng.Between(0, max_moves);
  for (std::size_t i = 0; i < moves; ++i) {
    std::vector<Move> legal = LegalMoves(p);
    if (legal.empty()) break;
    p = ApplyMove(p, legal[rng.Uniform(legal.size())]);
  }
  return p;
}

}  // namespace qbfgames
