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

// Seeded random instances. Every generator draws from one 64-bit Mersenne
// Twister, and bounded draws use rejection sampling on its raw output, so a
// seed produces the same instances on every platform.

#ifndef QBFGAMES_INSTANCES_H_
#define QBFGAMES_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "qbfgames/formula.h"
#include "qbfgames/reductions.h"
#include "qbfgames/ruleset.h"

namespace qbfgames {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t Uniform(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::size_t Between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(Uniform(hi - lo + 1));
  }
  bool Bernoulli(double p);
  bool Coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// `num_clauses` clauses of `width` distinct variables with random signs.
// Throws InvalidInputError if width is 0 or exceeds num_vars.
Cnf RandomCnf(std::size_t num_vars, std::size_t num_clauses, std::size_t width,
              Random& rng);

// Like RandomCnf without negations; width <= 3.
PositiveCnfInstance RandomPositiveCnf(std::size_t num_vars,
                                      std::size_t num_clauses,
                                      std::size_t width, Random& rng);

// Erdos-Renyi G(n, p), uncolored.
Graph RandomGraph(std::size_t num_vertices, double edge_probability,
                  Random& rng);

// Arbitrary formula tree with at most `max_depth` connective levels, using
// every node kind (constants, literals, Not, n-ary And/Or).
Formula RandomFormula(std::size_t num_vars, std::size_t max_depth, Random& rng);

// A reachable position: `formula` under `config`, after up to `max_moves`
// uniformly random legal moves from the empty assignment.
Position RandomPlayout(const Formula& formula, std::size_t num_vars,
                       const RulesetConfig& config, std::size_t max_moves,
                       Random& rng);

}  // namespace qbfgames

#endif  // QBFGAMES_INSTANCES_H_
