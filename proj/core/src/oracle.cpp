// Copyright 2026 The vqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqc/oracle.hpp"

#include <string>

#include "vqc/errors.hpp"

namespace vqc {

OracleResult exhaustive_minimum(const Unitary& target, const Alphabet& alphabet,
                                const Topology& topology, CostKind kind,
                                const OracleSettings& settings) {
  if (topology.n > settings.cap_qubits) {
    throw SizeLimitError("oracle capped at " +
                         std::to_string(settings.cap_qubits) + " qubits");
  }
  if (settings.max_length > settings.cap_length) {
    throw SizeLimitError("oracle capped at length " +
                         std::to_string(settings.cap_length));
  }
  const int n = qubit_count(target);
  if (n != topology.n) {
    throw DimensionError("target width does not match topology");
  }
  const CostEvaluator evaluator(target, kind);
  // The action list is state-independent until the length cutoff.
  const std::vector<ActionId> actions = action_space(
      AgentState::start(), alphabet, topology, settings.max_length + 1);
  const std::size_t arity = actions.size();
  Rng rng(settings.seed);

  OracleResult result;
  for (int length = 1; length <= settings.max_length; ++length) {
    OracleLevel level;
    level.length = length;
    level.structures = 0;
    level.best_cost = 2.0;

    std::vector<std::size_t> odometer(length, 0);
    bool done = false;
    while (!done) {
      Circuit c;
      c.n = n;
      for (int i = 0; i < length; ++i) {
        c.gates.push_back(action_placement(actions[odometer[i]], n));
      }
      const OptimizationOutcome outcome =
          optimize(c, evaluator, settings.optimizer, rng);
      ++level.structures;
      if (outcome.cost < level.best_cost) {
        level.best_cost = outcome.cost;
        scatter_theta(c, outcome.theta);
        level.best_circuit = c;
      }
      // advance
      int pos = length - 1;
      while (pos >= 0) {
        if (++odometer[pos] < arity) break;
        odometer[pos] = 0;
        --pos;
      }
      done = pos < 0;
    }

    result.levels.push_back(level);
    if (level.best_cost < settings.threshold) {
      result.minimal_length = length;
      result.witness = level.best_circuit;
      result.witness_cost = level.best_cost;
      break;
    }
  }
  return result;
}

}  // namespace vqc
