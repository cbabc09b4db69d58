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

#pragma once

#include <cstdint>
#include <optional>

#include "vqc/cost.hpp"
#include "vqc/mdp.hpp"
#include "vqc/optimizer.hpp"

namespace vqc {

struct OracleSettings {
  int max_length = 5;
  double threshold = 1e-3;
  int cap_qubits = 2;   // refuse wider problems unless raised
  int cap_length = 6;   // refuse longer enumerations unless raised
  OptimizerSettings optimizer{.step_size = 0.1,
                              .max_iterations = 500,
                              .tolerance = 1e-10,
                              .restarts = 8,
                              .init = AngleInit::RANDOM_UNIFORM_0_2PI};
  std::uint64_t seed = 99;
};

struct OracleLevel {
  int length;
  long structures;  // structures enumerated at this length
  double best_cost;
  Circuit best_circuit;
};

struct OracleResult {
  std::optional<int> minimal_length;  // empty if nothing reached threshold
  Circuit witness;                    // optimized witness at minimal_length
  double witness_cost = 1.0;
  std::vector<OracleLevel> levels;    // one entry per enumerated length
};

/**
 * Exhaustively enumerates every action sequence of length 1..max_length
 * over the alphabet/topology, optimizes each structure's angles, and
 * reports the smallest length whose best cost beats the threshold along
 * with a witness circuit. Intended as an independent certificate for the
 * search's minimal gate counts; throws SizeLimitError beyond the caps.
 */
OracleResult exhaustive_minimum(const Unitary& target, const Alphabet& alphabet,
                                const Topology& topology, CostKind kind,
                                const OracleSettings& settings);

}  // namespace vqc
