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

#include <compare>
#include <vector>

#include "vqc/circuit.hpp"
#include "vqc/topology.hpp"

namespace vqc {

// MDP state of a partially built circuit: (last gate, its qubits, gate
// count). START has count 0 and no last gate; a state whose count reached
// the episode length can only terminate.
struct AgentState {
  enum class Tag { START, INTERMEDIATE, TERMINAL };

  Tag tag = Tag::START;
  GateKind last_gate = GateKind::RZ;  // INTERMEDIATE only
  std::vector<int> last_qubits;       // INTERMEDIATE only
  int gate_count = 0;

  static AgentState start() { return {}; }
  static AgentState terminal();

  auto operator<=>(const AgentState&) const = default;
};

// One choice of gate and placement qubits (empty for block gates).
struct ActionId {
  GateKind gate;
  std::vector<int> qubits;

  auto operator<=>(const ActionId&) const = default;
};

// The state reached by taking `a` from `s`.
AgentState transition(const AgentState& s, const ActionId& a);

// The placement an action denotes (angles zero-initialised).
GatePlacement action_placement(const ActionId& a, int n);

using Alphabet = std::vector<GateKind>;

/**
 * Actions available from `s`: every (gate, qubits) combination of the
 * alphabet, with two-qubit placements restricted to the topology's allowed
 * pairs and block gates admitted only when all their constituent CNOT
 * pairs are allowed. Ordering is deterministic: alphabet order, then qubit
 * tuples ascending. Empty once gate_count has reached max_gates (the state
 * must terminate). Throws InvalidStateError for TERMINAL states.
 */
std::vector<ActionId> action_space(const AgentState& s,
                                   const Alphabet& alphabet,
                                   const Topology& topology, int max_gates);

}  // namespace vqc
