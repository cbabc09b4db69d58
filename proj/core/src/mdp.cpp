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

#include "vqc/mdp.hpp"

#include "vqc/errors.hpp"

namespace vqc {

AgentState AgentState::terminal() {
  AgentState s;
  s.tag = Tag::TERMINAL;
  return s;
}

AgentState transition(const AgentState& s, const ActionId& a) {
  AgentState next;
  next.tag = AgentState::Tag::INTERMEDIATE;
  next.last_gate = a.gate;
  next.last_qubits = a.qubits;
  next.gate_count = s.gate_count + 1;
  return next;
}

GatePlacement action_placement(const ActionId& a, int n) {
  GatePlacement p;
  p.gate = a.gate;
  p.qubits = a.qubits;
  p.theta.assign(gate_param_count(a.gate, n), 0.0);
  return p;
}

std::vector<ActionId> action_space(const AgentState& s,
                                   const Alphabet& alphabet,
                                   const Topology& topology, int max_gates) {
  if (s.tag == AgentState::Tag::TERMINAL) {
    throw InvalidStateError("terminal states have no actions");
  }
  if (s.gate_count >= max_gates) {
    return {};  // the state can only terminate
  }
  const int n = topology.n;
  std::vector<ActionId> actions;
  for (GateKind kind : alphabet) {
    if (is_block(kind)) {
      bool allowed = true;
      for (const auto& [c, t] : block_cnot_pairs(kind, n)) {
        if (!topology.allows(c, t)) {
          allowed = false;
          break;
        }
      }
      if (allowed) actions.push_back({kind, {}});
    } else if (is_two_qubit(kind)) {
      for (int c = 0; c < n; ++c) {
        for (int t = 0; t < n; ++t) {
          if (c != t && topology.allows(c, t)) {
            actions.push_back({kind, {c, t}});
          }
        }
      }
    } else {
      for (int q = 0; q < n; ++q) {
        actions.push_back({kind, {q}});
      }
    }
  }
  return actions;
}

}  // namespace vqc
