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

#include "vqc/topology.hpp"

#include "vqc/errors.hpp"

namespace vqc {

Topology full_topology(int n) {
  Topology t;
  t.n = n;
  for (int c = 0; c < n; ++c) {
    for (int tg = 0; tg < n; ++tg) {
      if (c != tg) t.allowed_pairs.insert({c, tg});
    }
  }
  return t;
}

Topology ibmq_ourense_topology(int n) {
  if (n < 1 || n > 5) {
    throw SizeLimitError("ibmq_ourense has 5 qubits");
  }
  static const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  Topology t;
  t.n = n;
  for (const auto& [a, b] : edges) {
    if (a < n && b < n) {
      t.allowed_pairs.insert({a, b});
      t.allowed_pairs.insert({b, a});
    }
  }
  return t;
}

std::vector<TopologyViolation> validate_circuit(const Circuit& c,
                                                const Topology& t) {
  std::vector<TopologyViolation> violations;
  for (int i = 0; i < c.size(); ++i) {
    const auto& p = c.gates[i];
    if (p.gate == GateKind::CNOT) {
      if (!t.allows(p.qubits[0], p.qubits[1])) {
        violations.push_back({i, p.qubits[0], p.qubits[1]});
      }
    } else if (is_block(p.gate)) {
      for (const auto& [ctl, tgt] : block_cnot_pairs(p.gate, c.n)) {
        if (!t.allows(ctl, tgt)) {
          violations.push_back({i, ctl, tgt});
        }
      }
    }
  }
  return violations;
}

}  // namespace vqc
