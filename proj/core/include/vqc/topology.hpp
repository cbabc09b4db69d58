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

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vqc/circuit.hpp"

namespace vqc {

// Which ordered (control, target) CNOT placements the device admits.
struct Topology {
  int n = 0;
  std::set<std::pair<int, int>> allowed_pairs;

  bool allows(int control, int target) const {
    return allowed_pairs.count({control, target}) > 0;
  }
};

// All n(n-1) ordered pairs.
Topology full_topology(int n);

// Induced subgraph of IBM's 5-qubit ibmq_ourense device (edges 0-1, 1-2,
// 1-3, 3-4, both CNOT directions) on qubits 0..n-1. For n = 3 this is the
// 0-1-2 line. n must be in [1, 5].
Topology ibmq_ourense_topology(int n);

struct TopologyViolation {
  int gate_index;
  int control;
  int target;
};

// Empty result means the circuit is topology-compliant. Block placements
// are checked through their constituent CNOT pairs.
std::vector<TopologyViolation> validate_circuit(const Circuit& c,
                                                const Topology& t);

}  // namespace vqc
