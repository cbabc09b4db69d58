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

#include <vector>

#include "vqc/gate.hpp"
#include "vqc/unitary.hpp"

namespace vqc {

// One gate placement: which gate, which qubits (empty for blocks, which act
// on the whole register), and its angles (length == gate_param_count).
struct GatePlacement {
  GateKind gate;
  std::vector<int> qubits;
  std::vector<double> theta;

  bool operator==(const GatePlacement&) const = default;
};

// An ordered gate sequence on n qubits; gates[0] is applied first.
struct Circuit {
  int n = 0;
  std::vector<GatePlacement> gates;

  int size() const { return static_cast<int>(gates.size()); }
  bool operator==(const Circuit&) const = default;
};

// Throws (ParameterArityError / QubitIndexError) if a placement is malformed
// for width n.
void check_placement(const GatePlacement& p, int n);
void check_circuit(const Circuit& c);

// Total number of continuous parameters over all placements.
int parameter_count(const Circuit& c);

// Total CNOT count; CNOTs inside blocks count individually.
int cnot_count(const Circuit& c);

// Reads/writes the concatenation of all placement angles, in gate order.
std::vector<double> gather_theta(const Circuit& c);
void scatter_theta(Circuit& c, std::span<const double> theta);

// G_{k_L}(theta_L) ... G_{k_1}(theta_1); the empty circuit gives identity.
Unitary circuit_unitary(const Circuit& c);

// Left-multiplies m by every gate of c in application order (m may be a
// state vector or a matrix of column states). `conjugated` applies the
// entrywise complex conjugate of each gate instead, and `qubit_offset`
// shifts every qubit index (used to run a circuit on the B half of a
// doubled register).
void apply_circuit(Eigen::Ref<Eigen::MatrixXcd> m, const Circuit& c,
                   int total_qubits, int qubit_offset = 0,
                   bool conjugated = false);

}  // namespace vqc
