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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqc/unitary.hpp"

namespace vqc {

// Gate identifiers. The first four are elementary gates; the *_BLOCK /
// CNOT_* entries are n-qubit blocks that act on the whole register at once.
enum class GateKind {
  RX_HALF_PI,
  RZ,
  RY,
  CNOT,
  RZ_BLOCK,
  RY_BLOCK,
  CNOT_ALL,
  CNOT_EVEN,
  CNOT_ODD,
  CNOT_EVEN_BIDIRECT,
};

// Gate arity: 1 or 2 for elementary gates; n (the register width) for blocks.
int gate_arity(GateKind kind, int n);

bool is_block(GateKind kind);
bool is_two_qubit(GateKind kind);

// Number of continuous angles carried by a placement of this gate.
// Depends on the register width n only for the rotation blocks.
int gate_param_count(GateKind kind, int n);

std::string_view gate_name(GateKind kind);
GateKind gate_from_name(std::string_view name);  // throws UnknownGateError

// Ordered (control, target) pairs of the CNOTs a block expands to.
// Empty for non-CNOT blocks.
std::vector<std::pair<int, int>> block_cnot_pairs(GateKind kind, int n);

// Number of CNOTs contributed by one placement of this gate (blocks count
// each constituent CNOT individually).
int gate_cnot_weight(GateKind kind, int n);

/**
 * Matrix of a gate: 2x2 for one-qubit gates, 4x4 for CNOT, 2^n x 2^n for
 * blocks. Rotation convention is R_a(theta) = exp(-i theta sigma_a / 2).
 * The CNOT matrix follows the register convention (qubit 0 least
 * significant, local qubit 0 = control), i.e. columns |00>,|01>,|10>,|11>
 * map to |00>,|11>,|10>,|01>.
 *
 * theta must have exactly gate_param_count(kind, n) entries. For the
 * rotation blocks theta[i] is the angle on qubit i.
 */
Unitary gate_matrix(GateKind kind, std::span<const double> theta, int n = 0);

}  // namespace vqc
