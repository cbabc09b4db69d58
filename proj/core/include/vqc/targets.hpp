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
#include <string>

#include "vqc/circuit.hpp"
#include "vqc/unitary.hpp"

namespace vqc {

// A compilation target: either a named built-in or a unitary loaded from a
// matrix file. Names (case-insensitive): cs, ch, cz, xx3pi2, qft<n>,
// ccnot, wsp3, identity<n>, layered<n> (seeded). The layered family is the
// two-layer Rz/CNOT sandwich U4(theta') U3 U2 U1(theta) with angles drawn
// uniformly from [0, 2pi) by the given seed.
struct TargetSpec {
  std::string name;                  // preset name, or empty when file-based
  std::string file;                  // matrix file path (JSON), or empty
  std::uint64_t layered_seed = 1234; // only used by layered<n>
};

Unitary target_unitary(const TargetSpec& spec);

// The fixed reference circuit defining the WSP3 target: seven gates
// (four RY, three CNOTs on the 0-1 / 1-2 line) taking |000> exactly to
// (|001> + |010> + |100>)/sqrt(3).
Circuit wsp3_reference_circuit();

// Number of qubits a named preset acts on (nullopt for file targets until
// loaded).
std::optional<int> target_qubits(const TargetSpec& spec);

}  // namespace vqc
