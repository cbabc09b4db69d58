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

#include <string>

#include "vqc/circuit.hpp"

namespace vqc {

// Deterministic ASCII wire diagram, one column per placement. Controls are
// '*', targets '+', block gates a labelled box spanning all wires. Angles
// are printed rounded; the diagram's structure (gate kinds and qubits) is
// recoverable by parse_rendered.
std::string render_circuit(const Circuit& c);

// Inverse of render_circuit on structural fields: gate kinds, qubits and
// width round-trip; angles are restored only to printed precision.
Circuit parse_rendered(const std::string& text);

}  // namespace vqc
