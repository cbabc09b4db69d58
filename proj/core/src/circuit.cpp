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

#include "vqc/circuit.hpp"

#include <string>

#include "vqc/errors.hpp"

namespace vqc {

void check_placement(const GatePlacement& p, int n) {
  const int arity = gate_arity(p.gate, n);
  if (is_block(p.gate)) {
    if (!p.qubits.empty()) {
      throw QubitIndexError("block gates carry an empty qubit tuple");
    }
    if (n < 1) {
      throw QubitIndexError("block gate on empty register");
    }
  } else {
    if (static_cast<int>(p.qubits.size()) != arity) {
      throw QubitIndexError("gate " + std::string(gate_name(p.gate)) +
                            " expects " + std::to_string(arity) + " qubits");
    }
    for (int q : p.qubits) {
      if (q < 0 || q >= n) {
        throw QubitIndexError("qubit index " + std::to_string(q) +
                              " out of range for width " + std::to_string(n));
      }
    }
    if (arity == 2 && p.qubits[0] == p.qubits[1]) {
      throw QubitIndexError("control equals target");
    }
  }
  const int want = gate_param_count(p.gate, n);
  if (static_cast<int>(p.theta.size()) != want) {
    throw ParameterArityError("gate " + std::string(gate_name(p.gate)) +
                              " expects " + std::to_string(want) + " angles");
  }
}

void check_circuit(const Circuit& c) {
  for (const auto& p : c.gates) check_placement(p, c.n);
}

int parameter_count(const Circuit& c) {
  int total = 0;
  for (const auto& p : c.gates) total += gate_param_count(p.gate, c.n);
  return total;
}

int cnot_count(const Circuit& c) {
  int total = 0;
  for (const auto& p : c.gates) total += gate_cnot_weight(p.gate, c.n);
  return total;
}

std::vector<double> gather_theta(const Circuit& c) {
  std::vector<double> theta;
  theta.reserve(parameter_count(c));
  for (const auto& p : c.gates) {
    theta.insert(theta.end(), p.theta.begin(), p.theta.end());
  }
  return theta;
}

void scatter_theta(Circuit& c, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != parameter_count(c)) {
    throw ParameterArityError("angle vector length " +
                              std::to_string(theta.size()) +
                              " does not match circuit parameter count " +
                              std::to_string(parameter_count(c)));
  }
  std::size_t at = 0;
  for (auto& p : c.gates) {
    for (double& angle : p.theta) angle = theta[at++];
  }
}

void apply_circuit(Eigen::Ref<Eigen::MatrixXcd> m, const Circuit& c,
                   int total_qubits, int qubit_offset, bool conjugated) {
  for (const auto& p : c.gates) {
    switch (p.gate) {
      case GateKind::CNOT:
        apply_cnot(m, p.qubits[0] + qubit_offset, p.qubits[1] + qubit_offset,
                   total_qubits);
        break;
      case GateKind::CNOT_ALL:
      case GateKind::CNOT_EVEN:
      case GateKind::CNOT_ODD:
      case GateKind::CNOT_EVEN_BIDIRECT:
        for (const auto& [ctl, tgt] : block_cnot_pairs(p.gate, c.n)) {
          apply_cnot(m, ctl + qubit_offset, tgt + qubit_offset, total_qubits);
        }
        break;
      case GateKind::RZ_BLOCK:
      case GateKind::RY_BLOCK:
        for (int q = 0; q < c.n; ++q) {
          const GateKind rot =
              p.gate == GateKind::RZ_BLOCK ? GateKind::RZ : GateKind::RY;
          Unitary g = gate_matrix(rot, std::span(&p.theta[q], 1));
          if (conjugated) g = g.conjugate();
          apply_single_qubit(m, g, q + qubit_offset, total_qubits);
        }
        break;
      default: {
        Unitary g = gate_matrix(p.gate, p.theta);
        if (conjugated) g = g.conjugate();
        apply_single_qubit(m, g, p.qubits[0] + qubit_offset, total_qubits);
        break;
      }
    }
  }
}

Unitary circuit_unitary(const Circuit& c) {
  check_circuit(c);
  const Eigen::Index d = Eigen::Index(1) << c.n;
  Unitary m = Unitary::Identity(d, d);
  apply_circuit(m, c, c.n);
  return m;
}

}  // namespace vqc
