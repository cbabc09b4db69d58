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

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace vqc {

// Dense complex matrices on the computational basis |q_{n-1} ... q_1 q_0>,
// qubit 0 least significant: basis index b has qubit k in bit (b >> k) & 1.
// Equivalently U(n qubits) = kron(U_{q_{n-1}}, ..., U_{q_0}).
using Unitary = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// max_{ij} |(U^dagger U - I)_{ij}|
double unitarity_defect(const Unitary& u);

bool is_unitary(const Unitary& u, double tol = 1e-10);

// Number of qubits for a d x d matrix; throws DimensionError if d is not a
// power of two or the matrix is not square.
int qubit_count(const Unitary& u);

/**
 * Embeds a one- or two-qubit gate into the n-qubit space, acting on the
 * given qubits and as identity elsewhere. For a two-qubit gate, qubits[0]
 * is the gate's local qubit 0 (for CNOT: the control).
 */
Unitary embed(const Unitary& g, std::span<const int> qubits, int n);

// In-place left-multiplication m <- embed(g, qubits, n) * m without forming
// the embedded matrix. m may be a d x k matrix (each column a state).
void apply_gate_matrix(Eigen::Ref<Eigen::MatrixXcd> m, const Unitary& g,
                       std::span<const int> qubits, int n);

// Specialised kernels used by the simulators.
void apply_single_qubit(Eigen::Ref<Eigen::MatrixXcd> m, const Unitary& g2,
                        int qubit, int n);
void apply_cnot(Eigen::Ref<Eigen::MatrixXcd> m, int control, int target,
                int n);

}  // namespace vqc
