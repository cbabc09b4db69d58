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

#include "vqc/unitary.hpp"

#include <string>

#include "vqc/errors.hpp"

namespace vqc {

double unitarity_defect(const Unitary& u) {
  if (u.rows() != u.cols()) {
    throw DimensionError("matrix is not square");
  }
  Unitary defect = u.adjoint() * u;
  defect.diagonal().array() -= 1.0;
  return defect.cwiseAbs().maxCoeff();
}

bool is_unitary(const Unitary& u, double tol) {
  return unitarity_defect(u) < tol;
}

int qubit_count(const Unitary& u) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw DimensionError("matrix is not square");
  }
  const auto d = u.rows();
  if ((d & (d - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(d) +
                         " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  return n;
}

namespace {

void check_qubits(std::span<const int> qubits, int n) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= n) {
      throw QubitIndexError("qubit index " + std::to_string(qubits[i]) +
                            " out of range for width " + std::to_string(n));
    }
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw QubitIndexError("repeated qubit index " +
                              std::to_string(qubits[i]));
      }
    }
  }
}

void apply_two_qubit(Eigen::Ref<Eigen::MatrixXcd> m, const Unitary& g4,
                     int q0, int q1, int n) {
  const Eigen::Index d = Eigen::Index(1) << n;
  const Eigen::Index m0 = Eigen::Index(1) << q0;
  const Eigen::Index m1 = Eigen::Index(1) << q1;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index base = 0; base < d; ++base) {
      if ((base & m0) != 0 || (base & m1) != 0) continue;
      const Eigen::Index idx[4] = {base, base | m0, base | m1, base | m0 | m1};
      Complex a[4];
      for (int k = 0; k < 4; ++k) a[k] = m(idx[k], col);
      for (int r = 0; r < 4; ++r) {
        m(idx[r], col) =
            g4(r, 0) * a[0] + g4(r, 1) * a[1] + g4(r, 2) * a[2] + g4(r, 3) * a[3];
      }
    }
  }
}

}  // namespace

void apply_single_qubit(Eigen::Ref<Eigen::MatrixXcd> m, const Unitary& g2,
                        int qubit, int n) {
  const Eigen::Index half = Eigen::Index(1) << (n - 1);
  const Eigen::Index mask = Eigen::Index(1) << qubit;
  const Eigen::Index lo = mask - 1;
  const Eigen::Index hi = ~lo;
  const Complex g00 = g2(0, 0), g01 = g2(0, 1);
  const Complex g10 = g2(1, 0), g11 = g2(1, 1);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index i = 0; i < half; ++i) {
      const Eigen::Index i0 = ((i & hi) << 1) | (i & lo);
      const Eigen::Index i1 = i0 | mask;
      const Complex a0 = m(i0, col);
      const Complex a1 = m(i1, col);
      m(i0, col) = g00 * a0 + g01 * a1;
      m(i1, col) = g10 * a0 + g11 * a1;
    }
  }
}

void apply_cnot(Eigen::Ref<Eigen::MatrixXcd> m, int control, int target,
                int n) {
  const Eigen::Index d = Eigen::Index(1) << n;
  const Eigen::Index cm = Eigen::Index(1) << control;
  const Eigen::Index tm = Eigen::Index(1) << target;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index idx = 0; idx < d; ++idx) {
      if ((idx & cm) != 0 && (idx & tm) == 0) {
        std::swap(m(idx, col), m(idx | tm, col));
      }
    }
  }
}

void apply_gate_matrix(Eigen::Ref<Eigen::MatrixXcd> m, const Unitary& g,
                       std::span<const int> qubits, int n) {
  check_qubits(qubits, n);
  if (g.rows() == 2 && qubits.size() == 1) {
    apply_single_qubit(m, g, qubits[0], n);
  } else if (g.rows() == 4 && qubits.size() == 2) {
    apply_two_qubit(m, g, qubits[0], qubits[1], n);
  } else {
    throw DimensionError("gate dimension does not match qubit tuple");
  }
}

Unitary embed(const Unitary& g, std::span<const int> qubits, int n) {
  if (g.rows() != g.cols() || (g.rows() != 2 && g.rows() != 4)) {
    throw DimensionError("embed expects a 2x2 or 4x4 gate");
  }
  const Eigen::Index d = Eigen::Index(1) << n;
  Unitary m = Unitary::Identity(d, d);
  apply_gate_matrix(m, g, qubits, n);
  return m;
}

}  // namespace vqc
