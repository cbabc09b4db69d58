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

#include <numbers>
#include <vector>

#include "vqc/circuit.hpp"
#include "vqc/mdp.hpp"
#include "vqc/rng.hpp"
#include "vqc/topology.hpp"
#include "vqc/unitary.hpp"

namespace vqc::testing {

// Haar-ish random unitary: QR of a complex Ginibre matrix with the phase
// convention fixed by the R diagonal.
inline Unitary random_unitary(int n, Rng& rng) {
  const Eigen::Index d = Eigen::Index(1) << n;
  std::normal_distribution<double> gauss(0.0, 1.0);
  Unitary g(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Unitary> qr(g);
  Unitary q = qr.householderQ();
  const Unitary r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

// Random structure over the alphabet (full connectivity) with angles drawn
// uniformly from [0, 2pi).
inline Circuit random_circuit(int n, int length, const Alphabet& alphabet,
                              Rng& rng) {
  const Topology topo = full_topology(n);
  const auto actions =
      action_space(AgentState::start(), alphabet, topo, length + 1);
  Circuit c;
  c.n = n;
  for (int i = 0; i < length; ++i) {
    const auto& a = actions[uniform_index(rng, actions.size())];
    GatePlacement p = action_placement(a, n);
    for (double& t : p.theta) {
      t = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
    }
    c.gates.push_back(std::move(p));
  }
  return c;
}

// Plain Kronecker product; the left factor holds the higher-order bits.
inline Unitary kron(const Unitary& a, const Unitary& b) {
  Unitary out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

// Independent tensor-product embedding: kron over all wire slots, with
// qubit 0 the least significant factor. Only for one-qubit gates; used as
// an oracle against the in-place kernels.
inline Unitary kron_embed_single(const Unitary& g, int qubit, int n) {
  Unitary out = Unitary::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    out = kron(out, q == qubit ? g : Unitary::Identity(2, 2));
  }
  return out;
}

inline double max_abs_diff(const Unitary& a, const Unitary& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace vqc::testing
