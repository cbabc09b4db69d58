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

#include "vqc/cost.hpp"

#include <cmath>
#include <string>

#include "vqc/errors.hpp"
#include "vqc/gate.hpp"

namespace vqc {

namespace {

void check_same_dim(const Unitary& u, const Unitary& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DimensionError("operands have different dimensions");
  }
}

Unitary hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Unitary h(2, 2);
  h << r, r, r, -r;
  return h;
}

// (U x I) |Phi+>, the doubled-register state after preparation and U on
// register A. Stored as a 4^n vector, A in the low n qubits.
StateVector entangled_with_target(const Unitary& u) {
  const int n = qubit_count(u);
  const Eigen::Index d = Eigen::Index(1) << n;
  StateVector psi = StateVector::Zero(d * d);
  // <ab|(U x I)|Phi+> = U(a,b)/sqrt(d)
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index b = 0; b < d; ++b) {
    for (Eigen::Index a = 0; a < d; ++a) {
      psi(b * d + a) = u(a, b) * norm;
    }
  }
  return psi;
}

// Per-pair Bell projections: p_i = || (<Phi+|_{i,i+n} x I) psi ||^2.
std::vector<double> bell_pair_probabilities(const StateVector& psi, int n) {
  const Eigen::Index size = psi.size();
  std::vector<double> locals(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const Eigen::Index ma = Eigen::Index(1) << i;
    const Eigen::Index mb = Eigen::Index(1) << (i + n);
    double p = 0.0;
    for (Eigen::Index idx = 0; idx < size; ++idx) {
      if ((idx & ma) != 0 || (idx & mb) != 0) continue;
      const Complex amp = psi(idx) + psi(idx | ma | mb);
      p += 0.5 * std::norm(amp);
    }
    locals[i] = p;
  }
  return locals;
}

}  // namespace

CostKind default_cost_kind(int n) {
  return n <= 3 ? CostKind::GLOBAL : CostKind::LOCAL;
}

double clamp_cost(double value) {
  if (value < 0.0) {
    if (value < -1e-12) {
      throw InternalConsistencyError("cost " + std::to_string(value) +
                                     " below the floating-point floor");
    }
    return 0.0;
  }
  return value > 1.0 ? 1.0 : value;
}

double hst_cost(const Unitary& u, const Unitary& v) {
  check_same_dim(u, v);
  const double d = static_cast<double>(u.rows());
  const Complex tr = (v.conjugate().cwiseProduct(u)).sum();  // Tr(V^dag U)
  return clamp_cost(1.0 - std::norm(tr) / (d * d));
}

double lhst_cost(const Unitary& u, const Unitary& v) {
  check_same_dim(u, v);
  const auto probs = hst_probability(u, v);
  double mean = 0.0;
  for (double p : probs.locals) mean += p;
  mean /= static_cast<double>(probs.locals.size());
  return clamp_cost(1.0 - mean);
}

HstProbabilities hst_probability(const Unitary& u, const Unitary& v,
                                 int max_sim_qubits) {
  check_same_dim(u, v);
  const int n = qubit_count(u);
  if (2 * n > max_sim_qubits) {
    throw SizeLimitError("simulation needs " + std::to_string(2 * n) +
                         " qubits, cap is " + std::to_string(max_sim_qubits));
  }
  const Eigen::Index d = Eigen::Index(1) << n;
  const int total = 2 * n;
  StateVector state = StateVector::Zero(d * d);
  state(0) = 1.0;

  const Unitary h = hadamard();
  for (int i = 0; i < n; ++i) apply_single_qubit(state, h, i, total);
  for (int i = 0; i < n; ++i) apply_cnot(state, i, i + n, total);

  // U on register A (low qubits), V* on register B.
  Eigen::Map<Eigen::MatrixXcd> m(state.data(), d, d);
  m = u * m;
  m = m * v.adjoint();  // right-multiplying by conj(V)^T applies V* to B

  for (int i = 0; i < n; ++i) apply_cnot(state, i, i + n, total);
  for (int i = 0; i < n; ++i) apply_single_qubit(state, h, i, total);

  HstProbabilities out;
  out.all_zeros = std::norm(state(0));
  out.locals.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const Eigen::Index ma = Eigen::Index(1) << i;
    const Eigen::Index mb = Eigen::Index(1) << (i + n);
    double p = 0.0;
    for (Eigen::Index idx = 0; idx < d * d; ++idx) {
      if ((idx & ma) == 0 && (idx & mb) == 0) p += std::norm(state(idx));
    }
    out.locals[i] = p;
  }
  return out;
}

CostEvaluator::CostEvaluator(Unitary target, CostKind kind)
    : target_(std::move(target)), kind_(kind), n_(qubit_count(target_)) {
  if (kind_ == CostKind::LOCAL) {
    psi_u_ = entangled_with_target(target_);
  }
}

double CostEvaluator::evaluate(const Circuit& c) const {
  if (c.n != n_) {
    throw DimensionError("circuit width does not match target");
  }
  if (kind_ == CostKind::GLOBAL) {
    const Eigen::Index d = Eigen::Index(1) << n_;
    Unitary v = Unitary::Identity(d, d);
    apply_circuit(v, c, n_);
    const Complex tr = (v.conjugate().cwiseProduct(target_)).sum();
    return clamp_cost(1.0 - std::norm(tr) / static_cast<double>(d * d));
  }
  StateVector psi = psi_u_;
  apply_circuit(psi, c, 2 * n_, /*qubit_offset=*/n_, /*conjugated=*/true);
  const auto locals = bell_pair_probabilities(psi, n_);
  double mean = 0.0;
  for (double p : locals) mean += p;
  mean /= static_cast<double>(n_);
  return clamp_cost(1.0 - mean);
}

}  // namespace vqc
