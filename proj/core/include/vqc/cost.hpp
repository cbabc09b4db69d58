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

#include "vqc/circuit.hpp"
#include "vqc/unitary.hpp"

namespace vqc {

enum class CostKind { GLOBAL, LOCAL };

// GLOBAL for n <= 3, LOCAL above (the local test avoids the flat landscape
// of the global one at larger widths). Overridable everywhere.
CostKind default_cost_kind(int n);

// Costs live in [0, 1]. Tiny negative values (>= -1e-12) from floating
// point are clamped to zero; anything more negative raises
// InternalConsistencyError.
double clamp_cost(double value);

// Global Hilbert-Schmidt test cost: 1 - |Tr(V^dagger U)|^2 / d^2.
// Zero iff U and V differ only by a global phase.
double hst_cost(const Unitary& u, const Unitary& v);

// Local variant: (1/n) sum_i (1 - p_i), where p_i is the probability that
// the qubit pair (i, i+n) of the doubled-register test circuit reads 00.
// For n = 1 it coincides with hst_cost.
double lhst_cost(const Unitary& u, const Unitary& v);

struct HstProbabilities {
  double all_zeros = 0.0;             // p(all 2n qubits read 0)
  std::vector<double> locals;         // locals[i] = p(qubits i and i+n read 0)
};

/**
 * Simulates the 2n-qubit test circuit: n Hadamards and n CNOTs prepare
 * maximally entangled pairs between registers A (qubits 0..n-1) and B
 * (qubits n..2n-1); U acts on A and V* (entrywise conjugate) on B; the
 * preparation is undone and the register measured. Returns the all-zeros
 * probability (= |Tr(V^dagger U)|^2 / d^2) and the per-pair probabilities
 * behind the local cost.
 *
 * Throws SizeLimitError when 2n exceeds max_sim_qubits.
 */
HstProbabilities hst_probability(const Unitary& u, const Unitary& v,
                                 int max_sim_qubits = 16);

/**
 * Cost evaluator bound to one target, used by the optimizer's inner loop.
 * GLOBAL evaluates the trace formula on the circuit's dense unitary;
 * LOCAL contracts the circuit against the cached (U x I)|Phi+> state and
 * projects each (i, i+n) pair onto the Bell state, which the test suite
 * pins to the literal hst_probability simulation.
 */
class CostEvaluator {
 public:
  CostEvaluator(Unitary target, CostKind kind);

  double evaluate(const Circuit& c) const;

  int qubits() const { return n_; }
  CostKind kind() const { return kind_; }
  const Unitary& target() const { return target_; }

 private:
  Unitary target_;
  CostKind kind_;
  int n_;
  StateVector psi_u_;  // (U x I) |Phi+>, cached for the LOCAL path
};

}  // namespace vqc
