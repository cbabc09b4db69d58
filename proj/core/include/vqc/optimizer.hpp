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

#include <functional>
#include <span>
#include <vector>

#include "vqc/circuit.hpp"
#include "vqc/cost.hpp"
#include "vqc/rng.hpp"

namespace vqc {

enum class AngleInit { RANDOM_UNIFORM_0_2PI, ZEROS };

struct OptimizerSettings {
  double step_size = 0.1;    // initial step; adapts by doubling/halving
  int max_iterations = 500;
  double tolerance = 1e-10;  // stop when cost improvement falls below this
  int restarts = 4;
  AngleInit init = AngleInit::RANDOM_UNIFORM_0_2PI;
};

struct OptimizationOutcome {
  std::vector<double> theta;
  double cost = 0.0;        // cost of the structure at theta, recomputed
  int iterations_used = 0;  // gradient iterations of the winning restart
  int restart_index = 0;
};

using CostFunction = std::function<double(std::span<const double>)>;

/**
 * Parameter-shift gradient: component l is
 *   (C(theta + (pi/2) e_l) - C(theta - (pi/2) e_l)) / 2,
 * exact for gates generated by a single Pauli. Costs exactly 2P evaluations
 * of `cost` for P parameters.
 */
std::vector<double> shift_gradient(const CostFunction& cost,
                                   std::span<const double> theta);

std::vector<double> shift_gradient(const Circuit& structure,
                                   const Unitary& target, CostKind kind,
                                   std::span<const double> theta);

/**
 * Gradient descent with step halving on cost increase, restarted from
 * `settings.restarts` independent initial angle vectors. Restarts draw
 * their seeds from `rng` up front, so the outcome is deterministic for a
 * given rng state; ties between restarts resolve to the lower index.
 * A structure with no parameters returns its fixed cost immediately.
 */
OptimizationOutcome optimize(const CostFunction& cost, int parameter_count,
                             const OptimizerSettings& settings, Rng& rng);

OptimizationOutcome optimize(const Circuit& structure, const Unitary& target,
                             CostKind kind, const OptimizerSettings& settings,
                             Rng& rng);

OptimizationOutcome optimize(const Circuit& structure,
                             const CostEvaluator& evaluator,
                             const OptimizerSettings& settings, Rng& rng);

}  // namespace vqc
