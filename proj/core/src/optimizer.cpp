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

#include "vqc/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "vqc/errors.hpp"

namespace vqc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kMaxHalvings = 30;

struct RestartOutcome {
  std::vector<double> theta;
  double cost;
  int iterations;
};

// Descent with an adaptive step: a cleanly accepted step doubles it (capped),
// a rejected one halves it and retries on the same gradient. Stops when no
// halving yields an improvement or the improvement falls below tolerance.
RestartOutcome descend(const CostFunction& cost, std::vector<double> theta,
                       const OptimizerSettings& settings) {
  constexpr double kStepCap = 8.0;
  double current = cost(theta);
  double step = settings.step_size;
  int iterations = 0;
  std::vector<double> candidate(theta.size());
  for (int iter = 1; iter <= settings.max_iterations; ++iter) {
    const std::vector<double> grad = shift_gradient(cost, theta);
    bool accepted = false;
    bool halved = false;
    double next = current;
    for (int h = 0; h < kMaxHalvings; ++h) {
      for (std::size_t i = 0; i < theta.size(); ++i) {
        candidate[i] = theta[i] - step * grad[i];
      }
      next = cost(candidate);
      if (next <= current) {
        accepted = true;
        break;
      }
      step *= 0.5;
      halved = true;
    }
    if (!accepted) break;
    const double improvement = current - next;
    theta = candidate;
    current = next;
    iterations = iter;
    if (!halved) step = std::min(step * 2.0, kStepCap);
    if (improvement < settings.tolerance) break;
  }
  return {std::move(theta), current, iterations};
}

}  // namespace

std::vector<double> shift_gradient(const CostFunction& cost,
                                   std::span<const double> theta) {
  std::vector<double> shifted(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  for (std::size_t l = 0; l < theta.size(); ++l) {
    shifted[l] = theta[l] + kHalfPi;
    const double plus = cost(shifted);
    shifted[l] = theta[l] - kHalfPi;
    const double minus = cost(shifted);
    shifted[l] = theta[l];
    grad[l] = 0.5 * (plus - minus);
  }
  return grad;
}

std::vector<double> shift_gradient(const Circuit& structure,
                                   const Unitary& target, CostKind kind,
                                   std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != parameter_count(structure)) {
    throw ParameterArityError("angle vector does not match structure");
  }
  const CostEvaluator evaluator(target, kind);
  Circuit scratch = structure;
  const CostFunction cost = [&](std::span<const double> t) {
    scatter_theta(scratch, t);
    return evaluator.evaluate(scratch);
  };
  return shift_gradient(cost, theta);
}

OptimizationOutcome optimize(const CostFunction& cost, int parameter_count,
                             const OptimizerSettings& settings, Rng& rng) {
  if (parameter_count == 0) {
    return {{}, cost({}), 0, 0};
  }
  // Restart seeds are drawn up front so the outcome depends only on the rng
  // state, not on evaluation order.
  std::vector<std::uint64_t> seeds(settings.restarts);
  for (auto& s : seeds) s = rng();

  OptimizationOutcome best;
  best.cost = std::numeric_limits<double>::infinity();
  for (int r = 0; r < settings.restarts; ++r) {
    Rng restart_rng(seeds[r]);
    std::vector<double> theta(parameter_count, 0.0);
    if (settings.init == AngleInit::RANDOM_UNIFORM_0_2PI) {
      for (double& t : theta) {
        t = uniform_real(restart_rng, 0.0, 2.0 * std::numbers::pi);
      }
    }
    RestartOutcome outcome = descend(cost, std::move(theta), settings);
    if (outcome.cost < best.cost) {
      best.theta = std::move(outcome.theta);
      best.cost = outcome.cost;
      best.iterations_used = outcome.iterations;
      best.restart_index = r;
    }
  }
  return best;
}

OptimizationOutcome optimize(const Circuit& structure,
                             const CostEvaluator& evaluator,
                             const OptimizerSettings& settings, Rng& rng) {
  Circuit scratch = structure;
  const CostFunction cost = [&](std::span<const double> t) {
    scatter_theta(scratch, t);
    return evaluator.evaluate(scratch);
  };
  return optimize(cost, parameter_count(structure), settings, rng);
}

OptimizationOutcome optimize(const Circuit& structure, const Unitary& target,
                             CostKind kind, const OptimizerSettings& settings,
                             Rng& rng) {
  const CostEvaluator evaluator(target, kind);
  return optimize(structure, evaluator, settings, rng);
}

}  // namespace vqc
