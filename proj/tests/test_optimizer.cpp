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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"
#include "vqc/errors.hpp"
#include "vqc/optimizer.hpp"
#include "vqc/targets.hpp"

using namespace vqc;
using vqc::testing::random_circuit;
using vqc::testing::random_unitary;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> finite_differences(const CostFunction& cost,
                                       std::span<const double> theta,
                                       double h) {
  std::vector<double> shifted(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  for (std::size_t l = 0; l < theta.size(); ++l) {
    shifted[l] = theta[l] + h;
    const double plus = cost(shifted);
    shifted[l] = theta[l] - h;
    const double minus = cost(shifted);
    shifted[l] = theta[l];
    grad[l] = (plus - minus) / (2.0 * h);
  }
  return grad;
}
}  // namespace

TEST_CASE("gradient is zero at the minimum of a single rz") {
  Circuit structure{1, {{GateKind::RZ, {0}, {0.0}}}};
  const double theta = 0.0;
  const auto grad = shift_gradient(structure, Unitary::Identity(2, 2),
                                   CostKind::GLOBAL, std::span(&theta, 1));
  REQUIRE(grad.size() == 1);
  CHECK(std::abs(grad[0]) < 1e-12);
}

TEST_CASE("gradient of sin^2((theta-theta0)/2) at pi/2 is one half") {
  Circuit structure{1, {{GateKind::RZ, {0}, {0.0}}}};
  const Unitary target =
      gate_matrix(GateKind::RZ, std::vector<double>{0.0});
  const double theta = kPi / 2.0;
  const auto grad = shift_gradient(structure, target, CostKind::GLOBAL,
                                   std::span(&theta, 1));
  CHECK(grad[0] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("gradient arity mismatch is rejected") {
  Circuit structure{1, {{GateKind::RZ, {0}, {0.0}}}};
  const std::vector<double> theta{0.1, 0.2};
  CHECK_THROWS_AS(shift_gradient(structure, Unitary::Identity(2, 2),
                                 CostKind::GLOBAL, theta),
                  ParameterArityError);
}

TEST_CASE("shift gradient uses exactly 2P cost evaluations") {
  int evaluations = 0;
  const CostFunction counted = [&](std::span<const double> t) {
    ++evaluations;
    double s = 0.0;
    for (double x : t) s += std::sin(x / 2) * std::sin(x / 2);
    return s;
  };
  const std::vector<double> theta{0.3, 1.2, -0.7};
  shift_gradient(counted, theta);
  CHECK(evaluations == 6);
}

TEST_CASE("parameter shift matches central finite differences") {
  Rng rng(71);
  const Alphabet alphabet{GateKind::RZ, GateKind::RY, GateKind::CNOT};
  int checked = 0;
  while (checked < 100) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 3));
    const int length = 2 + static_cast<int>(uniform_index(rng, 5));
    Circuit structure = random_circuit(n, length, alphabet, rng);
    if (parameter_count(structure) > 8 || parameter_count(structure) == 0) {
      continue;
    }
    const Unitary target = random_unitary(n, rng);
    const CostEvaluator evaluator(target, CostKind::GLOBAL);
    Circuit scratch = structure;
    const CostFunction cost = [&](std::span<const double> t) {
      scatter_theta(scratch, t);
      return evaluator.evaluate(scratch);
    };
    const std::vector<double> theta = gather_theta(structure);
    const auto shift = shift_gradient(cost, theta);
    const auto fd = finite_differences(cost, theta, 1e-5);
    for (std::size_t l = 0; l < theta.size(); ++l) {
      CHECK(std::abs(shift[l] - fd[l]) < 1e-6);
    }
    ++checked;
  }
}

TEST_CASE("single rz optimizes onto the target angle") {
  Circuit structure{1, {{GateKind::RZ, {0}, {0.0}}}};
  const Unitary target =
      gate_matrix(GateKind::RZ, std::vector<double>{1.234});
  Rng rng(5);
  const auto outcome =
      optimize(structure, target, CostKind::GLOBAL, {}, rng);
  CHECK(outcome.cost < 1e-8);
  const double wrapped =
      std::remainder(outcome.theta[0] - 1.234, 2.0 * kPi);
  CHECK(std::abs(wrapped) < 1e-3);
}

TEST_CASE("parameter-free structures return their fixed cost at once") {
  Circuit structure{2, {{GateKind::CNOT, {0, 1}, {}}}};
  const Unitary target = circuit_unitary(structure);
  Rng rng(6);
  const auto outcome =
      optimize(structure, target, CostKind::GLOBAL, {}, rng);
  CHECK(outcome.cost == 0.0);
  CHECK(outcome.iterations_used == 0);
  CHECK(outcome.theta.empty());
}

TEST_CASE("optimization never reports a cost above the best start") {
  Rng rng(73);
  const Alphabet alphabet{GateKind::RZ, GateKind::RY, GateKind::CNOT};
  for (int trial = 0; trial < 10; ++trial) {
    Circuit structure = random_circuit(2, 4, alphabet, rng);
    const Unitary target = random_unitary(2, rng);
    const CostEvaluator evaluator(target, CostKind::GLOBAL);
    // Zero-init: the single descent must end at or below the zero cost.
    Circuit zeros = structure;
    const double start = evaluator.evaluate(zeros);
    OptimizerSettings settings;
    settings.init = AngleInit::ZEROS;
    settings.restarts = 1;
    const auto outcome = optimize(structure, evaluator, settings, rng);
    CHECK(outcome.cost <= start + 1e-15);
  }
}

TEST_CASE("optimization is deterministic per seed") {
  const Alphabet alphabet{GateKind::RZ, GateKind::RY, GateKind::CNOT};
  Rng structure_rng(74);
  Circuit structure = random_circuit(2, 5, alphabet, structure_rng);
  const Unitary target = random_unitary(2, structure_rng);
  Rng a(99), b(99);
  const auto first = optimize(structure, target, CostKind::GLOBAL, {}, a);
  const auto second = optimize(structure, target, CostKind::GLOBAL, {}, b);
  CHECK(first.cost == second.cost);
  CHECK(first.theta == second.theta);
  CHECK(first.restart_index == second.restart_index);
}

TEST_CASE("reported cost is reproducible from the returned angles") {
  Rng rng(75);
  const Alphabet alphabet{GateKind::RZ, GateKind::RY, GateKind::CNOT};
  Circuit structure = random_circuit(2, 5, alphabet, rng);
  const Unitary target = random_unitary(2, rng);
  const CostEvaluator evaluator(target, CostKind::GLOBAL);
  const auto outcome = optimize(structure, evaluator, {}, rng);
  Circuit at_theta = structure;
  scatter_theta(at_theta, outcome.theta);
  CHECK(std::abs(evaluator.evaluate(at_theta) - outcome.cost) < 1e-12);
}
