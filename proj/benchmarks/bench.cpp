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

#include <benchmark/benchmark.h>

#include <numbers>

#include "vqc/cost.hpp"
#include "vqc/mdp.hpp"
#include "vqc/optimizer.hpp"
#include "vqc/qlearn.hpp"
#include "vqc/targets.hpp"

using namespace vqc;

namespace {

Circuit random_structure(int n, int length, const Alphabet& alphabet,
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

const Alphabet kElementary{GateKind::RZ, GateKind::RY, GateKind::CNOT};
const Alphabet kBlocks{GateKind::RZ_BLOCK,  GateKind::RY_BLOCK,
                       GateKind::CNOT_ALL,  GateKind::CNOT_EVEN,
                       GateKind::CNOT_ODD,  GateKind::CNOT_EVEN_BIDIRECT};

void BM_CircuitUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Circuit c = random_structure(n, 20, kElementary, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circuit_unitary(c));
  }
}
BENCHMARK(BM_CircuitUnitary)->Arg(2)->Arg(3)->Arg(5);

void BM_GlobalCostEvaluation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Unitary target = target_unitary({.name = "qft" + std::to_string(n)});
  const CostEvaluator evaluator(target, CostKind::GLOBAL);
  const Circuit c = random_structure(n, 20, kElementary, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator.evaluate(c));
  }
}
BENCHMARK(BM_GlobalCostEvaluation)->Arg(2)->Arg(3);

void BM_LocalCostEvaluation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const Unitary target =
      target_unitary({.name = "layered" + std::to_string(n)});
  const CostEvaluator evaluator(target, CostKind::LOCAL);
  const Circuit c = random_structure(n, 4, kBlocks, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluator.evaluate(c));
  }
}
BENCHMARK(BM_LocalCostEvaluation)->Arg(4)->Arg(5)->Arg(6);

void BM_HstProbability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const Unitary u = target_unitary({.name = "qft" + std::to_string(n)});
  const Unitary v = circuit_unitary(random_structure(n, 10, kElementary, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hst_probability(u, v));
  }
}
BENCHMARK(BM_HstProbability)->Arg(2)->Arg(3)->Arg(4);

void BM_ShiftGradient(benchmark::State& state) {
  Rng rng(5);
  const Unitary target = target_unitary({.name = "qft3"});
  Circuit structure;
  do {
    structure = random_structure(3, 10, kElementary, rng);
  } while (parameter_count(structure) < 4);
  const CostEvaluator evaluator(target, CostKind::GLOBAL);
  Circuit scratch = structure;
  const CostFunction cost = [&](std::span<const double> t) {
    scatter_theta(scratch, t);
    return evaluator.evaluate(scratch);
  };
  const std::vector<double> theta = gather_theta(structure);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shift_gradient(cost, theta));
  }
}
BENCHMARK(BM_ShiftGradient);

void BM_DoubleQUpdate(benchmark::State& state) {
  const Topology topo = full_topology(2);
  const Alphabet alphabet{GateKind::RX_HALF_PI, GateKind::RZ, GateKind::CNOT};
  Rng rng(6);
  QTablePair tables(0.5);
  const auto actions_of = [&](const AgentState& s) {
    return action_space(s, alphabet, topo, 5);
  };
  ReplayEntry entry;
  AgentState s = AgentState::start();
  for (int l = 0; l < 5; ++l) {
    const auto actions = actions_of(s);
    const ActionId a = actions[uniform_index(rng, actions.size())];
    entry.trajectory.emplace_back(s, a);
    s = transition(s, a);
  }
  entry.terminal_reward = 0.8;
  for (auto _ : state) {
    double_q_update(tables, entry, {.alpha = 0.02, .gamma = 0.9}, actions_of,
                    rng);
  }
}
BENCHMARK(BM_DoubleQUpdate);

}  // namespace

BENCHMARK_MAIN();
