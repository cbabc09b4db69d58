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

#include "vqc/targets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "vqc/errors.hpp"
#include "vqc/rng.hpp"
#include "vqc/serialize.hpp"

namespace vqc {

namespace {

constexpr double kPi = std::numbers::pi;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// "qft3" -> ("qft", 3); names without a trailing integer get width -1.
std::pair<std::string, int> split_trailing_int(const std::string& name) {
  std::size_t pos = name.size();
  while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) {
    --pos;
  }
  if (pos == name.size()) return {name, -1};
  return {name.substr(0, pos), std::stoi(name.substr(pos))};
}

Unitary cs_matrix() {
  Unitary m = Unitary::Identity(4, 4);
  m(3, 3) = Complex(0, 1);
  return m;
}

Unitary cz_matrix() {
  Unitary m = Unitary::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}

// Controlled Hadamard, control qubit 0, target qubit 1.
Unitary ch_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  Unitary m = Unitary::Zero(4, 4);
  m(0, 0) = 1;
  m(2, 2) = 1;
  m(1, 1) = r;
  m(1, 3) = r;
  m(3, 1) = r;
  m(3, 3) = -r;
  return m;
}

// XX(theta) = exp(-i (theta/2) X (x) X)
Unitary xx_matrix(double theta) {
  const Complex c(std::cos(theta / 2.0), 0);
  const Complex s(0, -std::sin(theta / 2.0));
  Unitary m = Unitary::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    m(i, i) = c;
    m(i, 3 - i) = s;
  }
  return m;
}

Unitary qft_matrix(int n) {
  const Eigen::Index d = Eigen::Index(1) << n;
  Unitary m(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const double phase = 2.0 * kPi * static_cast<double>(j * k % d) /
                           static_cast<double>(d);
      m(j, k) = norm * std::exp(Complex(0, phase));
    }
  }
  return m;
}

Unitary ccnot_matrix() {
  Unitary m = Unitary::Zero(8, 8);
  for (Eigen::Index i = 0; i < 8; ++i) {
    const Eigen::Index j = (i & 3) == 3 ? i ^ 4 : i;  // bits 0,1 set: flip 2
    m(j, i) = 1;
  }
  return m;
}

Unitary layered_matrix(int n, std::uint64_t seed) {
  if (n < 2) {
    throw UnknownTargetError("layered target needs at least 2 qubits");
  }
  Rng rng(seed);
  std::vector<double> theta(n), theta_prime(n);
  for (double& a : theta) a = uniform_real(rng, 0.0, 2.0 * kPi);
  for (double& a : theta_prime) a = uniform_real(rng, 0.0, 2.0 * kPi);
  Circuit c{n,
            {{GateKind::RZ_BLOCK, {}, theta},
             {GateKind::CNOT_EVEN, {}, {}},
             {GateKind::CNOT_ODD, {}, {}},
             {GateKind::RZ_BLOCK, {}, theta_prime}}};
  return circuit_unitary(c);
}

}  // namespace

Circuit wsp3_reference_circuit() {
  // Takes |000> to (|001> + |010> + |100>)/sqrt(3):
  //   ry(a) q0 with sin(a/2) = 1/sqrt(3) splits off the |001> amplitude;
  //   ry(pi) q1 + cnot(0,1) leave q1 = NOT q0;
  //   the cnot(1,2) sandwich turns the q1=1 branch into (|010>+|110>)/sqrt(2);
  //   cnot(2,1) maps |110> to |100>.
  const double a = 2.0 * std::asin(1.0 / std::sqrt(3.0));
  return Circuit{3,
                 {{GateKind::RY, {0}, {a}},
                  {GateKind::RY, {1}, {kPi}},
                  {GateKind::CNOT, {0, 1}, {}},
                  {GateKind::RY, {2}, {kPi / 4.0}},
                  {GateKind::CNOT, {1, 2}, {}},
                  {GateKind::RY, {2}, {-kPi / 4.0}},
                  {GateKind::CNOT, {2, 1}, {}}}};
}

Unitary target_unitary(const TargetSpec& spec) {
  if (!spec.file.empty()) {
    return load_unitary(spec.file);  // NotUnitaryError on bad content
  }
  const std::string name = lower(spec.name);
  if (name == "cs") return cs_matrix();
  if (name == "ch") return ch_matrix();
  if (name == "cz") return cz_matrix();
  if (name == "xx3pi2") return xx_matrix(3.0 * kPi / 2.0);
  if (name == "ccnot") return ccnot_matrix();
  if (name == "wsp3") return circuit_unitary(wsp3_reference_circuit());
  const auto [prefix, width] = split_trailing_int(name);
  if (width >= 1) {
    if (prefix == "qft") return qft_matrix(width);
    if (prefix == "identity") {
      const Eigen::Index d = Eigen::Index(1) << width;
      return Unitary::Identity(d, d);
    }
    if (prefix == "layered") return layered_matrix(width, spec.layered_seed);
  }
  throw UnknownTargetError("unknown target: " + spec.name);
}

std::optional<int> target_qubits(const TargetSpec& spec) {
  if (!spec.file.empty()) return std::nullopt;
  const std::string name = lower(spec.name);
  if (name == "cs" || name == "ch" || name == "cz" || name == "xx3pi2") {
    return 2;
  }
  if (name == "ccnot" || name == "wsp3") return 3;
  const auto [prefix, width] = split_trailing_int(name);
  if (width >= 1 &&
      (prefix == "qft" || prefix == "identity" || prefix == "layered")) {
    return width;
  }
  throw UnknownTargetError("unknown target: " + spec.name);
}

}  // namespace vqc
