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

#include "vqc/gate.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "vqc/errors.hpp"

namespace vqc {

namespace {

constexpr double kPi = std::numbers::pi;

Unitary rx_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Unitary m(2, 2);
  m << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
  return m;
}

Unitary rz_matrix(double theta) {
  Unitary m = Unitary::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0, -theta / 2.0));
  m(1, 1) = std::exp(Complex(0, theta / 2.0));
  return m;
}

Unitary ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Unitary m(2, 2);
  m << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
  return m;
}

// Local basis |q1 q0> with local qubit 0 the control.
Unitary cnot_matrix() {
  Unitary m = Unitary::Zero(4, 4);
  m(0, 0) = 1;
  m(3, 1) = 1;
  m(2, 2) = 1;
  m(1, 3) = 1;
  return m;
}

}  // namespace

bool is_block(GateKind kind) {
  switch (kind) {
    case GateKind::RZ_BLOCK:
    case GateKind::RY_BLOCK:
    case GateKind::CNOT_ALL:
    case GateKind::CNOT_EVEN:
    case GateKind::CNOT_ODD:
    case GateKind::CNOT_EVEN_BIDIRECT:
      return true;
    default:
      return false;
  }
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CNOT; }

int gate_arity(GateKind kind, int n) {
  switch (kind) {
    case GateKind::RX_HALF_PI:
    case GateKind::RZ:
    case GateKind::RY:
      return 1;
    case GateKind::CNOT:
      return 2;
    default:
      return n;
  }
}

int gate_param_count(GateKind kind, int n) {
  switch (kind) {
    case GateKind::RZ:
    case GateKind::RY:
      return 1;
    case GateKind::RZ_BLOCK:
    case GateKind::RY_BLOCK:
      return n;
    default:
      return 0;
  }
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX_HALF_PI: return "rx_half_pi";
    case GateKind::RZ: return "rz";
    case GateKind::RY: return "ry";
    case GateKind::CNOT: return "cnot";
    case GateKind::RZ_BLOCK: return "rz_block";
    case GateKind::RY_BLOCK: return "ry_block";
    case GateKind::CNOT_ALL: return "cnot_all";
    case GateKind::CNOT_EVEN: return "cnot_even";
    case GateKind::CNOT_ODD: return "cnot_odd";
    case GateKind::CNOT_EVEN_BIDIRECT: return "cnot_even_bidirect";
  }
  throw UnknownGateError("invalid gate kind");
}

GateKind gate_from_name(std::string_view name) {
  static const std::pair<std::string_view, GateKind> table[] = {
      {"rx_half_pi", GateKind::RX_HALF_PI},
      {"rz", GateKind::RZ},
      {"ry", GateKind::RY},
      {"cnot", GateKind::CNOT},
      {"rz_block", GateKind::RZ_BLOCK},
      {"ry_block", GateKind::RY_BLOCK},
      {"cnot_all", GateKind::CNOT_ALL},
      {"cnot_even", GateKind::CNOT_EVEN},
      {"cnot_odd", GateKind::CNOT_ODD},
      {"cnot_even_bidirect", GateKind::CNOT_EVEN_BIDIRECT},
  };
  for (const auto& [key, kind] : table) {
    if (key == name) return kind;
  }
  throw UnknownGateError("unknown gate name: " + std::string(name));
}

std::vector<std::pair<int, int>> block_cnot_pairs(GateKind kind, int n) {
  std::vector<std::pair<int, int>> pairs;
  switch (kind) {
    case GateKind::CNOT_ALL:
      for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      break;
    case GateKind::CNOT_EVEN:
      for (int i = 0; 2 * i + 1 < n; ++i)
        pairs.emplace_back(2 * i, 2 * i + 1);
      break;
    case GateKind::CNOT_ODD:
      for (int i = 0; 2 * i + 2 < n; ++i)
        pairs.emplace_back(2 * i + 1, 2 * i + 2);
      break;
    case GateKind::CNOT_EVEN_BIDIRECT:
      // Pairs alternate direction: (0,1), (3,2), (4,5), (7,6), ...
      for (int i = 0; 2 * i + 1 < n; ++i) {
        if (i % 2 == 0) {
          pairs.emplace_back(2 * i, 2 * i + 1);
        } else {
          pairs.emplace_back(2 * i + 1, 2 * i);
        }
      }
      break;
    default:
      break;
  }
  return pairs;
}

int gate_cnot_weight(GateKind kind, int n) {
  if (kind == GateKind::CNOT) return 1;
  return static_cast<int>(block_cnot_pairs(kind, n).size());
}

Unitary gate_matrix(GateKind kind, std::span<const double> theta, int n) {
  const int want = gate_param_count(kind, is_block(kind) ? n : 0);
  if (static_cast<int>(theta.size()) != want) {
    throw ParameterArityError("gate " + std::string(gate_name(kind)) +
                              " expects " + std::to_string(want) +
                              " angles, got " + std::to_string(theta.size()));
  }
  switch (kind) {
    case GateKind::RX_HALF_PI:
      return rx_matrix(kPi / 2.0);
    case GateKind::RZ:
      return rz_matrix(theta[0]);
    case GateKind::RY:
      return ry_matrix(theta[0]);
    case GateKind::CNOT:
      return cnot_matrix();
    default:
      break;
  }
  if (n < 1) {
    throw ParameterArityError("block gate requires a positive width");
  }
  const Eigen::Index d = Eigen::Index(1) << n;
  Unitary m = Unitary::Identity(d, d);
  if (kind == GateKind::RZ_BLOCK || kind == GateKind::RY_BLOCK) {
    for (int q = 0; q < n; ++q) {
      const Unitary g = kind == GateKind::RZ_BLOCK ? rz_matrix(theta[q])
                                                   : ry_matrix(theta[q]);
      apply_single_qubit(m, g, q, n);
    }
  } else {
    for (const auto& [c, t] : block_cnot_pairs(kind, n)) {
      apply_cnot(m, c, t, n);
    }
  }
  return m;
}

}  // namespace vqc
