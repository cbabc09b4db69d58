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

#include "vqc/topology.hpp"

using namespace vqc;

TEST_CASE("full topology has n(n-1) ordered pairs") {
  CHECK(full_topology(2).allowed_pairs.size() == 2);
  CHECK(full_topology(3).allowed_pairs.size() == 6);
  CHECK(full_topology(5).allowed_pairs.size() == 20);
}

TEST_CASE("ibmq_ourense on three qubits is the 0-1-2 line") {
  const Topology t = ibmq_ourense_topology(3);
  CHECK(t.allowed_pairs.size() == 4);
  CHECK(t.allows(0, 1));
  CHECK(t.allows(1, 0));
  CHECK(t.allows(1, 2));
  CHECK(t.allows(2, 1));
  CHECK_FALSE(t.allows(0, 2));
  CHECK_FALSE(t.allows(2, 0));
}

TEST_CASE("cnot(0,2) violates the ourense line, cnot(1,0) does not") {
  const Topology t = ibmq_ourense_topology(3);
  Circuit bad{3, {{GateKind::CNOT, {0, 2}, {}}}};
  const auto violations = validate_circuit(bad, t);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].gate_index == 0);
  CHECK(violations[0].control == 0);
  CHECK(violations[0].target == 2);

  Circuit ok{3, {{GateKind::CNOT, {1, 0}, {}}}};
  CHECK(validate_circuit(ok, t).empty());
}

TEST_CASE("single-qubit circuits satisfy every topology") {
  Topology empty;
  empty.n = 3;  // no allowed pairs at all
  Circuit c{3,
            {{GateKind::RZ, {0}, {0.3}},
             {GateKind::RY, {2}, {0.5}},
             {GateKind::RX_HALF_PI, {1}, {}}}};
  CHECK(validate_circuit(c, empty).empty());
}

TEST_CASE("blocks are validated through their constituent cnots") {
  const Topology line = ibmq_ourense_topology(3);
  Circuit all{3, {{GateKind::CNOT_ALL, {}, {}}}};   // (0,1), (1,2)
  CHECK(validate_circuit(all, line).empty());
  Circuit all4{4, {{GateKind::CNOT_ALL, {}, {}}}};  // (0,1), (1,2), (2,3)
  const Topology line4 = ibmq_ourense_topology(4);  // edges 0-1, 1-2, 1-3
  CHECK(validate_circuit(all4, line4).size() == 1);  // 2-3 missing
  Circuit odd4{4, {{GateKind::CNOT_ODD, {}, {}}}};   // just (1,2)
  CHECK(validate_circuit(odd4, line4).empty());
}
