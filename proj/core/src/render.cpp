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

#include "vqc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "vqc/errors.hpp"

namespace vqc {

namespace {

std::string angle_str(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", theta);
  return buf;
}

// Cell text for gate g on wire q; empty string means plain wire.
std::vector<std::string> column_cells(const GatePlacement& p, int n) {
  std::vector<std::string> cells(n);
  if (p.gate == GateKind::CNOT) {
    const int c = p.qubits[0];
    const int t = p.qubits[1];
    cells[c] = "*";
    cells[t] = "+";
    for (int q = std::min(c, t) + 1; q < std::max(c, t); ++q) cells[q] = "|";
  } else if (is_block(p.gate)) {
    for (int q = 0; q < n; ++q) {
      cells[q] = "[" + std::string(gate_name(p.gate)) + "]";
    }
  } else {
    std::string label = "[" + std::string(gate_name(p.gate));
    if (!p.theta.empty()) label += " " + angle_str(p.theta[0]);
    label += "]";
    cells[p.qubits[0]] = label;
  }
  return cells;
}

}  // namespace

std::string render_circuit(const Circuit& c) {
  check_circuit(c);
  std::vector<std::vector<std::string>> columns;
  std::size_t cell = 1;
  for (const auto& p : c.gates) {
    columns.push_back(column_cells(p, c.n));
    for (const auto& text : columns.back()) {
      cell = std::max(cell, text.size());
    }
  }
  std::ostringstream out;
  out << "vqc circuit n=" << c.n << " gates=" << c.gates.size()
      << " cell=" << cell << "\n";
  const int label_width =
      static_cast<int>(std::to_string(c.n - 1).size());
  for (int q = 0; q < c.n; ++q) {
    std::string label = "q" + std::to_string(q);
    label.resize(1 + label_width, ' ');
    out << label << ": ";
    for (const auto& col : columns) {
      std::string text = col[q];
      text.resize(cell, '-');
      out << text << '-';
    }
    out << "\n";
  }
  return out.str();
}

Circuit parse_rendered(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw Error("empty diagram");
  int n = 0;
  int gates = 0;
  std::size_t cell = 0;
  if (std::sscanf(header.c_str(), "vqc circuit n=%d gates=%d cell=%zu", &n,
                  &gates, &cell) != 3) {
    throw Error("malformed diagram header");
  }
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(line);
  }
  if (static_cast<int>(rows.size()) != n) {
    throw Error("diagram wire count does not match header");
  }
  std::vector<std::string> wires(n);
  for (int q = 0; q < n; ++q) {
    const auto pos = rows[q].find(": ");
    if (pos == std::string::npos) throw Error("malformed wire line");
    wires[q] = rows[q].substr(pos + 2);
  }

  Circuit c;
  c.n = n;
  for (int g = 0; g < gates; ++g) {
    const std::size_t at = g * (cell + 1);
    GatePlacement p;
    int control = -1;
    int target = -1;
    std::string block_name;
    std::string label;
    int label_wire = -1;
    for (int q = 0; q < n; ++q) {
      if (at + cell > wires[q].size()) throw Error("truncated wire line");
      std::string chunk = wires[q].substr(at, cell);
      while (!chunk.empty() && chunk.back() == '-') chunk.pop_back();
      if (chunk.empty() || chunk == "|") continue;
      if (chunk == "*") {
        control = q;
      } else if (chunk == "+") {
        target = q;
      } else if (chunk.front() == '[' && chunk.back() == ']') {
        const std::string inner = chunk.substr(1, chunk.size() - 2);
        const auto space = inner.find(' ');
        const std::string name =
            space == std::string::npos ? inner : inner.substr(0, space);
        if (is_block(gate_from_name(name))) {
          block_name = name;
        } else {
          label = inner;
          label_wire = q;
        }
      } else {
        throw Error("unrecognised cell: " + chunk);
      }
    }
    if (control >= 0 && target >= 0) {
      p.gate = GateKind::CNOT;
      p.qubits = {control, target};
    } else if (!block_name.empty()) {
      p.gate = gate_from_name(block_name);
      p.theta.assign(gate_param_count(p.gate, n), 0.0);
    } else if (label_wire >= 0) {
      const auto space = label.find(' ');
      const std::string name =
          space == std::string::npos ? label : label.substr(0, space);
      p.gate = gate_from_name(name);
      p.qubits = {label_wire};
      if (space != std::string::npos) {
        p.theta = {std::stod(label.substr(space + 1))};
      }
    } else {
      throw Error("empty column in diagram");
    }
    c.gates.push_back(std::move(p));
  }
  check_circuit(c);
  return c;
}

}  // namespace vqc
