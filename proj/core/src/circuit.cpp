// Copyright 2026 The vortexprop Authors
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

#include "vortexprop/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace vortexprop {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kI: return "I";
    case GateKind::kH: return "H";
    case GateKind::kRx: return "RX";
    case GateKind::kRz: return "RZ";
    case GateKind::kCnot: return "CNOT";
  }
  return "?";
}

void Circuit::push(const Gate& g) {
  for (int k = 0; k < g.arity(); ++k) {
    if (g.qubits[k] < 0 || g.qubits[k] >= n_qubits) {
      throw std::invalid_argument("gate qubit outside the register");
    }
  }
  if (g.kind == GateKind::kCnot && g.qubits[0] == g.qubits[1]) {
    throw std::invalid_argument("CNOT control equals target");
  }
  gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits > n_qubits) throw std::invalid_argument("appended circuit is wider");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::pair<Gate, Gate> basis_change_gate(PauliAxis axis, int qubit) {
  switch (axis) {
    case PauliAxis::kX: return {Gate::hadamard(qubit), Gate::hadamard(qubit)};
    case PauliAxis::kY:
      return {Gate::rx(qubit, std::numbers::pi / 2), Gate::rx(qubit, -std::numbers::pi / 2)};
    case PauliAxis::kZ: break;
  }
  return {Gate::identity(qubit), Gate::identity(qubit)};
}

Circuit compile_pauli_exponential(const PauliTerm& term, double phi, int n_qubits) {
  if (term.factors.empty()) throw std::invalid_argument("cannot compile an empty Pauli term");
  if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  Circuit c{n_qubits, {}};
  c.gates.reserve(pauli_exponential_gate_count(term));
  const auto& f = term.factors;

  for (const auto& factor : f) {
    if (factor.axis != PauliAxis::kZ) c.push(basis_change_gate(factor.axis, factor.site).first);
  }
  for (std::size_t k = 0; k + 1 < f.size(); ++k) c.push(Gate::cnot(f[k].site, f[k + 1].site));
  c.push(Gate::rz(f.back().site, 2.0 * phi * term.coeff));
  for (std::size_t k = f.size() - 1; k > 0; --k) c.push(Gate::cnot(f[k - 1].site, f[k].site));
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (it->axis != PauliAxis::kZ) c.push(basis_change_gate(it->axis, it->site).second);
  }
  return c;
}

std::size_t pauli_exponential_gate_count(const PauliTerm& term) {
  std::size_t rotated = 0;
  for (const auto& f : term.factors) rotated += f.axis != PauliAxis::kZ;
  return 2 * rotated + 2 * (term.factors.size() - 1) + 1;
}

Circuit compile_trotter_step(const Hamiltonian& h, double dt_over_T, int depth) {
  if (!(dt_over_T > 0.0) || !std::isfinite(dt_over_T)) {
    throw std::invalid_argument("dt must be positive");
  }
  if (depth < 1) throw std::invalid_argument("Trotter depth must be >= 1");
  const double phi = kPhasePerPeriod * dt_over_T / depth;
  Circuit step{h.n_sites, {}};
  for (int rep = 0; rep < depth; ++rep) {
    for (const auto& term : h.terms) step.append(compile_pauli_exponential(term, phi, h.n_sites));
  }
  return step;
}

std::string dump_circuit_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates) {
    nlohmann::json entry;
    entry["g"] = std::string(to_string(g.kind));
    entry["q"] = g.arity() == 2 ? nlohmann::json{g.qubits[0], g.qubits[1]}
                                : nlohmann::json{g.qubits[0]};
    if (g.kind == GateKind::kRx || g.kind == GateKind::kRz) entry["lambda"] = g.lambda;
    gates.push_back(std::move(entry));
  }
  return nlohmann::json{{"n", c.n_qubits}, {"gates", gates}}.dump() + "\n";
}

Circuit parse_circuit_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Circuit c{j.at("n").get<int>(), {}};
    for (const auto& e : j.at("gates")) {
      const auto name = e.at("g").get<std::string>();
      const auto& q = e.at("q");
      if (name == "CNOT") {
        c.push(Gate::cnot(q.at(0).get<int>(), q.at(1).get<int>()));
      } else if (name == "H") {
        c.push(Gate::hadamard(q.at(0).get<int>()));
      } else if (name == "I") {
        c.push(Gate::identity(q.at(0).get<int>()));
      } else if (name == "RX") {
        c.push(Gate::rx(q.at(0).get<int>(), e.at("lambda").get<double>()));
      } else if (name == "RZ") {
        c.push(Gate::rz(q.at(0).get<int>(), e.at("lambda").get<double>()));
      } else {
        throw std::invalid_argument("unknown gate: " + name);
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("circuit dump: ") + e.what());
  }
}

}  // namespace vortexprop
