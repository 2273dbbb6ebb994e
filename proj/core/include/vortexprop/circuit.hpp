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

#ifndef VORTEXPROP_CIRCUIT_HPP_
#define VORTEXPROP_CIRCUIT_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vortexprop/hamiltonian.hpp"

namespace vortexprop {

enum class GateKind { kI, kH, kRx, kRz, kCnot };

std::string_view to_string(GateKind kind);

/// RX(l) = exp(-i l X / 2), RZ(l) = diag(e^{-il/2}, e^{+il/2}).
/// CNOT stores {control, target}.
struct Gate {
  GateKind kind = GateKind::kI;
  std::array<int, 2> qubits{0, -1};
  double lambda = 0.0;

  int arity() const { return kind == GateKind::kCnot ? 2 : 1; }

  static Gate identity(int q) { return {GateKind::kI, {q, -1}, 0.0}; }
  static Gate hadamard(int q) { return {GateKind::kH, {q, -1}, 0.0}; }
  static Gate rx(int q, double l) { return {GateKind::kRx, {q, -1}, l}; }
  static Gate rz(int q, double l) { return {GateKind::kRz, {q, -1}, l}; }
  static Gate cnot(int control, int target) { return {GateKind::kCnot, {control, target}, 0.0}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  /// Throws std::invalid_argument on a qubit index outside the register or
  /// a CNOT with control == target.
  void push(const Gate& g);
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }
};

/// (G, G^dagger) rotating `axis` onto Z: X -> (H, H), Y -> (RX(pi/2),
/// RX(-pi/2)), Z -> (I, I).
std::pair<Gate, Gate> basis_change_gate(PauliAxis axis, int qubit);

/// exp(-i phi coeff P) as basis changes, a CNOT ladder over the support in
/// ascending order, RZ(2 phi coeff) on the last support qubit and the mirror
/// image. Identity basis changes (Z factors) are not emitted.
Circuit compile_pauli_exponential(const PauliTerm& term, double phi, int n_qubits);

/// Gates emitted by compile_pauli_exponential for `term`:
/// 2 * (non-Z factors) + 2 * (support - 1) + 1.
std::size_t pauli_exponential_gate_count(const PauliTerm& term);

/// One first-order Trotter step of length dt (in units of T). With depth N
/// the ordered product over terms is repeated N times with dt / N each.
Circuit compile_trotter_step(const Hamiltonian& h, double dt_over_T, int depth = 1);

/// {"n": int, "gates": [{"g": "H"|"RX"|"RZ"|"CNOT"|"I", "q": [...], "lambda": x}]}
std::string dump_circuit_json(const Circuit& c);
Circuit parse_circuit_json(std::string_view text);

}  // namespace vortexprop

#endif  // VORTEXPROP_CIRCUIT_HPP_
