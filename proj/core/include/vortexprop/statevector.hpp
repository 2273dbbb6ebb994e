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

#ifndef VORTEXPROP_STATEVECTOR_HPP_
#define VORTEXPROP_STATEVECTOR_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vortexprop/circuit.hpp"
#include "vortexprop/hamiltonian.hpp"

namespace vortexprop {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 26;

/// Basis labels are written most-significant site first ("...cba"): the last
/// character is site a (bit 0). '0' is spin up, '1' spin down.
std::uint64_t basis_index(std::string_view label);
std::string basis_label(std::uint64_t index, int n_qubits);

/// Dense 2^n amplitude register. Bit k of a basis index is the z state of
/// site k.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);

  /// Takes ownership; the size must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  void normalize();

  void apply_gate(const Gate& gate);
  void apply_circuit(const Circuit& circuit);

  /// exp(-i phi coeff P) = cos(phi coeff) I - i sin(phi coeff) P, applied
  /// without a gate decomposition.
  void apply_pauli_exponential_direct(const PauliTerm& term, double phi);

  /// <psi|P|psi> for the bare Pauli string (coefficient ignored).
  double expect_pauli(const PauliTerm& term) const;

  /// sum_terms coeff <psi|P|psi>.
  double expect(const Hamiltonian& h) const;

  /// <this|other>.
  Amplitude inner(const StateVector& other) const;

 private:
  StateVector(int n_qubits, std::vector<Amplitude> amps);
  void check_qubit(int q) const;

  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Throws std::invalid_argument for characters other than 0/1, empty labels
/// or labels longer than kMaxQubits.
StateVector init_basis_state(std::string_view label);

/// |<a|b>|^2; throws on a register size mismatch.
double fidelity(const StateVector& a, const StateVector& b);

/// Multiplies by the conjugate phase of the largest-magnitude amplitude
/// (lowest index on ties).
void align_global_phase(StateVector& s);

/// max_i |a_i - b_i| after aligning both states' global phases.
double max_amplitude_deviation(const StateVector& a, const StateVector& b);

/// CSV snapshot: label,re,im,abs for every amplitude with |amp| > cutoff.
std::string snapshot_csv(const StateVector& s, double cutoff = 0.0);

}  // namespace vortexprop

#endif  // VORTEXPROP_STATEVECTOR_HPP_
