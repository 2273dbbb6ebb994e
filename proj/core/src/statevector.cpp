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

#include "vortexprop/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace vortexprop {
namespace {

// Inserts a zero at bit position q of i.
inline std::uint64_t insert_zero(std::uint64_t i, int q) {
  const std::uint64_t low = i & ((std::uint64_t{1} << q) - 1);
  return ((i >> q) << (q + 1)) | low;
}

inline std::uint64_t insert_two_zeros(std::uint64_t i, int lo, int hi) {
  return insert_zero(insert_zero(i, lo), hi);
}

}  // namespace

std::uint64_t basis_index(std::string_view label) {
  if (label.empty() || label.size() > static_cast<std::size_t>(kMaxQubits)) {
    throw std::invalid_argument("basis label must have 1..26 characters");
  }
  std::uint64_t idx = 0;
  const auto n = label.size();
  for (std::size_t k = 0; k < n; ++k) {
    const char c = label[n - 1 - k];
    if (c != '0' && c != '1') throw std::invalid_argument("basis label must be 0/1");
    if (c == '1') idx |= std::uint64_t{1} << k;
  }
  return idx;
}

std::string basis_label(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int k = 0; k < n_qubits; ++k) {
    if ((index >> k) & 1U) s[n_qubits - 1 - k] = '1';
  }
  return s;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("register size must be in [1, 26]");
  }
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  const int n = std::countr_zero(amps.size());
  if (n > kMaxQubits) throw std::invalid_argument("register too large");
  return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits_) throw std::out_of_range("qubit index out of range");
}

void StateVector::apply_gate(const Gate& g) {
  const std::uint64_t half = amps_.size() >> 1;
  switch (g.kind) {
    case GateKind::kI:
      check_qubit(g.qubits[0]);
      return;
    case GateKind::kH: {
      const int q = g.qubits[0];
      check_qubit(q);
      const std::uint64_t bit = std::uint64_t{1} << q;
      constexpr double r = std::numbers::sqrt2 / 2;
      for (std::uint64_t i = 0; i < half; ++i) {
        const auto i0 = insert_zero(i, q);
        const auto a0 = amps_[i0];
        const auto a1 = amps_[i0 | bit];
        amps_[i0] = r * (a0 + a1);
        amps_[i0 | bit] = r * (a0 - a1);
      }
      return;
    }
    case GateKind::kRx: {
      const int q = g.qubits[0];
      check_qubit(q);
      const std::uint64_t bit = std::uint64_t{1} << q;
      const double c = std::cos(g.lambda / 2);
      const Amplitude mis{0.0, -std::sin(g.lambda / 2)};
      for (std::uint64_t i = 0; i < half; ++i) {
        const auto i0 = insert_zero(i, q);
        const auto a0 = amps_[i0];
        const auto a1 = amps_[i0 | bit];
        amps_[i0] = c * a0 + mis * a1;
        amps_[i0 | bit] = mis * a0 + c * a1;
      }
      return;
    }
    case GateKind::kRz: {
      const int q = g.qubits[0];
      check_qubit(q);
      const std::uint64_t bit = std::uint64_t{1} << q;
      const Amplitude p0 = std::polar(1.0, -g.lambda / 2);
      const Amplitude p1 = std::polar(1.0, g.lambda / 2);
      for (std::uint64_t i = 0; i < half; ++i) {
        const auto i0 = insert_zero(i, q);
        amps_[i0] *= p0;
        amps_[i0 | bit] *= p1;
      }
      return;
    }
    case GateKind::kCnot: {
      const int c = g.qubits[0];
      const int t = g.qubits[1];
      check_qubit(c);
      check_qubit(t);
      if (c == t) throw std::invalid_argument("CNOT control equals target");
      const std::uint64_t cbit = std::uint64_t{1} << c;
      const std::uint64_t tbit = std::uint64_t{1} << t;
      const std::uint64_t quarter = amps_.size() >> 2;
      const int lo = std::min(c, t), hi = std::max(c, t);
      for (std::uint64_t i = 0; i < quarter; ++i) {
        const auto base = insert_two_zeros(i, lo, hi) | cbit;
        std::swap(amps_[base], amps_[base | tbit]);
      }
      return;
    }
  }
}

void StateVector::apply_circuit(const Circuit& circuit) {
  if (circuit.n_qubits > n_qubits_) throw std::invalid_argument("circuit wider than state");
  for (const auto& g : circuit.gates) apply_gate(g);
}

void StateVector::apply_pauli_exponential_direct(const PauliTerm& term, double phi) {
  if (term.max_site() >= n_qubits_) throw std::out_of_range("term exceeds register");
  const PauliMask mask(term);
  const double angle = phi * term.coeff;
  const double c = std::cos(angle);
  const Amplitude mis{0.0, -std::sin(angle)};
  if (mask.flip == 0) {
    // Diagonal string: P|b> = phase(b)|b>.
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
      amps_[b] *= c + mis * mask.phase(b);
    }
    return;
  }
  // Pairs (b, b ^ flip) mix among themselves; visit each pair once.
  const int pivot = std::countr_zero(mask.flip);
  const std::uint64_t half = amps_.size() >> 1;
  for (std::uint64_t i = 0; i < half; ++i) {
    const auto b0 = insert_zero(i, pivot);
    const auto b1 = b0 ^ mask.flip;
    const auto a0 = amps_[b0];
    const auto a1 = amps_[b1];
    // (P psi)[b1] = phase(b0) psi[b0], (P psi)[b0] = phase(b1) psi[b1].
    amps_[b0] = c * a0 + mis * mask.phase(b1) * a1;
    amps_[b1] = c * a1 + mis * mask.phase(b0) * a0;
  }
}

double StateVector::expect_pauli(const PauliTerm& term) const {
  if (term.max_site() >= n_qubits_) throw std::out_of_range("term exceeds register");
  const PauliMask mask(term);
  Amplitude acc{};
  for (std::uint64_t b = 0; b < amps_.size(); ++b) {
    acc += std::conj(amps_[b ^ mask.flip]) * mask.phase(b) * amps_[b];
  }
  return acc.real();
}

double StateVector::expect(const Hamiltonian& h) const {
  double e = 0.0;
  for (const auto& t : h.terms) e += t.coeff * expect_pauli(t);
  return e;
}

Amplitude StateVector::inner(const StateVector& other) const {
  if (other.amps_.size() != amps_.size()) throw std::invalid_argument("register size mismatch");
  Amplitude acc{};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

StateVector init_basis_state(std::string_view label) {
  const auto idx = basis_index(label);
  StateVector s(static_cast<int>(label.size()));
  auto amps = s.amplitudes();
  amps[0] = 0.0;
  amps[idx] = 1.0;
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(a.inner(b));
}

void align_global_phase(StateVector& s) {
  auto amps = s.amplitudes();
  std::size_t best = 0;
  for (std::size_t i = 1; i < amps.size(); ++i) {
    if (std::abs(amps[i]) > std::abs(amps[best])) best = i;
  }
  const double mag = std::abs(amps[best]);
  if (mag == 0.0) return;
  const Amplitude rot = std::conj(amps[best]) / mag;
  for (auto& a : amps) a *= rot;
}

double max_amplitude_deviation(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("register size mismatch");
  StateVector x = a;
  StateVector y = b;
  // Align both with the phase of a's dominant amplitude so that near-ties in
  // magnitude cannot pick different reference indices.
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.dimension(); ++i) {
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  }
  if (std::abs(x[best]) > 0.0 && std::abs(y[best]) > 0.0) {
    const Amplitude rx = std::conj(x[best]) / std::abs(x[best]);
    const Amplitude ry = std::conj(y[best]) / std::abs(y[best]);
    for (auto& v : x.amplitudes()) v *= rx;
    for (auto& v : y.amplitudes()) v *= ry;
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < x.dimension(); ++i) dev = std::max(dev, std::abs(x[i] - y[i]));
  return dev;
}

std::string snapshot_csv(const StateVector& s, double cutoff) {
  std::string out = "label,re,im,abs\n";
  char buf[160];
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    const double mag = std::abs(s[i]);
    if (mag <= cutoff && cutoff > 0.0) continue;
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g\n",
                  basis_label(i, s.n_qubits()).c_str(), s[i].real(), s[i].imag(), mag);
    out += buf;
  }
  return out;
}

}  // namespace vortexprop
