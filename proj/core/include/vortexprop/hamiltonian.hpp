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

#ifndef VORTEXPROP_HAMILTONIAN_HPP_
#define VORTEXPROP_HAMILTONIAN_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "vortexprop/lattice.hpp"

namespace vortexprop {

enum class PauliAxis : std::uint8_t { kX, kY, kZ };

char to_char(PauliAxis axis);
PauliAxis parse_pauli_axis(char c);

struct PauliFactor {
  int site = 0;
  PauliAxis axis = PauliAxis::kZ;

  friend auto operator<=>(const PauliFactor&, const PauliFactor&) = default;
};

/// coeff * prod_k sigma_{site_k}^{axis_k}. Factors are kept sorted by site.
struct PauliTerm {
  double coeff = 1.0;
  std::vector<PauliFactor> factors;

  /// Sorts the factors and validates: finite coefficient, non-empty support,
  /// no repeated site. Throws std::invalid_argument.
  static PauliTerm make(double coeff, std::vector<PauliFactor> factors);

  int support_size() const { return static_cast<int>(factors.size()); }
  int max_site() const { return factors.empty() ? -1 : factors.back().site; }

  /// e.g. "0.5*X0 Y2".
  std::string str() const;
};

/// Action of a Pauli string on computational basis states:
/// P|b> = phase(b) |b ^ flip>.
struct PauliMask {
  std::uint64_t flip = 0;   // sites carrying X or Y
  std::uint64_t sign = 0;   // sites carrying Y or Z; each set bit of b adds -1
  int y_count = 0;          // global factor i^y_count

  explicit PauliMask(const PauliTerm& term);

  std::complex<double> phase(std::uint64_t basis) const;
};

struct Hamiltonian {
  int n_sites = 0;
  std::vector<PauliTerm> terms;  // order is significant for Trotter stepping
};

/// Energies in units of J; J = 2 t^2 / U.
struct PhysicalConstants {
  double t_hop_ev = 0.13;
  double u_ev = 8 * 0.13;
  double hbar_ev_s = 6.582119569e-16;
  double t_period_fs = 40.5054;        // reported reference value
  double svinm_unit_j_per_t = 3.5662e-3;

  double exchange_ev() const { return 2.0 * t_hop_ev * t_hop_ev / u_ev; }
};

/// One period T corresponds to the dimensionless phase J T / hbar = 2.
inline constexpr double kPhasePerPeriod = 2.0;

/// Coefficients below this magnitude are dropped by the builders.
inline constexpr double kDropTolerance = 1e-15;

/// Per bond (p, q): cos(xi_p)cos(xi_q)sin(theta_p)sin(theta_q) X_p X_q, then
/// sin(xi_p)sin(xi_q)sin(theta_p)sin(theta_q) Y_p Y_q, then
/// cos(theta_p)cos(theta_q) Z_p Z_q. Terms follow the bond order.
Hamiltonian build_vortex_hamiltonian(const SystemSpec& spec);

/// Open chain: X_i X_{i+1} + Y_i Y_{i+1} + delta Z_i Z_{i+1}.
Hamiltonian build_xxz_hamiltonian(int n, double delta);

/// Dispatches on spec.kind.
Hamiltonian build_hamiltonian(const SystemSpec& spec);

/// 2 hbar / J in femtoseconds.
double period_from_constants(const PhysicalConstants& constants = {});

inline constexpr int kMaxDenseQubits = 13;

/// Dense Kronecker assembly; throws std::invalid_argument above
/// kMaxDenseQubits.
Eigen::MatrixXcd matrix_of(const Hamiltonian& h);
Eigen::MatrixXcd matrix_of(const PauliTerm& term, int n_sites);

/// [{"coeff": c, "ops": [[site, "X"], ...]}, ...]
std::string dump_hamiltonian_json(const Hamiltonian& h);

/// n_sites < 0 infers the size from the largest site index.
Hamiltonian parse_hamiltonian_json(std::string_view text, int n_sites = -1);

}  // namespace vortexprop

#endif  // VORTEXPROP_HAMILTONIAN_HPP_
