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

#ifndef VORTEXPROP_EVOLVE_HPP_
#define VORTEXPROP_EVOLVE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vortexprop/hamiltonian.hpp"
#include "vortexprop/lattice.hpp"
#include "vortexprop/observables.hpp"
#include "vortexprop/statevector.hpp"

namespace vortexprop {

struct RunConfig {
  SystemSpec system = build_system(SystemKind::kMelon);
  double dt_over_T = 1.0 / 300;
  double total_over_T = 4.0;
  int sample_pitch = 20;               // record every k steps
  std::optional<std::string> initial;  // default_initial_label(system) if unset
  std::vector<std::string> tracked;    // extra labels to always record
  int track_top_k = 8;                 // additional largest-norm states
  double threshold = 0.999;
  int trotter_depth = 1;
  std::uint64_t seed = 0;              // randomized tests only
};

struct RunResult {
  std::vector<std::string> tracked_labels;
  std::vector<SampleRecord> samples;
  PeriodEstimate period;
  StateVector final_state{1};
};

inline constexpr long kMaxSteps = 50'000'000;

/// total / dt, which must be a non-negative integer within 1e-9. Throws
/// std::invalid_argument otherwise or above kMaxSteps.
long step_count(const RunConfig& config);

std::string initial_label(const RunConfig& config);

/// Repeated depth-N Trotter circuits, recording every `sample_pitch` steps
/// and always the final step.
RunResult run_trotter(const RunConfig& config);

/// Same sampling as run_trotter with exp(-i H 2t/T) from an eigendecomposition
/// of the Hamiltonian restricted to the basis states reachable from the
/// initial state.
RunResult run_exact(const RunConfig& config);

/// Feeds each single-step output back in as the next input, evaluating the
/// return fidelity after every step up to t_max.
PeriodEstimate semiclassical_period_scan(const RunConfig& config, double t_max_over_T);

/// Eigendecomposition of H on the connected block of basis states reachable
/// from a seed basis state. Exact for any state supported on that block.
class ExactPropagator {
 public:
  ExactPropagator(const Hamiltonian& h, std::uint64_t seed_basis);

  /// exp(-i H 2t/T) |psi0>. psi0 must be supported on the block.
  StateVector evolve(const StateVector& psi0, double t_over_T) const;

  /// Eigenbasis coefficients of psi0, for repeated evolve_projected() calls.
  Eigen::VectorXcd project(const StateVector& psi0) const;
  StateVector evolve_projected(const Eigen::VectorXcd& coeffs, double t_over_T) const;

  std::size_t block_size() const { return block_.size(); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  int n_qubits_;
  std::vector<std::uint64_t> block_;
  Eigen::VectorXd eigenvalues_;
  bool real_ = false;              // real symmetric H: only real_vectors_ is set
  Eigen::MatrixXd real_vectors_;
  Eigen::MatrixXcd complex_vectors_;
};

/// Basis states connected to `seed` through off-diagonal Hamiltonian entries.
std::vector<std::uint64_t> reachable_block(const Hamiltonian& h, std::uint64_t seed);

}  // namespace vortexprop

#endif  // VORTEXPROP_EVOLVE_HPP_
