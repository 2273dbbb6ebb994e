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

#ifndef VORTEXPROP_OBSERVABLES_HPP_
#define VORTEXPROP_OBSERVABLES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vortexprop/hamiltonian.hpp"
#include "vortexprop/lattice.hpp"
#include "vortexprop/statevector.hpp"

namespace vortexprop {

struct SampleRecord {
  long step = 0;
  double time_over_T = 0.0;
  std::vector<double> amp_norms;  // |amplitude| per tracked basis state
  std::vector<double> m_z;
  std::vector<double> m_x;
  std::vector<double> m_y;
  double magnetization = 0.0;     // sum of m_z
  double svinm_physical = 0.0;    // magnetization * svinm unit (J/T)
  double energy = 0.0;            // units of J
  double fidelity0 = 0.0;         // |<psi(0)|psi(t)>|^2
};

struct PeriodEstimate {
  double period_over_T = 0.0;
  bool lower_bound = false;     // no recurrence before t_max
  double threshold = 0.999;
  double t_max_over_T = 0.0;
  double crossing_over_T = 0.0; // first return above threshold
  double peak_fidelity = 0.0;   // fidelity at period_over_T
};

/// Fills every field of a SampleRecord. `tracked` lists basis indices whose
/// amplitude magnitudes are recorded in order.
SampleRecord record_sample(const StateVector& state, const StateVector& initial,
                           const Hamiltonian& h, std::span<const std::uint64_t> tracked,
                           long step, double dt_over_T,
                           const PhysicalConstants& constants = {});

/// `fidelity[k]` is sampled at t = k * spacing_over_T. Finds the first return
/// to `threshold` after the series has dropped below it, then moves to the
/// local maximum that follows. Without a return, reports a lower bound at
/// t_max. Throws std::invalid_argument on an empty series or a threshold
/// outside (0, 1).
PeriodEstimate estimate_period(std::span<const double> fidelity, double spacing_over_T,
                               double threshold, double t_max_over_T);

/// max over tracked labels and lags tau of |a(center - tau) - a(center + tau)|
/// where a is the recorded amplitude magnitude. Samples must be uniformly
/// spaced and cover [0, 2 * center]; throws std::invalid_argument otherwise.
double check_amplitude_symmetry(std::span<const SampleRecord> samples, double center_over_T);

/// For each class of site labels, the largest spread (max - min) of m_z across
/// the class at any sample. Throws std::invalid_argument for unknown labels.
std::vector<double> check_class_degeneracy(std::span<const SampleRecord> samples,
                                           const std::vector<std::string>& classes,
                                           const SystemSpec& spec);

/// Time of the largest |magnetization| within [t_lo, t_hi].
double magnetization_peak_time(std::span<const SampleRecord> samples, double t_lo,
                               double t_hi);

}  // namespace vortexprop

#endif  // VORTEXPROP_OBSERVABLES_HPP_
