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

#include "vortexprop/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vortexprop {

SampleRecord record_sample(const StateVector& state, const StateVector& initial,
                           const Hamiltonian& h, std::span<const std::uint64_t> tracked,
                           long step, double dt_over_T, const PhysicalConstants& constants) {
  SampleRecord r;
  r.step = step;
  r.time_over_T = static_cast<double>(step) * dt_over_T;
  r.amp_norms.reserve(tracked.size());
  for (auto idx : tracked) {
    if (idx >= state.dimension()) throw std::out_of_range("tracked basis index out of range");
    r.amp_norms.push_back(std::abs(state[idx]));
  }

  const int n = state.n_qubits();
  r.m_x.resize(n);
  r.m_y.resize(n);
  r.m_z.resize(n);
  for (int k = 0; k < n; ++k) {
    r.m_x[k] = state.expect_pauli(PauliTerm::make(1.0, {{k, PauliAxis::kX}}));
    r.m_y[k] = state.expect_pauli(PauliTerm::make(1.0, {{k, PauliAxis::kY}}));
    r.m_z[k] = state.expect_pauli(PauliTerm::make(1.0, {{k, PauliAxis::kZ}}));
    r.magnetization += r.m_z[k];
  }
  r.svinm_physical = r.magnetization * constants.svinm_unit_j_per_t;
  r.energy = state.expect(h);
  r.fidelity0 = fidelity(initial, state);
  return r;
}

PeriodEstimate estimate_period(std::span<const double> fidelity, double spacing_over_T,
                               double threshold, double t_max_over_T) {
  if (fidelity.empty()) throw std::invalid_argument("empty fidelity series");
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("threshold must lie in (0, 1)");
  }
  if (!(spacing_over_T > 0.0)) throw std::invalid_argument("sample spacing must be positive");

  PeriodEstimate est;
  est.threshold = threshold;
  est.t_max_over_T = t_max_over_T;

  const std::size_t n = fidelity.size();
  std::size_t k = 1;
  while (k < n && fidelity[k] >= threshold) ++k;  // leave the initial plateau
  while (k < n && fidelity[k] < threshold) ++k;   // wait for a return
  if (k >= n) {
    est.lower_bound = true;
    est.period_over_T = t_max_over_T;
    est.crossing_over_T = t_max_over_T;
    est.peak_fidelity = *std::max_element(fidelity.begin() + std::min<std::size_t>(1, n - 1),
                                          fidelity.end());
    return est;
  }
  est.crossing_over_T = static_cast<double>(k) * spacing_over_T;
  while (k + 1 < n && fidelity[k + 1] >= fidelity[k]) ++k;
  est.period_over_T = static_cast<double>(k) * spacing_over_T;
  est.peak_fidelity = fidelity[k];
  return est;
}

double check_amplitude_symmetry(std::span<const SampleRecord> samples, double center_over_T) {
  if (samples.size() < 2) throw std::invalid_argument("series too short for a symmetry check");
  const double pitch = samples[1].time_over_T - samples[0].time_over_T;
  if (!(pitch > 0.0)) throw std::invalid_argument("samples must be strictly increasing");
  const double c = center_over_T / pitch;
  const auto center = static_cast<long>(std::llround(c));
  if (std::abs(c - static_cast<double>(center)) > 1e-6 || center < 0) {
    throw std::invalid_argument("symmetry centre is not on the sample grid");
  }
  if (static_cast<std::size_t>(2 * center) >= samples.size()) {
    throw std::invalid_argument("series does not cover [0, 2 * centre]");
  }
  double worst = 0.0;
  for (long tau = 0; tau <= center; ++tau) {
    const auto& lo = samples[center - tau];
    const auto& hi = samples[center + tau];
    if (lo.amp_norms.size() != hi.amp_norms.size()) {
      throw std::invalid_argument("tracked label sets differ between samples");
    }
    for (std::size_t j = 0; j < lo.amp_norms.size(); ++j) {
      worst = std::max(worst, std::abs(lo.amp_norms[j] - hi.amp_norms[j]));
    }
  }
  return worst;
}

std::vector<double> check_class_degeneracy(std::span<const SampleRecord> samples,
                                           const std::vector<std::string>& classes,
                                           const SystemSpec& spec) {
  std::vector<std::vector<int>> members;
  for (const auto& cls : classes) {
    std::vector<int> idx;
    for (char label : cls) idx.push_back(spec.index_of(label));
    members.push_back(std::move(idx));
  }
  std::vector<double> spread(classes.size(), 0.0);
  for (const auto& s : samples) {
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (members[c].empty()) continue;
      double lo = s.m_z.at(members[c][0]), hi = lo;
      for (int i : members[c]) {
        lo = std::min(lo, s.m_z.at(i));
        hi = std::max(hi, s.m_z.at(i));
      }
      spread[c] = std::max(spread[c], hi - lo);
    }
  }
  return spread;
}

double magnetization_peak_time(std::span<const SampleRecord> samples, double t_lo,
                               double t_hi) {
  double best_t = t_lo;
  double best = -1.0;
  for (const auto& s : samples) {
    if (s.time_over_T < t_lo - 1e-12 || s.time_over_T > t_hi + 1e-12) continue;
    if (std::abs(s.magnetization) > best) {
      best = std::abs(s.magnetization);
      best_t = s.time_over_T;
    }
  }
  return best_t;
}

}  // namespace vortexprop
