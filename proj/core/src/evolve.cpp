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

#include "vortexprop/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "vortexprop/circuit.hpp"

namespace vortexprop {
namespace {

// Above this many stored doubles the top-k discovery replays the run instead
// of keeping every sampled amplitude vector.
constexpr std::size_t kSnapshotBudget = std::size_t{1} << 24;

using Advance = std::function<void(long step, StateVector& state)>;

void validate(const RunConfig& c) {
  if (!(c.dt_over_T > 0.0) || !std::isfinite(c.dt_over_T)) {
    throw std::invalid_argument("dt must be positive");
  }
  if (!(c.total_over_T >= 0.0) || !std::isfinite(c.total_over_T)) {
    throw std::invalid_argument("total time must be non-negative");
  }
  if (c.sample_pitch < 1) throw std::invalid_argument("sample pitch must be >= 1");
  if (c.trotter_depth < 1) throw std::invalid_argument("Trotter depth must be >= 1");
  if (c.track_top_k < 0) throw std::invalid_argument("track_top_k must be >= 0");
}

StateVector prepare_initial(const RunConfig& c) {
  const auto label = initial_label(c);
  if (static_cast<int>(label.size()) != c.system.size()) {
    throw std::invalid_argument("initial label length does not match the system size");
  }
  return init_basis_state(label);
}

bool is_sample_step(long step, long steps, int pitch) {
  return step % pitch == 0 || step == steps;
}

std::vector<std::uint64_t> fixed_tracked(const RunConfig& c, std::uint64_t init) {
  const int n = c.system.size();
  const std::uint64_t all = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> out{init, init ^ all, 0, all};
  for (const auto& label : c.tracked) {
    if (static_cast<int>(label.size()) != n) {
      throw std::invalid_argument("tracked label length does not match the system size");
    }
    out.push_back(basis_index(label));
  }
  std::vector<std::uint64_t> unique;
  for (auto v : out) {
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
  }
  return unique;
}

// Largest peak magnitude first, lower basis index on ties.
std::vector<std::uint64_t> top_k(const std::vector<double>& peak, std::size_t k,
                                 const std::vector<std::uint64_t>& exclude) {
  std::vector<std::uint64_t> order(peak.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return peak[a] > peak[b]; });
  std::vector<std::uint64_t> out;
  for (auto idx : order) {
    if (out.size() == k) break;
    if (std::find(exclude.begin(), exclude.end(), idx) != exclude.end()) continue;
    out.push_back(idx);
  }
  return out;
}

RunResult run_sampled(const RunConfig& c, const Hamiltonian& h, const Advance& advance) {
  const long steps = step_count(c);
  const StateVector psi0 = prepare_initial(c);
  auto tracked = fixed_tracked(c, basis_index(initial_label(c)));

  const long n_samples = steps / c.sample_pitch + 1 + (steps % c.sample_pitch != 0);
  const bool discover = c.track_top_k > 0;
  const bool keep_snapshots =
      discover && psi0.dimension() * static_cast<std::size_t>(n_samples) <= kSnapshotBudget;

  std::vector<double> peak;
  std::vector<std::vector<double>> snapshots;
  if (discover) peak.assign(psi0.dimension(), 0.0);

  RunResult result;
  StateVector state = psi0;
  for (long s = 0;; ++s) {
    if (is_sample_step(s, steps, c.sample_pitch)) {
      result.samples.push_back(record_sample(state, psi0, h, tracked, s, c.dt_over_T));
      if (discover) {
        std::vector<double> mags(state.dimension());
        for (std::size_t i = 0; i < mags.size(); ++i) {
          mags[i] = std::abs(state[i]);
          peak[i] = std::max(peak[i], mags[i]);
        }
        if (keep_snapshots) snapshots.push_back(std::move(mags));
      }
    }
    if (s == steps) break;
    advance(s, state);
  }
  result.final_state = state;

  if (discover) {
    const auto extra = top_k(peak, static_cast<std::size_t>(c.track_top_k), tracked);
    if (keep_snapshots) {
      for (std::size_t k = 0; k < result.samples.size(); ++k) {
        for (auto idx : extra) result.samples[k].amp_norms.push_back(snapshots[k][idx]);
      }
    } else {
      // Replay: the propagation is deterministic, so a second pass sees the same states.
      StateVector replay = psi0;
      std::size_t k = 0;
      for (long s = 0;; ++s) {
        if (is_sample_step(s, steps, c.sample_pitch)) {
          for (auto idx : extra) result.samples[k].amp_norms.push_back(std::abs(replay[idx]));
          ++k;
        }
        if (s == steps) break;
        advance(s, replay);
      }
    }
    tracked.insert(tracked.end(), extra.begin(), extra.end());
  }

  for (auto idx : tracked) result.tracked_labels.push_back(basis_label(idx, c.system.size()));

  std::vector<double> fid;
  for (const auto& r : result.samples) fid.push_back(r.fidelity0);
  // Sampling spacing equals pitch * dt except possibly for the final sample.
  const double spacing = c.dt_over_T * c.sample_pitch;
  const std::size_t uniform = steps % c.sample_pitch == 0 ? fid.size() : fid.size() - 1;
  result.period = estimate_period(std::span<const double>(fid.data(), uniform), spacing,
                                  c.threshold, c.total_over_T);
  return result;
}

}  // namespace

long step_count(const RunConfig& c) {
  validate(c);
  const double ratio = c.total_over_T / c.dt_over_T;
  if (ratio > static_cast<double>(kMaxSteps)) throw std::invalid_argument("too many steps");
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, rounded)) {
    throw std::invalid_argument("total time must be an integer number of steps");
  }
  return static_cast<long>(rounded);
}

std::string initial_label(const RunConfig& c) {
  return c.initial ? *c.initial : default_initial_label(c.system);
}

RunResult run_trotter(const RunConfig& config) {
  validate(config);
  const Hamiltonian h = build_hamiltonian(config.system);
  const Circuit step = compile_trotter_step(h, config.dt_over_T, config.trotter_depth);
  return run_sampled(config, h, [&](long, StateVector& s) { s.apply_circuit(step); });
}

RunResult run_exact(const RunConfig& config) {
  validate(config);
  if (config.system.size() > kMaxDenseQubits) {
    throw std::invalid_argument("exact evolution is limited to 13 sites");
  }
  const Hamiltonian h = build_hamiltonian(config.system);
  const auto seed = basis_index(initial_label(config));
  const ExactPropagator prop(h, seed);
  const Eigen::VectorXcd coeffs = prop.project(init_basis_state(initial_label(config)));
  // Each sample is computed from psi0 directly, so no error accumulates.
  return run_sampled(config, h, [&](long s, StateVector& state) {
    state = prop.evolve_projected(coeffs, static_cast<double>(s + 1) * config.dt_over_T);
  });
}

PeriodEstimate semiclassical_period_scan(const RunConfig& config, double t_max_over_T) {
  RunConfig c = config;
  c.total_over_T = t_max_over_T;
  const long steps = step_count(c);
  const Hamiltonian h = build_hamiltonian(c.system);
  const Circuit step = compile_trotter_step(h, c.dt_over_T, c.trotter_depth);
  const StateVector psi0 = prepare_initial(c);

  std::vector<double> fid{1.0};
  fid.reserve(static_cast<std::size_t>(steps) + 1);
  StateVector state = psi0;
  bool dropped = false;
  bool returned = false;
  for (long s = 1; s <= steps; ++s) {
    state.apply_circuit(step);
    const double f = fidelity(psi0, state);
    fid.push_back(f);
    if (f < c.threshold) dropped = true;
    if (dropped && f >= c.threshold) returned = true;
    // Past the return, stop once the local maximum is behind us.
    if (returned && f < fid[fid.size() - 2]) break;
  }
  return estimate_period(fid, c.dt_over_T, c.threshold, t_max_over_T);
}

}  // namespace vortexprop
