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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "builtin_layouts.hpp"
#include "vortexprop/runner.hpp"

namespace vortexprop {
namespace {

// Scores closer than this are treated as equal, so the sweep prefers the
// lower operation index and the smaller offset among numerically tied layouts.
constexpr double kTieTolerance = 1e-9;

double exact_return_fidelity(const SystemSpec& spec, double t_over_T) {
  const Hamiltonian h = build_hamiltonian(spec);
  const std::string label = default_initial_label(spec);
  const StateVector psi0 = init_basis_state(label);
  const ExactPropagator prop(h, basis_index(label));
  return fidelity(psi0, prop.evolve(psi0, t_over_T));
}

double trotter_return_fidelity(const SystemSpec& spec, double dt, double t_over_T) {
  RunConfig c;
  c.system = spec;
  c.dt_over_T = dt;
  c.total_over_T = t_over_T;
  c.sample_pitch = static_cast<int>(std::min<long>(step_count(c), 1L << 30));
  if (c.sample_pitch < 1) c.sample_pitch = 1;
  c.track_top_k = 0;
  return run_trotter(c).samples.back().fidelity0;
}

}  // namespace

std::vector<Position> transformed_ring(int op) {
  if (op < 0 || op >= kPointGroupOrder) throw std::out_of_range("point-group op must be in [0, 8)");
  const Position c2{2 * builtin::kSingleHole.x, 2 * builtin::kSingleHole.y};
  std::vector<Position> ring;
  for (const auto& p : builtin::kReferenceRing) {
    const Position d = apply_point_group(op, p, c2);
    ring.push_back({d.x / 2, d.y / 2});
  }
  return ring;
}

SystemSpec single_vortex_layout(SystemKind kind, int op, double chi) {
  if (kind != SystemKind::kMelon && kind != SystemKind::kAntiMelon) {
    throw std::invalid_argument("the geometry sweep covers Melon and AntiMelon only");
  }
  std::vector<SiteSpec> sites;
  const auto ring = transformed_ring(op);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    sites.push_back({static_cast<char>('a' + i), ring[i]});
  }
  const int w = kind == SystemKind::kMelon ? +1 : -1;
  return make_system(kind, sites, {builtin::kSingleHole}, {w}, chi, 0.0);
}

std::vector<SweepCandidate> sweep_single_vortex(SystemKind kind, const SweepOptions& options) {
  if (!(options.chi_step_deg > 0.0) || options.chi_step_deg > 90.0) {
    throw std::invalid_argument("chi step must lie in (0, 90] degrees");
  }
  const double step = options.chi_step_deg * std::numbers::pi / 180.0;
  const int n_grid = static_cast<int>(std::ceil(90.0 / options.chi_step_deg - 1e-9));

  std::vector<SweepCandidate> out;
  for (int op = 0; op < kPointGroupOrder; ++op) {
    auto score = [&](double chi) {
      return exact_return_fidelity(single_vortex_layout(kind, op, chi),
                                   options.t_target_over_T);
    };
    SweepCandidate best{op, 0.0, -1.0, 0.0};
    for (int k = 0; k < n_grid; ++k) {
      const double chi = k * step;
      const double f = score(chi);
      if (f > best.exact_fidelity + kTieTolerance) best = {op, chi, f, 0.0};
    }
    if (options.refine) {
      constexpr double kInvPhi = 0.6180339887498949;
      double lo = best.chi - step, hi = best.chi + step;
      double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
      double f1 = score(x1), f2 = score(x2);
      for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + kInvPhi * (hi - lo);
          f2 = score(x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - kInvPhi * (hi - lo);
          f1 = score(x1);
        }
      }
      const double quarter = std::numbers::pi / 2;
      const double chi = std::fmod(std::fmod(0.5 * (lo + hi), quarter) + quarter, quarter);
      const double f = score(chi);
      if (f > best.exact_fidelity) {
        best.chi = chi;
        best.exact_fidelity = f;
      }
    }
    best.trotter_fidelity = trotter_return_fidelity(
        single_vortex_layout(kind, op, best.chi), options.confirm_dt_over_T,
        options.t_target_over_T);
    out.push_back(best);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.exact_fidelity > b.exact_fidelity + kTieTolerance;
  });
  return out;
}

}  // namespace vortexprop
