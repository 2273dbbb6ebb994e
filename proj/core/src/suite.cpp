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
#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vortexprop/circuit.hpp"
#include "vortexprop/runner.hpp"

namespace vortexprop {
namespace {

constexpr double kVortexScanHorizon = 100.0;
constexpr double kXxzScanHorizon = 400.0;

SuiteRun sampled(std::string name, SystemKind kind, std::string dt_text, double dt,
                 double total, int pitch) {
  SuiteRun r;
  r.spec.name = std::move(name);
  r.spec.config.system = build_system(kind);
  r.spec.config.dt_over_T = dt;
  r.spec.config.total_over_T = total;
  r.spec.config.sample_pitch = pitch;
  r.spec.dt_text = std::move(dt_text);
  return r;
}

SuiteRun scan(std::string name, std::string label, SystemSpec system, std::string dt_text,
              double dt, double t_max) {
  SuiteRun r;
  r.spec.name = std::move(name);
  r.spec.config.system = std::move(system);
  r.spec.config.dt_over_T = dt;
  r.spec.dt_text = std::move(dt_text);
  r.mode = RunMode::kPeriodScan;
  r.t_max_over_T = t_max;
  r.table_label = std::move(label);
  return r;
}

// The fig4, fig5 and fig6 suites share three runs and differ in the Combined sampling
// pitch (20 steps for the site moments, 2 for the magnetization).
void add_figure_runs(ExperimentSuite& s, const std::string& prefix, int combined_pitch) {
  s.runs.push_back(sampled(prefix + "/melon", SystemKind::kMelon, "1/300", 1.0 / 300, 4.0, 20));
  s.runs.push_back(
      sampled(prefix + "/antimelon", SystemKind::kAntiMelon, "1/300", 1.0 / 300, 4.0, 20));
  s.runs.push_back(
      sampled(prefix + "/combined", SystemKind::kCombined, "1/10", 0.1, 48.0, combined_pitch));
}

void add_table1_runs(ExperimentSuite& s) {
  SystemParams xxz;
  xxz.n = 8;
  xxz.delta = 0.0;
  s.runs.push_back(scan("table1/xxz_delta0", "XXZ,Delta=0", build_system(SystemKind::kXxz, xxz),
                        "1/300", 1.0 / 300, kXxzScanHorizon));
  xxz.delta = 2.0;
  s.runs.push_back(scan("table1/xxz_delta2", "XXZ,Delta=2", build_system(SystemKind::kXxz, xxz),
                        "1/300", 1.0 / 300, kXxzScanHorizon));
  s.runs.push_back(scan("table1/melon", "(A)Single vortex", build_system(SystemKind::kMelon),
                        "1/300", 1.0 / 300, kVortexScanHorizon));
  s.runs.push_back(scan("table1/antimelon", "(B)Single vortex",
                        build_system(SystemKind::kAntiMelon), "1/300", 1.0 / 300,
                        kVortexScanHorizon));
  s.runs.push_back(scan("table1/combined", "(C)Combined vortices",
                        build_system(SystemKind::kCombined), "1/10", 0.1, kVortexScanHorizon));
}

void add_convergence_run(ExperimentSuite& s) {
  SuiteRun r;
  r.spec.name = "convergence/melon";
  r.spec.config.system = build_system(SystemKind::kMelon);
  r.mode = RunMode::kConvergence;
  r.t_max_over_T = 1.0;
  r.dts = {1.0 / 75, 1.0 / 150, 1.0 / 300, 1.0 / 600};
  s.runs.push_back(std::move(r));
}

std::string convergence_csv(const std::vector<ConvergencePoint>& pts) {
  std::string out = "dt_over_T,max_amp_error,ratio_to_previous\n";
  char buf[128];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double ratio = i == 0 ? 0.0 : pts[i - 1].max_amp_error / pts[i].max_amp_error;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", pts[i].dt_over_T,
                  pts[i].max_amp_error, ratio);
    out += buf;
  }
  return out;
}

SuiteRunOutcome run_one(const SuiteRun& run, const std::filesystem::path& out_dir,
                        std::ostream& log) {
  SuiteRunOutcome o;
  o.name = run.spec.name;
  o.table_label = run.table_label;
  o.mode = run.mode;
  switch (run.mode) {
    case RunMode::kSampled: {
      const RunResult result = execute(run.spec);
      write_run(run.spec, result, out_dir / run.spec.name, log);
      o.period = result.period;
      break;
    }
    case RunMode::kPeriodScan:
      o.period = semiclassical_period_scan(run.spec.config, run.t_max_over_T);
      break;
    case RunMode::kConvergence: {
      o.convergence = convergence_study(run.spec.config.system, run.dts, run.t_max_over_T);
      const auto dir = out_dir / run.spec.name;
      std::filesystem::create_directories(dir);
      std::ofstream f(dir / "convergence.csv", std::ios::binary | std::ios::trunc);
      f << convergence_csv(o.convergence);
      if (!f) throw std::runtime_error("cannot write " + (dir / "convergence.csv").string());
      break;
    }
  }
  return o;
}

}  // namespace

ExperimentSuite make_suite(std::string_view name) {
  ExperimentSuite s;
  s.name = std::string(name);
  if (name == "fig4") {
    add_figure_runs(s, "fig4", 20);
  } else if (name == "fig5") {
    add_figure_runs(s, "fig5", 20);
  } else if (name == "fig6") {
    add_figure_runs(s, "fig6", 2);
  } else if (name == "table1") {
    add_table1_runs(s);
  } else if (name == "convergence") {
    add_convergence_run(s);
  } else if (name == "all") {
    for (auto part : {"fig4", "fig5", "fig6", "table1", "convergence"}) {
      auto sub = make_suite(part);
      for (auto& r : sub.runs) s.runs.push_back(std::move(r));
    }
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return s;
}

std::vector<ConvergencePoint> convergence_study(const SystemSpec& spec,
                                                const std::vector<double>& dts,
                                                double total_over_T) {
  const Hamiltonian h = build_hamiltonian(spec);
  const std::string label = default_initial_label(spec);
  const StateVector psi0 = init_basis_state(label);
  const ExactPropagator exact(h, basis_index(label));
  const Eigen::VectorXcd coeffs = exact.project(psi0);

  std::vector<ConvergencePoint> out;
  for (double dt : dts) {
    RunConfig c;
    c.system = spec;
    c.dt_over_T = dt;
    c.total_over_T = total_over_T;
    const long steps = step_count(c);
    const Circuit step = compile_trotter_step(h, dt);
    StateVector state = psi0;
    ConvergencePoint p{dt, 0.0};
    for (long s = 1; s <= steps; ++s) {
      state.apply_circuit(step);
      const StateVector ref = exact.evolve_projected(coeffs, static_cast<double>(s) * dt);
      p.max_amp_error = std::max(p.max_amp_error, max_amplitude_deviation(state, ref));
    }
    out.push_back(p);
  }
  return out;
}

std::vector<SuiteRunOutcome> run_suite(const ExperimentSuite& suite,
                                       const std::filesystem::path& out_dir, int jobs,
                                       std::ostream& out, std::ostream& log) {
  const std::size_t n = suite.runs.size();
  std::vector<SuiteRunOutcome> outcomes(n);
  std::vector<std::string> logs(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      std::ostringstream run_log;
      try {
        outcomes[i] = run_one(suite.runs[i], out_dir, run_log);
      } catch (const std::exception& e) {
        outcomes[i].name = suite.runs[i].spec.name;
        outcomes[i].mode = suite.runs[i].mode;
        outcomes[i].table_label = suite.runs[i].table_label;
        outcomes[i].error = e.what();
      }
      logs[i] = run_log.str();
    }
  };
  const auto workers = static_cast<std::size_t>(std::clamp<long>(jobs, 1, std::max<long>(1, n)));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  bool any_table = false;
  for (std::size_t i = 0; i < n; ++i) {
    log << logs[i];
    const auto& o = outcomes[i];
    if (!o.error.empty()) {
      out << o.name << ": error: " << o.error << "\n";
      continue;
    }
    switch (o.mode) {
      case RunMode::kSampled:
        out << o.name << ": period " << format_period(o.period) << " -> "
            << (out_dir / o.name).string() << "\n";
        break;
      case RunMode::kPeriodScan:
        any_table = true;
        break;
      case RunMode::kConvergence: {
        out << o.name << ": dt  max_amp_error  ratio\n";
        char buf[128];
        for (std::size_t k = 0; k < o.convergence.size(); ++k) {
          const auto& p = o.convergence[k];
          const double ratio =
              k == 0 ? 0.0 : o.convergence[k - 1].max_amp_error / p.max_amp_error;
          std::snprintf(buf, sizeof buf, "  T/%-5.0f %.6e  %s\n", 1.0 / p.dt_over_T,
                        p.max_amp_error, k == 0 ? "-" : std::to_string(ratio).c_str());
          out << buf;
        }
        break;
      }
    }
  }
  if (any_table) out << format_table1(outcomes);
  return outcomes;
}

std::string format_table1(const std::vector<SuiteRunOutcome>& outcomes) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::string single_a, single_b;
  for (const auto& o : outcomes) {
    if (o.mode != RunMode::kPeriodScan) continue;
    std::string trimmed = "error";
    if (o.error.empty()) {
      const std::string value = format_period(o.period);
      trimmed = value.substr(0, value.size() - 2);  // drop " T"
    }
    if (o.table_label == "(A)Single vortex") {
      single_a = trimmed;
    } else if (o.table_label == "(B)Single vortex") {
      single_b = trimmed;
    } else {
      rows.emplace_back(o.table_label, trimmed);
    }
  }
  if (!single_a.empty() || !single_b.empty()) {
    std::string value = single_a.empty() ? single_b : single_a;
    if (!single_a.empty() && !single_b.empty() && single_a != single_b) {
      value = single_a + " / " + single_b;
    }
    // Single vortices sit between the XXZ rows and Combined.
    auto pos = std::find_if(rows.begin(), rows.end(),
                            [](const auto& r) { return r.first.rfind("XXZ", 0) != 0; });
    rows.insert(pos, {"(A),(B)Single vortex", value});
  }
  std::string out = "system                 period(T)\n";
  out += "---------------------- ---------\n";
  char buf[128];
  for (const auto& [label, value] : rows) {
    std::snprintf(buf, sizeof buf, "%-22s %s\n", label.c_str(), value.c_str());
    out += buf;
  }
  return out;
}

}  // namespace vortexprop
