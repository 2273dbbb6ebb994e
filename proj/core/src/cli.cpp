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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "vortexprop/circuit.hpp"
#include "vortexprop/runner.hpp"

namespace vortexprop {
namespace {

using nlohmann::json;

// Raised for problems with the user's flags or config file (exit code 2).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// "1/300", "0.01" or "1e-2".
double parse_fraction(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad fraction '" + text + "'");
    }
    if (used != s.size()) throw UsageError("bad fraction '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  const double v = slash == std::string::npos
                       ? number(text)
                       : number(text.substr(0, slash)) / number(text.substr(slash + 1));
  if (!std::isfinite(v) || !(v > 0.0)) throw UsageError("dt must be positive: '" + text + "'");
  return v;
}

struct SimulateFlags {
  std::string system = "melon";
  int n = 8;
  double delta = 0.0;
  std::string dt;
  std::optional<double> total;
  std::optional<int> pitch;
  std::optional<double> chi;
  double threshold = 0.999;
  bool exact = false;
  std::string out;
  std::string config;
  std::string geometry;
  std::string initial;
  int depth = 1;
  bool dump_hamiltonian = false;
  bool dump_circuit = false;
};

struct Defaults {
  const char* dt;
  double total;
  int pitch;
};

Defaults defaults_for(SystemKind kind) {
  switch (kind) {
    case SystemKind::kCombined:
      return {"1/10", 48.0, 2};
    case SystemKind::kMelon:
    case SystemKind::kAntiMelon:
    case SystemKind::kXxz:
      break;
  }
  return {"1/300", 4.0, 20};
}

// Config keys take effect only where the matching flag was not given.
void merge_config(SimulateFlags& f, const CLI::App& app, const std::string& path,
                  std::vector<std::string>& tracked, int& top_k, json& geometry) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config " + path + ": expected a JSON object");
  auto given = [&](const char* flag) { return app.count(flag) > 0; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "system") {
        if (!given("--system")) f.system = value.get<std::string>();
      } else if (key == "n") {
        if (!given("--n")) f.n = value.get<int>();
      } else if (key == "delta") {
        if (!given("--delta")) f.delta = value.get<double>();
      } else if (key == "dt") {
        if (!given("--dt")) {
          f.dt = value.is_string() ? value.get<std::string>() : std::to_string(value.get<double>());
        }
      } else if (key == "total") {
        if (!given("--total")) f.total = value.get<double>();
      } else if (key == "pitch") {
        if (!given("--pitch")) f.pitch = value.get<int>();
      } else if (key == "chi") {
        if (!given("--chi")) f.chi = value.get<double>();
      } else if (key == "threshold") {
        if (!given("--threshold")) f.threshold = value.get<double>();
      } else if (key == "exact") {
        if (!given("--exact")) f.exact = value.get<bool>();
      } else if (key == "out") {
        if (!given("--out")) f.out = value.get<std::string>();
      } else if (key == "initial") {
        if (!given("--initial")) f.initial = value.get<std::string>();
      } else if (key == "trotter_depth") {
        if (!given("--depth")) f.depth = value.get<int>();
      } else if (key == "geometry") {
        if (!given("--geometry")) geometry = value;
      } else if (key == "tracked") {
        tracked = value.get<std::vector<std::string>>();
      } else if (key == "track_top_k") {
        top_k = value.get<int>();
      } else {
        throw UsageError("config " + path + ": unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
}

RunSpec resolve(SimulateFlags f, const CLI::App& app) {
  std::vector<std::string> tracked;
  int top_k = RunConfig{}.track_top_k;
  json geometry;
  if (!f.config.empty()) merge_config(f, app, f.config, tracked, top_k, geometry);
  if (!f.geometry.empty()) geometry = f.geometry;

  RunSpec run;
  SystemKind kind;
  try {
    kind = parse_system_kind(f.system);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    if (!geometry.is_null()) {
      const std::string text =
          geometry.is_string() ? read_text(geometry.get<std::string>()) : geometry.dump();
      run.config.system = parse_system_json(text);
      kind = run.config.system.kind;
    } else {
      SystemParams params;
      params.n = f.n;
      params.delta = f.delta;
      params.chi = f.chi;
      run.config.system = build_system(kind, params);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const Defaults d = defaults_for(kind);
  run.dt_text = f.dt.empty() ? d.dt : f.dt;
  run.config.dt_over_T = parse_fraction(run.dt_text);
  run.config.total_over_T = f.total.value_or(d.total);
  run.config.sample_pitch = f.pitch.value_or(d.pitch);
  run.config.threshold = f.threshold;
  run.config.trotter_depth = f.depth;
  run.config.tracked = tracked;
  run.config.track_top_k = top_k;
  if (!f.initial.empty()) run.config.initial = f.initial;
  run.exact = f.exact;
  run.name = std::string(to_string(kind));

  if (!(f.threshold > 0.0 && f.threshold < 1.0)) throw UsageError("threshold must lie in (0, 1)");
  try {
    step_count(run.config);
    const auto label = initial_label(run.config);
    if (static_cast<int>(label.size()) != run.config.system.size()) {
      throw std::invalid_argument("initial label must have one character per site");
    }
    init_basis_state(label);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (run.exact && run.config.system.size() > kMaxDenseQubits) {
    throw UsageError("--exact supports at most 13 sites");
  }
  return run;
}

int simulate(const SimulateFlags& flags, const CLI::App& app, std::ostream& out,
             std::ostream& err) {
  const RunSpec run = resolve(flags, app);
  const Hamiltonian h = build_hamiltonian(run.config.system);

  if (flags.dump_hamiltonian || flags.dump_circuit) {
    if (flags.dump_hamiltonian) out << dump_hamiltonian_json(h);
    if (flags.dump_circuit) {
      out << dump_circuit_json(
          compile_trotter_step(h, run.config.dt_over_T, run.config.trotter_depth));
    }
    return 0;
  }

  const std::filesystem::path dir = flags.out.empty() && !app.count("--out")
                                        ? std::filesystem::path("runs") / run.name
                                        : std::filesystem::path(flags.out);
  const RunResult result = execute(run);
  write_run(run, result, dir, err);

  const auto& last = result.samples.back();
  char buf[256];
  std::snprintf(buf, sizeof buf, "system: %s (%d sites, %zu terms)\n",
                std::string(to_string(run.config.system.kind)).c_str(),
                run.config.system.size(), h.terms.size());
  out << buf;
  std::snprintf(buf, sizeof buf, "evolution: %s, dt = %s T, %ld steps, %zu samples\n",
                run.exact ? "exact" : "trotter", run.dt_text.c_str(), step_count(run.config),
                result.samples.size());
  out << buf;
  std::snprintf(buf, sizeof buf, "fidelity0 at t = %g T: %.6f\n", last.time_over_T,
                last.fidelity0);
  out << buf;
  if (result.period.lower_bound) {
    std::snprintf(buf, sizeof buf,
                  "period: %s (lower bound, no return above %g; max fidelity %.6f)\n",
                  format_period(result.period).c_str(), result.period.threshold,
                  result.period.peak_fidelity);
  } else {
    std::snprintf(buf, sizeof buf, "period: %s (fidelity %.6f, first crossing at %g T)\n",
                  format_period(result.period).c_str(), result.period.peak_fidelity,
                  result.period.crossing_over_T);
  }
  out << buf;
  out << "output: " << dir.string() << "\n";
  return 0;
}

int default_jobs() {
  if (const char* env = std::getenv("VORTEXPROP_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

int sweep(const std::string& system, double chi_step, bool refine, std::ostream& out) {
  SweepOptions opt;
  opt.chi_step_deg = chi_step;
  opt.refine = refine;
  const SystemKind kind = parse_system_kind(system);
  const auto ranked = sweep_single_vortex(kind, opt);
  out << "op  chi(rad)             F_exact(4T)          F_trotter(4T, T/300)\n";
  char buf[160];
  for (const auto& c : ranked) {
    std::snprintf(buf, sizeof buf, "%-3d %-20.17g %-20.17g %.17g\n", c.op, c.chi,
                  c.exact_fidelity, c.trotter_fidelity);
    out << buf;
  }
  const auto& best = ranked.front();
  const auto ring = transformed_ring(best.op);
  out << "best layout ring:";
  for (const auto& p : ring) out << " {" << p.x << ", " << p.y << "}";
  std::snprintf(buf, sizeof buf, "\nbest chi: %.17g\n", best.chi);
  out << buf;
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statevector Trotter simulator for spin-vortex lattices", "vortexprop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "vortexprop 0.1.0");

  SimulateFlags sim;
  auto* s = app.add_subcommand("simulate", "Run one propagation and write its outputs");
  s->add_option("--system", sim.system, "melon|antimelon|combined|xxz")
      ->check(CLI::IsMember({"melon", "antimelon", "combined", "xxz"}, CLI::ignore_case));
  s->add_option("--n", sim.n, "XXZ chain length")->check(CLI::Range(2, 26));
  s->add_option("--delta", sim.delta, "XXZ anisotropy");
  s->add_option("--dt", sim.dt, "Time step as a fraction of T, e.g. 1/300");
  s->add_option("--total", sim.total, "Total time in units of T")->check(CLI::NonNegativeNumber);
  s->add_option("--pitch", sim.pitch, "Record every k steps")->check(CLI::PositiveNumber);
  s->add_option("--chi", sim.chi, "Global spin-angle offset (radians)");
  s->add_option("--threshold", sim.threshold, "Fidelity threshold for the period estimate");
  s->add_flag("--exact", sim.exact, "Use exact eigendecomposition evolution");
  s->add_option("--out", sim.out, "Output directory (default runs/<system>)");
  s->add_option("--config", sim.config, "JSON file with defaults; flags win");
  s->add_option("--geometry", sim.geometry, "System JSON file replacing the built-in layout");
  s->add_option("--initial", sim.initial, "Initial basis label, site a rightmost");
  s->add_option("--depth", sim.depth, "Trotter depth per step")->check(CLI::PositiveNumber);
  s->add_flag("--dump-hamiltonian", sim.dump_hamiltonian, "Print the Pauli terms and exit");
  s->add_flag("--dump-circuit", sim.dump_circuit, "Print one Trotter step circuit and exit");

  std::string suite_name;
  std::string suite_out = "runs";
  int jobs = default_jobs();
  auto* su = app.add_subcommand("suite", "Run a reproduction suite");
  su->add_option("name", suite_name, "fig4|fig5|fig6|table1|convergence|all")
      ->required()
      ->check(CLI::IsMember({"fig4", "fig5", "fig6", "table1", "convergence", "all"}));
  su->add_option("--out", suite_out, "Root output directory");
  su->add_option("--jobs", jobs, "Concurrent runs (default $VORTEXPROP_JOBS or cores)")
      ->check(CLI::PositiveNumber);

  std::string sweep_system = "melon";
  double chi_step = 1.0;
  bool no_refine = false;
  auto* sw = app.add_subcommand("sweep", "Search single-vortex layouts for the 4T return");
  sw->add_option("--system", sweep_system, "melon|antimelon")
      ->check(CLI::IsMember({"melon", "antimelon"}, CLI::ignore_case));
  sw->add_option("--chi-step", chi_step, "Grid step in degrees")->check(CLI::Range(0.01, 90.0));
  sw->add_flag("--no-refine", no_refine, "Skip the golden-section refinement");

  std::string sys_kind = "melon";
  int sys_n = 8;
  double sys_delta = 0.0;
  double sys_chi = 0.0;
  bool sys_classes = false;
  auto* sy = app.add_subcommand("system", "Print a built-in system as JSON");
  sy->add_option("--system", sys_kind, "melon|antimelon|combined|xxz")
      ->check(CLI::IsMember({"melon", "antimelon", "combined", "xxz"}, CLI::ignore_case));
  sy->add_option("--n", sys_n, "XXZ chain length")->check(CLI::Range(2, 26));
  sy->add_option("--delta", sys_delta, "XXZ anisotropy");
  sy->add_option("--chi", sys_chi, "Global spin-angle offset (radians)");
  sy->add_flag("--classes", sys_classes, "Print site equivalence classes instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << target->help();
    return 2;
  }

  try {
    if (s->parsed()) {
      std::transform(sim.system.begin(), sim.system.end(), sim.system.begin(), ::tolower);
      return simulate(sim, *s, out, err);
    }
    if (su->parsed()) {
      const auto outcomes = run_suite(make_suite(suite_name), suite_out, jobs, out, err);
      const bool failed = std::any_of(outcomes.begin(), outcomes.end(),
                                      [](const auto& o) { return !o.error.empty(); });
      return failed ? 1 : 0;
    }
    if (sw->parsed()) return sweep(sweep_system, chi_step, !no_refine, out);
    if (sy->parsed()) {
      SystemParams p;
      p.n = sys_n;
      p.delta = sys_delta;
      if (sy->count("--chi")) p.chi = sys_chi;
      const SystemSpec spec = build_system(parse_system_kind(sys_kind), p);
      if (sys_classes) {
        for (const auto& c : site_equivalence_classes(spec)) out << c << "\n";
      } else {
        out << dump_system_json(spec);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << s->help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace vortexprop
