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

#ifndef VORTEXPROP_RUNNER_HPP_
#define VORTEXPROP_RUNNER_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vortexprop/evolve.hpp"

namespace vortexprop {

// ---------------------------------------------------------------------------
// Run output
// ---------------------------------------------------------------------------

/// A run as executed by the command line: the propagation settings plus the
/// choice of propagator and the text form of dt used for the manifest.
struct RunSpec {
  std::string name;
  RunConfig config;
  bool exact = false;
  std::string dt_text;  // e.g. "1/300"; empty means "%.17g" of dt_over_T
};

/// samples.csv columns: step, t_over_T, energy, magnetization,
/// svinm_physical, fidelity0, mz_<label>..., mx_<label>..., my_<label>...,
/// amp_<basis label>... . Reals are written with 17 significant digits.
std::vector<std::string> sample_columns(const SystemSpec& spec,
                                        const std::vector<std::string>& tracked_labels);
std::string samples_csv(const SystemSpec& spec, const RunResult& result);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Parses the output of samples_csv (or any numeric CSV with a header line).
/// Throws std::invalid_argument on ragged rows or non-numeric cells.
CsvTable parse_csv(std::string_view text);

/// SHA-1 of the git blob object holding `content` ("blob <len>\0" prefix), as
/// lowercase hex.
std::string git_blob_sha1(std::string_view content);

std::string manifest_json(const RunSpec& run, const RunResult& result);

/// fig4.dat (t/T and tracked amplitude norms), fig5.dat (t/T and m_z per
/// site), fig6.dat (t/T, magnetization, SVINM in J/T) and plot.gp. fig4.dat
/// is skipped with a note on `log` when nothing is tracked. Throws
/// std::runtime_error on I/O failure.
void emit_plot_data(const SystemSpec& spec, const RunResult& result,
                    const std::filesystem::path& dir, std::ostream& log);

/// Creates `dir` and writes manifest.json, samples.csv and the plot files.
void write_run(const RunSpec& run, const RunResult& result,
               const std::filesystem::path& dir, std::ostream& log);

RunResult execute(const RunSpec& run);

/// "4 T", or ">= 400 T" for a lower bound.
std::string format_period(const PeriodEstimate& p);

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

enum class RunMode { kSampled, kPeriodScan, kConvergence };

struct SuiteRun {
  RunSpec spec;
  RunMode mode = RunMode::kSampled;
  double t_max_over_T = 0.0;  // kPeriodScan and kConvergence
  std::vector<double> dts;    // kConvergence only
  std::string table_label;    // row name in the table1 report
};

struct ExperimentSuite {
  std::string name;
  std::vector<SuiteRun> runs;
};

inline constexpr std::string_view kSuiteNames[] = {"fig4", "fig5", "fig6", "table1",
                                                  "convergence", "all"};

/// Built-in reproduction suites. Throws std::invalid_argument for an unknown
/// name.
ExperimentSuite make_suite(std::string_view name);

struct ConvergencePoint {
  double dt_over_T = 0.0;
  double max_amp_error = 0.0;  // over every step, against the exact propagator
};

struct SuiteRunOutcome {
  std::string name;
  std::string table_label;
  RunMode mode = RunMode::kSampled;
  PeriodEstimate period;
  std::vector<ConvergencePoint> convergence;
  std::string error;  // empty on success
};

/// Runs every entry with at most `jobs` concurrent workers. Sampled runs are
/// written to `out_dir / run.name`; the convergence suite also writes
/// convergence.csv. A summary is printed to `out` once all runs finish.
/// Returns the per-run outcomes in suite order.
std::vector<SuiteRunOutcome> run_suite(const ExperimentSuite& suite,
                                       const std::filesystem::path& out_dir, int jobs,
                                       std::ostream& out, std::ostream& log);

/// Period table with "system" and "period(T)" columns.
std::string format_table1(const std::vector<SuiteRunOutcome>& outcomes);

/// Trotter versus exact over `total_over_T` for each dt.
std::vector<ConvergencePoint> convergence_study(const SystemSpec& spec,
                                                const std::vector<double>& dts,
                                                double total_over_T);

// ---------------------------------------------------------------------------
// Single-vortex geometry sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
  double chi_step_deg = 1.0;
  double t_target_over_T = 4.0;
  bool refine = true;            // golden-section search around each grid optimum
  double confirm_dt_over_T = 1.0 / 300;
};

struct SweepCandidate {
  int op = 0;                    // point-group operation applied to the ring
  double chi = 0.0;
  double exact_fidelity = 0.0;   // |<psi0|psi(t_target)>|^2 under exact evolution
  double trotter_fidelity = 0.0; // same under Trotter stepping at confirm dt
};

/// Ring positions after point-group operation `op` about the hole.
std::vector<Position> transformed_ring(int op);

SystemSpec single_vortex_layout(SystemKind kind, int op, double chi);

/// One candidate per point-group operation, best first (by exact fidelity).
std::vector<SweepCandidate> sweep_single_vortex(SystemKind kind,
                                                const SweepOptions& options = {});

// ---------------------------------------------------------------------------
// Command line
// ---------------------------------------------------------------------------

/// Entry point of the `vortexprop` tool. Returns 0 on success, 2 for bad
/// flags (after printing usage) and 1 for runtime failures.
int cli_main(int argc, const char* const* argv);
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vortexprop

#endif  // VORTEXPROP_RUNNER_HPP_
