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

#include <openssl/evp.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "vortexprop/runner.hpp"

namespace vortexprop {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

ordered_json period_json(const PeriodEstimate& p) {
  ordered_json j;
  j["period_over_T"] = p.period_over_T;
  j["lower_bound"] = p.lower_bound;
  j["crossing_over_T"] = p.crossing_over_T;
  j["peak_fidelity"] = p.peak_fidelity;
  j["threshold"] = p.threshold;
  j["t_max_over_T"] = p.t_max_over_T;
  return j;
}

std::string gnuplot_script(const SystemSpec& spec, const RunResult& result, bool with_fig4) {
  std::ostringstream gp;
  gp << "# gnuplot -p plot.gp\n"
     << "set terminal pngcairo size 900,600\n"
     << "set xlabel 't/T'\n"
     << "set key outside right\n";
  if (with_fig4) {
    gp << "\nset output 'fig4.png'\n"
       << "set ylabel '|c|'\n"
       << "plot for [k=2:" << result.tracked_labels.size() + 1
       << "] 'fig4.dat' using 1:k with lines title columnhead(k)\n";
  }
  gp << "\nset output 'fig5.png'\n"
     << "set ylabel 'M^z'\n"
     << "set yrange [-1:1]\n"
     << "plot for [k=2:" << spec.size() + 1
     << "] 'fig5.dat' using 1:k with lines title columnhead(k)\n"
     << "unset yrange\n"
     << "\nset output 'fig6.png'\n"
     << "set ylabel 'magnetization (J)'\n"
     << "plot 'fig6.dat' using 1:2 with lines title 'M'\n";
  return gp.str();
}

}  // namespace

std::vector<std::string> sample_columns(const SystemSpec& spec,
                                        const std::vector<std::string>& tracked_labels) {
  std::vector<std::string> cols{"step",           "t_over_T",  "energy", "magnetization",
                                "svinm_physical", "fidelity0"};
  for (const char* prefix : {"mz_", "mx_", "my_"}) {
    for (const auto& s : spec.sites) cols.push_back(prefix + std::string(1, s.label));
  }
  for (const auto& label : tracked_labels) cols.push_back("amp_" + label);
  return cols;
}

std::string samples_csv(const SystemSpec& spec, const RunResult& result) {
  std::string out;
  const auto cols = sample_columns(spec, result.tracked_labels);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (const auto& r : result.samples) {
    out += std::to_string(r.step);
    for (double v : {r.time_over_T, r.energy, r.magnetization, r.svinm_physical, r.fidelity0}) {
      out += ',' + fmt17(v);
    }
    for (const auto* series : {&r.m_z, &r.m_x, &r.m_y}) {
      for (double v : *series) out += ',' + fmt17(v);
    }
    for (double v : r.amp_norms) out += ',' + fmt17(v);
    out += '\n';
  }
  return out;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("CSV: missing header");
  std::istringstream hs(line);
  for (std::string cell; std::getline(hs, cell, ',');) table.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream rs(line);
    for (std::string cell; std::getline(rs, cell, ',');) {
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0' || errno == ERANGE) {
        throw std::invalid_argument("CSV: bad number '" + cell + "'");
      }
      row.push_back(v);
    }
    if (row.size() != table.header.size()) throw std::invalid_argument("CSV: ragged row");
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string git_blob_sha1(std::string_view content) {
  const std::string object = "blob " + std::to_string(content.size()) + '\0' + std::string(content);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(object.data(), object.size(), digest, &len, EVP_sha1(), nullptr) != 1) {
    throw std::runtime_error("SHA-1 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0xf];
  }
  return hex;
}

std::string manifest_json(const RunSpec& run, const RunResult& result) {
  const RunConfig& c = run.config;
  const Hamiltonian h = build_hamiltonian(c.system);
  const PhysicalConstants constants;

  ordered_json m;
  m["tool"] = "vortexprop";
  m["name"] = run.name;

  ordered_json cfg;
  cfg["system"] = std::string(to_string(c.system.kind));
  cfg["n"] = c.system.size();
  cfg["delta"] = c.system.delta;
  cfg["chi"] = c.system.chi;
  cfg["dt"] = run.dt_text.empty() ? fmt17(c.dt_over_T) : run.dt_text;
  cfg["dt_over_T"] = c.dt_over_T;
  cfg["total_over_T"] = c.total_over_T;
  cfg["pitch"] = c.sample_pitch;
  cfg["threshold"] = c.threshold;
  cfg["exact"] = run.exact;
  cfg["trotter_depth"] = c.trotter_depth;
  cfg["initial"] = initial_label(c);
  cfg["tracked"] = c.tracked;
  cfg["track_top_k"] = c.track_top_k;
  m["config"] = cfg;
  m["geometry"] = json::parse(dump_system_json(c.system));

  ordered_json k;
  k["t_hop_eV"] = constants.t_hop_ev;
  k["U_eV"] = constants.u_ev;
  k["J_eV"] = constants.exchange_ev();
  k["hbar_eV_s"] = constants.hbar_ev_s;
  k["T_fs"] = period_from_constants(constants);
  k["phase_per_period"] = kPhasePerPeriod;
  k["svinm_unit_J_per_T"] = constants.svinm_unit_j_per_t;
  m["constants"] = k;

  m["hamiltonian_sha1"] = git_blob_sha1(dump_hamiltonian_json(h));
  m["n_terms"] = h.terms.size();
  m["steps"] = step_count(c);
  m["n_samples"] = result.samples.size();
  m["period"] = period_json(result.period);
  m["tracked_labels"] = result.tracked_labels;
  m["columns"] = sample_columns(c.system, result.tracked_labels);
  return m.dump(2) + "\n";
}

void emit_plot_data(const SystemSpec& spec, const RunResult& result,
                    const std::filesystem::path& dir, std::ostream& log) {
  if (result.samples.empty()) throw std::invalid_argument("no samples to plot");
  const bool with_fig4 = !result.tracked_labels.empty();

  if (with_fig4) {
    std::string f4 = "# t/T";
    for (const auto& l : result.tracked_labels) f4 += " " + l;
    f4 += '\n';
    for (const auto& r : result.samples) {
      f4 += fmt17(r.time_over_T);
      for (double v : r.amp_norms) f4 += ' ' + fmt17(v);
      f4 += '\n';
    }
    write_file(dir / "fig4.dat", f4);
  } else {
    std::error_code ec;
    std::filesystem::remove(dir / "fig4.dat", ec);
    log << "note: no tracked basis states, fig4.dat omitted\n";
  }

  std::string f5 = "# t/T";
  for (const auto& s : spec.sites) f5 += std::string(" M_") + s.label;
  f5 += '\n';
  std::string f6 = "# t/T magnetization svinm_J_per_T\n";
  for (const auto& r : result.samples) {
    f5 += fmt17(r.time_over_T);
    for (double v : r.m_z) f5 += ' ' + fmt17(v);
    f5 += '\n';
    f6 += fmt17(r.time_over_T) + ' ' + fmt17(r.magnetization) + ' ' +
          fmt17(r.svinm_physical) + '\n';
  }
  write_file(dir / "fig5.dat", f5);
  write_file(dir / "fig6.dat", f6);
  write_file(dir / "plot.gp", gnuplot_script(spec, result, with_fig4));
}

void write_run(const RunSpec& run, const RunResult& result, const std::filesystem::path& dir,
               std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "samples.csv", samples_csv(run.config.system, result));
  write_file(dir / "manifest.json", manifest_json(run, result));
  emit_plot_data(run.config.system, result, dir, log);
}

RunResult execute(const RunSpec& run) {
  return run.exact ? run_exact(run.config) : run_trotter(run.config);
}

std::string format_period(const PeriodEstimate& p) {
  char buf[64];
  if (p.lower_bound) {
    std::snprintf(buf, sizeof buf, ">= %g T", p.t_max_over_T);
  } else {
    std::snprintf(buf, sizeof buf, "%g T", p.period_over_T);
  }
  return buf;
}

}  // namespace vortexprop
