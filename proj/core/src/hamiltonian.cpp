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

#include "vortexprop/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vortexprop {

char to_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::kX: return 'X';
    case PauliAxis::kY: return 'Y';
    case PauliAxis::kZ: return 'Z';
  }
  return '?';
}

PauliAxis parse_pauli_axis(char c) {
  switch (c) {
    case 'X': case 'x': return PauliAxis::kX;
    case 'Y': case 'y': return PauliAxis::kY;
    case 'Z': case 'z': return PauliAxis::kZ;
    default: break;
  }
  throw std::invalid_argument(std::string("not a Pauli axis: ") + c);
}

PauliTerm PauliTerm::make(double coeff, std::vector<PauliFactor> factors) {
  if (!std::isfinite(coeff)) throw std::invalid_argument("Pauli coefficient must be finite");
  if (factors.empty()) throw std::invalid_argument("Pauli term has empty support");
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].site < 0 || factors[i].site >= 64) {
      throw std::invalid_argument("Pauli site index out of range");
    }
    if (i > 0 && factors[i].site == factors[i - 1].site) {
      throw std::invalid_argument("Pauli term repeats a site");
    }
  }
  return PauliTerm{coeff, std::move(factors)};
}

std::string PauliTerm::str() const {
  std::ostringstream os;
  os << coeff << '*';
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << ' ';
    os << to_char(factors[i].axis) << factors[i].site;
  }
  return os.str();
}

PauliMask::PauliMask(const PauliTerm& term) {
  for (const auto& f : term.factors) {
    const std::uint64_t bit = std::uint64_t{1} << f.site;
    if (f.axis != PauliAxis::kZ) flip |= bit;
    if (f.axis != PauliAxis::kX) sign |= bit;
    if (f.axis == PauliAxis::kY) ++y_count;
  }
}

std::complex<double> PauliMask::phase(std::uint64_t basis) const {
  // Y|0> = i|1>, Y|1> = -i|0>, Z|1> = -|1>.
  static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int minus = std::popcount(basis & sign) & 1;
  const auto base = kIPow[y_count & 3];
  return minus ? -base : base;
}

Hamiltonian build_vortex_hamiltonian(const SystemSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.size());
  if (spec.angles.xi.size() != n || spec.angles.theta.size() != n) {
    throw std::invalid_argument("spin angles are missing for this system");
  }
  Hamiltonian h;
  h.n_sites = spec.size();
  const auto& xi = spec.angles.xi;
  const auto& th = spec.angles.theta;
  for (const auto& b : spec.bonds) {
    const double planar = std::sin(th[b.p]) * std::sin(th[b.q]);
    const double cx = std::cos(xi[b.p]) * std::cos(xi[b.q]) * planar;
    const double cy = std::sin(xi[b.p]) * std::sin(xi[b.q]) * planar;
    const double cz = std::cos(th[b.p]) * std::cos(th[b.q]);
    const std::pair<double, PauliAxis> parts[] = {
        {cx, PauliAxis::kX}, {cy, PauliAxis::kY}, {cz, PauliAxis::kZ}};
    for (const auto& [c, axis] : parts) {
      if (std::abs(c) < kDropTolerance) continue;
      h.terms.push_back(PauliTerm::make(c, {{b.p, axis}, {b.q, axis}}));
    }
  }
  return h;
}

Hamiltonian build_xxz_hamiltonian(int n, double delta) {
  if (n < 2) throw std::invalid_argument("XXZ chain needs n >= 2");
  if (!std::isfinite(delta)) throw std::invalid_argument("delta must be finite");
  Hamiltonian h;
  h.n_sites = n;
  for (int i = 0; i + 1 < n; ++i) {
    h.terms.push_back(PauliTerm::make(1.0, {{i, PauliAxis::kX}, {i + 1, PauliAxis::kX}}));
    h.terms.push_back(PauliTerm::make(1.0, {{i, PauliAxis::kY}, {i + 1, PauliAxis::kY}}));
    if (std::abs(delta) >= kDropTolerance) {
      h.terms.push_back(
          PauliTerm::make(delta, {{i, PauliAxis::kZ}, {i + 1, PauliAxis::kZ}}));
    }
  }
  return h;
}

Hamiltonian build_hamiltonian(const SystemSpec& spec) {
  if (spec.kind == SystemKind::kXxz) return build_xxz_hamiltonian(spec.size(), spec.delta);
  return build_vortex_hamiltonian(spec);
}

double period_from_constants(const PhysicalConstants& constants) {
  return 2.0 * constants.hbar_ev_s / constants.exchange_ev() * 1e15;
}

Eigen::MatrixXcd matrix_of(const PauliTerm& term, int n_sites) {
  if (n_sites < 1 || n_sites > kMaxDenseQubits) {
    throw std::invalid_argument("dense matrices are limited to 13 qubits");
  }
  if (term.max_site() >= n_sites) throw std::invalid_argument("term exceeds register");

  using Mat2 = Eigen::Matrix2cd;
  const std::complex<double> i{0, 1};
  Mat2 id = Mat2::Identity();
  Mat2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;

  // Site 0 is the least significant bit, so it is the rightmost Kronecker factor.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = n_sites - 1; k >= 0; --k) {
    const Mat2* factor = &id;
    for (const auto& f : term.factors) {
      if (f.site != k) continue;
      factor = f.axis == PauliAxis::kX ? &x : f.axis == PauliAxis::kY ? &y : &z;
    }
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = m(r, c) * (*factor);
      }
    }
    m = std::move(next);
  }
  return term.coeff * m;
}

Eigen::MatrixXcd matrix_of(const Hamiltonian& h) {
  if (h.n_sites < 1 || h.n_sites > kMaxDenseQubits) {
    throw std::invalid_argument("dense matrices are limited to 13 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << h.n_sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  // Each Pauli string has exactly one non-zero per column.
  for (const auto& term : h.terms) {
    if (term.max_site() >= h.n_sites) throw std::invalid_argument("term exceeds register");
    const PauliMask mask(term);
    for (Eigen::Index col = 0; col < dim; ++col) {
      const auto b = static_cast<std::uint64_t>(col);
      m(static_cast<Eigen::Index>(b ^ mask.flip), col) += term.coeff * mask.phase(b);
    }
  }
  return m;
}

std::string dump_hamiltonian_json(const Hamiltonian& h) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& t : h.terms) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& f : t.factors) ops.push_back({f.site, std::string(1, to_char(f.axis))});
    j.push_back({{"coeff", t.coeff}, {"ops", ops}});
  }
  return j.dump() + "\n";
}

Hamiltonian parse_hamiltonian_json(std::string_view text, int n_sites) {
  Hamiltonian h;
  try {
    const auto j = nlohmann::json::parse(text);
    int max_site = -1;
    for (const auto& t : j) {
      std::vector<PauliFactor> factors;
      for (const auto& op : t.at("ops")) {
        const auto axis = op.at(1).get<std::string>();
        if (axis.size() != 1) throw std::invalid_argument("bad Pauli axis: " + axis);
        factors.push_back({op.at(0).get<int>(), parse_pauli_axis(axis[0])});
      }
      auto term = PauliTerm::make(t.at("coeff").get<double>(), std::move(factors));
      max_site = std::max(max_site, term.max_site());
      h.terms.push_back(std::move(term));
    }
    h.n_sites = n_sites >= 0 ? n_sites : max_site + 1;
    if (max_site >= h.n_sites) throw std::invalid_argument("term exceeds register");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("hamiltonian dump: ") + e.what());
  }
  return h;
}

}  // namespace vortexprop
