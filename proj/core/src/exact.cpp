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
#include <complex>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "vortexprop/evolve.hpp"

namespace vortexprop {

std::vector<std::uint64_t> reachable_block(const Hamiltonian& h, std::uint64_t seed) {
  if (h.n_sites < 1 || h.n_sites > kMaxQubits) throw std::invalid_argument("bad register size");
  if (seed >> h.n_sites) throw std::invalid_argument("seed basis state outside the register");
  std::vector<std::uint64_t> flips;
  for (const auto& t : h.terms) {
    const PauliMask m(t);
    if (m.flip != 0 && t.coeff != 0.0) flips.push_back(m.flip);
  }
  std::sort(flips.begin(), flips.end());
  flips.erase(std::unique(flips.begin(), flips.end()), flips.end());

  std::vector<bool> seen(std::size_t{1} << h.n_sites, false);
  std::vector<std::uint64_t> block{seed};
  seen[seed] = true;
  for (std::size_t head = 0; head < block.size(); ++head) {
    const auto b = block[head];
    for (auto f : flips) {
      const auto next = b ^ f;
      if (!seen[next]) {
        seen[next] = true;
        block.push_back(next);
      }
    }
  }
  std::sort(block.begin(), block.end());
  return block;
}

ExactPropagator::ExactPropagator(const Hamiltonian& h, std::uint64_t seed_basis)
    : n_qubits_(h.n_sites), block_(reachable_block(h, seed_basis)) {
  const auto dim = static_cast<Eigen::Index>(block_.size());
  if (block_.size() > (std::size_t{1} << kMaxDenseQubits)) {
    throw std::invalid_argument("reachable block exceeds the dense eigensolver limit");
  }
  std::unordered_map<std::uint64_t, Eigen::Index> row;
  row.reserve(block_.size());
  for (Eigen::Index i = 0; i < dim; ++i) row.emplace(block_[i], i);

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms) {
    const PauliMask mask(t);
    for (Eigen::Index c = 0; c < dim; ++c) {
      const auto b = block_[c];
      m(row.at(b ^ mask.flip), c) += t.coeff * mask.phase(b);
    }
  }

  eigenvalues_.resize(dim);
  const lapack_int n = static_cast<lapack_int>(dim);
  lapack_int info = 0;
  real_ = m.imag().cwiseAbs().maxCoeff() == 0.0;
  if (real_) {
    real_vectors_ = m.real();
    info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', n, real_vectors_.data(), n,
                          eigenvalues_.data());
  } else {
    complex_vectors_ = std::move(m);
    info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n, complex_vectors_.data(), n,
                          eigenvalues_.data());
  }
  if (info != 0) {
    throw std::runtime_error("eigendecomposition failed (info=" + std::to_string(info) + ")");
  }
}

Eigen::VectorXcd ExactPropagator::project(const StateVector& psi0) const {
  if (psi0.n_qubits() != n_qubits_) throw std::invalid_argument("register size mismatch");
  const auto dim = static_cast<Eigen::Index>(block_.size());
  Eigen::VectorXcd local(dim);
  double inside = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    local(i) = psi0[block_[i]];
    inside += std::norm(local(i));
  }
  if (std::abs(inside - psi0.norm_squared()) > 1e-12) {
    throw std::invalid_argument("initial state leaves the propagator block");
  }
  if (!real_) return complex_vectors_.adjoint() * local;
  Eigen::VectorXcd out(dim);
  out.real() = real_vectors_.transpose() * local.real();
  out.imag() = real_vectors_.transpose() * local.imag();
  return out;
}

StateVector ExactPropagator::evolve_projected(const Eigen::VectorXcd& coeffs,
                                              double t_over_T) const {
  const auto dim = static_cast<Eigen::Index>(block_.size());
  if (coeffs.size() != dim) throw std::invalid_argument("coefficient vector size mismatch");
  const double tau = kPhasePerPeriod * t_over_T;
  Eigen::VectorXcd phased(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    phased(k) = coeffs(k) * std::polar(1.0, -eigenvalues_(k) * tau);
  }
  Eigen::VectorXcd evolved(dim);
  if (real_) {
    evolved.real() = real_vectors_ * phased.real();
    evolved.imag() = real_vectors_ * phased.imag();
  } else {
    evolved = complex_vectors_ * phased;
  }
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits_, Amplitude{});
  for (Eigen::Index i = 0; i < dim; ++i) amps[block_[i]] = evolved(i);
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector ExactPropagator::evolve(const StateVector& psi0, double t_over_T) const {
  return evolve_projected(project(psi0), t_over_T);
}

}  // namespace vortexprop
