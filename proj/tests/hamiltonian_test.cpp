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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vortexprop/hamiltonian.hpp"

namespace vortexprop {
namespace {

constexpr double kPi = std::numbers::pi;

SystemSpec two_site_vortex(double xi_p, double xi_q) {
  // Two sites east and north of a hole; chi shifts both angles together, so
  // set the first angle through chi and the second through the geometry.
  auto s = make_system(SystemKind::kMelon, {{'a', {2, 1}}, {'b', {2, 2}}}, {{1, 1}}, {1}, 0.0, 0.0);
  s.angles.xi = {xi_p, xi_q};
  return s;
}

std::vector<double> spectrum(const Hamiltonian& h) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_of(h));
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

TEST(PauliTermTest, MakeSortsAndValidates) {
  const auto t = PauliTerm::make(0.5, {{2, PauliAxis::kY}, {0, PauliAxis::kX}});
  ASSERT_EQ(t.support_size(), 2);
  EXPECT_EQ(t.factors[0].site, 0);
  EXPECT_EQ(t.max_site(), 2);
  EXPECT_EQ(t.str(), "0.5*X0 Y2");
  EXPECT_THROW(PauliTerm::make(1.0, {}), std::invalid_argument);
  EXPECT_THROW(PauliTerm::make(1.0, {{1, PauliAxis::kX}, {1, PauliAxis::kZ}}),
               std::invalid_argument);
  EXPECT_THROW(PauliTerm::make(INFINITY, {{0, PauliAxis::kX}}), std::invalid_argument);
  EXPECT_THROW(PauliTerm::make(1.0, {{-1, PauliAxis::kX}}), std::invalid_argument);
}

TEST(PauliAxisTest, CharRoundTrip) {
  for (auto a : {PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ}) {
    EXPECT_EQ(parse_pauli_axis(to_char(a)), a);
  }
  EXPECT_THROW(parse_pauli_axis('W'), std::invalid_argument);
}

TEST(VortexHamiltonianTest, AlignedBondGivesSingleXX) {
  const auto h = build_vortex_hamiltonian(two_site_vortex(0.0, 0.0));
  ASSERT_EQ(h.terms.size(), 1u);
  EXPECT_EQ(h.terms[0].coeff, 1.0);
  EXPECT_EQ(h.terms[0].str(), "1*X0 X1");
}

TEST(VortexHamiltonianTest, OrthogonalBondContributesNothing) {
  const auto h = build_vortex_hamiltonian(two_site_vortex(0.0, kPi / 2));
  EXPECT_TRUE(h.terms.empty());
}

TEST(VortexHamiltonianTest, XTermPrecedesYTerm) {
  const auto h = build_vortex_hamiltonian(two_site_vortex(kPi / 4, kPi / 4));
  ASSERT_EQ(h.terms.size(), 2u);
  EXPECT_EQ(h.terms[0].factors[0].axis, PauliAxis::kX);
  EXPECT_EQ(h.terms[1].factors[0].axis, PauliAxis::kY);
  EXPECT_NEAR(h.terms[0].coeff, 0.5, 1e-15);
  EXPECT_NEAR(h.terms[1].coeff, 0.5, 1e-15);
}

// Independent evaluation of the trig products from the site positions.
TEST(VortexHamiltonianTest, MelonCoefficientsMatchTrigOracle) {
  for (double chi : {0.0, 0.3, 0.56898991999771198}) {
    SystemParams p;
    p.chi = chi;
    const auto s = build_system(SystemKind::kMelon, p);
    std::vector<std::tuple<double, int, int, char>> expected;
    for (const auto& b : s.bonds) {
      auto angle = [&](int i) {
        const auto pos = s.sites[i].pos;
        return std::atan2(pos.y - 1.0, pos.x - 1.0) + chi;
      };
      const double cx = std::cos(angle(b.p)) * std::cos(angle(b.q));
      const double cy = std::sin(angle(b.p)) * std::sin(angle(b.q));
      if (std::abs(cx) >= 1e-15) expected.emplace_back(cx, b.p, b.q, 'X');
      if (std::abs(cy) >= 1e-15) expected.emplace_back(cy, b.p, b.q, 'Y');
    }
    const auto h = build_vortex_hamiltonian(s);
    ASSERT_EQ(h.terms.size(), expected.size()) << "chi " << chi;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& [c, pp, qq, ax] = expected[i];
      const auto& t = h.terms[i];
      EXPECT_NEAR(t.coeff, c, 1e-14);
      ASSERT_EQ(t.support_size(), 2);
      EXPECT_EQ(t.factors[0].site, pp);
      EXPECT_EQ(t.factors[1].site, qq);
      EXPECT_EQ(to_char(t.factors[0].axis), ax);
      EXPECT_EQ(to_char(t.factors[1].axis), ax);
    }
  }
}

TEST(VortexHamiltonianTest, MelonAtZeroOffsetHasFourteenTerms) {
  SystemParams p;
  p.chi = 0.0;
  EXPECT_EQ(build_hamiltonian(build_system(SystemKind::kMelon, p)).terms.size(), 14u);
}

TEST(VortexHamiltonianTest, NoZTermsForInPlaneSpins) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon, SystemKind::kCombined}) {
    for (const auto& t : build_hamiltonian(build_system(k)).terms) {
      for (const auto& f : t.factors) EXPECT_NE(f.axis, PauliAxis::kZ);
    }
  }
}

TEST(XxzHamiltonianTest, TwoSites) {
  const auto h0 = build_xxz_hamiltonian(2, 0.0);
  ASSERT_EQ(h0.terms.size(), 2u);
  EXPECT_EQ(h0.terms[0].str(), "1*X0 X1");
  EXPECT_EQ(h0.terms[1].str(), "1*Y0 Y1");
  const auto h2 = build_xxz_hamiltonian(2, 2.0);
  ASSERT_EQ(h2.terms.size(), 3u);
  EXPECT_EQ(h2.terms[2].str(), "2*Z0 Z1");
}

TEST(XxzHamiltonianTest, EightSitesFourteenTerms) {
  EXPECT_EQ(build_xxz_hamiltonian(8, 0.0).terms.size(), 14u);
  EXPECT_EQ(build_xxz_hamiltonian(8, 2.0).terms.size(), 21u);
  EXPECT_THROW(build_xxz_hamiltonian(1, 0.0), std::invalid_argument);
}

TEST(ConstantsTest, ExchangeAndPeriod) {
  const PhysicalConstants c;
  EXPECT_NEAR(c.exchange_ev(), 0.0325, 1e-15);
  const double t = period_from_constants();
  EXPECT_NEAR(t, 2 * 6.582119569e-16 / 0.0325 * 1e15, 1e-9);
  EXPECT_NEAR(t, c.t_period_fs, c.t_period_fs * 1e-4);
}

TEST(ConstantsTest, DoublingJHalvesPeriod) {
  PhysicalConstants c;
  const double t1 = period_from_constants(c);
  c.u_ev /= 2;  // J = 2t^2/U doubles
  EXPECT_NEAR(period_from_constants(c), t1 / 2, 1e-12);
}

TEST(MatrixOfTest, SingleX) {
  Hamiltonian h{1, {PauliTerm::make(1.0, {{0, PauliAxis::kX}})}};
  Eigen::MatrixXcd expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_EQ(matrix_of(h), expected);
}

TEST(MatrixOfTest, ZZIsDiagonal) {
  Hamiltonian h{2, {PauliTerm::make(1.0, {{0, PauliAxis::kZ}, {1, PauliAxis::kZ}})}};
  const Eigen::MatrixXcd m = matrix_of(h);
  Eigen::VectorXcd d(4);
  d << 1, -1, -1, 1;
  EXPECT_EQ(m, Eigen::MatrixXcd(d.asDiagonal()));
}

TEST(MatrixOfTest, SiteZeroIsLeastSignificant) {
  const Eigen::MatrixXcd m = matrix_of(PauliTerm::make(1.0, {{0, PauliAxis::kX}}), 2);
  EXPECT_EQ(m(1, 0), std::complex<double>(1.0));  // |00> -> |01>
  EXPECT_EQ(m(2, 0), std::complex<double>(0.0));
}

TEST(MatrixOfTest, MaskAssemblyMatchesKroneckerProducts) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    Hamiltonian h{n, {}};
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(1 << n, 1 << n);
    for (int k = 0; k < 3; ++k) {
      auto t = testing::random_term(rng, n);
      sum += matrix_of(t, n);
      h.terms.push_back(std::move(t));
    }
    EXPECT_LT((matrix_of(h) - sum).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(MatrixOfTest, GeneratedHamiltoniansAreHermitianWithZeroDiagonal) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon}) {
    const Eigen::MatrixXcd m = matrix_of(build_hamiltonian(build_system(k)));
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(m.diagonal().cwiseAbs().maxCoeff(), 0.0);
  }
  SystemParams p;
  p.n = 6;
  p.delta = 2.0;
  const Eigen::MatrixXcd x = matrix_of(build_hamiltonian(build_system(SystemKind::kXxz, p)));
  EXPECT_LT((x - x.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(MatrixOfTest, RejectsLargeRegisters) {
  Hamiltonian h{14, {PauliTerm::make(1.0, {{0, PauliAxis::kX}})}};
  EXPECT_THROW(matrix_of(h), std::invalid_argument);
}

// A global quarter-turn offset is a site-wise z rotation by pi/2, which maps
// the Hamiltonian onto a unitarily equivalent one.
TEST(SpectrumTest, InvariantUnderQuarterTurnOffsets) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon}) {
    SystemParams p;
    p.chi = 0.2;
    const auto base = spectrum(build_hamiltonian(build_system(k, p)));
    for (int q = 1; q < 4; ++q) {
      p.chi = 0.2 + q * kPi / 2;
      const auto other = spectrum(build_hamiltonian(build_system(k, p)));
      for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(base[i], other[i], 1e-10);
    }
  }
}

// XX and YY couplings weigh cos and sin products separately, so a generic
// offset is not a symmetry of the bond sum.
TEST(SpectrumTest, GenericOffsetChangesSpectrum) {
  SystemParams p;
  p.chi = 0.0;
  const auto a = spectrum(build_hamiltonian(build_system(SystemKind::kMelon, p)));
  p.chi = 0.3;
  const auto b = spectrum(build_hamiltonian(build_system(SystemKind::kMelon, p)));
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  EXPECT_GT(diff, 1e-3);
}

TEST(HamiltonianJsonTest, RoundTrip) {
  for (auto k : {SystemKind::kMelon, SystemKind::kCombined, SystemKind::kXxz}) {
    const auto h = build_hamiltonian(build_system(k));
    const auto text = dump_hamiltonian_json(h);
    const auto back = parse_hamiltonian_json(text, h.n_sites);
    ASSERT_EQ(back.terms.size(), h.terms.size());
    for (std::size_t i = 0; i < h.terms.size(); ++i) {
      EXPECT_EQ(back.terms[i].coeff, h.terms[i].coeff);
      EXPECT_EQ(back.terms[i].factors, h.terms[i].factors);
    }
    EXPECT_EQ(dump_hamiltonian_json(back), text);
  }
}

TEST(HamiltonianJsonTest, Format) {
  Hamiltonian h{2, {PauliTerm::make(0.5, {{0, PauliAxis::kX}, {1, PauliAxis::kY}})}};
  EXPECT_EQ(dump_hamiltonian_json(h), "[{\"coeff\":0.5,\"ops\":[[0,\"X\"],[1,\"Y\"]]}]\n");
  EXPECT_EQ(parse_hamiltonian_json("[]").terms.size(), 0u);
  EXPECT_THROW(parse_hamiltonian_json("[{\"coeff\":1,\"ops\":[[0,\"Q\"]]}]"),
               std::invalid_argument);
  EXPECT_THROW(parse_hamiltonian_json("[{\"coeff\":1,\"ops\":[[3,\"X\"]]}]", 2),
               std::invalid_argument);
  EXPECT_THROW(parse_hamiltonian_json("{"), std::invalid_argument);
}

}  // namespace
}  // namespace vortexprop
