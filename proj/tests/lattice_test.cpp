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
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "vortexprop/lattice.hpp"

namespace vortexprop {
namespace {

constexpr double kPi = std::numbers::pi;

SystemSpec melon_at(double chi) {
  SystemParams p;
  p.chi = chi;
  return build_system(SystemKind::kMelon, p);
}

double wrap(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  if (a > 2 * kPi - 1e-12) a = 0.0;
  return a;
}

std::set<std::pair<int, int>> bond_pairs(const SystemSpec& s, BondKind kind) {
  std::set<std::pair<int, int>> out;
  for (const auto& b : s.bonds) {
    if (b.kind == kind) out.insert({b.p, b.q});
  }
  return out;
}

TEST(SystemKindTest, ParsesCaseInsensitively) {
  EXPECT_EQ(parse_system_kind("Melon"), SystemKind::kMelon);
  EXPECT_EQ(parse_system_kind("ANTIMELON"), SystemKind::kAntiMelon);
  EXPECT_EQ(parse_system_kind("combined"), SystemKind::kCombined);
  EXPECT_EQ(parse_system_kind("xxz"), SystemKind::kXxz);
  EXPECT_THROW(parse_system_kind("heisenberg"), std::invalid_argument);
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon, SystemKind::kCombined,
                 SystemKind::kXxz}) {
    EXPECT_EQ(parse_system_kind(to_string(k)), k);
  }
}

TEST(BuildSystemTest, MelonIsAnEightSiteRingAroundOneHole) {
  const auto s = build_system(SystemKind::kMelon);
  ASSERT_EQ(s.size(), 8);
  ASSERT_EQ(s.holes.size(), 1u);
  EXPECT_EQ(s.labels(), "abcdefgh");
  EXPECT_EQ(s.winding, std::vector<int>{1});
  for (const auto& site : s.sites) {
    const int d2 = squared_distance(site.pos, s.holes[0].pos);
    EXPECT_TRUE(d2 == 1 || d2 == 2) << site.label;
  }
  // Ring of 8 exchange bonds, each site with exactly two neighbours.
  const auto ex = bond_pairs(s, BondKind::kExchange);
  EXPECT_EQ(ex.size(), 8u);
  std::vector<int> degree(8, 0);
  for (auto [p, q] : ex) {
    ++degree[p];
    ++degree[q];
  }
  EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }));
  // Four next-nearest edge pairs plus four pairs through the hole.
  EXPECT_EQ(bond_pairs(s, BondKind::kSuperexchange).size(), 8u);
}

TEST(BuildSystemTest, LabelsRunCounterclockwiseFromLowerLeft) {
  const auto s = build_system(SystemKind::kMelon);
  const std::vector<Position> expected{{0, 0}, {1, 0}, {2, 0}, {2, 1},
                                       {2, 2}, {1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 8; ++i) EXPECT_EQ(s.sites[i].pos, expected[i]) << i;
  EXPECT_EQ(s.holes[0].pos, (Position{1, 1}));
}

TEST(BuildSystemTest, XxzTwoSites) {
  SystemParams p;
  p.n = 2;
  const auto s = build_system(SystemKind::kXxz, p);
  EXPECT_EQ(s.labels(), "ab");
  EXPECT_TRUE(s.holes.empty());
  ASSERT_EQ(s.bonds.size(), 1u);
  EXPECT_EQ(s.bonds[0], (Bond{0, 1, BondKind::kExchange}));
}

TEST(BuildSystemTest, XxzRejectsBadLength) {
  SystemParams p;
  p.n = 1;
  EXPECT_THROW(build_system(SystemKind::kXxz, p), std::invalid_argument);
  p.n = 27;
  EXPECT_THROW(build_system(SystemKind::kXxz, p), std::invalid_argument);
}

TEST(BuildSystemTest, CombinedHasThirteenSitesAndTwoHoles) {
  const auto s = build_system(SystemKind::kCombined);
  EXPECT_EQ(s.size(), 13);
  EXPECT_EQ(s.labels(), "abcdefghijklm");
  ASSERT_EQ(s.holes.size(), 2u);
  EXPECT_EQ(s.winding, (std::vector<int>{1, -1}));
  // f is the centre site, adjacent to both cores.
  const auto& f = s.sites[s.index_of('f')];
  EXPECT_EQ(f.index, 5);
  for (const auto& h : s.holes) EXPECT_EQ(squared_distance(f.pos, h.pos), 1);
}

TEST(BuildSystemTest, DeterministicBondOrder) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon, SystemKind::kCombined,
                 SystemKind::kXxz}) {
    EXPECT_EQ(build_system(k).bonds, build_system(k).bonds);
  }
}

TEST(EnumerateBondsTest, ExchangeFirstThenLexicographic) {
  for (auto k : {SystemKind::kMelon, SystemKind::kCombined}) {
    const auto s = build_system(k);
    bool seen_super = false;
    for (std::size_t i = 0; i < s.bonds.size(); ++i) {
      const auto& b = s.bonds[i];
      EXPECT_LT(b.p, b.q);
      if (b.kind == BondKind::kSuperexchange) seen_super = true;
      if (seen_super) EXPECT_EQ(b.kind, BondKind::kSuperexchange);
      if (i > 0 && s.bonds[i - 1].kind == b.kind) {
        EXPECT_LT(std::make_pair(s.bonds[i - 1].p, s.bonds[i - 1].q), std::make_pair(b.p, b.q));
      }
    }
  }
}

TEST(EnumerateBondsTest, DistancesMatchBondKind) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon, SystemKind::kCombined}) {
    const auto s = build_system(k);
    for (const auto& b : s.bonds) {
      const Position a = s.sites[b.p].pos, c = s.sites[b.q].pos;
      const int d2 = squared_distance(a, c);
      if (b.kind == BondKind::kExchange) {
        EXPECT_EQ(d2, 1);
      } else if (d2 != 2) {
        const Position mid2{a.x + c.x, a.y + c.y};
        const bool through_hole = std::any_of(s.holes.begin(), s.holes.end(), [&](const Hole& h) {
          return mid2 == Position{2 * h.pos.x, 2 * h.pos.y};
        });
        EXPECT_TRUE(through_hole) << b.p << "-" << b.q;
      }
    }
  }
}

TEST(EnumerateBondsTest, AcrossHolePairsOfTheRing) {
  const auto s = build_system(SystemKind::kMelon);
  const auto sup = bond_pairs(s, BondKind::kSuperexchange);
  // a-e, b-f, c-g, d-h straddle the hole.
  for (auto [p, q] : {std::pair{0, 4}, {1, 5}, {2, 6}, {3, 7}}) {
    EXPECT_TRUE(sup.count({p, q})) << p << "-" << q;
  }
}

TEST(EnumerateBondsTest, BondSetInvariantUnderPointGroup) {
  for (auto k : {SystemKind::kMelon, SystemKind::kCombined}) {
    const auto s = build_system(k);
    int symmetries = 0;
    for (int op = 0; op < kPointGroupOrder; ++op) {
      const auto perm = point_group_permutation(s, op);
      if (!perm) continue;
      ++symmetries;
      std::set<std::tuple<int, int, BondKind>> original, mapped;
      for (const auto& b : s.bonds) {
        original.insert({b.p, b.q, b.kind});
        const int p = (*perm)[b.p], q = (*perm)[b.q];
        mapped.insert({std::min(p, q), std::max(p, q), b.kind});
      }
      EXPECT_EQ(original, mapped) << "op " << op;
    }
    EXPECT_EQ(symmetries, k == SystemKind::kMelon ? 8 : 4);
  }
}

TEST(AssignAnglesTest, ThetaIsHalfPi) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon, SystemKind::kCombined,
                 SystemKind::kXxz}) {
    for (double t : build_system(k).angles.theta) EXPECT_EQ(t, kPi / 2);
  }
}

TEST(AssignAnglesTest, MelonSiteEastOfHoleHasZeroAngle) {
  const auto s = melon_at(0.0);
  const int d = s.index_of('d');
  ASSERT_EQ(s.sites[d].pos, (Position{2, 1}));
  EXPECT_EQ(s.angles.xi[d], 0.0);
}

TEST(AssignAnglesTest, AntiMelonSiteNorthOfHole) {
  SystemParams p;
  p.chi = 0.0;
  const auto s = build_system(SystemKind::kAntiMelon, p);
  const int f = s.index_of('f');
  ASSERT_EQ(s.sites[f].pos, (Position{1, 2}));
  EXPECT_DOUBLE_EQ(s.angles.xi[f], -kPi / 2);
}

TEST(AssignAnglesTest, MelonAnglesAreEighthTurns) {
  const auto s = melon_at(0.0);
  std::set<long> eighths;
  for (double xi : s.angles.xi) {
    const double k = wrap(xi) / (kPi / 4);
    EXPECT_NEAR(k, std::round(k), 1e-12);
    eighths.insert(std::lround(k) % 8);
  }
  EXPECT_EQ(eighths.size(), 8u);
}

TEST(AssignAnglesTest, GlobalOffsetAddsToEverySite) {
  const auto a = melon_at(0.0);
  const auto b = melon_at(0.37);
  for (int i = 0; i < 8; ++i) EXPECT_DOUBLE_EQ(b.angles.xi[i] - a.angles.xi[i], 0.37);
}

TEST(AssignAnglesTest, XxzAnglesAreZero) {
  for (double xi : build_system(SystemKind::kXxz).angles.xi) EXPECT_EQ(xi, 0.0);
}

// Rotating the lattice by a quarter turn about the core shifts every angle by w * pi/2.
TEST(AssignAnglesTest, QuarterTurnEquivariance) {
  for (auto [kind, w] : {std::pair{SystemKind::kMelon, 1}, {SystemKind::kAntiMelon, -1}}) {
    SystemParams p;
    p.chi = 0.0;
    const auto s = build_system(kind, p);
    const Position c2{2 * s.holes[0].pos.x, 2 * s.holes[0].pos.y};
    std::vector<SiteSpec> rotated;
    for (const auto& site : s.sites) {
      const Position d = apply_point_group(1, site.pos, c2);
      rotated.push_back({site.label, {d.x / 2, d.y / 2}});
    }
    const auto r = make_system(kind, rotated, {s.holes[0].pos}, s.winding, 0.0, 0.0);
    for (int i = 0; i < s.size(); ++i) {
      EXPECT_NEAR(wrap(r.angles.xi[i] - s.angles.xi[i] - w * kPi / 2), 0.0, 1e-12)
          << s.sites[i].label;
    }
  }
}

TEST(AssignAnglesTest, CombinedSitesFollowTheirOwnCore) {
  const auto s = build_system(SystemKind::kCombined);
  // a sits below the left core (+1), c below the right core (-1).
  EXPECT_DOUBLE_EQ(s.angles.xi[s.index_of('a')], -kPi / 2);
  EXPECT_DOUBLE_EQ(s.angles.xi[s.index_of('c')], kPi / 2);
  // f is equidistant; the tie goes to the first core, due east of it.
  EXPECT_DOUBLE_EQ(s.angles.xi[s.index_of('f')], 0.0);
}

TEST(MakeSystemTest, ValidatesInput) {
  const std::vector<Position> hole{{1, 1}};
  EXPECT_THROW(make_system(SystemKind::kMelon, {}, hole, {1}, 0, 0), std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {0, 0}}, {'a', {1, 0}}}, hole, {1}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {0, 0}}, {'b', {0, 0}}}, hole, {1}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {1, 1}}}, hole, {1}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'A', {0, 0}}}, hole, {1}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {0, 0}}}, hole, {}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {0, 0}}}, hole, {0}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {0, 0}}}, {}, {}, 0, 0),
               std::invalid_argument);
  EXPECT_THROW(make_system(SystemKind::kMelon, {{'a', {0, 0}}}, hole, {1}, NAN, 0),
               std::invalid_argument);
}

TEST(SystemSpecTest, IndexOfUnknownLabelThrows) {
  const auto s = build_system(SystemKind::kMelon);
  EXPECT_EQ(s.index_of('h'), 7);
  EXPECT_THROW(s.index_of('z'), std::invalid_argument);
}

TEST(InitialLabelTest, ReproductionStates) {
  EXPECT_EQ(default_initial_label(build_system(SystemKind::kMelon)), "10101010");
  EXPECT_EQ(default_initial_label(build_system(SystemKind::kAntiMelon)), "01010101");
  EXPECT_EQ(default_initial_label(build_system(SystemKind::kCombined)), "0101010110101");
  SystemParams p;
  p.n = 5;
  EXPECT_EQ(default_initial_label(build_system(SystemKind::kXxz, p)), "01010");
}

// The Combined initial state is a checkerboard: every exchange bond is antiparallel.
TEST(InitialLabelTest, CombinedStartIsNeelOnTheLattice) {
  const auto s = build_system(SystemKind::kCombined);
  const auto label = default_initial_label(s);
  auto bit = [&](int i) { return label[label.size() - 1 - i]; };
  for (const auto& b : s.bonds) {
    if (b.kind == BondKind::kExchange) EXPECT_NE(bit(b.p), bit(b.q)) << b.p << "-" << b.q;
  }
}

TEST(EquivalenceClassesTest, CombinedClasses) {
  const auto classes = site_equivalence_classes(build_system(SystemKind::kCombined));
  const std::vector<std::string> expected{"acjl", "bk", "dgim", "eh", "f"};
  EXPECT_EQ(classes, expected);
}

TEST(EquivalenceClassesTest, CombinedClassesPartitionAllSites) {
  const auto classes = site_equivalence_classes(build_system(SystemKind::kCombined));
  std::string all;
  for (const auto& c : classes) all += c;
  std::sort(all.begin(), all.end());
  EXPECT_EQ(all, "abcdefghijklm");
}

TEST(EquivalenceClassesTest, MelonVertexAndEdgeClasses) {
  for (auto k : {SystemKind::kMelon, SystemKind::kAntiMelon}) {
    const auto classes = site_equivalence_classes(build_system(k));
    EXPECT_EQ(classes, (std::vector<std::string>{"aceg", "bdfh"}));
  }
}

TEST(EquivalenceClassesTest, ClassesIndependentOfGlobalOffset) {
  for (double chi : {0.0, 0.3, 1.1}) {
    EXPECT_EQ(site_equivalence_classes(melon_at(chi)),
              (std::vector<std::string>{"aceg", "bdfh"}))
        << chi;
  }
}

TEST(EquivalenceClassesTest, AllUpStartHasFullSymmetry) {
  const auto s = melon_at(0.0);
  // Without the Neel constraint the quarter turn maps vertices onto vertices
  // and edges onto edges, so the classes are unchanged.
  EXPECT_EQ(site_equivalence_classes(s, "00000000"),
            (std::vector<std::string>{"aceg", "bdfh"}));
}

TEST(EquivalenceClassesTest, AsymmetricStartSplitsClasses) {
  const auto classes = site_equivalence_classes(melon_at(0.0), "00000001");
  EXPECT_GT(classes.size(), 2u);
  EXPECT_EQ(std::count_if(classes.begin(), classes.end(),
                          [](const std::string& c) { return c.find('a') != std::string::npos; }),
            1);
}

TEST(SystemJsonTest, BuiltinsRoundTripBitIdentically) {
  SystemParams xxz;
  xxz.n = 6;
  xxz.delta = 2.0;
  for (const auto& s : {build_system(SystemKind::kMelon), build_system(SystemKind::kAntiMelon),
                        build_system(SystemKind::kCombined),
                        build_system(SystemKind::kXxz, xxz)}) {
    const std::string text = dump_system_json(s);
    const auto back = parse_system_json(text);
    EXPECT_EQ(dump_system_json(back), text);
    EXPECT_EQ(back.bonds, s.bonds);
    EXPECT_EQ(back.angles.xi, s.angles.xi);
    EXPECT_EQ(back.chi, s.chi);
  }
}

TEST(SystemJsonTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_system_json("{"), std::invalid_argument);
  EXPECT_THROW(parse_system_json(R"({"kind":"melon"})"), std::invalid_argument);
  EXPECT_THROW(parse_system_json(
                   R"({"kind":"melon","sites":[{"label":"ab","pos":[0,0]}],"holes":[[1,1]],"winding":[1]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_system_json(
                   R"({"kind":"spiral","sites":[{"label":"a","pos":[0,0]}]})"),
               std::invalid_argument);
}

TEST(SystemJsonTest, CustomGeometryLoads) {
  const auto s = parse_system_json(R"({
    "kind": "melon",
    "sites": [{"label":"a","pos":[0,0]},{"label":"b","pos":[1,0]},{"label":"c","pos":[2,0]},
              {"label":"d","pos":[2,1]}],
    "holes": [[1,1]], "winding": [1], "chi": 0.25, "delta": 0})");
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.chi, 0.25);
  EXPECT_EQ(bond_pairs(s, BondKind::kExchange).size(), 3u);
}

}  // namespace
}  // namespace vortexprop
