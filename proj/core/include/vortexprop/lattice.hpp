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

#ifndef VORTEXPROP_LATTICE_HPP_
#define VORTEXPROP_LATTICE_HPP_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vortexprop {

enum class SystemKind { kMelon, kAntiMelon, kCombined, kXxz };

std::string_view to_string(SystemKind kind);

/// Accepts "melon", "antimelon", "combined" and "xxz" (case-insensitive).
/// Throws std::invalid_argument otherwise.
SystemKind parse_system_kind(std::string_view name);

bool is_vortex(SystemKind kind);

struct Position {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

inline int squared_distance(Position a, Position b) {
  const int dx = a.x - b.x;
  const int dy = a.y - b.y;
  return dx * dx + dy * dy;
}

struct Site {
  char label = 'a';
  int index = 0;  // bit position in the computational basis
  Position pos;
};

struct Hole {
  Position pos;
};

enum class BondKind { kExchange, kSuperexchange };

struct Bond {
  int p = 0;
  int q = 0;
  BondKind kind = BondKind::kExchange;

  friend bool operator==(const Bond&, const Bond&) = default;
};

struct SpinAngles {
  std::vector<double> xi;     // azimuthal angle per site (radians)
  std::vector<double> theta;  // polar angle per site (radians)
};

/// A fully populated lattice: geometry, bonds and spin angles.
///
/// Immutable after construction through make_system() or build_system().
struct SystemSpec {
  SystemKind kind = SystemKind::kMelon;
  std::vector<Site> sites;
  std::vector<Hole> holes;
  std::vector<Bond> bonds;
  SpinAngles angles;
  std::vector<int> winding;  // one entry per hole, +1 meron, -1 antimeron
  double chi = 0.0;          // global offset added to every xi
  double delta = 0.0;        // XXZ anisotropy; unused for vortex kinds

  int size() const { return static_cast<int>(sites.size()); }

  /// Returns the index of the site with `label`; throws std::invalid_argument
  /// when no such site exists.
  int index_of(char label) const;

  std::string labels() const;
};

/// Overrides for build_system(). Unset fields take the built-in defaults.
struct SystemParams {
  int n = 8;                    // XXZ chain length
  double delta = 0.0;           // XXZ anisotropy
  std::optional<double> chi;    // global xi offset
};

/// Built-in geometry for each kind. Melon and AntiMelon share an 8-site ring
/// around one hole; Combined is a 5x3 block with two holes whose centre site
/// is `f`; XXZ is an open chain along the x axis.
SystemSpec build_system(SystemKind kind, const SystemParams& params = {});

struct SiteSpec {
  char label = 'a';
  Position pos;
};

/// General constructor used by build_system() and the JSON loader. Sites are
/// indexed in the order given; bonds are derived from the geometry.
SystemSpec make_system(SystemKind kind, const std::vector<SiteSpec>& sites,
                       const std::vector<Position>& holes,
                       const std::vector<int>& winding, double chi,
                       double delta);

/// Exchange bonds join squared distance 1. Superexchange bonds join squared
/// distance 2 and any pair whose midpoint is a hole. Exchange bonds come
/// first, each group in lexicographic (p, q) order.
std::vector<Bond> enumerate_bonds(const std::vector<Site>& sites,
                                  const std::vector<Hole>& holes);

/// xi_p = w * atan2(y_p - y_h, x_p - x_h) + chi for the nearest hole h
/// (ties go to the lower hole index); theta_p = pi/2. XXZ gets xi = 0.
SpinAngles assign_angles(const SystemSpec& spec);

/// Initial basis label used by the reproduction runs: |10101010> for Melon,
/// |01010101> for AntiMelon, |0101010110101> for Combined and a Neel state
/// (site a up) for XXZ.
std::string default_initial_label(const SystemSpec& spec);

/// Orbits of the sites under every lattice point-group operation that maps
/// the Hamiltonian onto itself (up to per-site quarter-turn spin rotations
/// about z) and leaves `initial_label` unchanged. Empty `initial_label` means
/// default_initial_label(spec). Each class is sorted; classes are ordered by
/// their first label.
std::vector<std::string> site_equivalence_classes(
    const SystemSpec& spec, std::string_view initial_label = {});

/// The eight square point-group operations, applied to doubled coordinates
/// about the bounding-box centre of the sites. Index 0 is the identity,
/// 1..3 rotations by 90/180/270 degrees, 4..7 reflections.
inline constexpr int kPointGroupOrder = 8;
std::optional<std::vector<int>> point_group_permutation(const SystemSpec& spec,
                                                        int op);
Position apply_point_group(int op, Position p, Position doubled_center);
Position doubled_center(const SystemSpec& spec);

/// System file (JSON): {"kind", "sites":[{"label","pos":[x,y]}],
/// "holes":[[x,y]], "winding":[w...], "chi", "delta"}.
std::string dump_system_json(const SystemSpec& spec);
SystemSpec parse_system_json(std::string_view text);

}  // namespace vortexprop

#endif  // VORTEXPROP_LATTICE_HPP_
