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

#include "vortexprop/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "builtin_layouts.hpp"

namespace vortexprop {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::kMelon: return "melon";
    case SystemKind::kAntiMelon: return "antimelon";
    case SystemKind::kCombined: return "combined";
    case SystemKind::kXxz: return "xxz";
  }
  return "unknown";
}

SystemKind parse_system_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "melon") return SystemKind::kMelon;
  if (lower == "antimelon" || lower == "anti-melon") return SystemKind::kAntiMelon;
  if (lower == "combined") return SystemKind::kCombined;
  if (lower == "xxz") return SystemKind::kXxz;
  throw std::invalid_argument("unknown system kind: " + std::string(name));
}

bool is_vortex(SystemKind kind) { return kind != SystemKind::kXxz; }

int SystemSpec::index_of(char label) const {
  for (const auto& s : sites) {
    if (s.label == label) return s.index;
  }
  throw std::invalid_argument(std::string("unknown site label: ") + label);
}

std::string SystemSpec::labels() const {
  std::string out;
  for (const auto& s : sites) out.push_back(s.label);
  return out;
}

std::vector<Bond> enumerate_bonds(const std::vector<Site>& sites,
                                  const std::vector<Hole>& holes) {
  std::vector<Bond> exchange;
  std::vector<Bond> superexchange;
  const int n = static_cast<int>(sites.size());
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Position a = sites[p].pos;
      const Position b = sites[q].pos;
      const int d2 = squared_distance(a, b);
      if (d2 == 1) {
        exchange.push_back({p, q, BondKind::kExchange});
        continue;
      }
      if (d2 == 2) {
        superexchange.push_back({p, q, BondKind::kSuperexchange});
        continue;
      }
      // Doubled midpoint keeps the comparison in integers.
      const Position mid2{a.x + b.x, a.y + b.y};
      const bool straddles = std::any_of(holes.begin(), holes.end(), [&](const Hole& h) {
        return mid2 == Position{2 * h.pos.x, 2 * h.pos.y};
      });
      if (straddles) superexchange.push_back({p, q, BondKind::kSuperexchange});
    }
  }
  exchange.insert(exchange.end(), superexchange.begin(), superexchange.end());
  return exchange;
}

SpinAngles assign_angles(const SystemSpec& spec) {
  SpinAngles angles;
  const auto n = spec.sites.size();
  angles.xi.assign(n, 0.0);
  angles.theta.assign(n, std::numbers::pi / 2);
  if (!is_vortex(spec.kind) || spec.holes.empty()) return angles;

  for (std::size_t i = 0; i < n; ++i) {
    const Position p = spec.sites[i].pos;
    std::size_t nearest = 0;
    int best = squared_distance(p, spec.holes[0].pos);
    for (std::size_t h = 1; h < spec.holes.size(); ++h) {
      const int d2 = squared_distance(p, spec.holes[h].pos);
      if (d2 < best) {
        best = d2;
        nearest = h;
      }
    }
    const Position core = spec.holes[nearest].pos;
    const double phi = std::atan2(static_cast<double>(p.y - core.y),
                                  static_cast<double>(p.x - core.x));
    angles.xi[i] = spec.winding[nearest] * phi + spec.chi;
  }
  return angles;
}

SystemSpec make_system(SystemKind kind, const std::vector<SiteSpec>& sites,
                       const std::vector<Position>& holes,
                       const std::vector<int>& winding, double chi,
                       double delta) {
  if (sites.empty()) throw std::invalid_argument("system has no sites");
  if (sites.size() > 26) throw std::invalid_argument("at most 26 sites are supported");
  if (!std::isfinite(chi) || !std::isfinite(delta)) {
    throw std::invalid_argument("chi and delta must be finite");
  }
  if (holes.size() != winding.size()) {
    throw std::invalid_argument("winding needs exactly one entry per hole");
  }
  if (is_vortex(kind) && holes.empty()) {
    throw std::invalid_argument("vortex systems need at least one hole");
  }

  SystemSpec spec;
  spec.kind = kind;
  spec.chi = chi;
  spec.delta = delta;
  spec.winding = winding;

  std::set<char> labels;
  std::set<Position> occupied;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& s = sites[i];
    if (!std::islower(static_cast<unsigned char>(s.label))) {
      throw std::invalid_argument("site labels must be lowercase letters");
    }
    if (!labels.insert(s.label).second) {
      throw std::invalid_argument(std::string("duplicate site label: ") + s.label);
    }
    if (!occupied.insert(s.pos).second) {
      throw std::invalid_argument("two sites share a position");
    }
    spec.sites.push_back({s.label, static_cast<int>(i), s.pos});
  }
  for (const auto& h : holes) {
    if (occupied.count(h)) throw std::invalid_argument("hole coincides with a site");
    spec.holes.push_back({h});
  }
  for (int w : winding) {
    if (w == 0) throw std::invalid_argument("winding numbers must be non-zero");
  }

  spec.bonds = enumerate_bonds(spec.sites, spec.holes);
  spec.angles = assign_angles(spec);
  return spec;
}

namespace {

std::vector<SiteSpec> to_site_specs(const std::vector<Position>& positions) {
  std::vector<SiteSpec> out;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out.push_back({static_cast<char>('a' + i), positions[i]});
  }
  return out;
}

}  // namespace

SystemSpec build_system(SystemKind kind, const SystemParams& params) {
  switch (kind) {
    case SystemKind::kMelon:
    case SystemKind::kAntiMelon: {
      const auto& layout = kind == SystemKind::kMelon ? builtin::kMelonLayout
                                                      : builtin::kAntiMelonLayout;
      const int w = kind == SystemKind::kMelon ? +1 : -1;
      const std::vector<Position> ring(layout.ring.begin(), layout.ring.end());
      return make_system(kind, to_site_specs(ring), {builtin::kSingleHole}, {w},
                         params.chi.value_or(layout.chi), 0.0);
    }
    case SystemKind::kCombined: {
      const std::vector<Position> block(builtin::kCombinedSites.begin(),
                                        builtin::kCombinedSites.end());
      const std::vector<Position> holes(builtin::kCombinedHoles.begin(),
                                        builtin::kCombinedHoles.end());
      return make_system(kind, to_site_specs(block), holes, {+1, -1},
                         params.chi.value_or(0.0), 0.0);
    }
    case SystemKind::kXxz: {
      if (params.n < 2 || params.n > 26) {
        throw std::invalid_argument("XXZ chain needs 2 <= n <= 26");
      }
      std::vector<Position> chain;
      for (int i = 0; i < params.n; ++i) chain.push_back({i, 0});
      return make_system(kind, to_site_specs(chain), {}, {},
                         params.chi.value_or(0.0), params.delta);
    }
  }
  throw std::invalid_argument("unknown system kind");
}

std::string default_initial_label(const SystemSpec& spec) {
  switch (spec.kind) {
    case SystemKind::kMelon:
      if (spec.size() == 8) return "10101010";
      break;
    case SystemKind::kAntiMelon:
      if (spec.size() == 8) return "01010101";
      break;
    case SystemKind::kCombined:
      if (spec.size() == 13) return "0101010110101";
      break;
    case SystemKind::kXxz:
      break;
  }
  // Neel pattern with site a (rightmost character) up.
  std::string label(spec.size(), '0');
  for (int k = 0; k < spec.size(); ++k) {
    label[spec.size() - 1 - k] = (k % 2 == 1) ? '1' : '0';
  }
  return label;
}

Position doubled_center(const SystemSpec& spec) {
  int xmin = spec.sites.front().pos.x, xmax = xmin;
  int ymin = spec.sites.front().pos.y, ymax = ymin;
  for (const auto& s : spec.sites) {
    xmin = std::min(xmin, s.pos.x);
    xmax = std::max(xmax, s.pos.x);
    ymin = std::min(ymin, s.pos.y);
    ymax = std::max(ymax, s.pos.y);
  }
  return {xmin + xmax, ymin + ymax};
}

Position apply_point_group(int op, Position p, Position c2) {
  const int u = 2 * p.x - c2.x;
  const int v = 2 * p.y - c2.y;
  int ru = u, rv = v;
  switch (op) {
    case 0: ru = u; rv = v; break;
    case 1: ru = -v; rv = u; break;
    case 2: ru = -u; rv = -v; break;
    case 3: ru = v; rv = -u; break;
    case 4: ru = -u; rv = v; break;
    case 5: ru = u; rv = -v; break;
    case 6: ru = v; rv = u; break;
    case 7: ru = -v; rv = -u; break;
    default: throw std::out_of_range("point-group op must be in [0, 8)");
  }
  // Returned coordinates are doubled; callers halve them after checking parity.
  return {ru + c2.x, rv + c2.y};
}

std::optional<std::vector<int>> point_group_permutation(const SystemSpec& spec,
                                                        int op) {
  const Position c2 = doubled_center(spec);
  auto undouble = [](Position d) -> std::optional<Position> {
    if (d.x % 2 != 0 || d.y % 2 != 0) return std::nullopt;
    return Position{d.x / 2, d.y / 2};
  };

  std::vector<int> perm(spec.sites.size(), -1);
  for (const auto& s : spec.sites) {
    const auto image = undouble(apply_point_group(op, s.pos, c2));
    if (!image) return std::nullopt;
    auto it = std::find_if(spec.sites.begin(), spec.sites.end(),
                           [&](const Site& t) { return t.pos == *image; });
    if (it == spec.sites.end()) return std::nullopt;
    perm[s.index] = it->index;
  }
  for (const auto& h : spec.holes) {
    const auto image = undouble(apply_point_group(op, h.pos, c2));
    if (!image) return std::nullopt;
    const bool hit = std::any_of(spec.holes.begin(), spec.holes.end(),
                                 [&](const Hole& g) { return g.pos == *image; });
    if (!hit) return std::nullopt;
  }
  return perm;
}

}  // namespace vortexprop
