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

#include <stdexcept>

#include "json.hpp"
#include "vortexprop/lattice.hpp"

namespace vortexprop {

using nlohmann::json;

std::string dump_system_json(const SystemSpec& spec) {
  json j;
  j["kind"] = std::string(to_string(spec.kind));
  j["sites"] = json::array();
  for (const auto& s : spec.sites) {
    j["sites"].push_back({{"label", std::string(1, s.label)},
                          {"pos", {s.pos.x, s.pos.y}}});
  }
  j["holes"] = json::array();
  for (const auto& h : spec.holes) j["holes"].push_back({h.pos.x, h.pos.y});
  j["winding"] = spec.winding;
  j["chi"] = spec.chi;
  j["delta"] = spec.delta;
  return j.dump(2) + "\n";
}

SystemSpec parse_system_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("system file: ") + e.what());
  }
  try {
    const SystemKind kind = parse_system_kind(j.at("kind").get<std::string>());
    std::vector<SiteSpec> sites;
    for (const auto& s : j.at("sites")) {
      const auto label = s.at("label").get<std::string>();
      if (label.size() != 1) throw std::invalid_argument("site label must be one letter");
      const auto& pos = s.at("pos");
      sites.push_back({label[0], {pos.at(0).get<int>(), pos.at(1).get<int>()}});
    }
    std::vector<Position> holes;
    for (const auto& h : j.value("holes", json::array())) {
      holes.push_back({h.at(0).get<int>(), h.at(1).get<int>()});
    }
    const auto winding = j.value("winding", std::vector<int>{});
    return make_system(kind, sites, holes, winding, j.value("chi", 0.0),
                       j.value("delta", 0.0));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("system file: ") + e.what());
  }
}

}  // namespace vortexprop
