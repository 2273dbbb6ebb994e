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
#include <map>
#include <numeric>
#include <stdexcept>

#include "vortexprop/hamiltonian.hpp"
#include "vortexprop/lattice.hpp"

namespace vortexprop {
namespace {

using TermKey = std::vector<PauliFactor>;

// Rotation of a Pauli axis by k quarter turns about z: X -> Y -> -X -> -Y.
std::pair<PauliAxis, int> rotate_axis(PauliAxis axis, int k) {
  if (axis == PauliAxis::kZ) return {PauliAxis::kZ, +1};
  const int start = axis == PauliAxis::kX ? 0 : 1;
  const int turned = (start + k) % 4;
  static constexpr PauliAxis kAxis[4] = {PauliAxis::kX, PauliAxis::kY, PauliAxis::kX,
                                         PauliAxis::kY};
  static constexpr int kSign[4] = {+1, +1, -1, -1};
  return {kAxis[turned], kSign[turned]};
}

class GaugeSearch {
 public:
  GaugeSearch(const Hamiltonian& h, const std::vector<int>& perm)
      : h_(h), perm_(perm), n_(h.n_sites) {
    for (const auto& t : h.terms) coeffs_[t.factors] += t.coeff;
    for (const auto& [key, c] : coeffs_) {
      if (std::abs(c) > kDropTolerance) terms_.push_back({key, c});
    }
    order_ = traversal_order();
    std::vector<int> rank(n_);
    for (int i = 0; i < n_; ++i) rank[order_[i]] = i;
    closing_.resize(n_);
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      int last = 0;
      for (const auto& f : terms_[t].first) last = std::max(last, rank[f.site]);
      closing_[last].push_back(t);
    }
  }

  bool solve() {
    turns_.assign(n_, 0);
    return assign(0);
  }

 private:
  std::vector<int> traversal_order() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [key, c] : terms_) {
      for (const auto& a : key)
        for (const auto& b : key)
          if (a.site != b.site) adj[a.site].push_back(b.site);
    }
    std::vector<int> order;
    std::vector<bool> seen(n_, false);
    for (int root = 0; root < n_; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      order.push_back(root);
      for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
        for (int nb : adj[order[head]]) {
          if (!seen[nb]) {
            seen[nb] = true;
            order.push_back(nb);
          }
        }
      }
    }
    return order;
  }

  bool term_maps(const std::pair<TermKey, double>& term) const {
    TermKey image;
    int sign = 1;
    for (const auto& f : term.first) {
      const auto [axis, s] = rotate_axis(f.axis, turns_[f.site]);
      image.push_back({perm_[f.site], axis});
      sign *= s;
    }
    std::sort(image.begin(), image.end());
    const auto it = coeffs_.find(image);
    if (it == coeffs_.end()) return false;
    const double expected = sign * term.second;
    return std::abs(it->second - expected) <= 1e-12 * std::max(1.0, std::abs(expected));
  }

  bool assign(int depth) {
    if (depth == n_) return true;
    const int site = order_[depth];
    for (int k = 0; k < 4; ++k) {
      turns_[site] = k;
      bool ok = true;
      for (std::size_t t : closing_[depth]) {
        if (!term_maps(terms_[t])) {
          ok = false;
          break;
        }
      }
      if (ok && assign(depth + 1)) return true;
    }
    return false;
  }

  const Hamiltonian& h_;
  const std::vector<int>& perm_;
  int n_;
  std::map<TermKey, double> coeffs_;
  std::vector<std::pair<TermKey, double>> terms_;
  std::vector<int> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<int> turns_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::string> site_equivalence_classes(const SystemSpec& spec,
                                                  std::string_view initial_label) {
  const std::string label =
      initial_label.empty() ? default_initial_label(spec) : std::string(initial_label);
  if (static_cast<int>(label.size()) != spec.size()) {
    throw std::invalid_argument("initial label length does not match the system");
  }
  const int n = spec.size();
  auto bit = [&](int site) { return label[n - 1 - site]; };

  const Hamiltonian h = build_hamiltonian(spec);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);

  for (int op = 1; op < kPointGroupOrder; ++op) {
    const auto perm = point_group_permutation(spec, op);
    if (!perm) continue;
    bool state_fixed = true;
    for (int p = 0; p < n; ++p) state_fixed &= bit(p) == bit((*perm)[p]);
    if (!state_fixed) continue;
    GaugeSearch search(h, *perm);
    if (!search.solve()) continue;
    for (int p = 0; p < n; ++p) {
      parent[find_root(parent, p)] = find_root(parent, (*perm)[p]);
    }
  }

  std::map<int, std::string> groups;
  for (int p = 0; p < n; ++p) groups[find_root(parent, p)].push_back(spec.sites[p].label);
  std::vector<std::string> classes;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    classes.push_back(members);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace vortexprop
