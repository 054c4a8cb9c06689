// Copyright 2026 The gte Authors.
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

#include "gte/trace_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gte/rng.hpp"

namespace gte {

std::string to_string(GraphFlavor f) { return f == GraphFlavor::Real ? "real" : "parity"; }

GraphFlavor graph_flavor_from_string(const std::string& tag) {
  if (tag == "real") return GraphFlavor::Real;
  if (tag == "parity") return GraphFlavor::Parity;
  throw std::invalid_argument("unknown graph flavor '" + tag + "' (expected real or parity)");
}

TraceGraph::TraceGraph(int order, int vertices, GraphFlavor flavor, std::vector<Edge> edges)
    : order_(order), n_(vertices), flavor_(flavor), edges_(std::move(edges)) {
  if (order < 1) throw std::invalid_argument("trace graph order must be positive");
  if (vertices < 1) throw std::invalid_argument("trace graph needs at least one vertex");
}

std::vector<int> TraceGraph::slot_edges() const {
  std::vector<int> out(static_cast<std::size_t>(n_ * order_), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out[static_cast<std::size_t>(slot_id(edges_[e].first))] = static_cast<int>(e);
    out[static_cast<std::size_t>(slot_id(edges_[e].second))] = static_cast<int>(e);
  }
  return out;
}

std::string TraceGraph::to_string() const {
  std::string s = "p=" + std::to_string(order_) + " n=" + std::to_string(n_) + " " + gte::to_string(flavor_) + " {";
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [a, b] = edges_[e];
    if (e) s += " ";
    s += "(" + std::to_string(a.vertex) + "," + std::to_string(a.position + 1) + ")-(" + std::to_string(b.vertex) +
         "," + std::to_string(b.position + 1) + ")";
  }
  return s + "}";
}

namespace {

bool slot_in_range(const TraceGraph& g, const Slot& s) {
  return s.vertex >= 0 && s.vertex < g.vertex_count() && s.position >= 0 && s.position < g.order();
}

std::string slot_name(const Slot& s) {
  return "(" + std::to_string(s.vertex) + "," + std::to_string(s.position + 1) + ")";
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

GraphValidation validate(const TraceGraph& g) {
  GraphValidation out;
  const int p = g.order(), n = g.vertex_count();
  std::vector<int> uses(static_cast<std::size_t>(n * p), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);

  if ((n * p) % 2 != 0) out.violations.push_back("odd slot count " + std::to_string(n * p));
  for (const auto& [a, b] : g.edges()) {
    if (!slot_in_range(g, a) || !slot_in_range(g, b)) {
      out.violations.push_back("slot out of range in edge " + slot_name(a) + "-" + slot_name(b));
      continue;
    }
    if (a == b) out.violations.push_back("edge joins slot " + slot_name(a) + " to itself");
    ++uses[static_cast<std::size_t>(g.slot_id(a))];
    ++uses[static_cast<std::size_t>(g.slot_id(b))];
    if (g.flavor() == GraphFlavor::Parity && (a.position % 2) == (b.position % 2)) {
      out.violations.push_back("parity: edge " + slot_name(a) + "-" + slot_name(b) + " joins positions of equal parity");
    }
    parent[static_cast<std::size_t>(find_root(parent, a.vertex))] = find_root(parent, b.vertex);
  }
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < p; ++k) {
      const int u = uses[static_cast<std::size_t>(v * p + k)];
      if (u > 1) out.violations.push_back("slot reuse: " + slot_name({v, k}) + " in " + std::to_string(u) + " edges");
      if (u == 0) out.violations.push_back("unmatched slot " + slot_name({v, k}));
    }
  }
  const int root = find_root(parent, 0);
  out.connected = true;
  for (int v = 1; v < n; ++v) out.connected = out.connected && find_root(parent, v) == root;
  out.ok = out.violations.empty();
  return out;
}

TraceGraph melon_graph(int order, MelonConvention convention) {
  if (order < 1) throw std::invalid_argument("melon needs p >= 1");
  std::vector<Edge> edges;
  switch (convention) {
    case MelonConvention::Real:
      for (int k = 0; k < order; ++k) edges.push_back({{0, k}, {1, k}});
      return TraceGraph(order, 2, GraphFlavor::Real, edges);
    case MelonConvention::Hermitian:
      if (order % 2 != 0) throw std::invalid_argument("parity melon needs p even, got p=" + std::to_string(order));
      for (int k = 0; k < order; ++k) edges.push_back({{0, k}, {1, (k + 1) % order}});
      return TraceGraph(order, 2, GraphFlavor::Parity, edges);
    case MelonConvention::SelfDual:
      if (order % 2 != 0) throw std::invalid_argument("parity melon needs p even, got p=" + std::to_string(order));
      for (int k = 0; k < order; k += 2) {
        edges.push_back({{0, k}, {1, k + 1}});
        edges.push_back({{0, k + 1}, {1, k}});
      }
      return TraceGraph(order, 2, GraphFlavor::Parity, edges);
  }
  throw std::logic_error("melon_graph: unreachable");
}

TraceGraph melon_for(SymmetryClass cls, int order) {
  switch (cls) {
    case SymmetryClass::Symmetric:
    case SymmetryClass::Antisymmetric: return melon_graph(order, MelonConvention::Real);
    case SymmetryClass::Hermitian: return melon_graph(order, MelonConvention::Hermitian);
    case SymmetryClass::SelfDual: return melon_graph(order, MelonConvention::SelfDual);
  }
  throw std::logic_error("melon_for: unreachable");
}

TraceGraph bouquet_graph(int order, GraphFlavor flavor) {
  if (order % 2 != 0) throw std::invalid_argument("bouquet needs p even, got p=" + std::to_string(order));
  std::vector<Edge> edges;
  for (int k = 0; k < order; k += 2) edges.push_back({{0, k}, {0, k + 1}});
  return TraceGraph(order, 1, flavor, edges);
}

std::vector<TraceGraph> enumerate_rank1(int order, GraphFlavor flavor) {
  if (order < 1) throw std::invalid_argument("enumerate_rank1 needs p >= 1");
  if (order % 2 != 0) return {};
  return {bouquet_graph(order, flavor)};
}

std::vector<TraceGraph> enumerate_rank2(int order, GraphFlavor flavor) {
  if (order < 1) throw std::invalid_argument("enumerate_rank2 needs p >= 1");
  std::vector<TraceGraph> out;
  if (flavor == GraphFlavor::Real) {
    for (int r = order; r >= 1; r -= 2) {
      std::vector<Edge> edges;
      for (int k = 0; k < r; ++k) edges.push_back({{0, k}, {1, k}});
      for (int v = 0; v < 2; ++v) {
        for (int k = r; k < order; k += 2) edges.push_back({{v, k}, {v, k + 1}});
      }
      out.emplace_back(order, 2, flavor, edges);
    }
    return out;
  }
  if (order % 2 != 0) return out;
  for (int x = order / 2; x >= 1; --x) {
    if (x == order / 2) {
      out.push_back(melon_graph(order, MelonConvention::Hermitian));
      continue;
    }
    std::vector<Edge> edges;
    for (int t = 0; t < x; ++t) {
      edges.push_back({{0, 2 * t}, {1, 2 * t + 1}});
      edges.push_back({{0, 2 * t + 1}, {1, 2 * t}});
    }
    for (int v = 0; v < 2; ++v) {
      for (int k = 2 * x; k < order; k += 2) edges.push_back({{v, k}, {v, k + 1}});
    }
    out.emplace_back(order, 2, flavor, edges);
  }
  return out;
}

TraceGraph from_edge_labels(int order, const std::vector<std::vector<int>>& labels, GraphFlavor flavor) {
  std::map<int, std::vector<Slot>> by_label;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (static_cast<int>(labels[v].size()) != order) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has " + std::to_string(labels[v].size()) +
                                  " labels, expected " + std::to_string(order));
    }
    for (int k = 0; k < order; ++k) {
      by_label[labels[v][static_cast<std::size_t>(k)]].push_back({static_cast<int>(v), k});
    }
  }
  std::vector<Edge> edges;
  for (const auto& [label, slots] : by_label) {
    if (slots.size() != 2) {
      throw std::invalid_argument("edge label " + std::to_string(label) + " occurs " + std::to_string(slots.size()) +
                                  " times, expected 2");
    }
    edges.push_back({slots[0], slots[1]});
  }
  return TraceGraph(order, static_cast<int>(labels.size()), flavor, edges);
}

std::vector<int> canonical_signature(const TraceGraph& g) {
  const int n = g.vertex_count();
  const bool parity = g.flavor() == GraphFlavor::Parity;
  // counts[v][w]: real edges between v and w (symmetric), or parity edges from
  // an odd slot of v to an even slot of w (loops included).
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& [a, b] : g.edges()) {
    if (!parity) {
      ++counts[static_cast<std::size_t>(a.vertex)][static_cast<std::size_t>(b.vertex)];
      if (a.vertex != b.vertex) ++counts[static_cast<std::size_t>(b.vertex)][static_cast<std::size_t>(a.vertex)];
      continue;
    }
    // position 0 is the 1-based odd position 1
    const Slot& odd = a.position % 2 == 0 ? a : b;
    const Slot& even = a.position % 2 == 0 ? b : a;
    ++counts[static_cast<std::size_t>(odd.vertex)][static_cast<std::size_t>(even.vertex)];
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> sig;
    sig.reserve(static_cast<std::size_t>(n * n));
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < n; ++w) {
        sig.push_back(counts[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])]
                            [static_cast<std::size_t>(perm[static_cast<std::size_t>(w)])]);
      }
    }
    if (best.empty() || sig < best) best = std::move(sig);
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.insert(best.begin(), {g.order(), n, parity ? 1 : 0});
  return best;
}

namespace {

void extend_matching(int order, GraphFlavor flavor, std::vector<bool>& used, std::vector<Edge>& edges,
                     int vertices, const std::function<void(const TraceGraph&)>& visit) {
  const int total = vertices * order;
  int first = 0;
  while (first < total && used[static_cast<std::size_t>(first)]) ++first;
  if (first == total) {
    visit(TraceGraph(order, vertices, flavor, edges));
    return;
  }
  used[static_cast<std::size_t>(first)] = true;
  for (int other = first + 1; other < total; ++other) {
    if (used[static_cast<std::size_t>(other)]) continue;
    if (flavor == GraphFlavor::Parity && (first % order) % 2 == (other % order) % 2) continue;
    used[static_cast<std::size_t>(other)] = true;
    edges.push_back({{first / order, first % order}, {other / order, other % order}});
    extend_matching(order, flavor, used, edges, vertices, visit);
    edges.pop_back();
    used[static_cast<std::size_t>(other)] = false;
  }
  used[static_cast<std::size_t>(first)] = false;
}

}  // namespace

void for_each_matching(int order, int vertices, GraphFlavor flavor,
                       const std::function<void(const TraceGraph&)>& visit) {
  if ((order * vertices) % 2 != 0) return;
  std::vector<bool> used(static_cast<std::size_t>(order * vertices), false);
  std::vector<Edge> edges;
  extend_matching(order, flavor, used, edges, vertices, visit);
}

TraceGraph random_matching(int order, int vertices, GraphFlavor flavor, std::uint64_t seed) {
  const int total = order * vertices;
  if (total % 2 != 0) throw std::invalid_argument("random_matching: odd slot count");
  Rng rng = make_rng(seed, 0x6d61746368ULL);
  std::vector<Edge> edges;
  if (flavor == GraphFlavor::Real) {
    std::vector<int> slots(static_cast<std::size_t>(total));
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (std::size_t k = 0; k < slots.size(); k += 2) {
      edges.push_back({{slots[k] / order, slots[k] % order}, {slots[k + 1] / order, slots[k + 1] % order}});
    }
  } else {
    if (order % 2 != 0) throw std::invalid_argument("random_matching: parity graphs need p even");
    std::vector<int> odd, even;
    for (int s = 0; s < total; ++s) ((s % order) % 2 == 0 ? odd : even).push_back(s);
    std::shuffle(even.begin(), even.end(), rng);
    for (std::size_t k = 0; k < odd.size(); ++k) {
      edges.push_back({{odd[k] / order, odd[k] % order}, {even[k] / order, even[k] % order}});
    }
  }
  return TraceGraph(order, vertices, flavor, edges);
}

}  // namespace gte
