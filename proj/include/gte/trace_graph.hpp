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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gte/tensor.hpp"

namespace gte {

/// Real graphs may match any two slots; parity graphs only odd with even positions.
enum class GraphFlavor { Real, Parity };

std::string to_string(GraphFlavor f);
GraphFlavor graph_flavor_from_string(const std::string& tag);

/// A half-edge: vertex in 0..n-1, position in 0..p-1 (1-based in files).
struct Slot {
  int vertex = 0;
  int position = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

using Edge = std::pair<Slot, Slot>;

/// Trace-invariant graph: a perfect matching on the n*p slots of n vertices
/// of degree p. Construction does not validate; see validate().
class TraceGraph {
 public:
  TraceGraph(int order, int vertices, GraphFlavor flavor, std::vector<Edge> edges);

  int order() const { return order_; }
  int vertex_count() const { return n_; }
  GraphFlavor flavor() const { return flavor_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  int slot_id(const Slot& s) const { return s.vertex * order_ + s.position; }

  /// Edge ids by vertex and position; -1 where a slot is unmatched. Requires
  /// slots in range.
  std::vector<int> slot_edges() const;

  std::string to_string() const;

 private:
  int order_;
  int n_;
  GraphFlavor flavor_;
  std::vector<Edge> edges_;
};

struct GraphValidation {
  bool ok = true;
  bool connected = false;
  std::vector<std::string> violations;
};

/// Checks slot range, slot reuse, that every slot is matched, and parity.
/// Connectivity is reported but not a violation.
GraphValidation validate(const TraceGraph& g);

/// Melon conventions: real pairs (0,k) with (1,k); hermitian pairs (0,t) with
/// (1,t+1 mod p); self-dual pairs (0,2t) with (1,2t-1) and (0,2t-1) with (1,2t).
enum class MelonConvention { Real, Hermitian, SelfDual };

TraceGraph melon_graph(int order, MelonConvention convention = MelonConvention::Real);
/// The melon whose invariant is the Frobenius norm for tensors of this class.
TraceGraph melon_for(SymmetryClass cls, int order);

/// One vertex with self-loops (2t-1, 2t); p even. Parity-legal, so it can be
/// flagged either flavor.
TraceGraph bouquet_graph(int order, GraphFlavor flavor = GraphFlavor::Real);

/// Connected one-vertex graphs up to slot relabeling: the bouquet for even p,
/// nothing for odd p.
std::vector<TraceGraph> enumerate_rank1(int order, GraphFlavor flavor);

/// Connected two-vertex graphs up to slot relabeling (and vertex swap). Real:
/// one per r = p, p-2, ... >= 1 cross edges. Parity: one per x = 1..p/2, with x
/// odd-to-even crossings in each direction.
std::vector<TraceGraph> enumerate_rank2(int order, GraphFlavor flavor);

/// Graph from per-vertex edge labels: labels[v][k] names the edge at slot
/// (v, k); each label must occur exactly twice.
TraceGraph from_edge_labels(int order, const std::vector<std::vector<int>>& labels,
                            GraphFlavor flavor = GraphFlavor::Real);

/// Isomorphism signature under vertex permutations and slot relabelings
/// (all of S_p per vertex for real graphs, parity-preserving ones for parity
/// graphs). Exact; cost n!.
std::vector<int> canonical_signature(const TraceGraph& g);

/// Calls `visit` for every perfect matching of n*p slots that is legal for the
/// flavor. Only for small slot counts.
void for_each_matching(int order, int vertices, GraphFlavor flavor,
                       const std::function<void(const TraceGraph&)>& visit);

/// Uniformly random legal matching.
TraceGraph random_matching(int order, int vertices, GraphFlavor flavor, std::uint64_t seed);

}  // namespace gte
