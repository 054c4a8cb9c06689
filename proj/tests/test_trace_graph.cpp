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

#include <set>

#include "doctest.h"
#include "gte/trace_graph.hpp"

using namespace gte;

namespace {

bool has_violation(const GraphValidation& v, const std::string& prefix) {
  for (const auto& m : v.violations) {
    if (m.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::set<std::vector<int>> connected_classes(int order, int vertices, GraphFlavor flavor) {
  std::set<std::vector<int>> out;
  for_each_matching(order, vertices, flavor, [&](const TraceGraph& g) {
    if (validate(g).connected) out.insert(canonical_signature(g));
  });
  return out;
}

}  // namespace

TEST_CASE("flavor tags") {
  CHECK(graph_flavor_from_string("parity") == GraphFlavor::Parity);
  CHECK(to_string(GraphFlavor::Real) == "real");
  CHECK_THROWS_AS(graph_flavor_from_string("even"), std::invalid_argument);
  CHECK_THROWS_AS(TraceGraph(0, 1, GraphFlavor::Real, {}), std::invalid_argument);
  CHECK_THROWS_AS(TraceGraph(2, 0, GraphFlavor::Real, {}), std::invalid_argument);
}

TEST_CASE("melons") {
  const auto real = melon_graph(3);
  CHECK(real.edge_count() == 3);
  CHECK(real.edges()[1] == Edge{{0, 1}, {1, 1}});
  CHECK(real.to_string() == "p=3 n=2 real {(0,1)-(1,1) (0,2)-(1,2) (0,3)-(1,3)}");

  const auto herm = melon_graph(4, MelonConvention::Hermitian);
  CHECK(herm.flavor() == GraphFlavor::Parity);
  CHECK(herm.edges()[3] == Edge{{0, 3}, {1, 0}});
  const auto sd = melon_graph(6, MelonConvention::SelfDual);
  CHECK(sd.edges()[0] == Edge{{0, 0}, {1, 1}});
  CHECK(sd.edges()[1] == Edge{{0, 1}, {1, 0}});
  for (const auto& g : {real, herm, sd}) {
    const auto v = validate(g);
    CHECK(v.ok);
    CHECK(v.connected);
  }
  CHECK_THROWS_AS(melon_graph(3, MelonConvention::Hermitian), std::invalid_argument);
  CHECK_THROWS_AS(melon_graph(0), std::invalid_argument);
  CHECK(melon_for(SymmetryClass::SelfDual, 2).edges() == melon_graph(2, MelonConvention::SelfDual).edges());
  CHECK(melon_for(SymmetryClass::Antisymmetric, 3).flavor() == GraphFlavor::Real);
}

TEST_CASE("bouquet") {
  const auto b = bouquet_graph(4, GraphFlavor::Parity);
  CHECK(b.vertex_count() == 1);
  CHECK(b.edges() == std::vector<Edge>{{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}});
  CHECK(validate(b).ok);
  CHECK_THROWS_AS(bouquet_graph(3), std::invalid_argument);
}

TEST_CASE("validation reports each violation") {
  const auto reuse = validate(TraceGraph(2, 1, GraphFlavor::Real, {{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}}}));
  CHECK_FALSE(reuse.ok);
  CHECK(has_violation(reuse, "slot reuse"));

  const auto unmatched = validate(TraceGraph(4, 1, GraphFlavor::Real, {{{0, 0}, {0, 1}}}));
  CHECK(has_violation(unmatched, "unmatched slot (0,3)"));

  const auto parity = validate(TraceGraph(2, 2, GraphFlavor::Parity, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}));
  CHECK(has_violation(parity, "parity"));
  // the same matching is fine for a real graph
  CHECK(validate(TraceGraph(2, 2, GraphFlavor::Real, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}})).ok);

  CHECK(has_violation(validate(TraceGraph(2, 1, GraphFlavor::Real, {{{0, 0}, {0, 2}}})), "slot out of range"));
  CHECK(has_violation(validate(TraceGraph(2, 1, GraphFlavor::Real, {{{0, 0}, {3, 1}}})), "slot out of range"));
  CHECK(has_violation(validate(TraceGraph(3, 1, GraphFlavor::Real, {})), "odd slot count"));
  CHECK(has_violation(validate(TraceGraph(2, 1, GraphFlavor::Real, {{{0, 0}, {0, 0}}})), "edge joins slot"));

  const auto split = validate(TraceGraph(2, 2, GraphFlavor::Real, {{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}}));
  CHECK(split.ok);
  CHECK_FALSE(split.connected);
}

TEST_CASE("edge labels") {
  const auto g = from_edge_labels(4, {{1, 2, 3, 4}, {5, 3, 2, 1}, {4, 5, 6, 6}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 6);
  const auto v = validate(g);
  CHECK(v.ok);
  CHECK(v.connected);
  const auto slots = g.slot_edges();
  // the self-loop at vertex 2 occupies positions 3 and 4
  CHECK(slots[10] == slots[11]);
  CHECK(g.edges()[static_cast<std::size_t>(slots[10])] == Edge{{2, 2}, {2, 3}});
  CHECK_THROWS_AS(from_edge_labels(2, {{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_labels(2, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_edge_labels(2, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("rank-1 enumeration") {
  CHECK(enumerate_rank1(3, GraphFlavor::Real).empty());
  for (int p = 1; p <= 6; ++p) {
    for (auto f : {GraphFlavor::Real, GraphFlavor::Parity}) {
      if (f == GraphFlavor::Parity && p % 2 != 0) continue;
      std::set<std::vector<int>> listed;
      for (const auto& g : enumerate_rank1(p, f)) {
        CHECK(validate(g).ok);
        listed.insert(canonical_signature(g));
      }
      CHECK(listed == connected_classes(p, 1, f));
    }
  }
}

TEST_CASE("rank-2 enumeration is complete and irredundant") {
  for (int p = 1; p <= 6; ++p) {
    for (auto f : {GraphFlavor::Real, GraphFlavor::Parity}) {
      if (f == GraphFlavor::Parity && p % 2 != 0) continue;
      const auto graphs = enumerate_rank2(p, f);
      CHECK(graphs.size() == static_cast<std::size_t>(f == GraphFlavor::Real ? (p + 1) / 2 : p / 2));
      std::set<std::vector<int>> listed;
      for (const auto& g : graphs) {
        const auto v = validate(g);
        CHECK(v.ok);
        CHECK(v.connected);
        listed.insert(canonical_signature(g));
      }
      CHECK(listed.size() == graphs.size());
      CHECK(listed == connected_classes(p, 2, f));
    }
  }
  CHECK(enumerate_rank2(3, GraphFlavor::Parity).empty());
}

TEST_CASE("canonical signatures") {
  // relabeling vertices and slots leaves the signature unchanged
  const auto a = from_edge_labels(4, {{1, 2, 3, 4}, {5, 3, 2, 1}, {4, 5, 6, 6}});
  const auto b = from_edge_labels(4, {{6, 4, 6, 5}, {2, 1, 4, 3}, {3, 2, 1, 5}});
  CHECK(canonical_signature(a) == canonical_signature(b));
  const auto c = from_edge_labels(4, {{1, 2, 3, 4}, {5, 3, 2, 1}, {4, 6, 5, 6}});
  CHECK(canonical_signature(a) == canonical_signature(c));
  const auto d = from_edge_labels(4, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
  CHECK(canonical_signature(a) != canonical_signature(d));
  // parity flavor distinguishes which parities an edge joins
  const TraceGraph loops(2, 2, GraphFlavor::Parity, {{{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}});
  const TraceGraph same(2, 2, GraphFlavor::Parity, {{{1, 0}, {0, 1}}, {{0, 0}, {1, 1}}});
  CHECK(canonical_signature(loops) == canonical_signature(same));
  CHECK(canonical_signature(loops) != canonical_signature(TraceGraph(2, 2, GraphFlavor::Real, loops.edges())));
}

TEST_CASE("matching enumeration counts") {
  auto count = [](int p, int n, GraphFlavor f) {
    std::size_t c = 0;
    for_each_matching(p, n, f, [&](const TraceGraph& g) {
      CHECK(validate(g).ok);
      ++c;
    });
    return c;
  };
  // (2m-1)!! perfect matchings of 2m slots; m! bipartite ones
  CHECK(count(3, 2, GraphFlavor::Real) == 15);
  CHECK(count(4, 2, GraphFlavor::Real) == 105);
  CHECK(count(4, 2, GraphFlavor::Parity) == 24);
  CHECK(count(3, 1, GraphFlavor::Real) == 0);
}

TEST_CASE("random matchings") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = random_matching(5, 2, GraphFlavor::Real, seed);
    CHECK(validate(r).ok);
    const auto q = random_matching(4, 3, GraphFlavor::Parity, seed);
    CHECK(validate(q).ok);
  }
  CHECK(random_matching(6, 2, GraphFlavor::Real, 3).edges() == random_matching(6, 2, GraphFlavor::Real, 3).edges());
  CHECK_THROWS_AS(random_matching(3, 1, GraphFlavor::Real, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_matching(3, 2, GraphFlavor::Parity, 0), std::invalid_argument);
}
