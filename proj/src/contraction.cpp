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

#include "gte/contraction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <tuple>

namespace gte {

namespace {

// Multiset of edge labels carried by a node; repeated labels are self-loops.
using Labels = std::vector<int>;

Labels vertex_labels(const TraceGraph& g, int v) {
  const auto slot_edges = g.slot_edges();
  Labels out(static_cast<std::size_t>(g.order()));
  for (int k = 0; k < g.order(); ++k) out[static_cast<std::size_t>(k)] = slot_edges[static_cast<std::size_t>(v * g.order() + k)];
  return out;
}

// Labels occurring exactly once across a and b, a's first, in order.
Labels open_labels(const Labels& a, const Labels& b) {
  Labels out;
  auto count = [&](int l) {
    return std::count(a.begin(), a.end(), l) + std::count(b.begin(), b.end(), l);
  };
  for (int l : a) if (count(l) == 1) out.push_back(l);
  for (int l : b) if (count(l) == 1) out.push_back(l);
  return out;
}

Labels distinct_labels(const Labels& a, const Labels& b) {
  Labels all = a;
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

double power(int dim, std::size_t k) { return std::pow(static_cast<double>(dim), static_cast<double>(k)); }

void check_graph(const TraceGraph& g) {
  const auto v = validate(g);
  if (!v.ok) throw std::invalid_argument("invalid trace graph: " + v.violations.front());
}

struct Node {
  Labels labels;
  std::vector<Complex> data;
};

// Sums over every label that is not in `out`; a label may repeat within an
// input, which traces over it.
Node contract_nodes(const Node& a, const Node* b, const Labels& out, int dim) {
  Labels inputs = a.labels;
  if (b) inputs.insert(inputs.end(), b->labels.begin(), b->labels.end());
  Labels all = distinct_labels(inputs, {});
  // order: output labels first (slowest), then summed labels
  Labels order = out;
  for (int l : all) {
    if (std::find(out.begin(), out.end(), l) == out.end()) order.push_back(l);
  }
  const std::size_t d = static_cast<std::size_t>(dim);
  auto strides_of = [&](const Labels& labels) {
    std::vector<std::size_t> s(order.size(), 0);
    std::size_t stride = 1;
    for (std::size_t k = labels.size(); k-- > 0;) {
      const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), labels[k]) - order.begin());
      s[pos] += stride;
      stride *= d;
    }
    return s;
  };
  const auto sa = strides_of(a.labels);
  const auto sb = b ? strides_of(b->labels) : std::vector<std::size_t>(order.size(), 0);

  std::size_t out_size = 1;
  for (std::size_t k = 0; k < out.size(); ++k) out_size *= d;
  if (out_size > kMaxIntermediate) throw PlanTooLarge("intermediate with " + std::to_string(out.size()) + " legs");
  std::size_t inner_size = 1;
  for (std::size_t k = out.size(); k < order.size(); ++k) inner_size *= d;

  Node result{out, std::vector<Complex>(out_size)};
  std::vector<std::size_t> idx(order.size(), 0);
  std::size_t oa = 0, ob = 0;
  for (std::size_t o = 0; o < out_size; ++o) {
    Complex acc(0, 0);
    for (std::size_t r = 0; r < inner_size; ++r) {
      acc += b ? a.data[oa] * b->data[ob] : a.data[oa];
      // odometer over all labels, last fastest
      for (std::size_t k = order.size(); k-- > 0;) {
        if (++idx[k] < d) {
          oa += sa[k];
          ob += sb[k];
          break;
        }
        idx[k] = 0;
        oa -= sa[k] * (d - 1);
        ob -= sb[k] * (d - 1);
      }
    }
    result.data[o] = acc;
  }
  return result;
}

Node vertex_node(const TraceGraph& g, const DenseTensor& t, int v) {
  Node raw{vertex_labels(g, v), std::vector<Complex>(t.data().begin(), t.data().end())};
  const Labels out = open_labels(raw.labels, {});
  if (out.size() == raw.labels.size()) return raw;
  return contract_nodes(raw, nullptr, out, t.dim());
}

void finish_plan(ContractionPlan& plan, const TraceGraph& g) {
  std::vector<Labels> labels;
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(open_labels(vertex_labels(g, v), {}));
  plan.max_rank = 0;
  for (const auto& l : labels) plan.max_rank = std::max(plan.max_rank, static_cast<int>(l.size()));
  plan.cost = 0.0;
  for (const auto& step : plan.steps) {
    const auto& a = labels[static_cast<std::size_t>(step.left)];
    const auto& b = labels[static_cast<std::size_t>(step.right)];
    plan.cost += power(plan.dim, distinct_labels(a, b).size());
    labels.push_back(open_labels(a, b));
    plan.max_rank = std::max(plan.max_rank, static_cast<int>(labels.back().size()));
  }
}

}  // namespace

ContractionPlan plan_greedy(const TraceGraph& g, int dim) {
  check_graph(g);
  ContractionPlan plan;
  plan.vertices = g.vertex_count();
  plan.dim = dim;
  plan.strategy = g.vertex_count() == 1 ? ContractionPlan::Strategy::Single : ContractionPlan::Strategy::Greedy;
  std::vector<Labels> labels;
  std::vector<int> active;
  for (int v = 0; v < g.vertex_count(); ++v) {
    labels.push_back(open_labels(vertex_labels(g, v), {}));
    active.push_back(v);
  }
  while (active.size() > 1) {
    std::tuple<long, std::size_t, int, int> best{1, 0, 0, 0};
    bool have = false;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const auto& a = labels[static_cast<std::size_t>(active[i])];
        const auto& b = labels[static_cast<std::size_t>(active[j])];
        long shared = 0;
        for (int l : a) shared += std::count(b.begin(), b.end(), l);
        const std::tuple<long, std::size_t, int, int> key{-shared, open_labels(a, b).size(), active[i], active[j]};
        if (!have || key < best) {
          best = key;
          have = true;
        }
      }
    }
    const int left = std::get<2>(best), right = std::get<3>(best);
    plan.steps.push_back({left, right});
    labels.push_back(open_labels(labels[static_cast<std::size_t>(left)], labels[static_cast<std::size_t>(right)]));
    active.erase(std::remove_if(active.begin(), active.end(), [&](int x) { return x == left || x == right; }),
                 active.end());
    active.push_back(static_cast<int>(labels.size()) - 1);
  }
  finish_plan(plan, g);
  return plan;
}

ContractionPlan plan_optimal(const TraceGraph& g, int dim) {
  check_graph(g);
  const int n = g.vertex_count();
  if (n > 6) throw std::invalid_argument("plan_optimal supports at most 6 vertices, got " + std::to_string(n));
  ContractionPlan plan;
  plan.vertices = n;
  plan.dim = dim;
  plan.strategy = n == 1 ? ContractionPlan::Strategy::Single : ContractionPlan::Strategy::Optimal;
  if (n == 1) {
    finish_plan(plan, g);
    return plan;
  }
  const unsigned full = (1u << n) - 1;
  // open legs of a vertex subset: edges with exactly one end inside
  std::vector<std::size_t> open(full + 1, 0);
  for (unsigned s = 1; s <= full; ++s) {
    for (const auto& [a, b] : g.edges()) {
      const bool ia = (s >> a.vertex) & 1u, ib = (s >> b.vertex) & 1u;
      if (ia != ib) ++open[s];
    }
  }
  auto touched = [&](unsigned s1, unsigned s2) {
    // legs of both operands: open legs of the union plus the shared ones
    std::size_t shared = 0;
    for (const auto& [a, b] : g.edges()) {
      const bool a1 = (s1 >> a.vertex) & 1u, b1 = (s1 >> b.vertex) & 1u;
      const bool a2 = (s2 >> a.vertex) & 1u, b2 = (s2 >> b.vertex) & 1u;
      if ((a1 && b2) || (a2 && b1)) ++shared;
    }
    return open[s1 | s2] + shared;
  };
  std::vector<double> cost(full + 1, std::numeric_limits<double>::infinity());
  std::vector<unsigned> split(full + 1, 0);
  for (int v = 0; v < n; ++v) cost[1u << v] = 0.0;
  for (unsigned s = 1; s <= full; ++s) {
    if (std::popcount(s) < 2) continue;
    const unsigned low = s & (~s + 1);
    // enumerate s1 containing the lowest bit, s1 != s
    for (unsigned s1 = (s - 1) & s; s1 > 0; s1 = (s1 - 1) & s) {
      if (!(s1 & low)) continue;
      const unsigned s2 = s ^ s1;
      if (open[s1] > 30 || open[s2] > 30) continue;
      const double c = cost[s1] + cost[s2] + power(dim, touched(s1, s2));
      if (c < cost[s]) {
        cost[s] = c;
        split[s] = s1;
      }
    }
  }
  // post-order emission of the split tree
  std::function<int(unsigned)> emit = [&](unsigned s) -> int {
    if (std::popcount(s) == 1) return std::countr_zero(s);
    const int left = emit(split[s]);
    const int right = emit(s ^ split[s]);
    plan.steps.push_back({left, right});
    return n + static_cast<int>(plan.steps.size()) - 1;
  };
  emit(full);
  finish_plan(plan, g);
  return plan;
}

ContractionPlan plan_contraction(const TraceGraph& g, int dim) {
  return g.vertex_count() <= 6 ? plan_optimal(g, dim) : plan_greedy(g, dim);
}

Complex contract(const TraceGraph& g, const DenseTensor& t, const ContractionPlan& plan) {
  if (t.order() != g.order()) {
    throw std::invalid_argument("graph order " + std::to_string(g.order()) + " does not match tensor order " +
                                std::to_string(t.order()));
  }
  if (plan.vertices != g.vertex_count()) throw std::invalid_argument("contraction plan built for another graph");
  std::vector<Node> nodes;
  for (int v = 0; v < g.vertex_count(); ++v) nodes.push_back(vertex_node(g, t, v));
  for (const auto& step : plan.steps) {
    const Node& a = nodes[static_cast<std::size_t>(step.left)];
    const Node& b = nodes[static_cast<std::size_t>(step.right)];
    Node next = contract_nodes(a, &b, open_labels(a.labels, b.labels), t.dim());
    nodes.push_back(std::move(next));
  }
  const Node& last = nodes.back();
  if (!last.labels.empty() || last.data.size() != 1) throw std::logic_error("contraction plan left open legs");
  return last.data[0];
}

Complex direct_sum(const TraceGraph& g, const DenseTensor& t) {
  check_graph(g);
  if (t.order() != g.order()) {
    throw std::invalid_argument("graph order " + std::to_string(g.order()) + " does not match tensor order " +
                                std::to_string(t.order()));
  }
  const std::size_t edges = g.edge_count();
  const double terms = power(t.dim(), edges);
  if (terms > 4294967296.0) throw std::invalid_argument("direct_sum: too many terms");
  const auto slot_edges = g.slot_edges();
  const int p = g.order(), n = g.vertex_count();
  const auto d = static_cast<std::size_t>(t.dim());
  std::vector<std::size_t> assign(edges, 0);
  std::vector<int> idx(static_cast<std::size_t>(p));
  Complex total(0, 0);
  const auto count = static_cast<std::size_t>(terms);
  for (std::size_t term = 0; term < count; ++term) {
    std::size_t rest = term;
    for (std::size_t e = 0; e < edges; ++e) {
      assign[e] = rest % d;
      rest /= d;
    }
    Complex prod(1, 0);
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < p; ++k) {
        idx[static_cast<std::size_t>(k)] =
            static_cast<int>(assign[static_cast<std::size_t>(slot_edges[static_cast<std::size_t>(v * p + k)])]);
      }
      prod *= t.at(idx);
    }
    total += prod;
  }
  return total;
}

}  // namespace gte
