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

#include "gte/invariants.hpp"

#include <cmath>
#include <stdexcept>

namespace gte {

bool graph_matches(GraphFlavor flavor, SymmetryClass cls) {
  const bool real = cls == SymmetryClass::Symmetric || cls == SymmetryClass::Antisymmetric;
  return flavor == GraphFlavor::Real ? real : !real;
}

Complex evaluate(const TraceGraph& g, const DenseTensor& t, const ContractionPlan& plan) {
  try {
    return contract(g, t, plan);
  } catch (const PlanTooLarge&) {
    return direct_sum(g, t);
  }
}

Complex evaluate(const TraceGraph& g, const DenseTensor& t) {
  if (t.order() != g.order()) {
    throw std::invalid_argument("graph order " + std::to_string(g.order()) + " does not match tensor order " +
                                std::to_string(t.order()));
  }
  return evaluate(g, t, plan_contraction(g, t.dim()));
}

Complex evaluate(const TraceGraph& g, const CanonicalTensor& t) {
  if (!graph_matches(g.flavor(), t.symmetry())) {
    throw std::invalid_argument(to_string(g.flavor()) + " graphs do not apply to " + to_string(t.symmetry()) +
                                " tensors");
  }
  return evaluate(g, densify(t));
}

double real_part_checked(Complex z) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z))) {
    throw std::runtime_error("invariant has non-negligible imaginary part " + std::to_string(z.imag()));
  }
  return z.real();
}

double evaluate_real(const TraceGraph& g, const CanonicalTensor& t) { return real_part_checked(evaluate(g, t)); }

double paired_trace(const CanonicalTensor& t) {
  const int p = t.order();
  if (p % 2 != 0) return 0.0;
  const int h = p / 2;
  const int d = t.dense_dim();
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::vector<int> half(static_cast<std::size_t>(h));
  const std::size_t count = dense_size(h, d);
  if (t.symmetry() == SymmetryClass::Symmetric) {
    double total = 0.0;
    for (std::size_t pos = 0; pos < count; ++pos) {
      unflatten_position(pos, d, half);
      for (int s = 0; s < h; ++s) idx[2 * s] = idx[2 * s + 1] = half[static_cast<std::size_t>(s)];
      total += t(idx);
    }
    return total;
  }
  const DenseTensor dense = densify(t);
  Complex total(0, 0);
  for (std::size_t pos = 0; pos < count; ++pos) {
    unflatten_position(pos, d, half);
    for (int s = 0; s < h; ++s) idx[2 * s] = idx[2 * s + 1] = half[static_cast<std::size_t>(s)];
    total += dense.at(idx);
  }
  return real_part_checked(total);
}

}  // namespace gte
