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

#include "gte/contraction.hpp"
#include "gte/tensor.hpp"
#include "gte/trace_graph.hpp"

namespace gte {

/// Whether graphs of this flavor are evaluated on tensors of this class
/// (real with symmetric/antisymmetric, parity with hermitian/self-dual).
bool graph_matches(GraphFlavor flavor, SymmetryClass cls);

/// Trace invariant of a dense tensor: sum over one index per edge of the
/// product over vertices of the entry at the vertex's slot indices. Uses a
/// contraction plan and falls back to direct summation when the plan's
/// intermediates are too large.
Complex evaluate(const TraceGraph& g, const DenseTensor& t);
Complex evaluate(const TraceGraph& g, const DenseTensor& t, const ContractionPlan& plan);

/// Checks the graph/class pairing, then evaluates on the densified tensor.
Complex evaluate(const TraceGraph& g, const CanonicalTensor& t);

/// Real part, after checking |Im| <= 1e-10 * max(1, |value|).
double evaluate_real(const TraceGraph& g, const CanonicalTensor& t);
double real_part_checked(Complex z);

/// Sum of entries at (i1,i1,...,iq,iq) over the dense index range; 0 for odd p.
/// Equals the bouquet invariant.
double paired_trace(const CanonicalTensor& t);

}  // namespace gte
