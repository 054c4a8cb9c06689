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
#include <optional>
#include <string>
#include <vector>

#include "gte/ensembles.hpp"
#include "gte/group.hpp"
#include "gte/tensor.hpp"
#include "gte/trace_graph.hpp"

namespace gte {

struct Subtest {
  std::string name;
  double statistic = 0.0;
  double threshold = 0.0;
  std::optional<double> p_value;
  bool pass = false;
};

/// Result of one verification suite. `verdict` is "pass", "fail" or
/// "exploratory" (no pass/fail semantics).
struct VerificationReport {
  std::string test;
  double statistic = 0.0;
  double threshold = 0.0;
  std::optional<double> p_value;
  std::string verdict;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<Subtest> subtests;

  bool passed() const { return verdict == "pass"; }
};

/// Draws one tensor; must be callable concurrently with distinct generators.
using Sampler = std::function<CanonicalTensor(Rng&)>;

Sampler ensemble_sampler(const EnsembleSpec& spec);
/// Real symmetric tensors with i.i.d. uniform[0,1] canonical entries.
Sampler uniform_entries_sampler(int order, int dim);
/// s * v^{(x) p} with v uniform on the unit sphere and s ~ N(0,1): orthogonally
/// invariant, entries dependent.
Sampler rotated_rank_one_sampler(int order, int dim);
Sampler constant_sampler(CanonicalTensor t);
/// Uniform point of the unit sphere of R^K pulled back through the isometry.
Sampler sphere_pullback_sampler(int order, int dim);

/// Compares {t_k} with {U_k s_k} (independent draws, Haar U_k) by two-sample
/// KS on coordinate probes (real and imaginary parts of the dense entries at
/// sorted positions) and on the given invariants. Level `level`, Bonferroni
/// over probes. statistic = smallest p-value, threshold = corrected level.
/// Throws std::invalid_argument for fewer than 100 samples.
VerificationReport invariance_test(const Sampler& sampler, GroupFlavor flavor,
                                   const std::vector<TraceGraph>& invariants, std::size_t samples,
                                   std::uint64_t seed, int threads = 0, double level = 0.01);

/// Standardizes every canonical coordinate with the model's mean and variance
/// and checks moments 1-4 against 0, 1, 0, 3 within 4 standard errors, and all
/// pairwise correlations (outside a constraint group) within 4 / sqrt(n).
/// statistic = largest deviation in standard errors.
VerificationReport gaussianity_independence_test(const Sampler& sampler, const EnsembleSpec& model,
                                                 std::size_t samples, std::uint64_t seed, int threads = 0);

/// Random symmetric tensors (p = 1..4, N = 2..3 cycling): theta_derivative
/// against the central difference of act(U_theta, .) at 0 with h = 1e-5.
/// statistic = largest max-abs error, threshold 1e-6.
VerificationReport derivative_identity_test(std::size_t trials, std::uint64_t seed);

/// Maps samples through the isometry and normalizes; checks E x_j^2 = 1/K
/// within 4 standard errors and compares projections on 10 random directions
/// with a direct sphere sampler (KS, level 0.01 / 10). With `center`, the
/// samples are first shifted by -mean(H_{1..1}) I and the verdict is
/// "exploratory". Throws std::invalid_argument when K < 3.
VerificationReport isotropy_test(const Sampler& sampler, int order, int dim, std::size_t samples,
                                 std::uint64_t seed, int threads = 0, bool center = false);

}  // namespace gte
