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

#include "doctest.h"
#include "gte/harness.hpp"

using namespace gte;

namespace {

EnsembleSpec spec(EnsembleKind kind, int p, int n, double beta = 0.0) { return {kind, p, n, beta, 1.0, 0}; }

}  // namespace

TEST_CASE("invariance suite: ensembles pass, product laws fail") {
  const auto graphs = enumerate_rank2(2, GraphFlavor::Real);
  const auto gote = invariance_test(ensemble_sampler(spec(EnsembleKind::GOTE, 2, 3)), GroupFlavor::Orthogonal, graphs,
                                    3000, 11);
  CHECK(gote.verdict == "pass");
  CHECK(gote.test == "invariance");
  CHECK(gote.samples == 3000);
  CHECK(gote.seed == 11);
  CHECK(gote.statistic >= gote.threshold);
  CHECK(gote.p_value.has_value());
  // 6 real probes (the imaginary parts are structurally zero) plus one per invariant
  CHECK(gote.subtests.size() == 6 + graphs.size());

  const auto gute = invariance_test(ensemble_sampler(spec(EnsembleKind::GUTE, 2, 2)), GroupFlavor::Unitary,
                                    enumerate_rank2(2, GraphFlavor::Parity), 3000, 12);
  CHECK(gute.passed());

  const auto uniform = invariance_test(uniform_entries_sampler(2, 3), GroupFlavor::Orthogonal, graphs, 3000, 13);
  CHECK(uniform.verdict == "fail");
  CHECK(uniform.statistic < uniform.threshold);

  const auto constant = invariance_test(constant_sampler(2.5 * identity_tensor(2, 3)), GroupFlavor::Orthogonal,
                                        graphs, 500, 14);
  CHECK(constant.passed());
}

TEST_CASE("invariance suite input checks and determinism") {
  const auto sampler = ensemble_sampler(spec(EnsembleKind::GOTE, 2, 2));
  CHECK_THROWS_AS(invariance_test(sampler, GroupFlavor::Unitary, {}, 500, 1), std::invalid_argument);
  CHECK_THROWS_AS(invariance_test(sampler, GroupFlavor::Orthogonal, {}, 99, 1), std::invalid_argument);
  const auto a = invariance_test(sampler, GroupFlavor::Orthogonal, {}, 400, 5, 1);
  const auto b = invariance_test(sampler, GroupFlavor::Orthogonal, {}, 400, 5, 4);
  CHECK(a.statistic == b.statistic);
  REQUIRE(a.subtests.size() == b.subtests.size());
  for (std::size_t k = 0; k < a.subtests.size(); ++k) CHECK(a.subtests[k].statistic == b.subtests[k].statistic);
}

TEST_CASE("gaussianity suite") {
  const auto model = spec(EnsembleKind::GOTE, 3, 2);
  const auto ok = gaussianity_independence_test(ensemble_sampler(model), model, 3000, 21);
  CHECK(ok.passed());
  CHECK(ok.test == "gaussianity");
  CHECK_FALSE(ok.p_value.has_value());

  const auto gste = spec(EnsembleKind::GSTE, 2, 2);
  CHECK(gaussianity_independence_test(ensemble_sampler(gste), gste, 3000, 22).passed());

  const auto rank_one = gaussianity_independence_test(rotated_rank_one_sampler(3, 2), model, 3000, 23);
  CHECK(rank_one.verdict == "fail");
  CHECK(rank_one.statistic > rank_one.threshold);

  // the wrong variance is caught
  auto wide = model;
  wide.gamma = 1.5;
  CHECK_FALSE(gaussianity_independence_test(ensemble_sampler(model), wide, 3000, 24).passed());

  CHECK_THROWS_AS(gaussianity_independence_test(ensemble_sampler(spec(EnsembleKind::GOTE, 2, 2)), model, 500, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(gaussianity_independence_test(ensemble_sampler(model), model, 50, 1), std::invalid_argument);
}

TEST_CASE("derivative identity suite") {
  const auto r = derivative_identity_test(40, 3);
  CHECK(r.passed());
  CHECK(r.threshold == 1e-6);
  CHECK(r.test == "derivative");
  CHECK(r.statistic < 1e-6);
  CHECK(r.subtests.size() == 40);
}

TEST_CASE("isotropy suite") {
  const auto ok = isotropy_test(ensemble_sampler(spec(EnsembleKind::GOTE, 2, 3)), 2, 3, 3000, 31);
  CHECK(ok.passed());
  CHECK(ok.test == "isotropy");
  CHECK(isotropy_test(sphere_pullback_sampler(3, 2), 3, 2, 3000, 32).passed());

  const auto shifted = isotropy_test(ensemble_sampler(spec(EnsembleKind::GOTE, 2, 2, 1.0)), 2, 2, 3000, 33);
  CHECK(shifted.verdict == "fail");
  const auto centered =
      isotropy_test(ensemble_sampler(spec(EnsembleKind::GOTE, 2, 2, 1.0)), 2, 2, 3000, 33, 0, true);
  CHECK(centered.verdict == "exploratory");

  CHECK_THROWS_AS(isotropy_test(ensemble_sampler(spec(EnsembleKind::GOTE, 1, 2)), 1, 2, 500, 1), std::invalid_argument);
  CHECK_THROWS_AS(isotropy_test(ensemble_sampler(spec(EnsembleKind::GOTE, 2, 3)), 2, 2, 500, 1), std::invalid_argument);
  CHECK_THROWS_AS(isotropy_test(constant_sampler(CanonicalTensor(SymmetryClass::Symmetric, 2, 2)), 2, 2, 500, 1),
                  std::invalid_argument);
}

TEST_CASE("samplers") {
  Rng rng = make_rng(1);
  const auto u = uniform_entries_sampler(3, 2)(rng);
  for (double v : u.component(0).values) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  const auto s = sphere_pullback_sampler(2, 3)(rng);
  CHECK(frobenius_norm_sq(s) == doctest::Approx(1.0));
  const auto r = rotated_rank_one_sampler(2, 3)(rng);
  // s v v^T has rank one: every 2x2 minor vanishes
  const double minor = r(std::vector<int>{0, 0}) * r(std::vector<int>{1, 1}) - r(std::vector<int>{0, 1}) * r(std::vector<int>{0, 1});
  CHECK(std::abs(minor) < 1e-12);
  const auto c = constant_sampler(identity_tensor(2, 2))(rng);
  CHECK(c.max_abs_diff(identity_tensor(2, 2)) == 0.0);
}
