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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gte/rng.hpp"
#include "gte/statistics.hpp"

using namespace gte;

namespace {

std::vector<double> normals(Rng& rng, std::size_t n, double shift = 0.0) {
  std::vector<double> out(n);
  for (auto& v : out) v = standard_normal(rng) + shift;
  return out;
}

}  // namespace

TEST_CASE("Kolmogorov survival function") {
  CHECK(kolmogorov_survival(0.0) == 1.0);
  CHECK(kolmogorov_survival(0.1) == 1.0);
  CHECK(kolmogorov_survival(0.5) == doctest::Approx(0.9639452436).epsilon(1e-9));
  CHECK(kolmogorov_survival(1.0) == doctest::Approx(0.2699996717).epsilon(1e-9));
  CHECK(kolmogorov_survival(1.36) == doctest::Approx(0.0494).epsilon(1e-2));
  CHECK(kolmogorov_survival(5.0) < 1e-20);
  double prev = 1.0;
  for (double l = 0.2; l < 3.0; l += 0.05) {
    const double q = kolmogorov_survival(l);
    CHECK(q <= prev);
    prev = q;
  }
}

TEST_CASE("two-sample statistic on small inputs") {
  const std::vector<double> a{1, 2, 3}, b{2.5, 4, 5, 6};
  CHECK(ks_two_sample(a, b).statistic == doctest::Approx(0.75));
  CHECK(ks_two_sample(b, a).statistic == doctest::Approx(0.75));
  const std::vector<double> x{0, 0, 1}, y{0, 1, 1};
  CHECK(ks_two_sample(x, y).statistic == doctest::Approx(1.0 / 3.0));
  CHECK(ks_two_sample(x, x).statistic == 0.0);
  CHECK(ks_two_sample(x, x).p_value == 1.0);
  const std::vector<double> lo{1, 2, 3, 4, 5}, hi{6, 7, 8, 9, 10};
  CHECK(ks_two_sample(lo, hi).statistic == 1.0);
  CHECK_THROWS_AS(ks_two_sample(std::vector<double>{}, a), std::invalid_argument);
}

TEST_CASE("p-values are roughly uniform under the null and small under a shift") {
  Rng rng = make_rng(1);
  int rejections = 0;
  for (int k = 0; k < 300; ++k) {
    const auto a = normals(rng, 500), b = normals(rng, 700);
    if (ks_two_sample(a, b).p_value < 0.05) ++rejections;
  }
  // Binomial(300, 0.05): mean 15, sd 3.8
  CHECK(rejections >= 3);
  CHECK(rejections <= 30);
  const auto a = normals(rng, 2000), b = normals(rng, 2000, 0.3);
  CHECK(ks_two_sample(a, b).p_value < 1e-6);
}

TEST_CASE("grid snapping") {
  std::vector<double> a{1.0, 2.0 + 1e-14}, b{2.0, -3.0};
  snap_to_grid(a, b);
  CHECK(a[1] == b[0]);
  CHECK(b[1] == doctest::Approx(-3.0));
  std::vector<double> z{0.0}, w{0.0};
  snap_to_grid(z, w);
  CHECK(z[0] == 0.0);
}

TEST_CASE("moments and correlation") {
  const std::vector<double> x{1, 2, 3, 4}, y{2, 4, 6, 8}, c{5, 5, 5, 5};
  CHECK(mean(x) == 2.5);
  CHECK(variance(x) == doctest::Approx(5.0 / 3.0));
  CHECK(correlation(x, y) == doctest::Approx(1.0));
  const std::vector<double> neg{4, 3, 2, 1};
  CHECK(correlation(x, neg) == doctest::Approx(-1.0));
  CHECK(correlation(x, c) == 0.0);
  CHECK_THROWS_AS(mean(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(variance(std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(correlation(x, std::vector<double>{1, 2}), std::invalid_argument);
}
