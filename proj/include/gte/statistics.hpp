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

#include <span>
#include <vector>

namespace gte {

struct KsResult {
  double statistic;  // sup |F1 - F2|
  double p_value;    // asymptotic
};

/// Two-sample Kolmogorov-Smirnov test; ties across samples are handled by
/// stepping both empirical CDFs past each distinct value together.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

/// Rounds every value to a grid of `relative` times the largest magnitude of
/// the pooled values, in place.
void snap_to_grid(std::vector<double>& a, std::vector<double>& b, double relative = 1e-10);

double mean(std::span<const double> x);
/// Unbiased sample variance.
double variance(std::span<const double> x);
/// Pearson correlation; 0 when either input is constant.
double correlation(std::span<const double> x, std::span<const double> y);

}  // namespace gte
