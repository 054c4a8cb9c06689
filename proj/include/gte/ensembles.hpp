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
#include <string>
#include <vector>

#include "gte/rng.hpp"
#include "gte/tensor.hpp"

namespace gte {

enum class EnsembleKind { GOTE, GUTE, GSTE };

std::string to_string(EnsembleKind k);
/// "gote", "gute", "gste" (case-insensitive).
EnsembleKind ensemble_kind_from_string(const std::string& tag);
SymmetryClass class_of(EnsembleKind k);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GOTE;
  int order = 2;
  int dim = 2;
  double beta = 0.0;
  double gamma = 1.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on gamma <= 0 or an incompatible order.
  void validate() const;
};

/// Draws one tensor directly in canonical storage.
///   GOTE: entry at class m ~ N(beta I_m, gamma p / Gamma(m)).
///   GUTE: H0 ~ N(beta I_m, gamma p / (2 Gamma)), H1 on strict tuples ~ N(0, gamma p / (2 Gamma)).
///   GSTE: each Q^eps ~ N(., gamma p / (4 Gamma)), mean beta I on eps = 0 only,
///         conditioned on q_{1..1,2} = 0 on paired classes.
CanonicalTensor sample(const EnsembleSpec& spec, Rng& rng);

/// Tensors 0..count-1 drawn from streams make_rng(spec.seed, k); independent
/// of the thread count (0 = hardware concurrency).
std::vector<CanonicalTensor> sample_batch(const EnsembleSpec& spec, std::size_t count, int threads = 1);

/// Exponent weight kappa: 1/(2p), 1/p, 2/p.
double kappa(EnsembleKind k, int order);

/// <t, I> = sum over paired classes of the symmetric real part (H0, Q^0).
double identity_pairing(const CanonicalTensor& t);

/// Squared norm entering the density: Frobenius, or the quaternionic norm for GSTE.
double density_norm_sq(const CanonicalTensor& t);

/// -kappa * ||t - beta I||^2 / gamma.
double log_density_unnormalized(const CanonicalTensor& t, const EnsembleSpec& spec);

/// log density = -a ||t||^2 + b <t, I> + c.
struct DensityCoefficients {
  double a;
  double b;
  double c;
};
DensityCoefficients density_coefficients(const EnsembleSpec& spec);

/// Law of one canonical coordinate (component, index) under the spec.
/// Coordinates sharing a non-negative `group` are linearly constrained together.
struct CoordinateModel {
  std::size_t component;
  std::size_t index;
  double mean;
  double variance;
  int group = -1;
};
std::vector<CoordinateModel> coordinate_models(const EnsembleSpec& spec);

}  // namespace gte
