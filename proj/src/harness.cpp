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

#include "gte/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gte/invariants.hpp"
#include "gte/parallel.hpp"
#include "gte/statistics.hpp"

namespace gte {

namespace {

std::vector<double> unit_gaussian_vector(std::size_t k, Rng& rng) {
  std::vector<double> v(k);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& x : v) {
      x = standard_normal(rng);
      norm += x * x;
    }
  } while (norm == 0.0);
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

std::string index_name(const CanonicalTensor& shape, std::size_t c, std::size_t k) {
  const auto tuple = shape.space_of(c).tuple(k);
  std::string s = "c" + std::to_string(c) + "(";
  for (std::size_t j = 0; j < tuple.size(); ++j) s += (j ? "," : "") + std::to_string(tuple[j] + 1);
  return s + ")";
}

void require_samples(std::size_t n) {
  if (n < 100) throw std::invalid_argument("at least 100 samples are required, got " + std::to_string(n));
}

void finish_verdict(VerificationReport& r) {
  const bool all = std::all_of(r.subtests.begin(), r.subtests.end(), [](const Subtest& s) { return s.pass; });
  r.verdict = all ? "pass" : "fail";
}

}  // namespace

Sampler ensemble_sampler(const EnsembleSpec& spec) {
  spec.validate();
  return [spec](Rng& rng) { return sample(spec, rng); };
}

Sampler uniform_entries_sampler(int order, int dim) {
  CanonicalTensor shape(SymmetryClass::Symmetric, order, dim);
  return [shape](Rng& rng) {
    CanonicalTensor t = shape;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : t.component(0).values) v = u(rng);
    return t;
  };
}

Sampler rotated_rank_one_sampler(int order, int dim) {
  CanonicalTensor shape(SymmetryClass::Symmetric, order, dim);
  return [shape](Rng& rng) {
    CanonicalTensor t = shape;
    const auto v = unit_gaussian_vector(static_cast<std::size_t>(shape.dim()), rng);
    const double s = standard_normal(rng);
    const auto& space = t.space(IndexSpace::Kind::Symmetric);
    auto& values = t.component(0).values;
    for (std::size_t k = 0; k < values.size(); ++k) {
      double prod = s;
      for (int i : space.tuple(k)) prod *= v[static_cast<std::size_t>(i)];
      values[k] = prod;
    }
    return t;
  };
}

Sampler constant_sampler(CanonicalTensor t) {
  return [t](Rng&) { return t; };
}

Sampler sphere_pullback_sampler(int order, int dim) {
  const std::size_t k = shared_index_space(order, dim, IndexSpace::Kind::Symmetric)->size();
  return [order, dim, k](Rng& rng) { return unflatten_isometry(unit_gaussian_vector(k, rng), order, dim); };
}

VerificationReport invariance_test(const Sampler& sampler, GroupFlavor flavor,
                                   const std::vector<TraceGraph>& invariants, std::size_t samples,
                                   std::uint64_t seed, int threads, double level) {
  require_samples(samples);
  const std::size_t n = samples;
  std::vector<DenseTensor> left, right;
  {
    Rng probe_rng = make_rng(seed, 0);
    const CanonicalTensor first = sampler(probe_rng);
    if (!flavor_matches(flavor, first.symmetry())) {
      throw std::invalid_argument(to_string(flavor) + " group does not act on " + to_string(first.symmetry()) +
                                  " samples");
    }
    const DenseTensor blank(first.order(), first.dense_dim());
    left.assign(n, blank);
    right.assign(n, blank);
  }
  std::vector<std::vector<double>> inv_left(invariants.size(), std::vector<double>(n));
  std::vector<std::vector<double>> inv_right(invariants.size(), std::vector<double>(n));
  std::vector<ContractionPlan> plans;
  for (const auto& g : invariants) plans.push_back(plan_contraction(g, left.front().dim()));

  parallel_for(n, threads, [&](std::size_t k) {
    Rng ra = make_rng(seed, k);
    Rng rb = make_rng(seed, n + k);
    Rng ru = make_rng(seed, 2 * n + k);
    const CanonicalTensor t = sampler(ra);
    const CanonicalTensor s = sampler(rb);
    const GroupElement u = haar_sample(flavor, s.dim(), ru);
    left[k] = densify(t);
    right[k] = act_dense(u, densify(s));
    for (std::size_t g = 0; g < invariants.size(); ++g) {
      inv_left[g][k] = evaluate(invariants[g], left[k], plans[g]).real();
      inv_right[g][k] = evaluate(invariants[g], right[k], plans[g]).real();
    }
  });

  // probes: Re/Im of entries at sorted dense positions, plus the invariants
  struct Probe {
    std::string name;
    std::vector<double> a, b;
  };
  std::vector<Probe> probes;
  const int p = left.front().order(), d = left.front().dim();
  const auto& positions = *shared_index_space(p, d, IndexSpace::Kind::Symmetric);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const std::size_t pos = flat_position(positions.tuple(k), d);
    for (int part = 0; part < 2; ++part) {
      Probe pr;
      std::string name = part == 0 ? "Re(" : "Im(";
      const auto tuple = positions.tuple(k);
      for (std::size_t j = 0; j < tuple.size(); ++j) name += (j ? "," : "") + std::to_string(tuple[j] + 1);
      pr.name = name + ")";
      pr.a.resize(n);
      pr.b.resize(n);
      bool structural_zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        pr.a[i] = part == 0 ? left[i][pos].real() : left[i][pos].imag();
        pr.b[i] = part == 0 ? right[i][pos].real() : right[i][pos].imag();
        structural_zero = structural_zero && pr.a[i] == 0.0 && std::abs(pr.b[i]) < 1e-12;
      }
      if (!structural_zero) probes.push_back(std::move(pr));
    }
  }
  for (std::size_t g = 0; g < invariants.size(); ++g) {
    probes.push_back({"invariant " + std::to_string(g) + " " + invariants[g].to_string(), inv_left[g], inv_right[g]});
  }

  VerificationReport r;
  r.test = "invariance";
  r.samples = n;
  r.seed = seed;
  const double corrected = level / static_cast<double>(std::max<std::size_t>(probes.size(), 1));
  double min_p = 1.0;
  for (auto& pr : probes) {
    snap_to_grid(pr.a, pr.b);
    const auto ks = ks_two_sample(pr.a, pr.b);
    min_p = std::min(min_p, ks.p_value);
    r.subtests.push_back({pr.name, ks.statistic, corrected, ks.p_value, ks.p_value >= corrected});
  }
  r.statistic = min_p;
  r.threshold = corrected;
  r.p_value = std::min(1.0, min_p * static_cast<double>(probes.size()));
  finish_verdict(r);
  return r;
}

VerificationReport gaussianity_independence_test(const Sampler& sampler, const EnsembleSpec& model,
                                                 std::size_t samples, std::uint64_t seed, int threads) {
  require_samples(samples);
  const auto models = coordinate_models(model);
  const CanonicalTensor shape(class_of(model.kind), model.order, model.dim);
  const std::size_t n = samples, m = models.size();
  std::vector<std::vector<double>> x(m, std::vector<double>(n));
  parallel_for(n, threads, [&](std::size_t k) {
    Rng rng = make_rng(seed, k);
    const CanonicalTensor t = sampler(rng);
    if (t.symmetry() != shape.symmetry() || t.order() != shape.order() || t.dim() != shape.dim()) {
      throw std::invalid_argument("sampler output does not match the model's class and shape");
    }
    for (std::size_t j = 0; j < m; ++j) x[j][k] = t.component(models[j].component).values[models[j].index];
  });

  VerificationReport r;
  r.test = "gaussianity";
  r.samples = n;
  r.seed = seed;
  r.threshold = 4.0;
  const double dn = static_cast<double>(n);
  // Gaussian variances of z, z^2, z^3, z^4: 1, 2, 15, 96
  const double targets[4] = {0.0, 1.0, 0.0, 3.0};
  const double vars[4] = {1.0, 2.0, 15.0, 96.0};
  const char* labels[4] = {"mean", "second moment", "third moment", "fourth moment"};
  double worst = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto& md = models[j];
    const std::string where = index_name(shape, md.component, md.index);
    const double sd = std::sqrt(md.variance);
    double moments[4] = {0, 0, 0, 0};
    for (double v : x[j]) {
      const double z = sd > 0.0 ? (v - md.mean) / sd : (v == md.mean ? 0.0 : HUGE_VAL);
      double pw = 1.0;
      for (double& mo : moments) {
        pw *= z;
        mo += pw;
      }
    }
    for (int q = 0; q < 4; ++q) {
      const double se = std::sqrt(vars[q] / dn);
      const double dev = std::abs(moments[q] / dn - targets[q]) / se;
      const double shown = std::isfinite(dev) ? dev : HUGE_VAL;
      worst = std::max(worst, shown);
      r.subtests.push_back({std::string(labels[q]) + " " + where, shown, 4.0, std::nullopt, dev <= 4.0});
    }
  }
  const double bound = 4.0 / std::sqrt(dn);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (models[i].group >= 0 && models[i].group == models[j].group) continue;
      const double c = correlation(x[i], x[j]);
      const double dev = std::abs(c) / (1.0 / std::sqrt(dn));
      worst = std::max(worst, dev);
      r.subtests.push_back({"correlation " + index_name(shape, models[i].component, models[i].index) + " " +
                                index_name(shape, models[j].component, models[j].index),
                            c, bound, std::nullopt, std::abs(c) <= bound});
    }
  }
  r.statistic = worst;
  finish_verdict(r);
  return r;
}

VerificationReport derivative_identity_test(std::size_t trials, std::uint64_t seed) {
  VerificationReport r;
  r.test = "derivative";
  r.samples = trials;
  r.seed = seed;
  r.threshold = 1e-6;
  const double h = 1e-5;
  double worst = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    const int p = 1 + static_cast<int>(k % 4);
    const int n = 2 + static_cast<int>((k / 4) % 2);
    Rng rng = make_rng(seed, k);
    CanonicalTensor t(SymmetryClass::Symmetric, p, n);
    for (auto& v : t.component(0).values) v = standard_normal(rng);
    const DenseTensor dense = densify(t);
    const DenseTensor plus = act_dense(givens(h, n, GroupFlavor::Orthogonal), dense);
    const DenseTensor minus = act_dense(givens(-h, n, GroupFlavor::Orthogonal), dense);
    const DenseTensor exact = densify(theta_derivative(t));
    double err = 0.0;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      err = std::max(err, std::abs((plus[i] - minus[i]) / (2.0 * h) - exact[i]));
    }
    worst = std::max(worst, err);
    r.subtests.push_back({"trial " + std::to_string(k) + " p=" + std::to_string(p) + " N=" + std::to_string(n), err,
                          1e-6, std::nullopt, err <= 1e-6});
  }
  r.statistic = worst;
  finish_verdict(r);
  return r;
}

VerificationReport isotropy_test(const Sampler& sampler, int order, int dim, std::size_t samples, std::uint64_t seed,
                                 int threads, bool center) {
  require_samples(samples);
  const std::size_t kdim = shared_index_space(order, dim, IndexSpace::Kind::Symmetric)->size();
  if (kdim < 3) {
    throw std::invalid_argument("isotropy needs K = C(N+p-1, p) >= 3 coordinates, got K=" + std::to_string(kdim));
  }
  const std::size_t n = samples;
  std::vector<CanonicalTensor> tensors(n, CanonicalTensor(SymmetryClass::Symmetric, order, dim));
  parallel_for(n, threads, [&](std::size_t k) {
    Rng rng = make_rng(seed, k);
    tensors[k] = sampler(rng);
    if (tensors[k].symmetry() != SymmetryClass::Symmetric || tensors[k].order() != order || tensors[k].dim() != dim) {
      throw std::invalid_argument("isotropy_test needs real symmetric samples of the stated shape");
    }
  });
  if (center) {
    double shift = 0.0;
    for (const auto& t : tensors) shift += t.component(0).values[0];
    shift /= static_cast<double>(n);
    const CanonicalTensor ident = identity_tensor(order, dim);
    for (auto& t : tensors) {
      for (std::size_t k = 0; k < kdim; ++k) t.component(0).values[k] -= shift * ident.component(0).values[k];
    }
  }
  std::vector<std::vector<double>> unit(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto v = flatten_isometry(tensors[k]);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    if (norm == 0.0) throw std::invalid_argument("isotropy_test: sample " + std::to_string(k) + " has zero norm");
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    unit[k] = std::move(v);
  }

  VerificationReport r;
  r.test = "isotropy";
  r.samples = n;
  r.seed = seed;
  r.threshold = 4.0;
  const double kd = static_cast<double>(kdim), dn = static_cast<double>(n);
  const double var = 3.0 / (kd * (kd + 2.0)) - 1.0 / (kd * kd);
  const double se = std::sqrt(var / dn);
  double worst = 0.0;
  const CanonicalTensor shape(SymmetryClass::Symmetric, order, dim);
  for (std::size_t j = 0; j < kdim; ++j) {
    double m2 = 0.0;
    for (const auto& v : unit) m2 += v[j] * v[j];
    const double dev = std::abs(m2 / dn - 1.0 / kd) / se;
    worst = std::max(worst, dev);
    r.subtests.push_back({"squared coordinate " + index_name(shape, 0, j), dev, 4.0, std::nullopt, dev <= 4.0});
  }
  const int directions = 10;
  const double level = 0.01 / directions;
  std::vector<std::vector<double>> reference(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rng rng = make_rng(seed, n + k);
    reference[k] = unit_gaussian_vector(kdim, rng);
  }
  double min_p = 1.0;
  for (int q = 0; q < directions; ++q) {
    Rng rng = make_rng(seed, 2 * n + static_cast<std::size_t>(q));
    const auto dir = unit_gaussian_vector(kdim, rng);
    std::vector<double> a(n), b(n);
    for (std::size_t k = 0; k < n; ++k) {
      double sa = 0.0, sb = 0.0;
      for (std::size_t j = 0; j < kdim; ++j) {
        sa += dir[j] * unit[k][j];
        sb += dir[j] * reference[k][j];
      }
      a[k] = sa;
      b[k] = sb;
    }
    const auto ks = ks_two_sample(a, b);
    min_p = std::min(min_p, ks.p_value);
    r.subtests.push_back({"projection " + std::to_string(q), ks.statistic, level, ks.p_value, ks.p_value >= level});
  }
  r.statistic = worst;
  r.p_value = min_p;
  finish_verdict(r);
  if (center) r.verdict = "exploratory";
  return r;
}

}  // namespace gte
