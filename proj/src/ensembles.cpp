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

#include "gte/ensembles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "gte/parallel.hpp"

namespace gte {

namespace {

using Kind = IndexSpace::Kind;

// Per-class variance scale: variance = gamma * p / (divisor * Gamma).
double variance_divisor(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::GOTE: return 1.0;
    case EnsembleKind::GUTE: return 2.0;
    case EnsembleKind::GSTE: return 4.0;
  }
  return 1.0;
}

// Symmetric epsilon codes and the constraint rows on them. The dense entry
// with quaternion indices (1,...,1,2) at a paired class a is
//   sum_eps Q^eps(a) prod_{s<h} e_{eps_s}[0][0] * e_{eps_h}[0][1];
// its real and imaginary parts give one row each.
struct GsteConstraint {
  std::vector<std::size_t> codes;  // symmetric components
  Eigen::MatrixXd projector;       // onto the constraint null space, over `codes`
  std::vector<int> group;          // connected block of each code, -1 if unconstrained
};

GsteConstraint gste_constraint(int order) {
  const int h = order / 2;
  const auto& basis = quaternion_basis();
  GsteConstraint out;
  for (std::size_t code = 0; code < epsilon_count(h); ++code) {
    const auto eps = decode_epsilon(code, h);
    if (epsilon_is_symmetric(eps)) out.codes.push_back(code);
  }
  const auto m = static_cast<Eigen::Index>(out.codes.size());
  Eigen::MatrixXd rows(2, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto eps = decode_epsilon(out.codes[static_cast<std::size_t>(j)], h);
    Complex f(1, 0);
    for (int s = 0; s < h; ++s) {
      const int cell = s + 1 < h ? 0 : 1;  // [0][0] or [0][1]
      f *= basis[static_cast<std::size_t>(eps[static_cast<std::size_t>(s)])][static_cast<std::size_t>(cell)];
    }
    rows(0, j) = f.real();
    rows(1, j) = f.imag();
  }
  // P = I - R^+ R
  const Eigen::MatrixXd pinv = rows.completeOrthogonalDecomposition().pseudoInverse();
  out.projector = Eigen::MatrixXd::Identity(m, m) - pinv * rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (std::abs(out.projector(i, j)) < 1e-14) out.projector(i, j) = 0.0;
    }
  }
  // connected blocks of the projector's off-diagonal pattern
  out.group.assign(static_cast<std::size_t>(m), -1);
  int next = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (out.group[static_cast<std::size_t>(i)] != -1 || std::abs(out.projector(i, i) - 1.0) < 1e-14) continue;
    std::vector<Eigen::Index> stack{i};
    out.group[static_cast<std::size_t>(i)] = next;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (Eigen::Index v = 0; v < m; ++v) {
        if (v != u && out.projector(u, v) != 0.0 && out.group[static_cast<std::size_t>(v)] == -1) {
          out.group[static_cast<std::size_t>(v)] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return out;
}

}  // namespace

std::string to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::GOTE: return "gote";
    case EnsembleKind::GUTE: return "gute";
    case EnsembleKind::GSTE: return "gste";
  }
  return "?";
}

EnsembleKind ensemble_kind_from_string(const std::string& tag) {
  std::string t = tag;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "gote") return EnsembleKind::GOTE;
  if (t == "gute") return EnsembleKind::GUTE;
  if (t == "gste") return EnsembleKind::GSTE;
  throw std::invalid_argument("unknown ensemble '" + tag + "' (expected gote, gute or gste)");
}

SymmetryClass class_of(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::GOTE: return SymmetryClass::Symmetric;
    case EnsembleKind::GUTE: return SymmetryClass::Hermitian;
    case EnsembleKind::GSTE: return SymmetryClass::SelfDual;
  }
  return SymmetryClass::Symmetric;
}

void EnsembleSpec::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive and finite");
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  if (dim < 1) throw std::invalid_argument("dimension N must be positive");
  if (order < 1) throw std::invalid_argument("order p must be positive");
  if (kind == EnsembleKind::GUTE && order % 2 != 0) {
    throw std::invalid_argument("GUTE needs p even, got p=" + std::to_string(order));
  }
  if (kind == EnsembleKind::GSTE && order % 4 != 2) {
    throw std::invalid_argument("GSTE needs p = 2 (mod 4), got p=" + std::to_string(order));
  }
}

double kappa(EnsembleKind k, int order) {
  const double p = order;
  switch (k) {
    case EnsembleKind::GOTE: return 1.0 / (2.0 * p);
    case EnsembleKind::GUTE: return 1.0 / p;
    case EnsembleKind::GSTE: return 2.0 / p;
  }
  return 0.0;
}

std::vector<CoordinateModel> coordinate_models(const EnsembleSpec& spec) {
  spec.validate();
  const CanonicalTensor shape(class_of(spec.kind), spec.order, spec.dim);
  const CanonicalTensor ident = identity_tensor(spec.order, spec.dim);
  const double scale = spec.gamma * spec.order / variance_divisor(spec.kind);
  std::vector<CoordinateModel> out;
  GsteConstraint constraint;
  std::vector<int> slot_of_code;
  if (spec.kind == EnsembleKind::GSTE) {
    constraint = gste_constraint(spec.order);
    slot_of_code.assign(shape.component_count(), -1);
    for (std::size_t j = 0; j < constraint.codes.size(); ++j) slot_of_code[constraint.codes[j]] = static_cast<int>(j);
  }
  const int groups_per_class = spec.kind == EnsembleKind::GSTE
                                   ? 1 + *std::max_element(constraint.group.begin(), constraint.group.end())
                                   : 0;
  for (std::size_t c = 0; c < shape.component_count(); ++c) {
    const auto& space = shape.space_of(c);
    for (std::size_t k = 0; k < space.size(); ++k) {
      CoordinateModel m{c, k, 0.0, scale / static_cast<double>(space.gamma(k)), -1};
      if (c == 0 && space.kind() == Kind::Symmetric) m.mean = spec.beta * ident.component(0).values[k];
      if (spec.kind == EnsembleKind::GSTE && space.paired(k) && slot_of_code[c] >= 0) {
        const auto j = static_cast<Eigen::Index>(slot_of_code[c]);
        m.variance *= constraint.projector(j, j);
        const int g = constraint.group[static_cast<std::size_t>(j)];
        if (g >= 0) m.group = static_cast<int>(k) * groups_per_class + g;
      }
      out.push_back(m);
    }
  }
  return out;
}

CanonicalTensor sample(const EnsembleSpec& spec, Rng& rng) {
  spec.validate();
  CanonicalTensor t(class_of(spec.kind), spec.order, spec.dim);
  const CanonicalTensor ident = identity_tensor(spec.order, spec.dim);
  const double scale = spec.gamma * spec.order / variance_divisor(spec.kind);
  for (std::size_t c = 0; c < t.component_count(); ++c) {
    const auto& space = t.space_of(c);
    auto& values = t.component(c).values;
    for (std::size_t k = 0; k < values.size(); ++k) {
      values[k] = std::sqrt(scale / static_cast<double>(space.gamma(k))) * standard_normal(rng);
    }
  }
  if (spec.kind == EnsembleKind::GSTE && spec.order > 2) {
    // condition on the paired-class constraint by orthogonal projection; the
    // draws at a class share one variance, so projection is exact conditioning
    static thread_local std::vector<std::pair<int, GsteConstraint>> cache;
    auto it = std::find_if(cache.begin(), cache.end(), [&](const auto& e) { return e.first == spec.order; });
    if (it == cache.end()) {
      cache.emplace_back(spec.order, gste_constraint(spec.order));
      it = cache.end() - 1;
    }
    const GsteConstraint& con = it->second;
    const auto& sym = t.space(Kind::Symmetric);
    const auto m = static_cast<Eigen::Index>(con.codes.size());
    Eigen::VectorXd x(m);
    for (std::size_t k = 0; k < sym.size(); ++k) {
      if (!sym.paired(k)) continue;
      for (Eigen::Index j = 0; j < m; ++j) x(j) = t.component(con.codes[static_cast<std::size_t>(j)]).values[k];
      const Eigen::VectorXd y = con.projector * x;
      for (Eigen::Index j = 0; j < m; ++j) t.component(con.codes[static_cast<std::size_t>(j)]).values[k] = y(j);
    }
  }
  if (spec.beta != 0.0) {
    auto& values = t.component(0).values;
    for (std::size_t k = 0; k < values.size(); ++k) values[k] += spec.beta * ident.component(0).values[k];
  }
  return t;
}

std::vector<CanonicalTensor> sample_batch(const EnsembleSpec& spec, std::size_t count, int threads) {
  spec.validate();
  std::vector<CanonicalTensor> out(count, CanonicalTensor(class_of(spec.kind), spec.order, spec.dim));
  parallel_for(count, threads, [&](std::size_t i) {
    Rng rng = make_rng(spec.seed, i);
    out[i] = sample(spec, rng);
  });
  return out;
}

double identity_pairing(const CanonicalTensor& t) {
  if (t.symmetry() == SymmetryClass::Antisymmetric || t.order() % 2 != 0) return 0.0;
  const auto& space = t.space(Kind::Symmetric);
  const auto& values = t.component(0).values;
  double s = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (space.paired(k)) s += values[k];
  }
  return s;
}

double density_norm_sq(const CanonicalTensor& t) {
  return t.symmetry() == SymmetryClass::SelfDual ? quaternionic_norm_sq(t) : frobenius_norm_sq(t);
}

double log_density_unnormalized(const CanonicalTensor& t, const EnsembleSpec& spec) {
  spec.validate();
  if (t.symmetry() != class_of(spec.kind) || t.order() != spec.order || t.dim() != spec.dim) {
    throw std::invalid_argument("tensor (" + to_string(t.symmetry()) + ", p=" + std::to_string(t.order()) +
                                ", N=" + std::to_string(t.dim()) + ") does not belong to " + to_string(spec.kind) +
                                " with p=" + std::to_string(spec.order) + ", N=" + std::to_string(spec.dim));
  }
  CanonicalTensor centered = t;
  if (spec.beta != 0.0) {
    const CanonicalTensor ident = identity_tensor(spec.order, spec.dim);
    auto& values = centered.component(0).values;
    for (std::size_t k = 0; k < values.size(); ++k) values[k] -= spec.beta * ident.component(0).values[k];
  }
  return -kappa(spec.kind, spec.order) * density_norm_sq(centered) / spec.gamma;
}

DensityCoefficients density_coefficients(const EnsembleSpec& spec) {
  spec.validate();
  const double k = kappa(spec.kind, spec.order);
  const double ident_sq = frobenius_norm_sq(identity_tensor(spec.order, spec.dim));
  return {k / spec.gamma, 2.0 * k * spec.beta / spec.gamma, -k * spec.beta * spec.beta * ident_sq / spec.gamma};
}

}  // namespace gte
