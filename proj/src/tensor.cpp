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

#include "gte/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gte {

namespace {

using Kind = IndexSpace::Kind;

// Sorts idx in place and returns the permutation sign (0 on a repeat).
int sort_with_sign(std::span<int> idx) {
  int sign = 1;
  bool repeat = false;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) {
        repeat = true;
        break;
      }
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  if (repeat) {
    std::sort(idx.begin(), idx.end());
    return 0;
  }
  return sign;
}

std::string tuple_string(std::span<const int> idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k] + 1);
  }
  return s + ")";
}

// Resolution of one dense position onto the canonical spaces.
struct Slot {
  std::size_t sym_pos;
  std::size_t strict_pos;  // npos on repeated indices
  int sign;
};

Slot locate(std::span<const int> idx, const IndexSpace& sym, const IndexSpace& strict) {
  std::vector<int> s(idx.begin(), idx.end());
  const int sign = sort_with_sign(s);
  Slot slot{sym.find(s), IndexSpace::npos, sign};
  if (sign != 0) slot.strict_pos = strict.find(s);
  return slot;
}

double component_value(const Component& c, const Slot& s) {
  if (c.kind == Kind::Symmetric) return c.values[s.sym_pos];
  if (s.sign == 0 || s.strict_pos == IndexSpace::npos) return 0.0;
  return s.sign * c.values[s.strict_pos];
}

// Extracts a component from a real N^p array, checking (or projecting onto)
// its symmetry relations.
Component extract_component(std::span<const double> dense, int order, int dim, Kind kind, bool project, double tol,
                            const std::string& what) {
  const auto& sym = *shared_index_space(order, dim, Kind::Symmetric);
  const auto& strict = *shared_index_space(order, dim, Kind::Strict);
  const auto& space = kind == Kind::Symmetric ? sym : strict;
  Component out{kind, std::vector<double>(space.size(), 0.0)};
  std::vector<double> count(space.size(), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(order));

  if (project) {
    for (std::size_t pos = 0; pos < dense.size(); ++pos) {
      unflatten_position(pos, dim, idx);
      const Slot s = locate(idx, sym, strict);
      if (kind == Kind::Symmetric) {
        out.values[s.sym_pos] += dense[pos];
        count[s.sym_pos] += 1.0;
      } else if (s.sign != 0) {
        out.values[s.strict_pos] += s.sign * dense[pos];
        count[s.strict_pos] += 1.0;
      }
    }
    for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] /= count[k];
    return out;
  }

  for (std::size_t k = 0; k < space.size(); ++k) {
    out.values[k] = dense[flat_position(space.tuple(k), dim)];
  }
  for (std::size_t pos = 0; pos < dense.size(); ++pos) {
    unflatten_position(pos, dim, idx);
    const Slot s = locate(idx, sym, strict);
    const double expected = component_value(out, s);
    if (std::abs(dense[pos] - expected) > tol) {
      std::vector<int> sorted(idx);
      std::sort(sorted.begin(), sorted.end());
      std::ostringstream msg;
      msg << "class violation (" << what << "): entry " << tuple_string(idx);
      if (kind == Kind::Strict && s.sign == 0) {
        msg << " has a repeated index but value " << dense[pos];
      } else {
        msg << " = " << dense[pos] << " disagrees with " << tuple_string(sorted) << " = "
            << (kind == Kind::Symmetric ? "" : (s.sign > 0 ? "+" : "-")) << out.values[kind == Kind::Symmetric ? s.sym_pos : s.strict_pos];
      }
      throw ClassViolation(msg.str());
    }
  }
  return out;
}

void require_same_shape(const CanonicalTensor& a, const CanonicalTensor& b) {
  if (a.symmetry() != b.symmetry() || a.order() != b.order() || a.dim() != b.dim()) {
    throw std::invalid_argument("canonical tensors differ in class, order or dimension");
  }
}

}  // namespace

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return "sym";
    case SymmetryClass::Antisymmetric: return "antisym";
    case SymmetryClass::Hermitian: return "herm";
    case SymmetryClass::SelfDual: return "selfdual";
  }
  return "?";
}

SymmetryClass symmetry_class_from_string(const std::string& tag) {
  if (tag == "sym") return SymmetryClass::Symmetric;
  if (tag == "antisym") return SymmetryClass::Antisymmetric;
  if (tag == "herm") return SymmetryClass::Hermitian;
  if (tag == "selfdual") return SymmetryClass::SelfDual;
  throw std::invalid_argument("unknown tensor class '" + tag + "'");
}

const std::array<std::array<Complex, 4>, 4>& quaternion_basis() {
  static const std::array<std::array<Complex, 4>, 4> basis = {{
      {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)},    // 1
      {Complex(0, 1), Complex(0, 0), Complex(0, 0), Complex(0, -1)},   // e1
      {Complex(0, 0), Complex(-1, 0), Complex(1, 0), Complex(0, 0)},   // e2
      {Complex(0, 0), Complex(0, -1), Complex(0, -1), Complex(0, 0)},  // e3
  }};
  return basis;
}

std::size_t epsilon_count(int half_order) { return std::size_t{1} << (2 * half_order); }

std::vector<int> decode_epsilon(std::size_t code, int half_order) {
  std::vector<int> eps(static_cast<std::size_t>(half_order));
  for (int s = half_order - 1; s >= 0; --s) {
    eps[static_cast<std::size_t>(s)] = static_cast<int>(code % 4);
    code /= 4;
  }
  return eps;
}

std::size_t encode_epsilon(std::span<const int> eps) {
  std::size_t code = 0;
  for (int e : eps) code = code * 4 + static_cast<std::size_t>(e);
  return code;
}

bool epsilon_is_symmetric(std::span<const int> eps) {
  int n[4] = {0, 0, 0, 0};
  for (int e : eps) ++n[e];
  return (n[1] + n[3]) % 2 == n[2] % 2;
}

// ---------------------------------------------------------------------------

DenseTensor::DenseTensor(int order, int dim) : order_(order), dim_(dim), data_(dense_size(order, dim)) {
  if (order < 1 || dim < 1) throw std::invalid_argument("DenseTensor: order and dimension must be positive");
}

DenseTensor::DenseTensor(int order, int dim, std::vector<Complex> data)
    : order_(order), dim_(dim), data_(std::move(data)) {
  if (order < 1 || dim < 1) throw std::invalid_argument("DenseTensor: order and dimension must be positive");
  if (data_.size() != dense_size(order, dim)) throw std::invalid_argument("DenseTensor: data size is not dim^order");
}

double DenseTensor::frobenius_norm_sq() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return s;
}

double DenseTensor::max_abs_diff(const DenseTensor& other) const {
  if (order_ != other.order_ || dim_ != other.dim_) throw std::invalid_argument("DenseTensor: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

// ---------------------------------------------------------------------------

void check_class_order(SymmetryClass cls, int order) {
  if (order < 1) throw std::invalid_argument("tensor order must be positive");
  if (cls == SymmetryClass::Hermitian && order % 2 != 0) {
    throw std::invalid_argument("hermitian tensors need an even order, got p=" + std::to_string(order));
  }
  if (cls == SymmetryClass::SelfDual && order % 4 != 2) {
    throw std::invalid_argument("self-dual tensors need p = 2 (mod 4), got p=" + std::to_string(order));
  }
}

CanonicalTensor::CanonicalTensor(SymmetryClass cls, int order, int dim) : cls_(cls), order_(order), dim_(dim) {
  check_class_order(cls, order);
  if (dim < 1) throw std::invalid_argument("tensor dimension must be positive");
  sym_space_ = shared_index_space(order, dim, Kind::Symmetric);
  strict_space_ = shared_index_space(order, dim, Kind::Strict);
  auto make = [&](Kind k) {
    return Component{k, std::vector<double>((k == Kind::Symmetric ? sym_space_ : strict_space_)->size(), 0.0)};
  };
  switch (cls) {
    case SymmetryClass::Symmetric: components_.push_back(make(Kind::Symmetric)); break;
    case SymmetryClass::Antisymmetric: components_.push_back(make(Kind::Strict)); break;
    case SymmetryClass::Hermitian:
      components_.push_back(make(Kind::Symmetric));
      components_.push_back(make(Kind::Strict));
      break;
    case SymmetryClass::SelfDual: {
      const int h = order / 2;
      for (std::size_t code = 0; code < epsilon_count(h); ++code) {
        const auto eps = decode_epsilon(code, h);
        components_.push_back(make(epsilon_is_symmetric(eps) ? Kind::Symmetric : Kind::Strict));
      }
      break;
    }
  }
}

const IndexSpace& CanonicalTensor::space(IndexSpace::Kind kind) const {
  return kind == Kind::Symmetric ? *sym_space_ : *strict_space_;
}

double CanonicalTensor::value(std::size_t c, std::span<const int> idx) const {
  if (idx.size() != static_cast<std::size_t>(order_)) throw std::invalid_argument("value: wrong tuple length");
  return component_value(components_.at(c), locate(idx, *sym_space_, *strict_space_));
}

void CanonicalTensor::set(std::span<const int> sorted_idx, double v, std::size_t c) {
  auto& comp = components_.at(c);
  const auto pos = space(comp.kind).find(sorted_idx);
  if (pos == IndexSpace::npos) {
    throw std::out_of_range("set: " + tuple_string(sorted_idx) + " is not a canonical index of this component");
  }
  comp.values[pos] = v;
}

double CanonicalTensor::max_abs_diff(const CanonicalTensor& other) const {
  require_same_shape(*this, other);
  double m = 0.0;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t k = 0; k < components_[c].values.size(); ++k) {
      m = std::max(m, std::abs(components_[c].values[k] - other.components_[c].values[k]));
    }
  }
  return m;
}

CanonicalTensor& CanonicalTensor::operator+=(const CanonicalTensor& other) {
  require_same_shape(*this, other);
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t k = 0; k < components_[c].values.size(); ++k) {
      components_[c].values[k] += other.components_[c].values[k];
    }
  }
  return *this;
}

CanonicalTensor& CanonicalTensor::operator*=(double s) {
  for (auto& comp : components_) {
    for (auto& v : comp.values) v *= s;
  }
  return *this;
}

CanonicalTensor operator+(CanonicalTensor a, const CanonicalTensor& b) { return a += b; }
CanonicalTensor operator-(CanonicalTensor a, const CanonicalTensor& b) {
  CanonicalTensor nb = b;
  nb *= -1.0;
  return a += nb;
}
CanonicalTensor operator*(double s, CanonicalTensor a) { return a *= s; }

// ---------------------------------------------------------------------------

CanonicalTensor identity_tensor(int order, int dim) {
  CanonicalTensor t(SymmetryClass::Symmetric, order, dim);
  if (order % 2 != 0) return t;
  const auto& space = t.space(Kind::Symmetric);
  auto& values = t.component(0).values;
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (space.paired(k)) values[k] = 1.0 / static_cast<double>(space.gamma(k));
  }
  return t;
}

double quaternionic_norm_sq(const CanonicalTensor& t) {
  double s = 0.0;
  for (std::size_t c = 0; c < t.component_count(); ++c) {
    const auto& space = t.space_of(c);
    const auto& values = t.component(c).values;
    for (std::size_t k = 0; k < values.size(); ++k) s += static_cast<double>(space.gamma(k)) * values[k] * values[k];
  }
  return s;
}

double frobenius_norm_sq(const CanonicalTensor& t) {
  const double s = quaternionic_norm_sq(t);
  if (t.symmetry() == SymmetryClass::SelfDual) return std::ldexp(s, t.order() / 2);
  return s;
}

double frobenius_norm_sq(const DenseTensor& t) { return t.frobenius_norm_sq(); }

DenseTensor densify(const CanonicalTensor& t) {
  const int p = t.order();
  const auto& sym = t.space(Kind::Symmetric);
  const auto& strict = t.space(Kind::Strict);
  DenseTensor out(p, t.dense_dim());
  std::vector<int> idx(static_cast<std::size_t>(p));

  if (t.symmetry() != SymmetryClass::SelfDual) {
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
      unflatten_position(pos, t.dim(), idx);
      const Slot s = locate(idx, sym, strict);
      const double re = component_value(t.component(0), s);
      const double im = t.symmetry() == SymmetryClass::Hermitian ? component_value(t.component(1), s) : 0.0;
      out[pos] = Complex(re, im);
    }
    return out;
  }

  // Self-dual: H(2a+iota) = sum_eps Q^eps(a) prod_s (e_{eps_s})[iota_{2s-1}, iota_{2s}].
  const auto& basis = quaternion_basis();
  const int h = p / 2;
  std::vector<int> big(static_cast<std::size_t>(p));
  std::vector<int> eps(static_cast<std::size_t>(h));
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    unflatten_position(pos, out.dim(), big);
    for (std::size_t k = 0; k < big.size(); ++k) idx[k] = big[k] / 2;
    const Slot s = locate(idx, sym, strict);
    // each 2x2 entry has exactly two non-zero basis elements
    std::array<std::array<int, 2>, 16> choice{};
    std::array<std::array<Complex, 2>, 16> coef{};
    for (int q = 0; q < h; ++q) {
      const int cell = (big[static_cast<std::size_t>(2 * q)] % 2) * 2 + big[static_cast<std::size_t>(2 * q + 1)] % 2;
      int n = 0;
      for (int k = 0; k < 4; ++k) {
        if (basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(cell)] != Complex(0, 0)) {
          choice[static_cast<std::size_t>(q)][static_cast<std::size_t>(n)] = k;
          coef[static_cast<std::size_t>(q)][static_cast<std::size_t>(n)] = basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(cell)];
          ++n;
        }
      }
    }
    Complex acc(0, 0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
      Complex f(1, 0);
      for (int q = 0; q < h; ++q) {
        const std::size_t bit = (mask >> q) & 1u;
        eps[static_cast<std::size_t>(q)] = choice[static_cast<std::size_t>(q)][bit];
        f *= coef[static_cast<std::size_t>(q)][bit];
      }
      acc += f * component_value(t.component(encode_epsilon(eps)), s);
    }
    out[pos] = acc;
  }
  return out;
}

CanonicalTensor canonicalize(const DenseTensor& d, SymmetryClass cls, bool project, double tol) {
  const int p = d.order();
  check_class_order(cls, p);
  std::vector<double> re(d.size()), im(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    re[k] = d[k].real();
    im[k] = d[k].imag();
  }

  if (cls != SymmetryClass::SelfDual) {
    CanonicalTensor out(cls, p, d.dim());
    switch (cls) {
      case SymmetryClass::Symmetric:
      case SymmetryClass::Antisymmetric: {
        if (!project) {
          for (std::size_t k = 0; k < d.size(); ++k) {
            if (std::abs(im[k]) > tol) {
              std::vector<int> idx(static_cast<std::size_t>(p));
              unflatten_position(k, d.dim(), idx);
              throw ClassViolation("class violation (" + to_string(cls) + "): entry " + tuple_string(idx) +
                                   " has imaginary part " + std::to_string(im[k]));
            }
          }
        }
        const Kind kind = cls == SymmetryClass::Symmetric ? Kind::Symmetric : Kind::Strict;
        out.component(0) = extract_component(re, p, d.dim(), kind, project, tol, to_string(cls));
        break;
      }
      case SymmetryClass::Hermitian:
        out.component(0) = extract_component(re, p, d.dim(), Kind::Symmetric, project, tol, "herm real part");
        out.component(1) = extract_component(im, p, d.dim(), Kind::Strict, project, tol, "herm imaginary part");
        break;
      default: break;
    }
    return out;
  }

  if (d.dim() % 2 != 0) throw ClassViolation("class violation (selfdual): dense dimension must be even");
  const int n = d.dim() / 2;
  const int h = p / 2;
  const auto& basis = quaternion_basis();
  const std::size_t small = dense_size(p, n);
  // Q^eps(a) = 2^{-h} sum_iota conj(prod_s e_{eps_s}[iota]) H(2a+iota)
  std::vector<std::vector<Complex>> q(epsilon_count(h), std::vector<Complex>(small));
  std::vector<int> big(static_cast<std::size_t>(p)), a(static_cast<std::size_t>(p)), eps(static_cast<std::size_t>(h));
  const double scale = std::ldexp(1.0, -h);
  for (std::size_t pos = 0; pos < d.size(); ++pos) {
    if (d[pos] == Complex(0, 0)) continue;
    unflatten_position(pos, d.dim(), big);
    for (std::size_t k = 0; k < big.size(); ++k) a[k] = big[k] / 2;
    const std::size_t apos = flat_position(a, n);
    for (std::size_t code = 0; code < q.size(); ++code) {
      std::size_t c = code;
      Complex f(scale, 0);
      for (int s = h - 1; s >= 0 && f != Complex(0, 0); --s) {
        const int e = static_cast<int>(c % 4);
        c /= 4;
        const int cell = (big[static_cast<std::size_t>(2 * s)] % 2) * 2 + big[static_cast<std::size_t>(2 * s + 1)] % 2;
        f *= std::conj(basis[static_cast<std::size_t>(e)][static_cast<std::size_t>(cell)]);
      }
      if (f != Complex(0, 0)) q[code][apos] += f * d[pos];
    }
  }

  CanonicalTensor out(SymmetryClass::SelfDual, p, n);
  std::vector<double> qre(small), qim(small);
  for (std::size_t code = 0; code < q.size(); ++code) {
    const auto e = decode_epsilon(code, h);
    std::string label = "selfdual eps=(";
    for (std::size_t s = 0; s < e.size(); ++s) label += (s ? "," : "") + std::to_string(e[s]);
    label += ")";
    for (std::size_t k = 0; k < small; ++k) {
      qre[k] = q[code][k].real();
      qim[k] = q[code][k].imag();
      if (!project && std::abs(qim[k]) > tol) {
        std::vector<int> idx(static_cast<std::size_t>(p));
        unflatten_position(k, n, idx);
        throw ClassViolation("class violation (" + label + "): quaternion coefficient at " + tuple_string(idx) +
                             " is not real (imaginary part " + std::to_string(qim[k]) + ")");
      }
    }
    out.component(code) = extract_component(qre, p, n, out.component(code).kind, project, tol, label);
  }
  return out;
}

std::vector<double> flatten_isometry(const CanonicalTensor& t) {
  if (t.symmetry() != SymmetryClass::Symmetric) {
    throw std::invalid_argument("flatten_isometry needs a real symmetric tensor");
  }
  const auto& space = t.space(Kind::Symmetric);
  const auto& values = t.component(0).values;
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = std::sqrt(static_cast<double>(space.gamma(k))) * values[k];
  return out;
}

CanonicalTensor unflatten_isometry(std::span<const double> v, int order, int dim) {
  CanonicalTensor t(SymmetryClass::Symmetric, order, dim);
  const auto& space = t.space(Kind::Symmetric);
  if (v.size() != space.size()) throw std::invalid_argument("unflatten_isometry: vector length is not C(N+p-1, p)");
  for (std::size_t k = 0; k < v.size(); ++k) {
    t.component(0).values[k] = v[k] / std::sqrt(static_cast<double>(space.gamma(k)));
  }
  return t;
}

}  // namespace gte
