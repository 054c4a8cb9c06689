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

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gte/multi_index.hpp"

namespace gte {

using Complex = std::complex<double>;

enum class SymmetryClass { Symmetric, Antisymmetric, Hermitian, SelfDual };

std::string to_string(SymmetryClass c);
/// Parses the file-format tags "sym", "antisym", "herm", "selfdual".
SymmetryClass symmetry_class_from_string(const std::string& tag);

/// Raised when a dense tensor does not satisfy the requested class relations.
class ClassViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quaternion basis e0..e3 as 2x2 complex matrices, row-major.
const std::array<std::array<Complex, 4>, 4>& quaternion_basis();

/// Number of epsilon tuples in {0,1,2,3}^q, and the base-4 decoding of a code.
std::size_t epsilon_count(int half_order);
std::vector<int> decode_epsilon(std::size_t code, int half_order);
std::size_t encode_epsilon(std::span<const int> eps);
/// Parity rule: n1 + n3 == n2 (mod 2), i.e. an even number of non-zero slots.
bool epsilon_is_symmetric(std::span<const int> eps);

/// Flat complex tensor of order p and dimension D (D = 2N for expanded
/// self-dual tensors). Row-major with the first index slowest.
class DenseTensor {
 public:
  DenseTensor(int order, int dim);
  DenseTensor(int order, int dim, std::vector<Complex> data);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator[](std::size_t pos) { return data_[pos]; }
  const Complex& operator[](std::size_t pos) const { return data_[pos]; }
  Complex at(std::span<const int> idx) const { return data_[flat_position(idx, dim_)]; }
  Complex& at(std::span<const int> idx) { return data_[flat_position(idx, dim_)]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  double frobenius_norm_sq() const;
  double max_abs_diff(const DenseTensor& other) const;

 private:
  int order_;
  int dim_;
  std::vector<Complex> data_;
};

/// One real payload of a canonical tensor, indexed by an IndexSpace.
struct Component {
  IndexSpace::Kind kind;
  std::vector<double> values;
};

/// Symmetry-aware tensor on canonical (sorted) multi-indices.
///
/// Layout of the components by class:
///   Symmetric      [S]                       S over non-decreasing tuples
///   Antisymmetric  [A]                       A over strictly increasing tuples,
///                                            value at the sorted tuple
///   Hermitian      [H0 (sym), H1 (antisym)]  H = H0 + i H1, p even
///   SelfDual       one per epsilon code      symmetric iff epsilon satisfies
///                                            the parity rule, p = 2 mod 4
/// Self-dual tensors keep dimension N; densify() expands them to 2N.
class CanonicalTensor {
 public:
  /// Zero tensor of the given class.
  CanonicalTensor(SymmetryClass cls, int order, int dim);

  SymmetryClass symmetry() const { return cls_; }
  int order() const { return order_; }
  int dim() const { return dim_; }

  std::size_t component_count() const { return components_.size(); }
  const Component& component(std::size_t c) const { return components_[c]; }
  Component& component(std::size_t c) { return components_[c]; }
  const IndexSpace& space(IndexSpace::Kind kind) const;
  const IndexSpace& space_of(std::size_t c) const { return space(components_[c].kind); }

  /// Value of component c at an arbitrary (unsorted) tuple, with the
  /// antisymmetric sign rule applied.
  double value(std::size_t c, std::span<const int> idx) const;

  /// Symmetric-class accessors (component 0).
  double operator()(std::span<const int> idx) const { return value(0, idx); }
  void set(std::span<const int> sorted_idx, double v, std::size_t c = 0);

  /// Dimension of the dense form: N, or 2N for self-dual.
  int dense_dim() const { return cls_ == SymmetryClass::SelfDual ? 2 * dim_ : dim_; }

  double max_abs_diff(const CanonicalTensor& other) const;

  CanonicalTensor& operator+=(const CanonicalTensor& other);
  CanonicalTensor& operator*=(double s);

 private:
  SymmetryClass cls_;
  int order_;
  int dim_;
  std::shared_ptr<const IndexSpace> sym_space_;
  std::shared_ptr<const IndexSpace> strict_space_;
  std::vector<Component> components_;
};

CanonicalTensor operator+(CanonicalTensor a, const CanonicalTensor& b);
CanonicalTensor operator-(CanonicalTensor a, const CanonicalTensor& b);
CanonicalTensor operator*(double s, CanonicalTensor a);

/// Validates order/class compatibility: hermitian needs p even, self-dual p = 2 (mod 4).
void check_class_order(SymmetryClass cls, int order);

/// Symmetric tensor identity: zero for odd p, 1/Gamma(m) on paired m otherwise.
CanonicalTensor identity_tensor(int order, int dim);

/// Sum over all dense positions of |entry|^2. For self-dual tensors this is
/// the norm of the (2N)^p expansion, i.e. 2^{p/2} times quaternionic_norm_sq.
double frobenius_norm_sq(const CanonicalTensor& t);
double frobenius_norm_sq(const DenseTensor& t);

/// Sum over components and classes of Gamma * value^2 (no 2^{p/2} factor for
/// self-dual tensors; equals frobenius_norm_sq for every other class).
double quaternionic_norm_sq(const CanonicalTensor& t);

/// Expands a canonical tensor to its dense form.
DenseTensor densify(const CanonicalTensor& t);

/// Recovers the canonical form of a dense tensor. Throws ClassViolation naming
/// the first offending index pair when the relations fail by more than `tol`
/// (absolute), unless `project` is set, in which case the tensor is averaged
/// onto the class first.
CanonicalTensor canonicalize(const DenseTensor& d, SymmetryClass cls, bool project = false,
                             double tol = 1e-12);

/// Phi(t): sqrt(Gamma(m)) * t(m) over canonical m, an isometry onto R^K.
std::vector<double> flatten_isometry(const CanonicalTensor& t);
CanonicalTensor unflatten_isometry(std::span<const double> v, int order, int dim);

}  // namespace gte
