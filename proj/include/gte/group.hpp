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

#include <string>

#include <Eigen/Dense>

#include "gte/rng.hpp"
#include "gte/tensor.hpp"

namespace gte {

enum class GroupFlavor { Orthogonal, Unitary, Symplectic };

std::string to_string(GroupFlavor f);
GroupFlavor group_flavor_from_string(const std::string& tag);

using Matrix = Eigen::MatrixXcd;

/// Canonical symplectic form J = blockdiag(e2, ..., e2) of size 2N.
Matrix symplectic_form(int n);

/// An element of O(N), U(N) or Sp(2N). `n` is N in every case; the matrix is
/// 2N x 2N for the symplectic flavor (quaternion index inner: row 2a + iota).
class GroupElement {
 public:
  GroupElement(GroupFlavor flavor, int n, Matrix matrix);

  GroupFlavor flavor() const { return flavor_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

  /// Max-norm defect of the defining relation (U^T U = I, U^* U = I, or
  /// U^T J U = J together with unitarity).
  double defect() const;
  /// Throws std::invalid_argument when defect() exceeds the flavor tolerance
  /// (1e-12 orthogonal/unitary, 1e-10 symplectic).
  void validate() const;

  /// Matrix applied on the even legs: U, conj(U), or -J U J.
  Matrix even_leg_matrix() const;

  static GroupElement identity(GroupFlavor flavor, int n);

 private:
  GroupFlavor flavor_;
  int n_;
  Matrix matrix_;
};

/// Product U * V; act(V, act(U, t)) == act(U * V, t).
GroupElement compose(const GroupElement& u, const GroupElement& v);

/// Haar-distributed group element, deterministic given the generator state.
GroupElement haar_sample(GroupFlavor flavor, int n, Rng& rng);

/// Rotation in the first two coordinates (quaternionic block 1 cos - e2 sin
/// for the symplectic flavor); identity elsewhere.
GroupElement givens(double theta, int n, GroupFlavor flavor);

/// A = (d/dtheta U_theta^T) U_theta: A(1,2) = -1, A(2,1) = 1, zero elsewhere
/// (e2 in block 1 for the symplectic flavor).
Matrix generator_A(int n, GroupFlavor flavor);

/// Multilinear action on a dense tensor, leg by leg:
/// (U.H)_{i} = sum_j H_j prod_t M_t(j_t, i_t), with M_t = U on odd legs and
/// even_leg_matrix() on even legs.
DenseTensor act_dense(const GroupElement& u, const DenseTensor& t);

/// Class-aware action: orthogonal on real symmetric/antisymmetric, unitary on
/// hermitian, symplectic on self-dual. Throws ClassViolation when the image
/// leaves the class (relative tolerance 1e-9).
CanonicalTensor act(const GroupElement& u, const CanonicalTensor& t);

/// Whether the flavor acts on tensors of this class.
bool flavor_matches(GroupFlavor flavor, SymmetryClass cls);

/// d/dtheta of act(U_theta, t) at theta = 0: sum over legs r of A contracted
/// into leg r.
CanonicalTensor theta_derivative(const CanonicalTensor& t);

}  // namespace gte
