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

#include "gte/group.hpp"

#include <cmath>
#include <stdexcept>

namespace gte {

std::string to_string(GroupFlavor f) {
  switch (f) {
    case GroupFlavor::Orthogonal: return "orthogonal";
    case GroupFlavor::Unitary: return "unitary";
    case GroupFlavor::Symplectic: return "symplectic";
  }
  return "?";
}

GroupFlavor group_flavor_from_string(const std::string& tag) {
  if (tag == "orthogonal" || tag == "O") return GroupFlavor::Orthogonal;
  if (tag == "unitary" || tag == "U") return GroupFlavor::Unitary;
  if (tag == "symplectic" || tag == "Sp") return GroupFlavor::Symplectic;
  throw std::invalid_argument("unknown group flavor '" + tag + "'");
}

Matrix symplectic_form(int n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    j(2 * a, 2 * a + 1) = -1.0;
    j(2 * a + 1, 2 * a) = 1.0;
  }
  return j;
}

GroupElement::GroupElement(GroupFlavor flavor, int n, Matrix matrix)
    : flavor_(flavor), n_(n), matrix_(std::move(matrix)) {
  if (n < 1) throw std::invalid_argument("group element dimension must be positive");
  const int expected = flavor == GroupFlavor::Symplectic ? 2 * n : n;
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    throw std::invalid_argument(to_string(flavor) + " element with N=" + std::to_string(n) + " must be " +
                                std::to_string(expected) + "x" + std::to_string(expected));
  }
}

double GroupElement::defect() const {
  const auto id = Matrix::Identity(matrix_.rows(), matrix_.cols());
  switch (flavor_) {
    case GroupFlavor::Orthogonal: {
      const double imag = matrix_.imag().cwiseAbs().maxCoeff();
      return std::max(imag, (matrix_.transpose() * matrix_ - id).cwiseAbs().maxCoeff());
    }
    case GroupFlavor::Unitary: return (matrix_.adjoint() * matrix_ - id).cwiseAbs().maxCoeff();
    case GroupFlavor::Symplectic: {
      const Matrix j = symplectic_form(n_);
      const double sp = (matrix_.transpose() * j * matrix_ - j).cwiseAbs().maxCoeff();
      return std::max(sp, (matrix_.adjoint() * matrix_ - id).cwiseAbs().maxCoeff());
    }
  }
  return 0.0;
}

void GroupElement::validate() const {
  const double tol = flavor_ == GroupFlavor::Symplectic ? 1e-10 : 1e-12;
  const double d = defect();
  if (!(d <= tol)) {
    throw std::invalid_argument(to_string(flavor_) + " group element violates its defining relation (defect " +
                                std::to_string(d) + ")");
  }
}

Matrix GroupElement::even_leg_matrix() const {
  switch (flavor_) {
    case GroupFlavor::Orthogonal: return matrix_;
    case GroupFlavor::Unitary: return matrix_.conjugate();
    case GroupFlavor::Symplectic: {
      const Matrix j = symplectic_form(n_);
      return -(j * matrix_ * j);
    }
  }
  return matrix_;
}

GroupElement GroupElement::identity(GroupFlavor flavor, int n) {
  const int size = flavor == GroupFlavor::Symplectic ? 2 * n : n;
  return GroupElement(flavor, n, Matrix::Identity(size, size));
}

GroupElement compose(const GroupElement& u, const GroupElement& v) {
  if (u.flavor() != v.flavor() || u.n() != v.n()) throw std::invalid_argument("compose: incompatible group elements");
  return GroupElement(u.flavor(), u.n(), u.matrix() * v.matrix());
}

namespace {

Matrix gaussian_matrix(int n, bool complex, Rng& rng) {
  Matrix g(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const double re = standard_normal(rng);
      const double im = complex ? standard_normal(rng) : 0.0;
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

// Q factor with the diagonal of R made positive, which makes the law of Q
// invariant under left multiplication.
Matrix haar_qr(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < g.cols(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= mag > 0.0 ? d / mag : Complex(1, 0);
  }
  return q;
}

// Second column of the real-quaternion block whose first column is v:
// (z, conj(w)) -> (-w, conj(z)) per 2x2 block, so the pair forms [[z, -w], [conj(w), conj(z)]].
Eigen::VectorXcd quaternion_partner(const Eigen::VectorXcd& v) {
  Eigen::VectorXcd w(v.size());
  for (Eigen::Index a = 0; a < v.size() / 2; ++a) {
    w(2 * a) = -std::conj(v(2 * a + 1));
    w(2 * a + 1) = std::conj(v(2 * a));
  }
  return w;
}

}  // namespace

GroupElement haar_sample(GroupFlavor flavor, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_sample: N must be positive");
  switch (flavor) {
    case GroupFlavor::Orthogonal: {
      Matrix q = haar_qr(gaussian_matrix(n, false, rng));
      q = q.real().cast<Complex>();
      return GroupElement(flavor, n, q);
    }
    case GroupFlavor::Unitary: return GroupElement(flavor, n, haar_qr(gaussian_matrix(n, true, rng)));
    case GroupFlavor::Symplectic: {
      // Quaternionic Gram-Schmidt: the column set stays closed under the
      // partner map, so each new partner is orthogonal to all previous columns.
      Matrix u(2 * n, 2 * n);
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd v(2 * n);
        for (int r = 0; r < 2 * n; ++r) {
          const double re = standard_normal(rng);
          v(r) = Complex(re, standard_normal(rng));
        }
        for (int pass = 0; pass < 2; ++pass) {
          for (int c = 0; c < 2 * k; ++c) v -= u.col(c) * u.col(c).dot(v);
        }
        v /= v.norm();
        u.col(2 * k) = v;
        u.col(2 * k + 1) = quaternion_partner(v);
      }
      return GroupElement(flavor, n, u);
    }
  }
  throw std::logic_error("haar_sample: unreachable");
}

GroupElement givens(double theta, int n, GroupFlavor flavor) {
  const int size = flavor == GroupFlavor::Symplectic ? 2 * n : n;
  if (size < 2) throw std::invalid_argument("givens: needs at least two coordinates");
  Matrix u = Matrix::Identity(size, size);
  const double c = std::cos(theta), s = std::sin(theta);
  // orthogonal/unitary: rotation of coordinates 1,2; symplectic: 1 cos - e2 sin
  // in quaternionic block 1, which is the same 2x2 rotation.
  u(0, 0) = c;
  u(0, 1) = s;
  u(1, 0) = -s;
  u(1, 1) = c;
  return GroupElement(flavor, n, u);
}

Matrix generator_A(int n, GroupFlavor flavor) {
  const int size = flavor == GroupFlavor::Symplectic ? 2 * n : n;
  if (size < 2) throw std::invalid_argument("generator_A: needs at least two coordinates");
  Matrix a = Matrix::Zero(size, size);
  a(0, 1) = -1.0;
  a(1, 0) = 1.0;
  return a;
}

DenseTensor act_dense(const GroupElement& u, const DenseTensor& t) {
  const int dim = t.dim();
  if (dim != u.size()) {
    throw std::invalid_argument("act: tensor dimension " + std::to_string(dim) + " does not match group element size " +
                                std::to_string(u.size()));
  }
  const Matrix& odd = u.matrix();
  const Matrix even = u.even_leg_matrix();
  const auto d = static_cast<std::size_t>(dim);
  DenseTensor cur = t;
  DenseTensor next(t.order(), dim);
  std::size_t inner = cur.size();
  for (int leg = 0; leg < t.order(); ++leg) {
    // legs are 1-based in the formulas: leg 0 here is leg 1 (odd)
    const Matrix& m = (leg % 2 == 0) ? odd : even;
    inner /= d;
    const std::size_t outer = cur.size() / (inner * d);
    for (std::size_t o = 0; o < outer; ++o) {
      const std::size_t base = o * d * inner;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t r = 0; r < inner; ++r) {
          Complex acc(0, 0);
          for (std::size_t j = 0; j < d; ++j) {
            acc += cur[base + j * inner + r] * m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
          }
          next[base + i * inner + r] = acc;
        }
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

bool flavor_matches(GroupFlavor flavor, SymmetryClass cls) {
  switch (flavor) {
    case GroupFlavor::Orthogonal: return cls == SymmetryClass::Symmetric || cls == SymmetryClass::Antisymmetric;
    case GroupFlavor::Unitary: return cls == SymmetryClass::Hermitian;
    case GroupFlavor::Symplectic: return cls == SymmetryClass::SelfDual;
  }
  return false;
}

CanonicalTensor act(const GroupElement& u, const CanonicalTensor& t) {
  if (!flavor_matches(u.flavor(), t.symmetry())) {
    throw std::invalid_argument("act: " + to_string(u.flavor()) + " elements do not act on " + to_string(t.symmetry()) +
                                " tensors");
  }
  if (u.n() != t.dim()) {
    throw std::invalid_argument("act: group dimension N=" + std::to_string(u.n()) + " but tensor dimension N=" +
                                std::to_string(t.dim()));
  }
  const DenseTensor image = act_dense(u, densify(t));
  double scale = 1.0;
  for (const auto& z : image.data()) scale = std::max(scale, std::abs(z));
  return canonicalize(image, t.symmetry(), false, 1e-9 * scale);
}

CanonicalTensor theta_derivative(const CanonicalTensor& t) {
  if (t.symmetry() != SymmetryClass::Symmetric) {
    throw std::invalid_argument("theta_derivative needs a real symmetric tensor");
  }
  CanonicalTensor out(SymmetryClass::Symmetric, t.order(), t.dim());
  if (t.dim() < 2) return out;
  const auto& space = t.space(IndexSpace::Kind::Symmetric);
  auto& values = out.component(0).values;
  std::vector<int> idx(static_cast<std::size_t>(t.order()));
  for (std::size_t k = 0; k < space.size(); ++k) {
    const auto m = space.tuple(k);
    double acc = 0.0;
    for (std::size_t r = 0; r < m.size(); ++r) {
      // A(0,1) = -1, A(1,0) = +1
      if (m[r] != 0 && m[r] != 1) continue;
      std::copy(m.begin(), m.end(), idx.begin());
      idx[r] = 1 - m[r];
      acc += (m[r] == 0 ? -1.0 : 1.0) * t(idx);
    }
    values[k] = acc;
  }
  return out;
}

}  // namespace gte
