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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gte/tensor.hpp"
#include "test_util.hpp"

using namespace gte;
using test::random_tensor;

namespace {

std::vector<int> zero_based(std::vector<int> v) {
  for (auto& i : v) --i;
  return v;
}

// Dense self-dual tensor straight from Q = sum_eps Q^eps (x)_s e_{eps_s}, over all codes.
DenseTensor selfdual_oracle(const CanonicalTensor& t) {
  const int p = t.order(), h = p / 2, d = 2 * t.dim();
  const auto& e = quaternion_basis();
  return test::dense_from(p, d, [&](const std::vector<int>& big) {
    std::vector<int> a(big.size());
    for (std::size_t k = 0; k < big.size(); ++k) a[k] = big[k] / 2;
    Complex acc(0, 0);
    for (std::size_t code = 0; code < epsilon_count(h); ++code) {
      const auto eps = decode_epsilon(code, h);
      Complex f(1, 0);
      for (int s = 0; s < h; ++s) {
        const int cell = (big[2 * s] % 2) * 2 + big[2 * s + 1] % 2;
        f *= e[eps[s]][cell];
      }
      acc += f * t.value(code, a);
    }
    return acc;
  });
}

}  // namespace

TEST_CASE("quaternion basis") {
  const auto& e = quaternion_basis();
  CHECK(e[0][0] == Complex(1, 0));
  CHECK(e[1][0] == Complex(0, 1));
  CHECK(e[2][1] == Complex(-1, 0));
  CHECK(e[3][2] == Complex(0, -1));
  // e1 e2 = e3
  auto mul = [](const std::array<Complex, 4>& x, const std::array<Complex, 4>& y) {
    return std::array<Complex, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                                  x[2] * y[1] + x[3] * y[3]};
  };
  const auto e12 = mul(e[1], e[2]);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(e12[k] - e[3][k]) < 1e-15);
}

TEST_CASE("epsilon codes and the parity rule") {
  CHECK(epsilon_count(3) == 64);
  const std::vector<int> eps{1, 0, 3};
  CHECK(decode_epsilon(encode_epsilon(eps), 3) == eps);
  CHECK(epsilon_is_symmetric(std::vector<int>{0}));
  CHECK_FALSE(epsilon_is_symmetric(std::vector<int>{2}));
  CHECK(epsilon_is_symmetric(std::vector<int>{1, 0, 3}));
  CHECK_FALSE(epsilon_is_symmetric(std::vector<int>{1, 1, 2}));
  CHECK_FALSE(epsilon_is_symmetric(std::vector<int>{0, 0, 3}));
}

TEST_CASE("class/order compatibility") {
  CHECK_THROWS_AS(CanonicalTensor(SymmetryClass::Hermitian, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalTensor(SymmetryClass::SelfDual, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalTensor(SymmetryClass::Symmetric, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalTensor(SymmetryClass::Symmetric, 2, 0), std::invalid_argument);
  CHECK_NOTHROW(CanonicalTensor(SymmetryClass::SelfDual, 6, 1));
  CHECK(symmetry_class_from_string("herm") == SymmetryClass::Hermitian);
  CHECK_THROWS_AS(symmetry_class_from_string("hermitian"), std::invalid_argument);
}

TEST_CASE("identity tensor") {
  const auto i2 = identity_tensor(2, 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) CHECK(i2(std::vector<int>{a, b}) == (a == b ? 1.0 : 0.0));
  }
  const auto i3 = identity_tensor(3, 3);
  CHECK(frobenius_norm_sq(i3) == 0.0);
  const auto i4 = identity_tensor(4, 2);
  CHECK(i4(zero_based({1, 1, 2, 2})) == doctest::Approx(1.0 / 6.0));
  CHECK(i4(zero_based({1, 2, 1, 2})) == doctest::Approx(1.0 / 6.0));
  CHECK(i4(zero_based({1, 1, 1, 1})) == 1.0);
  CHECK(i4(zero_based({1, 1, 1, 2})) == 0.0);
  CHECK(frobenius_norm_sq(i4) == doctest::Approx(13.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("frobenius norm") {
  CanonicalTensor m(SymmetryClass::Symmetric, 2, 2);
  m.set(std::vector<int>{0, 0}, 1.0);
  m.set(std::vector<int>{0, 1}, 2.0);
  m.set(std::vector<int>{1, 1}, 3.0);
  CHECK(frobenius_norm_sq(m) == 18.0);
  CHECK(frobenius_norm_sq(densify(m)) == 18.0);
  CHECK(frobenius_norm_sq(CanonicalTensor(SymmetryClass::Hermitian, 4, 3)) == 0.0);
}

TEST_CASE("canonical norm equals the dense sum for every class") {
  Rng rng = make_rng(11);
  const std::vector<std::tuple<SymmetryClass, int, int>> cases{
      {SymmetryClass::Symmetric, 3, 3}, {SymmetryClass::Antisymmetric, 3, 4}, {SymmetryClass::Hermitian, 4, 3},
      {SymmetryClass::SelfDual, 2, 3},  {SymmetryClass::SelfDual, 6, 2}};
  for (const auto& [cls, p, n] : cases) {
    const auto t = random_tensor(cls, p, n, rng);
    CHECK(test::close_rel(frobenius_norm_sq(t), densify(t).frobenius_norm_sq(), 1e-12));
  }
  const auto sd = random_tensor(SymmetryClass::SelfDual, 6, 2, rng);
  CHECK(test::close_rel(frobenius_norm_sq(sd), 8.0 * quaternionic_norm_sq(sd), 1e-14));
}

TEST_CASE("densify examples") {
  CanonicalTensor s(SymmetryClass::Symmetric, 3, 2);
  s.set(std::vector<int>{0, 0, 1}, 5.0);
  const auto d = densify(s);
  int copies = 0;
  for (const auto& z : d.data()) copies += z == Complex(5, 0) ? 1 : 0;
  CHECK(copies == 3);

  CanonicalTensor q(SymmetryClass::SelfDual, 2, 1);
  q.set(std::vector<int>{0, 0}, 2.5, 0);
  const auto dq = densify(q);
  CHECK(dq.dim() == 2);
  CHECK(dq.at(std::vector<int>{0, 0}) == Complex(2.5, 0));
  CHECK(dq.at(std::vector<int>{1, 1}) == Complex(2.5, 0));
  CHECK(dq.at(std::vector<int>{0, 1}) == Complex(0, 0));
  CHECK(dq.at(std::vector<int>{1, 0}) == Complex(0, 0));

  CanonicalTensor a(SymmetryClass::Antisymmetric, 2, 2);
  a.set(std::vector<int>{0, 1}, 4.0);
  const auto da = densify(a);
  CHECK(da.at(std::vector<int>{0, 1}) == Complex(4, 0));
  CHECK(da.at(std::vector<int>{1, 0}) == Complex(-4, 0));
  CHECK(da.at(std::vector<int>{0, 0}) == Complex(0, 0));
  CHECK(da.at(std::vector<int>{1, 1}) == Complex(0, 0));
}

TEST_CASE("self-dual densification matches the basis expansion") {
  Rng rng = make_rng(5);
  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {6, 1}, {6, 2}}) {
    const auto t = random_tensor(SymmetryClass::SelfDual, p, n, rng);
    CHECK(densify(t).max_abs_diff(selfdual_oracle(t)) < 1e-12);
  }
}

TEST_CASE("dense symmetry relations hold after densification") {
  Rng rng = make_rng(6);
  const auto s = densify(random_tensor(SymmetryClass::Symmetric, 4, 3, rng));
  const auto a = densify(random_tensor(SymmetryClass::Antisymmetric, 3, 4, rng));
  const auto h = densify(random_tensor(SymmetryClass::Hermitian, 4, 3, rng));
  std::vector<int> idx(4), perm(4);
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    unflatten_position(pos, 3, idx);
    perm = {idx[1], idx[0], idx[3], idx[2]};
    CHECK(s.at(idx) == s.at(perm));
    // a double transposition is even: hermitian entries are unchanged
    CHECK(h.at(idx) == h.at(perm));
    perm = {idx[1], idx[0], idx[2], idx[3]};
    CHECK(h.at(idx) == std::conj(h.at(perm)));
  }
  std::vector<int> i3(3), p3(3);
  for (std::size_t pos = 0; pos < a.size(); ++pos) {
    unflatten_position(pos, 4, i3);
    p3 = {i3[1], i3[0], i3[2]};
    CHECK(a.at(i3) == -a.at(p3));
  }
}

TEST_CASE("antisymmetric payloads vanish on paired indices") {
  Rng rng = make_rng(8);
  for (int p : {2, 4}) {
    const auto a = densify(random_tensor(SymmetryClass::Antisymmetric, p, 3, rng));
    std::vector<int> idx(static_cast<std::size_t>(p));
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
      unflatten_position(pos, 3, idx);
      if (is_paired_tuple(idx)) CHECK(a[pos] == Complex(0, 0));
    }
  }
}

TEST_CASE("self-dual conjugation relations") {
  Rng rng = make_rng(9);
  for (int p : {2, 6}) {
    for (int n : {1, 2}) {
      const auto d = densify(random_tensor(SymmetryClass::SelfDual, p, n, rng));
      std::vector<int> big(static_cast<std::size_t>(p)), flipped(static_cast<std::size_t>(p));
      double worst = 0.0;
      for (std::size_t pos = 0; pos < d.size(); ++pos) {
        unflatten_position(pos, d.dim(), big);
        // iota -> 3 - iota on every leg; one sign per pair with unequal quaternion indices
        flipped = big;
        double sign = 1.0;
        for (int s = 0; s < p / 2; ++s) {
          flipped[2 * s] ^= 1;
          flipped[2 * s + 1] ^= 1;
          if (big[2 * s] % 2 != big[2 * s + 1] % 2) sign = -sign;
        }
        worst = std::max(worst, std::abs(d.at(big) - sign * std::conj(d.at(flipped))));
      }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("single-pair flips only conjugate at p=2") {
  Rng rng = make_rng(19);
  for (int p : {2, 6}) {
    const auto d = densify(random_tensor(SymmetryClass::SelfDual, p, 2, rng));
    std::vector<int> big(static_cast<std::size_t>(p)), flipped(static_cast<std::size_t>(p));
    double worst = 0.0;
    for (std::size_t pos = 0; pos < d.size(); ++pos) {
      unflatten_position(pos, d.dim(), big);
      flipped = big;
      flipped[0] ^= 1;
      flipped[1] ^= 1;
      const double sign = big[0] % 2 == big[1] % 2 ? 1.0 : -1.0;
      worst = std::max(worst, std::abs(d.at(big) - sign * std::conj(d.at(flipped))));
    }
    if (p == 2) CHECK(worst < 1e-12);
    else CHECK(worst > 0.1);
  }
}

TEST_CASE("round trips through dense form") {
  Rng rng = make_rng(10);
  for (auto cls : {SymmetryClass::Symmetric, SymmetryClass::Antisymmetric, SymmetryClass::Hermitian,
                   SymmetryClass::SelfDual}) {
    const int p = cls == SymmetryClass::SelfDual ? 6 : (cls == SymmetryClass::Antisymmetric ? 3 : 4);
    const auto t = random_tensor(cls, p, 2 + (cls == SymmetryClass::Antisymmetric ? 2 : 0), rng);
    const auto back = canonicalize(densify(t), cls);
    CHECK(back.max_abs_diff(t) < 1e-12);
  }
}

TEST_CASE("canonicalize reports the first offending pair") {
  DenseTensor d(2, 2);
  d.at(std::vector<int>{0, 1}) = 1.0;
  d.at(std::vector<int>{1, 0}) = 2.0;
  try {
    canonicalize(d, SymmetryClass::Symmetric);
    FAIL("expected a class violation");
  } catch (const ClassViolation& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(2,1)") != std::string::npos);
    CHECK(msg.find("(1,2)") != std::string::npos);
  }
  DenseTensor a(2, 2);
  a.at(std::vector<int>{0, 0}) = 0.5;
  CHECK_THROWS_AS(canonicalize(a, SymmetryClass::Antisymmetric), ClassViolation);
  DenseTensor c(2, 2);
  c.at(std::vector<int>{0, 0}) = Complex(0, 1);
  CHECK_THROWS_AS(canonicalize(c, SymmetryClass::Symmetric), ClassViolation);
  CHECK_THROWS_AS(canonicalize(DenseTensor(2, 3), SymmetryClass::SelfDual), ClassViolation);
}

TEST_CASE("canonicalize tolerance and projection") {
  DenseTensor d(2, 2);
  d.at(std::vector<int>{0, 1}) = 1.0;
  d.at(std::vector<int>{1, 0}) = 1.0 + 5e-13;
  CHECK_NOTHROW(canonicalize(d, SymmetryClass::Symmetric));
  d.at(std::vector<int>{1, 0}) = 3.0;
  const auto p = canonicalize(d, SymmetryClass::Symmetric, true);
  CHECK(p(std::vector<int>{0, 1}) == doctest::Approx(2.0));
}

TEST_CASE("flatten isometry") {
  CanonicalTensor m(SymmetryClass::Symmetric, 2, 2);
  m.set(std::vector<int>{0, 0}, 1.0);
  m.set(std::vector<int>{0, 1}, 2.0);
  m.set(std::vector<int>{1, 1}, 3.0);
  const auto v = flatten_isometry(m);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 1.0);
  CHECK(v[1] == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(v[2] == 3.0);

  CanonicalTensor vec(SymmetryClass::Symmetric, 1, 3);
  vec.set(std::vector<int>{1}, -7.0);
  CHECK(flatten_isometry(vec) == std::vector<double>{0.0, -7.0, 0.0});

  Rng rng = make_rng(12);
  for (int p = 1; p <= 5; ++p) {
    const auto t = random_tensor(SymmetryClass::Symmetric, p, 3, rng);
    const auto f = flatten_isometry(t);
    double s = 0.0;
    for (double x : f) s += x * x;
    CHECK(test::close_rel(s, frobenius_norm_sq(t), 1e-12));
    CHECK(unflatten_isometry(f, p, 3).max_abs_diff(t) < 1e-12);
  }
  CHECK_THROWS_AS(flatten_isometry(CanonicalTensor(SymmetryClass::Hermitian, 2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(unflatten_isometry(std::vector<double>{1.0}, 2, 2), std::invalid_argument);
}

TEST_CASE("arithmetic and accessors") {
  Rng rng = make_rng(13);
  const auto a = random_tensor(SymmetryClass::Hermitian, 2, 3, rng);
  const auto b = random_tensor(SymmetryClass::Hermitian, 2, 3, rng);
  const auto c = a + b - b;
  CHECK(c.max_abs_diff(a) < 1e-14);
  CHECK((2.0 * a).max_abs_diff(a + a) < 1e-14);
  CHECK_THROWS_AS(a + random_tensor(SymmetryClass::Symmetric, 2, 3, rng), std::invalid_argument);
  CanonicalTensor s(SymmetryClass::Antisymmetric, 2, 3);
  CHECK_THROWS_AS(s.set(std::vector<int>{1, 1}, 1.0), std::out_of_range);
  s.set(std::vector<int>{0, 2}, 1.5);
  CHECK(s(std::vector<int>{2, 0}) == -1.5);
}
