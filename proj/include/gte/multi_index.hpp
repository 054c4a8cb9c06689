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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gte {

/// A p-tuple of 0-based indices into a cubic tensor of dimension N.
///
/// Indices are 0-based in memory; the 1-based form only appears at the
/// serialization boundary (see to_string() and io.hpp).
class MultiIndex {
 public:
  MultiIndex(std::vector<int> indices, int dim);

  int order() const { return static_cast<int>(indices_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& indices() const { return indices_; }
  int operator[](std::size_t k) const { return indices_[k]; }

  /// Number of occurrences of value j in the tuple.
  int count(int j) const;

  /// Non-decreasing sort of the tuple.
  MultiIndex canonical() const;
  bool is_canonical() const;
  /// True when no value repeats.
  bool is_strict() const;

  /// Number of distinct permutations of the tuple: p! / prod_j c_j!.
  std::uint64_t gamma() const;

  /// True iff some permutation has the form (j1,j1,...,jq,jq); false for odd p.
  bool is_paired() const;

  /// Sign of the permutation that sorts the tuple, 0 when a value repeats.
  int sort_sign() const;

  /// "(1,2,2)" using 1-based indices.
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<int> indices_;
  int dim_;
};

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

/// Multinomial p! / prod c_j! for occurrence counts of a tuple.
std::uint64_t gamma_of(std::span<const int> indices);
bool is_paired_tuple(std::span<const int> indices);

/// Number of entries (N^p) of a dense cubic tensor.
std::size_t dense_size(int order, int dim);

/// Row-major flat position of a tuple (first index slowest).
std::size_t flat_position(std::span<const int> indices, int dim);

/// Inverse of flat_position.
void unflatten_position(std::size_t pos, int dim, std::span<int> out);

/// Canonical index sets of a cubic shape.
///
/// `Symmetric` lists the non-decreasing tuples (C(N+p-1, p) of them),
/// `Strict` the strictly increasing ones (C(N, p)). Both are in
/// lexicographic order and support O(p log K) lookup.
class IndexSpace {
 public:
  enum class Kind { Symmetric, Strict };

  IndexSpace(int order, int dim, Kind kind);

  int order() const { return order_; }
  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  std::size_t size() const { return tuples_.size() / static_cast<std::size_t>(order_ > 0 ? order_ : 1); }

  std::span<const int> tuple(std::size_t k) const {
    return {tuples_.data() + k * static_cast<std::size_t>(order_), static_cast<std::size_t>(order_)};
  }
  std::uint64_t gamma(std::size_t k) const { return gammas_[k]; }
  bool paired(std::size_t k) const { return paired_[k] != 0; }

  /// Position of a sorted tuple, or npos when absent.
  std::size_t find(std::span<const int> sorted) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  int order_;
  int dim_;
  Kind kind_;
  std::vector<int> tuples_;
  std::vector<std::uint64_t> gammas_;
  std::vector<char> paired_;
};

/// Process-wide cache of index spaces; safe to call from several threads.
std::shared_ptr<const IndexSpace> shared_index_space(int order, int dim, IndexSpace::Kind kind);

}  // namespace gte
