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

#include "gte/multi_index.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <stdexcept>

namespace gte {

MultiIndex::MultiIndex(std::vector<int> indices, int dim) : indices_(std::move(indices)), dim_(dim) {
  if (dim_ < 1) throw std::invalid_argument("MultiIndex: dimension must be positive");
  if (indices_.empty()) throw std::invalid_argument("MultiIndex: order must be positive");
  for (int i : indices_) {
    if (i < 0 || i >= dim_) {
      throw std::out_of_range("MultiIndex: index " + std::to_string(i + 1) + " outside [1, " +
                              std::to_string(dim_) + "]");
    }
  }
}

int MultiIndex::count(int j) const { return static_cast<int>(std::count(indices_.begin(), indices_.end(), j)); }

MultiIndex MultiIndex::canonical() const {
  auto sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  return MultiIndex(std::move(sorted), dim_);
}

bool MultiIndex::is_canonical() const { return std::is_sorted(indices_.begin(), indices_.end()); }

bool MultiIndex::is_strict() const {
  auto sorted = indices_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::uint64_t MultiIndex::gamma() const { return gamma_of(indices_); }

bool MultiIndex::is_paired() const { return is_paired_tuple(indices_); }

int MultiIndex::sort_sign() const {
  auto v = indices_;
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices_[k] + 1);
  }
  return s + ")";
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t gamma_of(std::span<const int> indices) {
  std::map<int, int> counts;
  for (int i : indices) ++counts[i];
  // product of binomials avoids the p! overflow for moderate p
  std::uint64_t r = 1;
  int placed = 0;
  for (const auto& [value, c] : counts) {
    placed += c;
    r *= binomial(placed, c);
  }
  return r;
}

bool is_paired_tuple(std::span<const int> indices) {
  if (indices.size() % 2 != 0) return false;
  std::map<int, int> counts;
  for (int i : indices) ++counts[i];
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

std::size_t dense_size(int order, int dim) {
  std::size_t n = 1;
  for (int k = 0; k < order; ++k) n *= static_cast<std::size_t>(dim);
  return n;
}

std::size_t flat_position(std::span<const int> indices, int dim) {
  std::size_t pos = 0;
  for (int i : indices) pos = pos * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
  return pos;
}

void unflatten_position(std::size_t pos, int dim, std::span<int> out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<int>(pos % static_cast<std::size_t>(dim));
    pos /= static_cast<std::size_t>(dim);
  }
}

IndexSpace::IndexSpace(int order, int dim, Kind kind) : order_(order), dim_(dim), kind_(kind) {
  if (order < 1 || dim < 1) throw std::invalid_argument("IndexSpace: order and dimension must be positive");
  const std::size_t p = static_cast<std::size_t>(order);
  if (kind == Kind::Strict && order > dim) return;

  std::vector<int> cur(p);
  for (std::size_t k = 0; k < p; ++k) cur[k] = kind == Kind::Strict ? static_cast<int>(k) : 0;
  const int step = kind == Kind::Strict ? 1 : 0;
  while (true) {
    tuples_.insert(tuples_.end(), cur.begin(), cur.end());
    gammas_.push_back(gamma_of(cur));
    paired_.push_back(is_paired_tuple(cur) ? 1 : 0);
    // advance to the next tuple in lexicographic order
    std::size_t k = p;
    while (k-- > 0) {
      const int limit = dim - 1 - (kind == Kind::Strict ? static_cast<int>(p - 1 - k) : 0);
      if (cur[k] < limit) break;
    }
    if (k == static_cast<std::size_t>(-1)) break;
    ++cur[k];
    for (std::size_t j = k + 1; j < p; ++j) cur[j] = cur[j - 1] + step;
  }
}

std::size_t IndexSpace::find(std::span<const int> sorted) const {
  std::size_t lo = 0, hi = size();
  const auto p = static_cast<std::size_t>(order_);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto t = tuple(mid);
    const auto cmp = std::lexicographical_compare_three_way(t.begin(), t.end(), sorted.begin(), sorted.begin() + p);
    if (cmp == 0) return mid;
    if (cmp < 0) lo = mid + 1;
    else hi = mid;
  }
  return npos;
}

std::shared_ptr<const IndexSpace> shared_index_space(int order, int dim, IndexSpace::Kind kind) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const IndexSpace>> cache;
  const std::lock_guard lock(mutex);
  auto& slot = cache[{order, dim, static_cast<int>(kind)}];
  if (!slot) slot = std::make_shared<const IndexSpace>(order, dim, kind);
  return slot;
}

}  // namespace gte
