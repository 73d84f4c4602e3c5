// Copyright 2026 The pfcond authors
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

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pfcond {

/// A finite set of distinct string labels with a fixed total order. Every
/// subset of it taken anywhere in the library inherits this order: iteration
/// is always in ambient index order.
class OrderedVertexSet {
 public:
  OrderedVertexSet() = default;

  explicit OrderedVertexSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      auto [it, fresh] = position_.emplace(labels_[i], i);
      if (!fresh)
        throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }

  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const std::string& l) const { return position_.count(l) > 0; }

  /// 0-based index of a label; throws on unknown labels.
  int position(const std::string& l) const {
    auto it = position_.find(l);
    if (it == position_.end())
      throw std::invalid_argument("unknown vertex label: " + l);
    return it->second;
  }

  bool operator==(const OrderedVertexSet& o) const {
    return labels_ == o.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> position_;
};

/// A subset of some ambient ordered set, stored as strictly increasing
/// 0-based indices, so iteration order is always the inherited order.
class VertexSubset {
 public:
  VertexSubset() = default;

  static VertexSubset of_indices(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1])
        throw std::invalid_argument("duplicate index in vertex subset");
    VertexSubset s;
    s.idx_ = std::move(idx);
    return s;
  }

  static VertexSubset of_labels(const OrderedVertexSet& ambient,
                                std::span<const std::string> labels) {
    std::vector<int> idx;
    idx.reserve(labels.size());
    for (const auto& l : labels) idx.push_back(ambient.position(l));
    return of_indices(std::move(idx));
  }

  static VertexSubset full(int n) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    VertexSubset s;
    s.idx_ = std::move(idx);
    return s;
  }

  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  int operator[](int i) const { return idx_.at(i); }
  const std::vector<int>& indices() const { return idx_; }

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  bool contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }

  bool subset_of(const VertexSubset& m) const {
    return std::includes(m.idx_.begin(), m.idx_.end(), idx_.begin(),
                         idx_.end());
  }

  VertexSubset complement_in(int n) const {
    std::vector<int> out;
    out.reserve(n - size());
    for (int i = 0, j = 0; i < n; ++i) {
      if (j < size() && idx_[j] == i)
        ++j;
      else
        out.push_back(i);
    }
    VertexSubset s;
    s.idx_ = std::move(out);
    return s;
  }

  bool operator==(const VertexSubset& o) const { return idx_ == o.idx_; }

  friend VertexSubset set_union(const VertexSubset& a, const VertexSubset& b) {
    std::vector<int> out;
    std::set_union(a.idx_.begin(), a.idx_.end(), b.idx_.begin(), b.idx_.end(),
                   std::back_inserter(out));
    VertexSubset s;
    s.idx_ = std::move(out);
    return s;
  }

  friend VertexSubset set_minus(const VertexSubset& a, const VertexSubset& b) {
    std::vector<int> out;
    std::set_difference(a.idx_.begin(), a.idx_.end(), b.idx_.begin(),
                        b.idx_.end(), std::back_inserter(out));
    VertexSubset s;
    s.idx_ = std::move(out);
    return s;
  }

  friend VertexSubset set_intersect(const VertexSubset& a,
                                    const VertexSubset& b) {
    std::vector<int> out;
    std::set_intersection(a.idx_.begin(), a.idx_.end(), b.idx_.begin(),
                          b.idx_.end(), std::back_inserter(out));
    VertexSubset s;
    s.idx_ = std::move(out);
    return s;
  }

 private:
  std::vector<int> idx_;
};

/// Symmetric difference, in inherited order.
inline VertexSubset sym_diff(const VertexSubset& a, const VertexSubset& b) {
  return set_minus(set_union(a, b), set_intersect(a, b));
}

/// Sum of the 1-based positions of the elements of x within the ordered set
/// m. x must be a subset of m.
inline long setsum(const VertexSubset& x, const VertexSubset& m) {
  long sum = 0;
  std::size_t j = 0;
  for (int i = 0; i < m.size(); ++i) {
    if (j < static_cast<std::size_t>(x.size()) && x[static_cast<int>(j)] == m[i]) {
      sum += i + 1;
      ++j;
    }
  }
  if (j != static_cast<std::size_t>(x.size()))
    throw std::invalid_argument("setsum: x is not a subset of m");
  return sum;
}

inline long setsum(const VertexSubset& x, const OrderedVertexSet& m) {
  return setsum(x, VertexSubset::full(m.size()));
}

}  // namespace pfcond
