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

#include <cstdint>
#include <vector>

#include "pfcond/ordered_set.hpp"

namespace pfcond {

/// All subsets of the given (ordered) ground set, in bitmask order; the masks
/// select by position so every emitted subset inherits the ground order.
template <typename F>
void for_each_subset(const VertexSubset& ground, F&& fn) {
  int k = ground.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) idx.push_back(ground[i]);
    fn(VertexSubset::of_indices(std::move(idx)));
  }
}

/// All subsets of the ground set with exactly r elements, in lexicographic
/// position order.
template <typename F>
void for_each_subset_of_size(const VertexSubset& ground, int r, F&& fn) {
  int k = ground.size();
  if (r < 0 || r > k) return;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = ground[pick[i]];
    fn(VertexSubset::of_indices(std::move(idx)));
    int i = r - 1;
    while (i >= 0 && pick[i] == k - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace pfcond
