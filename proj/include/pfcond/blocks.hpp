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
#include <vector>

#include "pfcond/graph.hpp"

namespace pfcond {

/// Decomposition into 2-connected blocks: every edge lies in exactly one
/// block; single-edge blocks are bridges. Cutvertices and isolated vertices
/// are reported separately.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted edge id lists
  std::vector<int> cutvertices;          // sorted
  std::vector<int> isolated_vertices;    // sorted

  std::vector<int> bridges() const {
    std::vector<int> out;
    for (const auto& b : blocks)
      if (b.size() == 1) out.push_back(b.front());
    std::sort(out.begin(), out.end());
    return out;
  }
};

namespace detail {

struct BlockDfs {
  const std::vector<std::vector<int>>* adj;
  std::vector<int> other;  // other endpoint per (vertex, edge) resolved inline
  std::vector<int> disc, low;
  std::vector<char> edge_seen;
  std::vector<int> edge_stack;
  std::vector<char> is_cut;
  BlockDecomposition* out;
  int timer = 0;
};

template <exact_ring R>
void block_dfs(const OrderedGraph<R>& g, BlockDfs& s, int v, int parent_edge) {
  s.disc[v] = s.low[v] = s.timer++;
  int children = 0;
  for (int e : (*s.adj)[v]) {
    if (e == parent_edge || s.edge_seen[e]) continue;
    int u = g.other_end(e, v);
    s.edge_seen[e] = 1;
    s.edge_stack.push_back(e);
    if (s.disc[u] == -1) {
      ++children;
      block_dfs(g, s, u, e);
      s.low[v] = std::min(s.low[v], s.low[u]);
      if (s.low[u] >= s.disc[v]) {
        if (parent_edge != -1 || children > 1) s.is_cut[v] = 1;
        std::vector<int> block;
        while (true) {
          int top = s.edge_stack.back();
          s.edge_stack.pop_back();
          block.push_back(top);
          if (top == e) break;
        }
        std::sort(block.begin(), block.end());
        s.out->blocks.push_back(std::move(block));
      }
    } else {
      s.low[v] = std::min(s.low[v], s.disc[u]);
    }
  }
}

}  // namespace detail

template <exact_ring R>
BlockDecomposition blocks(const OrderedGraph<R>& g) {
  BlockDecomposition out;
  auto adj = g.adjacency();
  detail::BlockDfs s;
  s.adj = &adj;
  s.disc.assign(g.n(), -1);
  s.low.assign(g.n(), 0);
  s.edge_seen.assign(g.edge_count(), 0);
  s.is_cut.assign(g.n(), 0);
  s.out = &out;
  for (int v = 0; v < g.n(); ++v) {
    if (adj[v].empty()) {
      out.isolated_vertices.push_back(v);
      continue;
    }
    if (s.disc[v] == -1) detail::block_dfs(g, s, v, -1);
  }
  for (int v = 0; v < g.n(); ++v)
    if (s.is_cut[v]) out.cutvertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

/// Vertices touched by an edge set, in ascending order.
template <exact_ring R>
std::vector<int> block_vertices(const OrderedGraph<R>& g,
                                const std::vector<int>& block_edges) {
  std::vector<int> vs;
  for (int e : block_edges) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace pfcond
