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
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pfcond/ordered_set.hpp"
#include "pfcond/ring.hpp"

namespace pfcond {

template <exact_ring R>
struct Edge {
  int u;  // 0-based vertex indices, u != v
  int v;
  R w;
};

/// A finite loopless weighted graph on an ordered vertex set. Parallel edges
/// are allowed and kept distinct; edge identity is the index into edges().
/// Values are immutable after construction.
template <exact_ring R>
class OrderedGraph {
 public:
  OrderedGraph() = default;

  OrderedGraph(OrderedVertexSet vset, std::vector<Edge<R>> edges)
      : vset_(std::move(vset)), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
      if (e.u < 0 || e.u >= n() || e.v < 0 || e.v >= n())
        throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("loop edge not allowed");
    }
  }

  static OrderedGraph from_labels(
      std::vector<std::string> labels,
      const std::vector<std::tuple<std::string, std::string, R>>& edges) {
    OrderedVertexSet vs(std::move(labels));
    std::vector<Edge<R>> es;
    es.reserve(edges.size());
    for (const auto& [u, v, w] : edges)
      es.push_back({vs.position(u), vs.position(v), w});
    return OrderedGraph(std::move(vs), std::move(es));
  }

  int n() const { return vset_.size(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const OrderedVertexSet& vset() const { return vset_; }
  const Edge<R>& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge<R>>& edges() const { return edges_; }

  int other_end(int e, int v) const {
    const auto& ed = edges_.at(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw std::invalid_argument("vertex not an endpoint of edge");
  }

  /// Incident edge ids per vertex, in input edge order.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n());
    for (int e = 0; e < edge_count(); ++e) {
      adj[edges_[e].u].push_back(e);
      adj[edges_[e].v].push_back(e);
    }
    return adj;
  }

  /// Equality: same ordered vertex labels and the same multiset of weighted
  /// edges (edge direction of storage is immaterial).
  bool operator==(const OrderedGraph& o) const {
    if (!(vset_ == o.vset_)) return false;
    auto key = [](const OrderedGraph& g) {
      std::vector<std::tuple<int, int, R>> k;
      k.reserve(g.edges_.size());
      for (const auto& e : g.edges_)
        k.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
      std::sort(k.begin(), k.end());
      return k;
    };
    return key(*this) == key(o);
  }

 private:
  OrderedVertexSet vset_;
  std::vector<Edge<R>> edges_;
};

/// The subgraph induced by V(g) \ s: remaining vertices keep their inherited
/// order, and exactly the edges with both endpoints outside s survive,
/// weights preserved.
template <exact_ring R>
OrderedGraph<R> induced_delete(const OrderedGraph<R>& g,
                               const VertexSubset& s) {
  if (!s.empty() && s[s.size() - 1] >= g.n())
    throw std::invalid_argument("induced_delete: index out of range");
  std::vector<int> remap(g.n(), -1);
  std::vector<std::string> labels;
  labels.reserve(g.n() - s.size());
  for (int i = 0; i < g.n(); ++i) {
    if (s.contains(i)) continue;
    remap[i] = static_cast<int>(labels.size());
    labels.push_back(g.vset().label(i));
  }
  std::vector<Edge<R>> edges;
  for (const auto& e : g.edges())
    if (remap[e.u] >= 0 && remap[e.v] >= 0)
      edges.push_back({remap[e.u], remap[e.v], e.w});
  return OrderedGraph<R>(OrderedVertexSet(std::move(labels)),
                         std::move(edges));
}

template <exact_ring R>
OrderedGraph<R> induced_delete_labels(const OrderedGraph<R>& g,
                                      std::span<const std::string> labels) {
  return induced_delete(g, VertexSubset::of_labels(g.vset(), labels));
}

/// Same vertex set, with the designated edges removed (by edge id).
template <exact_ring R>
OrderedGraph<R> delete_edges(const OrderedGraph<R>& g,
                             std::span<const int> edge_ids) {
  std::vector<char> drop(g.edge_count(), 0);
  for (int e : edge_ids) drop.at(e) = 1;
  std::vector<Edge<R>> edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!drop[e]) edges.push_back(g.edge(e));
  return OrderedGraph<R>(g.vset(), std::move(edges));
}

/// Product of the weights of an edge subset; the empty set has weight one.
template <exact_ring R>
R weight_of_edge_set(const OrderedGraph<R>& g, std::span<const int> edge_ids) {
  R w(1);
  for (int e : edge_ids) w *= g.edge(e).w;
  return w;
}

}  // namespace pfcond
