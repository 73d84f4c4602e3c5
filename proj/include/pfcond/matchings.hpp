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

/// A perfect matching, as the sorted list of chosen edge ids of its graph.
struct Matching {
  std::vector<int> edge_ids;

  bool operator==(const Matching&) const = default;
};

namespace detail {

/// Backtracking enumeration of all perfect matchings covering exactly the
/// vertices with alive[v] != 0. Branches on the lowest-index uncovered alive
/// vertex, trying its incident edges in input order, so the emission order is
/// deterministic. The callback returns false to stop early.
template <exact_ring R, typename F>
bool match_rec(const OrderedGraph<R>& g,
               const std::vector<std::vector<int>>& adj,
               const std::vector<char>& alive, std::vector<char>& covered,
               int from, std::vector<int>& chosen, F&& emit) {
  int v = from;
  while (v < g.n() && (!alive[v] || covered[v])) ++v;
  if (v == g.n()) {
    Matching m;
    m.edge_ids = chosen;
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return emit(m);
  }
  covered[v] = 1;
  for (int e : adj[v]) {
    int u = g.other_end(e, v);
    if (!alive[u] || covered[u]) continue;
    covered[u] = 1;
    chosen.push_back(e);
    bool go_on = match_rec(g, adj, alive, covered, v + 1, chosen,
                           std::forward<F>(emit));
    chosen.pop_back();
    covered[u] = 0;
    if (!go_on) {
      covered[v] = 0;
      return false;
    }
  }
  covered[v] = 0;
  return true;
}

}  // namespace detail

template <exact_ring R, typename F>
void for_each_matching_within(const OrderedGraph<R>& g,
                              const std::vector<char>& alive, F&& emit) {
  auto adj = g.adjacency();
  std::vector<char> covered(g.n(), 0);
  std::vector<int> chosen;
  detail::match_rec(g, adj, alive, covered, 0, chosen, std::forward<F>(emit));
}

template <exact_ring R, typename F>
void for_each_matching(const OrderedGraph<R>& g, F&& emit) {
  for_each_matching_within(g, std::vector<char>(g.n(), 1),
                           std::forward<F>(emit));
}

/// All perfect matchings that cover exactly the alive vertex set, each once.
/// A graph with an odd number of alive vertices yields an empty sequence; an
/// empty alive set yields the single empty matching.
template <exact_ring R>
std::vector<Matching> enumerate_matchings_within(const OrderedGraph<R>& g,
                                                 const std::vector<char>& alive) {
  std::vector<Matching> out;
  for_each_matching_within(g, alive, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

template <exact_ring R>
std::vector<Matching> enumerate_matchings(const OrderedGraph<R>& g) {
  return enumerate_matchings_within(g, std::vector<char>(g.n(), 1));
}

/// The matching generating function: total weight of all perfect matchings.
/// Zero if there are none; one for the empty graph (empty product).
template <exact_ring R>
R matching_gf_within(const OrderedGraph<R>& g, const std::vector<char>& alive) {
  R total(0);
  for_each_matching_within(g, alive, [&](const Matching& m) {
    total += weight_of_edge_set<R>(g, m.edge_ids);
    return true;
  });
  return total;
}

template <exact_ring R>
R matching_gf(const OrderedGraph<R>& g) {
  return matching_gf_within(g, std::vector<char>(g.n(), 1));
}

/// Generating function of the subgraph induced by deleting s, computed on g
/// itself without rebuilding the graph.
template <exact_ring R>
R matching_gf_minus(const OrderedGraph<R>& g, const VertexSubset& s) {
  std::vector<char> alive(g.n(), 1);
  for (int v : s) alive.at(v) = 0;
  return matching_gf_within(g, alive);
}

template <exact_ring R>
Int count_matchings(const OrderedGraph<R>& g) {
  Int c(0);
  for_each_matching(g, [&](const Matching&) {
    ++c;
    return true;
  });
  return c;
}

}  // namespace pfcond
