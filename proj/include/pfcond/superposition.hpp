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
#include <optional>
#include <stdexcept>
#include <vector>

#include "pfcond/graph.hpp"
#include "pfcond/matchings.hpp"
#include "pfcond/pfaffian.hpp"

namespace pfcond {

enum class Colour : unsigned char { red, blue };

/// Two disjoint colour classes on the vertices of a base graph. Red edges are
/// the edges avoiding blue vertices (one copy of E(g-b)), blue edges those
/// avoiding red vertices (a second copy of E(g-r)); edges with both endpoints
/// white therefore occur in both lists. Edge copies are colour tags over base
/// edge ids, so weight lookups never depend on colour.
template <exact_ring R>
struct BicolouredGraph {
  OrderedGraph<R> base;
  VertexSubset red_vertices;
  VertexSubset blue_vertices;
  std::vector<int> red_edges;
  std::vector<int> blue_edges;

  VertexSubset coloured() const {
    return set_union(red_vertices, blue_vertices);
  }
  VertexSubset white() const {
    return coloured().complement_in(base.n());
  }
};

template <exact_ring R>
BicolouredGraph<R> build_bicoloured(const OrderedGraph<R>& g,
                                    const VertexSubset& r,
                                    const VertexSubset& b) {
  if (!set_intersect(r, b).empty())
    throw std::invalid_argument("red and blue vertex sets overlap");
  if ((!r.empty() && r[r.size() - 1] >= g.n()) ||
      (!b.empty() && b[b.size() - 1] >= g.n()))
    throw std::invalid_argument("coloured vertex out of range");
  BicolouredGraph<R> bg{g, r, b, {}, {}};
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (!b.contains(ed.u) && !b.contains(ed.v)) bg.red_edges.push_back(e);
    if (!r.contains(ed.u) && !r.contains(ed.v)) bg.blue_edges.push_back(e);
  }
  return bg;
}

/// A red perfect matching of g-b together with a blue perfect matching of
/// g-r, as sorted base edge ids.
struct Superposition {
  std::vector<int> red_matching;
  std::vector<int> blue_matching;

  bool operator==(const Superposition&) const = default;
};

struct WalkStep {
  int edge;
  Colour colour;

  bool operator==(const WalkStep&) const = default;
};

/// Alternating path: vertices v0..vk with coloured end vertices and white
/// interior, edges[i] joining v[i] and v[i+1]. Canonical form starts at the
/// smaller endpoint.
struct BiPath {
  std::vector<int> vertices;
  std::vector<WalkStep> edges;
};

/// Alternating closed walk of even length; edges[i] joins v[i] and
/// v[(i+1) % size]. Canonical form starts at the smallest vertex with its red
/// edge first.
struct BiCycle {
  std::vector<int> vertices;
  std::vector<WalkStep> edges;
};

struct PathCycleDecomposition {
  std::vector<BiPath> paths;
  std::vector<BiCycle> cycles;
};

namespace detail {

template <exact_ring R>
struct SuperpositionIndex {
  std::vector<int> red_at;   // edge of red matching at v, -1 if none
  std::vector<int> blue_at;  // edge of blue matching at v, -1 if none
};

template <exact_ring R>
SuperpositionIndex<R> index_superposition(const BicolouredGraph<R>& bg,
                                          const Superposition& s) {
  const auto& g = bg.base;
  SuperpositionIndex<R> ix{std::vector<int>(g.n(), -1),
                           std::vector<int>(g.n(), -1)};
  auto place = [&](const std::vector<int>& matching,
                   const std::vector<int>& allowed, std::vector<int>& at,
                   const VertexSubset& excluded, const char* what) {
    for (int e : matching) {
      if (!std::binary_search(allowed.begin(), allowed.end(), e)) {
        // allowed lists are built in increasing edge order
        throw std::invalid_argument(std::string(what) +
                                    " matching uses a forbidden edge");
      }
      const auto& ed = g.edge(e);
      for (int v : {ed.u, ed.v}) {
        if (excluded.contains(v))
          throw std::invalid_argument(std::string(what) +
                                      " matching covers an excluded vertex");
        if (at[v] != -1)
          throw std::invalid_argument(std::string(what) +
                                      " matching covers a vertex twice");
        at[v] = e;
      }
    }
  };
  place(s.red_matching, bg.red_edges, ix.red_at, bg.blue_vertices, "red");
  place(s.blue_matching, bg.blue_edges, ix.blue_at, bg.red_vertices, "blue");
  for (int v = 0; v < g.n(); ++v) {
    bool red_v = bg.red_vertices.contains(v);
    bool blue_v = bg.blue_vertices.contains(v);
    if (red_v && ix.red_at[v] == -1)
      throw std::invalid_argument("red vertex left uncovered");
    if (blue_v && ix.blue_at[v] == -1)
      throw std::invalid_argument("blue vertex left uncovered");
    if (!red_v && !blue_v && (ix.red_at[v] == -1 || ix.blue_at[v] == -1))
      throw std::invalid_argument("white vertex not doubly covered");
  }
  return ix;
}

}  // namespace detail

/// Decompose a superposition into its nonintersecting alternating paths and
/// even cycles. Every vertex lies on exactly one path or cycle; path end
/// vertices are exactly the coloured vertices.
template <exact_ring R>
PathCycleDecomposition decompose(const BicolouredGraph<R>& bg,
                                 const Superposition& s) {
  const auto& g = bg.base;
  auto ix = detail::index_superposition(bg, s);
  PathCycleDecomposition out;
  std::vector<char> used(g.n(), 0);

  // paths start at coloured vertices, taken in ascending order
  auto coloured = bg.coloured();
  for (int x : coloured) {
    if (used[x]) continue;
    BiPath p;
    p.vertices.push_back(x);
    used[x] = 1;
    int v = x;
    Colour c = bg.red_vertices.contains(x) ? Colour::red : Colour::blue;
    while (true) {
      int e = (c == Colour::red) ? ix.red_at[v] : ix.blue_at[v];
      p.edges.push_back({e, c});
      v = g.other_end(e, v);
      p.vertices.push_back(v);
      used[v] = 1;
      if (coloured.contains(v)) break;
      c = (c == Colour::red) ? Colour::blue : Colour::red;
    }
    if (p.vertices.back() < p.vertices.front()) {
      std::reverse(p.vertices.begin(), p.vertices.end());
      std::reverse(p.edges.begin(), p.edges.end());
    }
    out.paths.push_back(std::move(p));
  }

  // the remaining (white) vertices lie on alternating cycles
  for (int v0 = 0; v0 < g.n(); ++v0) {
    if (used[v0]) continue;
    BiCycle c;
    int v = v0;
    Colour col = Colour::red;
    do {
      c.vertices.push_back(v);
      used[v] = 1;
      int e = (col == Colour::red) ? ix.red_at[v] : ix.blue_at[v];
      c.edges.push_back({e, col});
      v = g.other_end(e, v);
      col = (col == Colour::red) ? Colour::blue : Colour::red;
    } while (v != v0);
    out.cycles.push_back(std::move(c));
  }
  return out;
}

template <exact_ring R>
R superposition_weight(const OrderedGraph<R>& g, const Superposition& s) {
  return weight_of_edge_set<R>(g, s.red_matching) *
         weight_of_edge_set<R>(g, s.blue_matching);
}

/// Product of the crossing signs of the two matchings, each taken within the
/// ambient complete graph on its covered vertices.
template <exact_ring R>
int superposition_sign(const OrderedGraph<R>& g, const Superposition& s) {
  std::vector<std::pair<int, int>> red, blue;
  for (int e : s.red_matching) red.push_back({g.edge(e).u, g.edge(e).v});
  for (int e : s.blue_matching) blue.push_back({g.edge(e).u, g.edge(e).v});
  return crossing_sign_arcs(red) * crossing_sign_arcs(blue);
}

template <exact_ring R>
struct SwapResult {
  Superposition superposition;
  VertexSubset red_vertices;
  VertexSubset blue_vertices;
  int other_endpoint;
};

namespace detail {

inline const BiPath& path_with_endpoint(const PathCycleDecomposition& d,
                                        int x) {
  for (const auto& p : d.paths)
    if (p.vertices.front() == x || p.vertices.back() == x) return p;
  throw std::invalid_argument("vertex is not a path endpoint");
}

inline std::vector<int> toggle_edges(const std::vector<int>& matching,
                                     const std::vector<int>& remove,
                                     const std::vector<int>& add) {
  std::vector<int> out;
  for (int e : matching)
    if (std::find(remove.begin(), remove.end(), e) == remove.end())
      out.push_back(e);
  out.insert(out.end(), add.begin(), add.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Swap colours along the unique alternating path with end vertex x. If the
/// other endpoint y has the opposite colour, x and y exchange classes; if it
/// has the same colour, both move to the other class. The weight
/// w(mu) * w(nu) is preserved, and applying the swap twice restores the
/// original superposition.
template <exact_ring R>
SwapResult<R> swap_colours(const BicolouredGraph<R>& bg,
                           const Superposition& s, int x) {
  if (!bg.red_vertices.contains(x) && !bg.blue_vertices.contains(x))
    throw std::invalid_argument("swap_colours: vertex is not coloured");
  auto dec = decompose(bg, s);
  const BiPath& p = detail::path_with_endpoint(dec, x);
  int y = (p.vertices.front() == x) ? p.vertices.back() : p.vertices.front();

  std::vector<int> was_red, was_blue;
  for (const auto& st : p.edges)
    (st.colour == Colour::red ? was_red : was_blue).push_back(st.edge);

  SwapResult<R> res;
  res.other_endpoint = y;
  res.superposition.red_matching =
      detail::toggle_edges(s.red_matching, was_red, was_blue);
  res.superposition.blue_matching =
      detail::toggle_edges(s.blue_matching, was_blue, was_red);

  auto single = [&](int v) { return VertexSubset::of_indices({v}); };
  bool x_red = bg.red_vertices.contains(x);
  bool y_red = bg.red_vertices.contains(y);
  if (x_red != y_red) {
    // opposite colours: x and y exchange classes (even-length path)
    if (x_red) {
      res.red_vertices = set_union(set_minus(bg.red_vertices, single(x)), single(y));
      res.blue_vertices = set_union(set_minus(bg.blue_vertices, single(y)), single(x));
    } else {
      res.red_vertices = set_union(set_minus(bg.red_vertices, single(y)), single(x));
      res.blue_vertices = set_union(set_minus(bg.blue_vertices, single(x)), single(y));
    }
  } else {
    // same colour: both endpoints move to the other class (odd-length path)
    auto xy = set_union(single(x), single(y));
    if (x_red) {
      res.red_vertices = set_minus(bg.red_vertices, xy);
      res.blue_vertices = set_union(bg.blue_vertices, xy);
    } else {
      res.red_vertices = set_union(bg.red_vertices, xy);
      res.blue_vertices = set_minus(bg.blue_vertices, xy);
    }
  }
  return res;
}

/// Sign change of the colour swap at x: (-1)^{wy - wx + 1}, where wx and wy
/// are the 1-based positions of the path endpoints in the ordered coloured
/// set. Also recomputes both sides of the sign law and throws if they
/// disagree.
template <exact_ring R>
int swap_sign_change(const BicolouredGraph<R>& bg, const Superposition& s,
                     int x) {
  auto res = swap_colours(bg, s, x);
  int y = res.other_endpoint;
  auto coloured = bg.coloured();
  int wx = -1, wy = -1;
  for (int i = 0; i < coloured.size(); ++i) {
    if (coloured[i] == x) wx = i + 1;
    if (coloured[i] == y) wy = i + 1;
  }
  int predicted = ((wy - wx + 1) % 2 == 0) ? 1 : -1;
  int before = superposition_sign(bg.base, s);
  int after = superposition_sign(bg.base, res.superposition);
  if (before != predicted * after)
    throw std::logic_error("swap sign law violated");
  return predicted;
}

/// Simultaneous colour swap of the paths with an endpoint in `starts`,
/// expressed as a fold of single swaps in increasing order of starting
/// vertex. Paths are vertex-disjoint, so each path is swapped at most once
/// (a start falling on an already swapped path is skipped).
template <exact_ring R>
SwapResult<R> swap_paths(const BicolouredGraph<R>& bg, const Superposition& s,
                         const VertexSubset& starts) {
  SwapResult<R> cur{s, bg.red_vertices, bg.blue_vertices, -1};
  std::vector<char> done(bg.base.n(), 0);
  for (int x : starts) {
    if (done[x]) continue;
    auto b = build_bicoloured(bg.base, cur.red_vertices, cur.blue_vertices);
    auto nxt = swap_colours(b, cur.superposition, x);
    done[x] = 1;
    done[nxt.other_endpoint] = 1;
    cur.superposition = std::move(nxt.superposition);
    cur.red_vertices = std::move(nxt.red_vertices);
    cur.blue_vertices = std::move(nxt.blue_vertices);
  }
  return cur;
}

/// All superpositions of the bicoloured graph: every pair of a red matching
/// of g-b and a blue matching of g-r.
template <exact_ring R>
std::vector<Superposition> enumerate_superpositions(
    const BicolouredGraph<R>& bg) {
  const auto& g = bg.base;
  std::vector<char> red_alive(g.n(), 1), blue_alive(g.n(), 1);
  for (int v : bg.blue_vertices) red_alive[v] = 0;
  for (int v : bg.red_vertices) blue_alive[v] = 0;
  // a matching within V-b uses exactly the red copy of E(g-b), and likewise
  // for blue, so no further filtering is needed
  auto reds = enumerate_matchings_within(g, red_alive);
  auto blues = enumerate_matchings_within(g, blue_alive);
  std::vector<Superposition> out;
  out.reserve(reds.size() * blues.size());
  for (const auto& mu : reds)
    for (const auto& nu : blues) out.push_back({mu.edge_ids, nu.edge_ids});
  return out;
}

}  // namespace pfcond
