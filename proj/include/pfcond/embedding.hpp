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
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfcond/graph.hpp"

namespace pfcond {

// Darts (directed edge-ends): dart 2e points from edge(e).u to edge(e).v,
// dart 2e+1 the other way. twin(d) = d ^ 1.
inline int dart_of(int edge, int side) { return 2 * edge + side; }
inline int edge_of_dart(int d) { return d / 2; }
inline int twin(int d) { return d ^ 1; }

template <exact_ring R>
int dart_tail(const OrderedGraph<R>& g, int d) {
  const auto& e = g.edge(d / 2);
  return (d % 2 == 0) ? e.u : e.v;
}

template <exact_ring R>
int dart_head(const OrderedGraph<R>& g, int d) {
  const auto& e = g.edge(d / 2);
  return (d % 2 == 0) ? e.v : e.u;
}

/// A rotation system: for every vertex, the cyclic order of its incident
/// edges, plus the designated outer face (an id into the canonical face
/// enumeration). The interpretation is fixed once and for all: faces are the
/// orbits of "rotation successor of the twin", and each face lies to the
/// right of its darts (so with rotations listed counterclockwise, bounded
/// face walks run clockwise). Whether the rotation lists are read clockwise
/// or counterclockwise in a drawing is a global chirality choice; all parity
/// machinery here is consistent under either reading.
class Embedding {
 public:
  Embedding() = default;
  Embedding(std::vector<std::vector<int>> edges_at_vertex, int outer_face)
      : rot_(std::move(edges_at_vertex)), outer_face_(outer_face) {}

  const std::vector<std::vector<int>>& rotation() const { return rot_; }
  int outer_face() const { return outer_face_; }
  void set_outer_face(int f) { outer_face_ = f; }

  /// Mirror image: reverses every rotation list. The outer face id must be
  /// re-identified by the caller against the reflected face enumeration.
  Embedding reflected() const {
    Embedding e(*this);
    for (auto& r : e.rot_) std::reverse(r.begin(), r.end());
    e.outer_face_ = -1;
    return e;
  }

 private:
  std::vector<std::vector<int>> rot_;
  int outer_face_ = -1;
};

/// Faces of an embedded graph (or of the spanning subgraph on a subset of its
/// edges), as dart orbits in canonical enumeration order: orbits are started
/// from the smallest unvisited dart id.
struct FaceSet {
  std::vector<std::vector<int>> face_darts;
  std::vector<int> face_of_dart;  // -1 for darts outside the edge subset

  int size() const { return static_cast<int>(face_darts.size()); }
};

namespace detail {

/// Next dart of the face walk: rotation successor of the twin, within the
/// given per-vertex dart lists.
inline int face_next(const std::vector<std::vector<int>>& rot_darts,
                     const std::vector<std::pair<int, int>>& dart_pos, int d) {
  auto [v, i] = dart_pos[twin(d)];
  const auto& r = rot_darts[v];
  return r[(i + 1) % r.size()];
}

}  // namespace detail

/// Face traversal restricted to the edges with edge_alive[e] != 0.
template <exact_ring R>
FaceSet faces_of_subset(const OrderedGraph<R>& g, const Embedding& emb,
                        const std::vector<char>& edge_alive) {
  const auto& rot = emb.rotation();
  if (static_cast<int>(rot.size()) != g.n())
    throw std::invalid_argument("rotation size does not match vertex count");

  // per-vertex dart lists in rotation order, filtered to alive edges
  std::vector<std::vector<int>> rot_darts(g.n());
  std::vector<char> listed(2 * g.edge_count(), 0);
  for (int v = 0; v < g.n(); ++v) {
    for (int e : rot[v]) {
      if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("rotation references unknown edge");
      const auto& ed = g.edge(e);
      int d;
      if (ed.u == v)
        d = dart_of(e, 0);
      else if (ed.v == v)
        d = dart_of(e, 1);
      else
        throw std::invalid_argument("rotation lists a non-incident edge at " +
                                    g.vset().label(v));
      if (listed[d])
        throw std::invalid_argument("edge listed twice in a rotation");
      listed[d] = 1;
      if (edge_alive[e]) rot_darts[v].push_back(d);
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!listed[2 * e] || !listed[2 * e + 1])
      throw std::invalid_argument("rotation misses an edge end");

  std::vector<std::pair<int, int>> dart_pos(2 * g.edge_count(), {-1, -1});
  for (int v = 0; v < g.n(); ++v)
    for (int i = 0; i < static_cast<int>(rot_darts[v].size()); ++i)
      dart_pos[rot_darts[v][i]] = {v, i};

  FaceSet fs;
  fs.face_of_dart.assign(2 * g.edge_count(), -1);
  for (int d0 = 0; d0 < 2 * g.edge_count(); ++d0) {
    if (!edge_alive[d0 / 2] || fs.face_of_dart[d0] != -1) continue;
    std::vector<int> walk;
    int d = d0;
    do {
      fs.face_of_dart[d] = fs.size();
      walk.push_back(d);
      d = detail::face_next(rot_darts, dart_pos, d);
    } while (d != d0);
    fs.face_darts.push_back(std::move(walk));
  }
  return fs;
}

/// Faces of the full embedded graph, with the Euler check V - E + F = 2 run
/// on every connected component that has at least one edge.
template <exact_ring R>
FaceSet faces(const OrderedGraph<R>& g, const Embedding& emb) {
  auto fs = faces_of_subset(g, emb, std::vector<char>(g.edge_count(), 1));

  // per-component Euler characteristic
  std::vector<int> comp(g.n(), -1);
  int ncomp = 0;
  auto adj = g.adjacency();
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1 || adj[s].empty()) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : adj[v]) {
        int u = g.other_end(e, v);
        if (comp[u] == -1) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
      }
    }
    ++ncomp;
  }
  std::vector<long> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
  for (int v = 0; v < g.n(); ++v)
    if (comp[v] >= 0) ++vcnt[comp[v]];
  for (int e = 0; e < g.edge_count(); ++e) ++ecnt[comp[g.edge(e).u]];
  for (const auto& walk : fs.face_darts)
    ++fcnt[comp[dart_tail(g, walk.front())]];
  for (int c = 0; c < ncomp; ++c)
    if (vcnt[c] - ecnt[c] + fcnt[c] != 2)
      throw std::invalid_argument(
          "embedding is not planar: Euler check failed (V-E+F = " +
          std::to_string(vcnt[c] - ecnt[c] + fcnt[c]) + ")");
  if (emb.outer_face() < 0 || emb.outer_face() >= fs.size())
    throw std::invalid_argument("outer face id out of range");
  return fs;
}

/// Partition of the faces into dual components, where two faces touching the
/// same edge are merged iff crossing that edge is allowed.
inline std::vector<int> dual_components(const FaceSet& fs, int edge_count,
                                        const std::vector<char>& crossable) {
  std::vector<int> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < edge_count; ++e) {
    if (!crossable[e]) continue;
    int f1 = fs.face_of_dart[2 * e], f2 = fs.face_of_dart[2 * e + 1];
    if (f1 < 0 || f2 < 0) continue;
    parent[find(f1)] = find(f2);
  }
  std::vector<int> comp(fs.size());
  for (int f = 0; f < fs.size(); ++f) comp[f] = find(f);
  return comp;
}

/// A simple cycle as a closed vertex walk: edges[i] joins vertices[i] and
/// vertices[(i+1) % L]. Edge ids keep parallel edges apart.
struct CycleWalk {
  std::vector<int> vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }

  /// Canonical key for deduplication.
  std::vector<int> sorted_edges() const {
    auto k = edges;
    std::sort(k.begin(), k.end());
    return k;
  }
};

template <exact_ring R>
CycleWalk cycle_from_face_walk(const OrderedGraph<R>& g,
                               const std::vector<int>& walk) {
  CycleWalk c;
  for (int d : walk) {
    c.vertices.push_back(dart_tail(g, d));
    c.edges.push_back(d / 2);
  }
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("face walk is not a simple cycle");
  return c;
}

/// Region data of a simple cycle within the fixed embedding: which faces are
/// enclosed (not reachable from the outer face without crossing the cycle)
/// and which vertices lie strictly inside.
struct CycleRegion {
  std::vector<char> face_enclosed;
  std::vector<char> vertex_inside;
  int interior_count = 0;
};

template <exact_ring R>
CycleRegion cycle_region(const OrderedGraph<R>& g, const Embedding& emb,
                         const FaceSet& fs, const CycleWalk& c) {
  if (c.vertices.size() != c.edges.size() || c.length() < 2)
    throw std::invalid_argument("not a cycle walk");
  std::vector<char> on_cycle(g.n(), 0);
  for (int i = 0; i < c.length(); ++i) {
    int u = c.vertices[i], v = c.vertices[(i + 1) % c.length()];
    const auto& ed = g.edge(c.edges[i]);
    if (!((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)))
      throw std::invalid_argument("walk edges do not join the walk vertices");
    if (on_cycle[u]) throw std::invalid_argument("walk repeats a vertex");
    on_cycle[u] = 1;
  }
  std::vector<char> crossable(g.edge_count(), 1);
  for (int e : c.edges) crossable[e] = 0;

  auto comp = dual_components(fs, g.edge_count(), crossable);
  int outer_comp = comp[emb.outer_face()];

  CycleRegion r;
  r.face_enclosed.assign(fs.size(), 0);
  for (int f = 0; f < fs.size(); ++f)
    r.face_enclosed[f] = (comp[f] != outer_comp);

  r.vertex_inside.assign(g.n(), 0);
  const auto& rot = emb.rotation();
  for (int v = 0; v < g.n(); ++v) {
    if (on_cycle[v] || rot[v].empty()) continue;
    bool inside = true;
    for (int e : rot[v]) {
      int d = (g.edge(e).u == v) ? dart_of(e, 0) : dart_of(e, 1);
      if (!r.face_enclosed[fs.face_of_dart[d]]) {
        inside = false;
        break;
      }
    }
    if (inside) {
      r.vertex_inside[v] = 1;
      ++r.interior_count;
    }
  }
  return r;
}

/// Number of vertices strictly inside the cycle.
template <exact_ring R>
int interior_vertices(const OrderedGraph<R>& g, const Embedding& emb,
                      const FaceSet& fs, const CycleWalk& c) {
  return cycle_region(g, emb, fs, c).interior_count;
}

/// The clockwise traversal of a simple cycle: the direction for which the
/// enclosed faces lie to the right. Since each face lies to the right of its
/// darts, this is the direction whose darts all border enclosed faces.
template <exact_ring R>
std::vector<int> clockwise_darts(const OrderedGraph<R>& g,
                                 const Embedding& emb, const FaceSet& fs,
                                 const CycleWalk& c,
                                 const CycleRegion& region) {
  int len = c.length();
  std::vector<int> fwd(len), bwd(len);
  for (int i = 0; i < len; ++i) {
    int e = c.edges[i];
    int tail = c.vertices[i];
    fwd[i] = (g.edge(e).u == tail) ? dart_of(e, 0) : dart_of(e, 1);
    bwd[len - 1 - i] = twin(fwd[i]);
  }
  auto all_enclosed = [&](const std::vector<int>& darts) {
    for (int d : darts)
      if (!region.face_enclosed[fs.face_of_dart[d]]) return false;
    return true;
  };
  if (all_enclosed(fwd)) return fwd;
  if (all_enclosed(bwd)) return bwd;
  throw std::logic_error("cycle does not consistently bound a region");
}

template <exact_ring R>
std::vector<int> clockwise_darts(const OrderedGraph<R>& g,
                                 const Embedding& emb, const FaceSet& fs,
                                 const CycleWalk& c) {
  return clockwise_darts(g, emb, fs, c, cycle_region(g, emb, fs, c));
}

}  // namespace pfcond
