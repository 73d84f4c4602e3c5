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

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pfcond/blocks.hpp"
#include "pfcond/embedding.hpp"
#include "pfcond/matchings.hpp"
#include "pfcond/pfaffian.hpp"

namespace pfcond {

/// An antisymmetric sign function on the vertex pairs joined by an edge:
/// xi(v,u) = -xi(u,v). Parallel edges share the sign of their pair.
class Orientation {
 public:
  int xi(int u, int v) const {
    auto it = sign_.find({std::min(u, v), std::max(u, v)});
    if (it == sign_.end())
      throw std::invalid_argument("orientation missing for vertex pair");
    return u < v ? it->second : -it->second;
  }

  bool has(int u, int v) const {
    return sign_.count({std::min(u, v), std::max(u, v)}) > 0;
  }

  /// Record xi(u,v) = s (and so xi(v,u) = -s).
  void set(int u, int v, int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be +-1");
    if (u == v) throw std::invalid_argument("loop pair");
    sign_[{std::min(u, v), std::max(u, v)}] = (u < v) ? s : -s;
  }

  /// (i, j, xi(i,j)) for all recorded pairs, i < j ascending.
  std::vector<std::tuple<int, int, int>> items() const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(sign_.size());
    for (const auto& [k, s] : sign_) out.push_back({k.first, k.second, s});
    return out;
  }

 private:
  std::map<std::pair<int, int>, int> sign_;
};

/// The signed adjacency array D(G, xi): entry (i,j), i < j, is xi(v_i, v_j)
/// times the total weight of the parallel edges joining v_i and v_j.
template <exact_ring R>
SkewArray<R> kasteleyn_matrix(const OrderedGraph<R>& g,
                              const Orientation& xi) {
  SkewArray<R> d(g.n());
  for (const auto& e : g.edges()) {
    int i = std::min(e.u, e.v), j = std::max(e.u, e.v);
    d.at(i, j) += (xi.xi(i, j) > 0) ? e.w : -e.w;
  }
  return d;
}

/// A contour cycle: the boundary of a bounded face of a 2-connected block,
/// with its interior vertex count and clockwise traversal.
struct ContourCycle {
  CycleWalk cycle;
  int interior_count = 0;
  std::vector<int> clockwise;  // darts of the clockwise traversal
  int block_index = 0;
};

namespace detail {

template <exact_ring R>
std::vector<char> alive_edge_mask(const OrderedGraph<R>& g,
                                  const std::vector<char>& vertex_alive) {
  std::vector<char> m(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    m[e] = vertex_alive[g.edge(e).u] && vertex_alive[g.edge(e).v];
  return m;
}

template <exact_ring R>
BlockDecomposition blocks_masked(const OrderedGraph<R>& g,
                                 const std::vector<char>& vertex_alive) {
  // run the block decomposition on the alive subgraph but keep global ids
  std::vector<int> remap(g.n(), -1);
  std::vector<std::string> labels;
  for (int v = 0; v < g.n(); ++v)
    if (vertex_alive[v]) {
      remap[v] = static_cast<int>(labels.size());
      labels.push_back(g.vset().label(v));
    }
  std::vector<Edge<R>> edges;
  std::vector<int> back;  // local edge id -> global edge id
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (remap[ed.u] >= 0 && remap[ed.v] >= 0) {
      edges.push_back({remap[ed.u], remap[ed.v], ed.w});
      back.push_back(e);
    }
  }
  OrderedGraph<R> h(OrderedVertexSet(std::move(labels)), std::move(edges));
  auto dec = blocks(h);
  std::vector<int> vertex_back(h.n());
  for (int v = 0; v < g.n(); ++v)
    if (remap[v] >= 0) vertex_back[remap[v]] = v;
  BlockDecomposition out;
  for (auto& b : dec.blocks) {
    for (int& e : b) e = back[e];
    out.blocks.push_back(std::move(b));
  }
  for (int v : dec.cutvertices) out.cutvertices.push_back(vertex_back[v]);
  for (int v : dec.isolated_vertices)
    out.isolated_vertices.push_back(vertex_back[v]);
  return out;
}

}  // namespace detail

/// Contour cycles of the subgraph induced by the alive vertices, within the
/// ambient embedding: per 2-connected block, the boundaries of all faces of
/// that block except the one containing the ambient outer face. Interior
/// vertex counts are taken among alive vertices.
template <exact_ring R>
std::vector<ContourCycle> contour_cycles(const OrderedGraph<R>& g,
                                         const Embedding& emb,
                                         const FaceSet& fs,
                                         const std::vector<char>& vertex_alive) {
  std::vector<ContourCycle> out;
  auto dec = detail::blocks_masked(g, vertex_alive);
  for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
    const auto& block = dec.blocks[bi];
    if (block.size() < 2) continue;  // a bridge bounds no face
    std::vector<char> in_block(g.edge_count(), 0);
    for (int e : block) in_block[e] = 1;
    auto block_faces = faces_of_subset(g, emb, in_block);

    // locate the block's outer face: its region contains the ambient outer
    // face, reachable in the dual without crossing block edges
    std::vector<char> crossable(g.edge_count(), 1);
    for (int e : block) crossable[e] = 0;
    auto comp = dual_components(fs, g.edge_count(), crossable);
    int outer_comp = comp[emb.outer_face()];
    int outer_orbit = -1;
    for (int f = 0; f < block_faces.size(); ++f) {
      bool is_outer = comp[fs.face_of_dart[block_faces.face_darts[f][0]]] ==
                      outer_comp;
      for (int d : block_faces.face_darts[f])
        if ((comp[fs.face_of_dart[d]] == outer_comp) != is_outer)
          throw std::logic_error("inconsistent block face region");
      if (is_outer) {
        if (outer_orbit != -1)
          throw std::logic_error("block has two outer faces");
        outer_orbit = f;
      }
    }
    if (outer_orbit == -1) throw std::logic_error("block outer face missing");

    for (int f = 0; f < block_faces.size(); ++f) {
      if (f == outer_orbit) continue;
      ContourCycle cc;
      cc.cycle = cycle_from_face_walk(g, block_faces.face_darts[f]);
      auto region = cycle_region(g, emb, fs, cc.cycle);
      cc.interior_count = 0;
      for (int v = 0; v < g.n(); ++v)
        if (region.vertex_inside[v] && vertex_alive[v]) ++cc.interior_count;
      cc.clockwise = clockwise_darts(g, emb, fs, cc.cycle, region);
      cc.block_index = static_cast<int>(bi);
      out.push_back(std::move(cc));
    }
  }
  return out;
}

/// Number of edges of the clockwise walk whose orientation agrees with the
/// traversal direction.
template <exact_ring R>
int co_oriented_count(const OrderedGraph<R>& g, const Orientation& xi,
                      const std::vector<int>& walk_darts) {
  int c = 0;
  for (int d : walk_darts)
    if (xi.xi(dart_tail(g, d), dart_head(g, d)) > 0) ++c;
  return c;
}

/// Construct an orientation such that every contour cycle C has a number of
/// clockwise co-oriented edges of parity opposite to its interior vertex
/// count. Per block, bounded faces are processed in breadth-first fashion
/// over shared edges, deferring any face whose addition would pinch the grown
/// region (the union of processed faces must stay simply connected); the
/// not-yet-oriented edges of each new face are then set to fix its parity.
/// Bridges and any other untouched edges get the default orientation.
template <exact_ring R>
Orientation kasteleyn_orient(const OrderedGraph<R>& g, const Embedding& emb) {
  auto fs = faces(g, emb);
  std::vector<char> all_alive(g.n(), 1);
  auto contours = contour_cycles(g, emb, fs, all_alive);
  Orientation xi;

  auto fix_face = [&](const ContourCycle& cc) {
    int c0 = 0;
    std::vector<int> free;
    for (int d : cc.clockwise) {
      int u = dart_tail(g, d), v = dart_head(g, d);
      if (xi.has(u, v))
        c0 += (xi.xi(u, v) > 0) ? 1 : 0;
      else
        free.push_back(d);
    }
    int target = (cc.interior_count + 1) % 2;
    if (free.empty()) {
      if (c0 % 2 != target)
        throw std::logic_error("face parity already violated");
      return;
    }
    for (std::size_t i = 0; i + 1 < free.size(); ++i)
      xi.set(dart_tail(g, free[i]), dart_head(g, free[i]), -1);
    int need = ((target - c0) % 2 + 2) % 2;
    xi.set(dart_tail(g, free.back()), dart_head(g, free.back()),
           need ? 1 : -1);
  };

  // group contour cycles by block
  std::map<int, std::vector<int>> by_block;
  for (std::size_t i = 0; i < contours.size(); ++i)
    by_block[contours[i].block_index].push_back(static_cast<int>(i));

  for (auto& [block, face_ids] : by_block) {
    std::set<int> union_vertices, union_edges;
    int faces_added = 0;
    std::vector<char> done(face_ids.size(), 0);
    while (faces_added < static_cast<int>(face_ids.size())) {
      int pick = -1;
      for (std::size_t k = 0; k < face_ids.size(); ++k) {
        if (done[k]) continue;
        const auto& cc = contours[face_ids[k]];
        if (faces_added > 0) {
          bool touches = false;
          for (int e : cc.cycle.edges)
            if (union_edges.count(e)) {
              touches = true;
              break;
            }
          if (!touches) continue;
        }
        // simple connectivity guard: Euler characteristic of the union must
        // stay 1 (a disc)
        std::set<int> vs = union_vertices, es = union_edges;
        for (int v : cc.cycle.vertices) vs.insert(v);
        for (int e : cc.cycle.edges) es.insert(e);
        long chi = static_cast<long>(vs.size()) -
                   static_cast<long>(es.size()) + (faces_added + 1);
        if (chi != 1) continue;
        pick = static_cast<int>(k);
        break;
      }
      if (pick < 0)
        throw std::logic_error("no admissible face processing order");
      const auto& cc = contours[face_ids[pick]];
      fix_face(cc);
      for (int v : cc.cycle.vertices) union_vertices.insert(v);
      for (int e : cc.cycle.edges) union_edges.insert(e);
      done[pick] = 1;
      ++faces_added;
    }
  }

  for (const auto& e : g.edges())
    if (!xi.has(e.u, e.v)) xi.set(std::min(e.u, e.v), std::max(e.u, e.v), 1);
  return xi;
}

// ---------------------------------------------------------------------------
// Admissibility verification
// ---------------------------------------------------------------------------

enum class AdmissibilityMode { faces, all_cycles, superposition_cycles };

struct AdmissibilityReport {
  bool ok = true;
  long cycles_checked = 0;
  std::vector<std::string> violations;

  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
};

namespace detail {

template <exact_ring R>
std::string cycle_name(const OrderedGraph<R>& g, const CycleWalk& c) {
  std::ostringstream os;
  os << "cycle";
  for (int v : c.vertices) os << ' ' << g.vset().label(v);
  return os.str();
}

/// All simple cycles of the alive subgraph (deduplicated, both directions
/// collapsed). Includes 2-cycles formed by parallel edges.
template <exact_ring R>
std::vector<CycleWalk> all_simple_cycles(const OrderedGraph<R>& g,
                                         const std::vector<char>& alive) {
  auto adj = g.adjacency();
  std::set<std::vector<int>> seen;
  std::vector<CycleWalk> out;
  std::vector<char> on_path(g.n(), 0);
  std::vector<int> vpath, epath;

  auto dfs = [&](auto&& self, int s, int v) -> void {
    for (int e : adj[v]) {
      int u = g.other_end(e, v);
      if (!alive[u]) continue;
      if (u == s && !epath.empty() && e != epath.front()) {
        CycleWalk c{vpath, epath};
        c.edges.push_back(e);
        if (seen.insert(c.sorted_edges()).second) out.push_back(std::move(c));
        continue;
      }
      if (u <= s || on_path[u]) continue;
      on_path[u] = 1;
      vpath.push_back(u);
      epath.push_back(e);
      self(self, s, u);
      epath.pop_back();
      vpath.pop_back();
      on_path[u] = 0;
    }
  };

  for (int s = 0; s < g.n(); ++s) {
    if (!alive[s]) continue;
    on_path[s] = 1;
    vpath = {s};
    epath.clear();
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  return out;
}

/// Cycles of length > 2 in the superposition of two perfect matchings of the
/// alive subgraph.
template <exact_ring R>
std::vector<CycleWalk> superposition_cycles_of(const OrderedGraph<R>& g,
                                               const Matching& mu,
                                               const Matching& nu) {
  std::vector<int> mu_at(g.n(), -1), nu_at(g.n(), -1);
  for (int e : mu.edge_ids) {
    mu_at[g.edge(e).u] = e;
    mu_at[g.edge(e).v] = e;
  }
  for (int e : nu.edge_ids) {
    nu_at[g.edge(e).u] = e;
    nu_at[g.edge(e).v] = e;
  }
  std::vector<char> visited(g.n(), 0);
  std::vector<CycleWalk> out;
  for (int v0 = 0; v0 < g.n(); ++v0) {
    if (visited[v0] || mu_at[v0] < 0) continue;
    CycleWalk c;
    int v = v0;
    bool take_mu = true;
    do {
      visited[v] = 1;
      c.vertices.push_back(v);
      int e = take_mu ? mu_at[v] : nu_at[v];
      c.edges.push_back(e);
      v = g.other_end(e, v);
      take_mu = !take_mu;
    } while (v != v0);
    if (c.length() > 2) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// Check one even cycle for the admissibility condition: an odd number of
/// co-oriented edges (equivalently contra-oriented; the traversal direction
/// does not matter for even cycles).
template <exact_ring R>
bool odd_co_orientation(const OrderedGraph<R>& g, const Orientation& xi,
                        const CycleWalk& c) {
  std::vector<int> darts(c.length());
  for (int i = 0; i < c.length(); ++i) {
    int e = c.edges[i];
    darts[i] = (g.edge(e).u == c.vertices[i]) ? dart_of(e, 0) : dart_of(e, 1);
  }
  return co_oriented_count(g, xi, darts) % 2 == 1;
}

/// Admissibility verification on the subgraph induced by the alive vertices,
/// with the ambient embedding.
///   faces:  every contour cycle C satisfies e(C) != p(C) mod 2;
///   all_cycles: every simple cycle satisfies the same (exhaustive);
///   superposition_cycles: every cycle arising from a pair of perfect
///   matchings has an odd number of co-oriented edges.
template <exact_ring R>
AdmissibilityReport verify_admissible(const OrderedGraph<R>& g,
                                      const Embedding& emb,
                                      const Orientation& xi,
                                      AdmissibilityMode mode,
                                      const std::vector<char>& vertex_alive) {
  AdmissibilityReport rep;
  if (mode == AdmissibilityMode::faces ||
      mode == AdmissibilityMode::all_cycles) {
    auto fs = faces(g, emb);
    if (mode == AdmissibilityMode::faces) {
      for (const auto& cc : contour_cycles(g, emb, fs, vertex_alive)) {
        ++rep.cycles_checked;
        int e = co_oriented_count(g, xi, cc.clockwise);
        if ((e - cc.interior_count) % 2 == 0)
          rep.fail("contour " + detail::cycle_name(g, cc.cycle) + ": e(C)=" +
                   std::to_string(e) + " p(C)=" +
                   std::to_string(cc.interior_count));
      }
    } else {
      for (const auto& c : detail::all_simple_cycles(g, vertex_alive)) {
        ++rep.cycles_checked;
        auto region = cycle_region(g, emb, fs, c);
        int p = 0;
        for (int v = 0; v < g.n(); ++v)
          if (region.vertex_inside[v] && vertex_alive[v]) ++p;
        auto cw = clockwise_darts(g, emb, fs, c, region);
        int e = co_oriented_count(g, xi, cw);
        if ((e - p) % 2 == 0)
          rep.fail(detail::cycle_name(g, c) + ": e(C)=" + std::to_string(e) +
                   " p(C)=" + std::to_string(p));
      }
    }
    return rep;
  }

  // superposition_cycles: embedding-free
  auto matchings = enumerate_matchings_within(g, vertex_alive);
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < matchings.size(); ++i)
    for (std::size_t j = i + 1; j < matchings.size(); ++j)
      for (auto& c :
           detail::superposition_cycles_of(g, matchings[i], matchings[j])) {
        if (!seen.insert(c.sorted_edges()).second) continue;
        ++rep.cycles_checked;
        if (!odd_co_orientation(g, xi, c))
          rep.fail("superposition " + detail::cycle_name(g, c));
      }
  return rep;
}

template <exact_ring R>
AdmissibilityReport verify_admissible(const OrderedGraph<R>& g,
                                      const Embedding& emb,
                                      const Orientation& xi,
                                      AdmissibilityMode mode) {
  return verify_admissible(g, emb, xi, mode, std::vector<char>(g.n(), 1));
}

/// Admissibility of the inherited orientation on g minus an even subset of
/// the vertices of a contour cycle (faces and superposition modes).
template <exact_ring R>
AdmissibilityReport inherited_admissibility_check(const OrderedGraph<R>& g,
                                                  const Embedding& emb,
                                                  const Orientation& xi,
                                                  const CycleWalk& contour,
                                                  const VertexSubset& s) {
  for (int v : s)
    if (std::find(contour.vertices.begin(), contour.vertices.end(), v) ==
        contour.vertices.end())
      throw std::invalid_argument(
          "deleted vertex does not lie on the contour cycle");
  if (s.size() % 2 != 0)
    throw std::invalid_argument("an even number of vertices is required");
  std::vector<char> alive(g.n(), 1);
  for (int v : s) alive[v] = 0;
  auto rep = verify_admissible(g, emb, xi, AdmissibilityMode::faces, alive);
  auto rep2 = verify_admissible(g, emb, xi,
                                AdmissibilityMode::superposition_cycles, alive);
  rep.ok = rep.ok && rep2.ok;
  rep.cycles_checked += rep2.cycles_checked;
  rep.violations.insert(rep.violations.end(), rep2.violations.begin(),
                        rep2.violations.end());
  return rep;
}

// ---------------------------------------------------------------------------
// Counting via Pfaffians
// ---------------------------------------------------------------------------

/// The matching generating function recovered from the Pfaffian of
/// D(G, xi): all Pfaffian terms carry the same sign under an admissible
/// orientation, and that sign is read off one reference matching. Returns 0
/// when the graph has no perfect matching.
template <exact_ring R>
R count_with_orientation(const OrderedGraph<R>& g, const Orientation& xi) {
  R pf = pf_eliminate(kasteleyn_matrix(g, xi));
  Matching ref;
  bool found = false;
  for_each_matching(g, [&](const Matching& m) {
    ref = m;
    found = true;
    return false;  // stop at the first
  });
  if (!found) return R(0);
  int sigma = crossing_sign(g, ref);
  for (int e : ref.edge_ids) {
    const auto& ed = g.edge(e);
    int i = std::min(ed.u, ed.v), j = std::max(ed.u, ed.v);
    sigma *= xi.xi(i, j);
  }
  return sigma > 0 ? pf : -pf;
}

template <exact_ring R>
R count_via_pfaffian(const OrderedGraph<R>& g, const Embedding& emb) {
  return count_with_orientation(g, kasteleyn_orient(g, emb));
}

}  // namespace pfcond
