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

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfcond/embedding.hpp"
#include "pfcond/graph.hpp"
#include "pfcond/rng.hpp"

namespace pfcond {

template <exact_ring R>
struct FamilyInstance {
  OrderedGraph<R> graph;
  std::optional<Embedding> embedding;
};

namespace detail {

/// Build the rotation system of a straight-line drawing: edges around each
/// vertex sorted by angle, faces enumerated, the outer face recognized as the
/// unique orbit whose boundary walk has positive signed area (bounded face
/// walks run clockwise under the face-on-the-right convention; a tree-like
/// drawing has a single orbit of area zero).
template <exact_ring R>
Embedding embedding_from_coords(const OrderedGraph<R>& g,
                                const std::vector<std::pair<double, double>>& xy) {
  std::vector<std::vector<int>> rot(g.n());
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::pair<double, int>> inc;
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edge(e);
      if (ed.u != v && ed.v != v) continue;
      int u = (ed.u == v) ? ed.v : ed.u;
      double ang = std::atan2(xy[u].second - xy[v].second,
                              xy[u].first - xy[v].first);
      inc.push_back({ang, e});
    }
    std::sort(inc.begin(), inc.end());
    for (auto& [ang, e] : inc) rot[v].push_back(e);
  }
  Embedding emb(std::move(rot), 0);
  auto fs = faces_of_subset(g, emb, std::vector<char>(g.edge_count(), 1));
  int outer = -1;
  for (int f = 0; f < fs.size(); ++f) {
    double area2 = 0;
    const auto& walk = fs.face_darts[f];
    for (std::size_t i = 0; i < walk.size(); ++i) {
      auto [x1, y1] = xy[dart_tail(g, walk[i])];
      auto [x2, y2] = xy[dart_tail(g, walk[(i + 1) % walk.size()])];
      area2 += x1 * y2 - x2 * y1;
    }
    if (area2 > 1e-9) {
      if (outer != -1) throw std::logic_error("two outer face candidates");
      outer = f;
    }
  }
  if (outer == -1) {
    if (fs.size() != 1) throw std::logic_error("outer face not found");
    outer = 0;
  }
  emb.set_outer_face(outer);
  return emb;
}

}  // namespace detail

/// rows x cols grid, vertices in row-major order.
inline FamilyInstance<Int> make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid: bad size");
  std::vector<std::string> labels;
  std::vector<std::pair<double, double>> xy;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      labels.push_back("g" + std::to_string(r) + "x" + std::to_string(c));
      xy.push_back({double(c), double(r)});
    }
  auto id = [&](int r, int c) { return r * cols + c; };
  std::vector<Edge<Int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), Int(1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), Int(1)});
    }
  OrderedGraph<Int> g(OrderedVertexSet(std::move(labels)), std::move(edges));
  auto emb = detail::embedding_from_coords(g, xy);
  return {std::move(g), std::move(emb)};
}

/// Aztec diamond graph of the given order: one vertex per unit cell of the
/// staircase region, edges between side-adjacent cells, vertices in diagonal
/// order. Its perfect matchings are the domino tilings, 2^{n(n+1)/2} in all.
inline FamilyInstance<Int> make_aztec(int order) {
  if (order < 1) throw std::invalid_argument("aztec: bad order");
  // cells centred at (a + 1/2, b + 1/2) with |2a+1| + |2b+1| <= 2*order
  std::vector<std::pair<int, int>> cells;
  for (int b = -order; b < order; ++b)
    for (int a = -order; a < order; ++a)
      if (std::abs(2 * a + 1) + std::abs(2 * b + 1) <= 2 * order)
        cells.push_back({a, b});
  std::sort(cells.begin(), cells.end(), [](auto p, auto q) {
    return std::pair(p.first + p.second, p.first) <
           std::pair(q.first + q.second, q.first);
  });
  std::map<std::pair<int, int>, int> id;
  std::vector<std::string> labels;
  std::vector<std::pair<double, double>> xy;
  for (const auto& [a, b] : cells) {
    id[{a, b}] = static_cast<int>(labels.size());
    labels.push_back("a" + std::to_string(a) + "y" + std::to_string(b));
    xy.push_back({a + 0.5, b + 0.5});
  }
  std::vector<Edge<Int>> edges;
  for (const auto& [a, b] : cells) {
    if (id.count({a + 1, b})) edges.push_back({id[{a, b}], id[{a + 1, b}], Int(1)});
    if (id.count({a, b + 1})) edges.push_back({id[{a, b}], id[{a, b + 1}], Int(1)});
  }
  OrderedGraph<Int> g(OrderedVertexSet(std::move(labels)), std::move(edges));
  auto emb = detail::embedding_from_coords(g, xy);
  return {std::move(g), std::move(emb)};
}

inline FamilyInstance<Int> make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    double t = 2 * 3.14159265358979323846 * i / n;
    xy.push_back({std::cos(t), std::sin(t)});
  }
  std::vector<Edge<Int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Int(1)});
  OrderedGraph<Int> g(OrderedVertexSet(std::move(labels)), std::move(edges));
  auto emb = detail::embedding_from_coords(g, xy);
  return {std::move(g), std::move(emb)};
}

inline FamilyInstance<Int> make_path(int n) {
  if (n < 1) throw std::invalid_argument("path: bad size");
  std::vector<std::string> labels;
  std::vector<std::pair<double, double>> xy;
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    xy.push_back({double(i), 0.0});
  }
  std::vector<Edge<Int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Int(1)});
  OrderedGraph<Int> g(OrderedVertexSet(std::move(labels)), std::move(edges));
  auto emb = detail::embedding_from_coords(g, xy);
  return {std::move(g), std::move(emb)};
}

/// Complete graph. Planar drawings (and hence embeddings) exist for n <= 4
/// only; larger instances carry no embedding.
inline FamilyInstance<Int> make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: bad size");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("k" + std::to_string(i + 1));
  std::vector<Edge<Int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, Int(1)});
  OrderedGraph<Int> g(OrderedVertexSet(std::move(labels)), std::move(edges));
  std::optional<Embedding> emb;
  if (n <= 4) {
    std::vector<std::pair<double, double>> xy;
    if (n == 4)
      xy = {{0, 0}, {4, 0}, {2, 3}, {2, 1}};  // triangle with centre vertex
    else
      for (int i = 0; i < n; ++i)
        xy.push_back({std::cos(2 * 3.14159265358979323846 * i / std::max(n, 1)),
                      std::sin(2 * 3.14159265358979323846 * i / std::max(n, 1))});
    emb = detail::embedding_from_coords(g, xy);
  }
  return {std::move(g), std::move(emb)};
}

// ---------------------------------------------------------------------------
// Family specifications (CLI surface)
// ---------------------------------------------------------------------------

struct WeightMode {
  enum Kind { unit, random } kind = unit;
  std::uint64_t seed = 0;
  int lo = -99;
  int hi = 99;
};

struct FamilySpec {
  enum Kind { grid, aztec, cycle, complete, path } kind = grid;
  int p1 = 1;
  int p2 = 1;

  /// Parse "grid:4,4", "aztec:2", "cycle:8", "complete:4", "path:5".
  static FamilySpec parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("family: expected kind:params");
    std::string kind = text.substr(0, colon);
    std::string params = text.substr(colon + 1);
    FamilySpec spec;
    auto comma = params.find(',');
    try {
      if (comma == std::string::npos) {
        spec.p1 = std::stoi(params);
      } else {
        spec.p1 = std::stoi(params.substr(0, comma));
        spec.p2 = std::stoi(params.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("family: bad parameters: " + params);
    }
    if (kind == "grid") {
      if (comma == std::string::npos)
        throw std::invalid_argument("family: grid needs rows,cols");
      spec.kind = grid;
    } else if (kind == "aztec")
      spec.kind = aztec;
    else if (kind == "cycle")
      spec.kind = cycle;
    else if (kind == "complete")
      spec.kind = complete;
    else if (kind == "path")
      spec.kind = path;
    else
      throw std::invalid_argument("family: unknown kind " + kind);
    return spec;
  }

  std::string str() const {
    std::ostringstream os;
    switch (kind) {
      case grid: os << "grid:" << p1 << "," << p2; break;
      case aztec: os << "aztec:" << p1; break;
      case cycle: os << "cycle:" << p1; break;
      case complete: os << "complete:" << p1; break;
      case path: os << "path:" << p1; break;
    }
    return os.str();
  }
};

template <exact_ring R>
OrderedGraph<R> reweighted(const OrderedGraph<R>& g, const WeightMode& mode) {
  if (mode.kind == WeightMode::unit) return g;
  Rng rng(mode.seed);
  std::vector<Edge<R>> edges = g.edges();
  for (auto& e : edges) e.w = R(rng.nonzero(mode.lo, mode.hi));
  return OrderedGraph<R>(g.vset(), std::move(edges));
}

inline FamilyInstance<Int> generate(const FamilySpec& spec,
                                    const WeightMode& mode = {}) {
  FamilyInstance<Int> inst;
  switch (spec.kind) {
    case FamilySpec::grid: inst = make_grid(spec.p1, spec.p2); break;
    case FamilySpec::aztec: inst = make_aztec(spec.p1); break;
    case FamilySpec::cycle: inst = make_cycle(spec.p1); break;
    case FamilySpec::complete: inst = make_complete(spec.p1); break;
    case FamilySpec::path: inst = make_path(spec.p1); break;
  }
  inst.graph = reweighted(inst.graph, mode);
  return inst;
}

}  // namespace pfcond
