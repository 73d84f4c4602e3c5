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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pfcond/embedding.hpp"
#include "pfcond/graph.hpp"
#include "pfcond/kasteleyn.hpp"
#include "pfcond/pfaffian.hpp"

namespace pfcond {

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

/// Lines of a stream, with blank lines and '#' comment lines dropped.
inline std::vector<std::vector<std::string>> content_lines(std::istream& in) {
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    out.push_back(std::move(toks));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph files
//   vertices: v1 v2 ... vn
//   edge: u v w        (w a decimal integer or p/q; one line per edge)
// Lines starting with '#' are ignored. Writing then reading reproduces the
// graph bit-exactly.
// ---------------------------------------------------------------------------

template <exact_ring R>
OrderedGraph<R> read_graph(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::tuple<std::string, std::string, R>> edges;
  bool saw_vertices = false;
  for (const auto& toks : detail::content_lines(in)) {
    if (toks[0] == "vertices:") {
      if (saw_vertices)
        throw std::invalid_argument("graph file: repeated vertices line");
      saw_vertices = true;
      labels.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "edge:") {
      if (toks.size() != 4)
        throw std::invalid_argument("graph file: edge line needs u v w");
      edges.push_back({toks[1], toks[2], parse_ring<R>(toks[3])});
    } else {
      throw std::invalid_argument("graph file: unknown line " + toks[0]);
    }
  }
  if (!saw_vertices)
    throw std::invalid_argument("graph file: missing vertices line");
  return OrderedGraph<R>::from_labels(std::move(labels), edges);
}

template <exact_ring R>
void write_graph(std::ostream& out, const OrderedGraph<R>& g) {
  out << "vertices:";
  for (const auto& l : g.vset().labels()) out << ' ' << l;
  out << '\n';
  for (const auto& e : g.edges())
    out << "edge: " << g.vset().label(e.u) << ' ' << g.vset().label(e.v) << ' '
        << ring_str(e.w) << '\n';
}

template <exact_ring R>
OrderedGraph<R> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph<R>(in);
}

// ---------------------------------------------------------------------------
// Skew-array files
//   n
//   i j value          (1-based, i < j, nonzero upper entries)
// ---------------------------------------------------------------------------

template <exact_ring R>
SkewArray<R> read_skew(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty() || lines[0].size() != 1)
    throw std::invalid_argument("skew file: first line must be the dimension");
  int n = std::stoi(lines[0][0]);
  SkewArray<R> a(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 3)
      throw std::invalid_argument("skew file: entry line needs i j value");
    int r = std::stoi(lines[i][0]), c = std::stoi(lines[i][1]);
    if (r < 1 || c < 1 || r > n || c > n || r >= c)
      throw std::invalid_argument("skew file: need 1 <= i < j <= n");
    a.at(r - 1, c - 1) = parse_ring<R>(lines[i][2]);
  }
  return a;
}

template <exact_ring R>
void write_skew(std::ostream& out, const SkewArray<R>& a) {
  out << a.size() << '\n';
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.at(i, j) != 0)
        out << i + 1 << ' ' << j + 1 << ' ' << ring_str(a.at(i, j)) << '\n';
}

template <exact_ring R>
SkewArray<R> read_skew_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_skew<R>(in);
}

// ---------------------------------------------------------------------------
// Embedding files
//   rot: v e1 e2 ... ek   (edge ids, 0-based into the graph file's edge
//                          order, in cyclic order around v; one line per
//                          vertex)
//   outer: f              (face id under the canonical face enumeration)
// ---------------------------------------------------------------------------

template <exact_ring R>
Embedding read_embedding(std::istream& in, const OrderedGraph<R>& g) {
  std::vector<std::vector<int>> rot(g.n());
  std::vector<char> seen(g.n(), 0);
  int outer = -1;
  for (const auto& toks : detail::content_lines(in)) {
    if (toks[0] == "rot:") {
      if (toks.size() < 2)
        throw std::invalid_argument("embedding file: rot line needs a vertex");
      int v = g.vset().position(toks[1]);
      if (seen[v])
        throw std::invalid_argument("embedding file: repeated vertex " +
                                    toks[1]);
      seen[v] = 1;
      for (std::size_t i = 2; i < toks.size(); ++i)
        rot[v].push_back(std::stoi(toks[i]));
    } else if (toks[0] == "outer:") {
      if (toks.size() != 2)
        throw std::invalid_argument("embedding file: outer line needs an id");
      outer = std::stoi(toks[1]);
    } else {
      throw std::invalid_argument("embedding file: unknown line " + toks[0]);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v])
      throw std::invalid_argument("embedding file: missing rotation for " +
                                  g.vset().label(v));
  if (outer < 0)
    throw std::invalid_argument("embedding file: missing outer face");
  return Embedding(std::move(rot), outer);
}

template <exact_ring R>
void write_embedding(std::ostream& out, const OrderedGraph<R>& g,
                     const Embedding& emb) {
  for (int v = 0; v < g.n(); ++v) {
    out << "rot: " << g.vset().label(v);
    for (int e : emb.rotation()[v]) out << ' ' << e;
    out << '\n';
  }
  out << "outer: " << emb.outer_face() << '\n';
}

template <exact_ring R>
Embedding read_embedding_file(const std::string& path,
                              const OrderedGraph<R>& g) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_embedding(in, g);
}

// ---------------------------------------------------------------------------
// Orientation files
//   arc: u v              (xi(u,v) = +1; one line per adjacent vertex pair)
// ---------------------------------------------------------------------------

template <exact_ring R>
Orientation read_orientation(std::istream& in, const OrderedGraph<R>& g) {
  Orientation xi;
  for (const auto& toks : detail::content_lines(in)) {
    if (toks[0] != "arc:" || toks.size() != 3)
      throw std::invalid_argument("orientation file: expected 'arc: u v'");
    xi.set(g.vset().position(toks[1]), g.vset().position(toks[2]), 1);
  }
  for (const auto& e : g.edges())
    if (!xi.has(e.u, e.v))
      throw std::invalid_argument("orientation file: edge pair missing");
  return xi;
}

template <exact_ring R>
void write_orientation(std::ostream& out, const OrderedGraph<R>& g,
                       const Orientation& xi) {
  for (auto [i, j, s] : xi.items()) {
    if (s > 0)
      out << "arc: " << g.vset().label(i) << ' ' << g.vset().label(j) << '\n';
    else
      out << "arc: " << g.vset().label(j) << ' ' << g.vset().label(i) << '\n';
  }
}

template <exact_ring R>
Orientation read_orientation_file(const std::string& path,
                                  const OrderedGraph<R>& g) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_orientation(in, g);
}

/// Exact weight conversion between the ring instances.
template <exact_ring To, exact_ring From>
OrderedGraph<To> convert_graph(const OrderedGraph<From>& g) {
  std::vector<Edge<To>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges())
    edges.push_back({e.u, e.v, from_rational<To>(to_rational(e.w))});
  return OrderedGraph<To>(g.vset(), std::move(edges));
}

}  // namespace pfcond
