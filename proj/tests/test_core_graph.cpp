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

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pfcond/graph.hpp"
#include "pfcond/io.hpp"
#include "pfcond/rng.hpp"

using namespace pfcond;

namespace {

OrderedGraph<Int> four_cycle() {
  return OrderedGraph<Int>::from_labels(
      {"v1", "v2", "v3", "v4"},
      {{"v1", "v2", Int(1)},
       {"v2", "v3", Int(1)},
       {"v3", "v4", Int(1)},
       {"v4", "v1", Int(1)}});
}

}  // namespace

TEST_CASE("induced deletion") {
  auto g = four_cycle();

  SECTION("deleting opposite corners leaves two isolated vertices") {
    auto h = induced_delete_labels(g, std::vector<std::string>{"v1", "v3"});
    CHECK(h.n() == 2);
    CHECK(h.edge_count() == 0);
    CHECK(h.vset().label(0) == "v2");
    CHECK(h.vset().label(1) == "v4");
  }
  SECTION("deleting nothing is the identity") {
    CHECK(induced_delete(g, VertexSubset{}) == g);
  }
  SECTION("deleting the middle of a path isolates the ends") {
    auto p = OrderedGraph<Int>::from_labels(
        {"v1", "v2", "v3"}, {{"v1", "v2", Int(1)}, {"v2", "v3", Int(1)}});
    auto h = induced_delete_labels(p, std::vector<std::string>{"v2"});
    CHECK(h.n() == 2);
    CHECK(h.edge_count() == 0);
  }
  SECTION("unknown label is an error") {
    CHECK_THROWS_AS(
        induced_delete_labels(g, std::vector<std::string>{"nope"}),
        std::invalid_argument);
  }
  SECTION("two disjoint deletions compose") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 6;
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
      std::vector<std::tuple<std::string, std::string, Int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.coin())
            edges.push_back({labels[i], labels[j], Int(rng.uniform(1, 9))});
      auto g6 = OrderedGraph<Int>::from_labels(labels, edges);
      std::vector<int> s1, s2;
      for (int v = 0; v < n; ++v) {
        int c = rng.uniform(0, 2);
        if (c == 0) s1.push_back(v);
        if (c == 1) s2.push_back(v);
      }
      auto a = VertexSubset::of_indices(s1);
      auto b = VertexSubset::of_indices(s2);
      // the second deletion happens in the smaller graph, so remap b
      auto first = induced_delete(g6, a);
      std::vector<int> b_in_first;
      for (int v : b) b_in_first.push_back(first.vset().position(g6.vset().label(v)));
      auto two_steps = induced_delete(first, VertexSubset::of_indices(b_in_first));
      CHECK(two_steps == induced_delete(g6, set_union(a, b)));
    }
  }
}

TEST_CASE("setsum and symmetric difference") {
  OrderedVertexSet m({"a", "b", "c", "d"});
  CHECK(setsum(VertexSubset{}, m) == 0);
  CHECK(setsum(VertexSubset::of_labels(m, std::vector<std::string>{"b", "d"}),
               m) == 6);

  OrderedVertexSet m7({"v1", "v2", "v3", "v4", "v5", "v6", "v7"});
  CHECK(setsum(VertexSubset::of_labels(
                   m7, std::vector<std::string>{"v2", "v5", "v7"}),
               m7) == 14);

  auto x = VertexSubset::of_indices({0, 1});
  auto y = VertexSubset::of_indices({1, 2});
  CHECK(sym_diff(x, x).empty());
  CHECK(sym_diff(x, y) == VertexSubset::of_indices({0, 2}));
  CHECK(sym_diff(VertexSubset{}, y) == y);

  SECTION("element outside the ambient set is an error") {
    CHECK_THROWS_AS(setsum(VertexSubset::of_indices({9}), m),
                    std::invalid_argument);
  }
  SECTION("setsum of a symmetric difference matches mod 2") {
    Rng rng(11);
    auto ground = VertexSubset::full(9);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> a, b;
      for (int v = 0; v < 9; ++v) {
        if (rng.coin()) a.push_back(v);
        if (rng.coin()) b.push_back(v);
      }
      auto sa = VertexSubset::of_indices(a);
      auto sb = VertexSubset::of_indices(b);
      CHECK((setsum(sym_diff(sa, sb), ground) -
             (setsum(sa, ground) + setsum(sb, ground))) % 2 == 0);
    }
  }
}

TEST_CASE("edge set weights") {
  auto g = OrderedGraph<Int>::from_labels(
      {"a", "b", "c", "d"},
      {{"a", "b", Int(2)}, {"c", "d", Int(3)}, {"a", "c", Int(0)}});
  CHECK(weight_of_edge_set(g, std::vector<int>{}) == 1);
  CHECK(weight_of_edge_set(g, std::vector<int>{0, 1}) == 6);
  CHECK(weight_of_edge_set(g, std::vector<int>{0, 1, 2}) == 0);
}

TEST_CASE("construction rules") {
  CHECK_THROWS_AS(OrderedVertexSet({"x", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedGraph<Int>::from_labels({"x", "y"},
                                                 {{"x", "x", Int(1)}}),
                  std::invalid_argument);
  // parallel edges are fine and stay distinct
  auto g = OrderedGraph<Int>::from_labels(
      {"x", "y"}, {{"x", "y", Int(1)}, {"y", "x", Int(5)}});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("graph files round-trip bit-exactly") {
  auto g = OrderedGraph<Rat>::from_labels(
      {"v1", "v2", "v3"},
      {{"v1", "v2", Rat(3)}, {"v2", "v3", Rat(-7, 4)}, {"v1", "v3", Rat(0)}});
  std::ostringstream first;
  write_graph(first, g);
  std::istringstream in(first.str());
  auto back = read_graph<Rat>(in);
  CHECK(back == g);
  std::ostringstream second;
  write_graph(second, back);
  CHECK(first.str() == second.str());

  SECTION("comments and blank lines are ignored") {
    std::istringstream commented(
        "# a comment\nvertices: a b\n\n# another\nedge: a b 2/3\n");
    auto h = read_graph<Rat>(commented);
    CHECK(h.n() == 2);
    CHECK(h.edge(0).w == Rat(2, 3));
  }
  SECTION("integer reader rejects rationals") {
    std::istringstream bad("vertices: a b\nedge: a b 2/3\n");
    CHECK_THROWS_AS(read_graph<Int>(bad), std::invalid_argument);
  }
}
