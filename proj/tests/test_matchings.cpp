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

#include "pfcond/families.hpp"
#include "pfcond/matchings.hpp"
#include "pfcond/rng.hpp"

using namespace pfcond;

TEST_CASE("matching enumeration") {
  SECTION("a 4-cycle has exactly two perfect matchings") {
    auto g = OrderedGraph<Int>::from_labels(
        {"v1", "v2", "v3", "v4"},
        {{"v1", "v2", Int(1)},
         {"v2", "v3", Int(1)},
         {"v3", "v4", Int(1)},
         {"v4", "v1", Int(1)}});
    auto ms = enumerate_matchings(g);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].edge_ids == std::vector<int>{0, 2});
    CHECK(ms[1].edge_ids == std::vector<int>{1, 3});
  }
  SECTION("odd vertex count yields no matchings") {
    auto g = make_cycle(5).graph;
    CHECK(enumerate_matchings(g).empty());
    CHECK(matching_gf(g) == 0);
  }
  SECTION("parallel edges yield distinct matchings") {
    auto g = OrderedGraph<Int>::from_labels(
        {"x", "y"}, {{"x", "y", Int(2)}, {"x", "y", Int(3)}});
    CHECK(enumerate_matchings(g).size() == 2);
    CHECK(matching_gf(g) == 5);
  }
  SECTION("the empty graph has the empty matching") {
    OrderedGraph<Int> g(OrderedVertexSet(std::vector<std::string>{}), {});
    CHECK(enumerate_matchings(g).size() == 1);
    CHECK(matching_gf(g) == 1);
  }
}

TEST_CASE("matching generating function") {
  CHECK(matching_gf(make_grid(2, 3).graph) == 3);
  CHECK(matching_gf(make_grid(4, 4).graph) == 36);

  SECTION("gf is the sum of the enumerated weights") {
    Rng rng(3);
    auto g0 = make_grid(2, 4).graph;
    std::vector<Edge<Int>> edges = g0.edges();
    for (auto& e : edges) e.w = Int(rng.nonzero(-9, 9));
    OrderedGraph<Int> g(g0.vset(), std::move(edges));
    Int total(0);
    for (const auto& m : enumerate_matchings(g)) {
      // both matching invariants: disjoint edges covering every vertex
      std::vector<int> covered(g.n(), 0);
      for (int e : m.edge_ids) {
        ++covered[g.edge(e).u];
        ++covered[g.edge(e).v];
      }
      for (int v = 0; v < g.n(); ++v) REQUIRE(covered[v] == 1);
      total += weight_of_edge_set(g, m.edge_ids);
    }
    CHECK(total == matching_gf(g));
  }

  SECTION("deleting vertices via mask agrees with rebuilding the graph") {
    auto g = make_grid(3, 4).graph;
    auto s = VertexSubset::of_indices({0, 5});
    CHECK(matching_gf_minus(g, s) == matching_gf(induced_delete(g, s)));
  }
}

TEST_CASE("complete graph matching counts follow the double factorial") {
  Int expect(1);
  for (int n = 1; n <= 5; ++n) {
    expect *= 2 * n - 1;
    CHECK(count_matchings(make_complete(2 * n).graph) == expect);
  }
}
