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

#include <set>

#include "pfcond/families.hpp"
#include "pfcond/rng.hpp"
#include "pfcond/superposition.hpp"

using namespace pfcond;

namespace {

OrderedGraph<Int> complete_weighted(int n, Rng& rng) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  std::vector<Edge<Int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.push_back({i, j, Int(rng.nonzero(-99, 99))});
  return OrderedGraph<Int>(OrderedVertexSet(std::move(labels)),
                           std::move(edges));
}

/// All three-way colourings of {0..n-1}: 0 = white, 1 = red, 2 = blue.
template <typename F>
void for_each_colouring(int n, F&& fn) {
  std::vector<int> c(n, 0);
  while (true) {
    std::vector<int> r, b;
    for (int v = 0; v < n; ++v) {
      if (c[v] == 1) r.push_back(v);
      if (c[v] == 2) b.push_back(v);
    }
    fn(VertexSubset::of_indices(std::move(r)),
       VertexSubset::of_indices(std::move(b)));
    int i = 0;
    while (i < n && c[i] == 2) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
}

}  // namespace

TEST_CASE("bicoloured graphs") {
  auto g = make_grid(2, 2).graph;
  SECTION("no coloured vertices doubles every edge") {
    auto bg = build_bicoloured(g, {}, {});
    CHECK(bg.red_edges.size() == static_cast<std::size_t>(g.edge_count()));
    CHECK(bg.blue_edges.size() == static_cast<std::size_t>(g.edge_count()));
  }
  SECTION("red edges avoid blue vertices and vice versa") {
    auto bg = build_bicoloured(g, VertexSubset::of_indices({0}),
                               VertexSubset::of_indices({3}));
    for (int e : bg.red_edges) {
      CHECK(g.edge(e).u != 3);
      CHECK(g.edge(e).v != 3);
    }
    for (int e : bg.blue_edges) {
      CHECK(g.edge(e).u != 0);
      CHECK(g.edge(e).v != 0);
    }
  }
  SECTION("overlapping classes are rejected") {
    CHECK_THROWS_AS(build_bicoloured(g, VertexSubset::of_indices({1}),
                                     VertexSubset::of_indices({1})),
                    std::invalid_argument);
  }
  SECTION("colouring all vertices of a single edge graph kills both copies") {
    auto h = OrderedGraph<Int>::from_labels({"x", "y"}, {{"x", "y", Int(1)}});
    auto bg = build_bicoloured(h, VertexSubset::of_indices({0}),
                               VertexSubset::of_indices({1}));
    CHECK(bg.red_edges.empty());
    CHECK(bg.blue_edges.empty());
    CHECK(enumerate_superpositions(bg).empty());
  }
}

TEST_CASE("decomposition into alternating paths and cycles") {
  SECTION("equal matchings with no coloured vertices yield 2-cycles") {
    auto g = make_grid(2, 2).graph;
    auto bg = build_bicoloured(g, {}, {});
    auto mu = enumerate_matchings(g)[0].edge_ids;
    Superposition s{mu, mu};
    auto dec = decompose(bg, s);
    CHECK(dec.paths.empty());
    REQUIRE(dec.cycles.size() == mu.size());
    for (const auto& c : dec.cycles) CHECK(c.edges.size() == 2);
  }
  SECTION("a single bicoloured path connects the two coloured vertices") {
    // path v1 - v2 - v3 - v4; an odd path needs same-coloured ends
    auto g = OrderedGraph<Int>::from_labels(
        {"v1", "v2", "v3", "v4"},
        {{"v1", "v2", Int(1)}, {"v2", "v3", Int(1)}, {"v3", "v4", Int(1)}});
    auto bg = build_bicoloured(g, VertexSubset::of_indices({0, 3}),
                               VertexSubset{});
    auto sups = enumerate_superpositions(bg);
    REQUIRE(sups.size() == 1);
    auto dec = decompose(bg, sups[0]);
    REQUIRE(dec.paths.size() == 1);
    CHECK(dec.paths[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(dec.cycles.empty());
    // colours alternate along the path
    for (std::size_t i = 1; i < dec.paths[0].edges.size(); ++i)
      CHECK(dec.paths[0].edges[i].colour != dec.paths[0].edges[i - 1].colour);
  }
  SECTION("coloured classes that force an odd remainder have no superpositions") {
    auto g = OrderedGraph<Int>::from_labels(
        {"v1", "v2", "v3", "v4"},
        {{"v1", "v2", Int(1)}, {"v2", "v3", Int(1)}, {"v3", "v4", Int(1)}});
    auto bg = build_bicoloured(g, VertexSubset::of_indices({0}),
                               VertexSubset::of_indices({3}));
    CHECK(enumerate_superpositions(bg).empty());
  }
  SECTION("every vertex lies on exactly one path or cycle") {
    Rng rng(17);
    auto g = complete_weighted(6, rng);
    for_each_colouring(6, [&](const VertexSubset& r, const VertexSubset& b) {
      auto bg = build_bicoloured(g, r, b);
      for (const auto& s : enumerate_superpositions(bg)) {
        auto dec = decompose(bg, s);
        std::vector<int> hit(g.n(), 0);
        for (const auto& p : dec.paths) {
          for (int v : p.vertices) ++hit[v];
          CHECK(p.vertices.front() < p.vertices.back());
        }
        for (const auto& c : dec.cycles) {
          CHECK(c.vertices.size() % 2 == 0);
          for (int v : c.vertices) ++hit[v];
        }
        for (int v = 0; v < g.n(); ++v) CHECK(hit[v] == 1);
      }
    });
  }
  SECTION("reassembling the walks reproduces the two matchings") {
    Rng rng(19);
    auto g = complete_weighted(6, rng);
    for_each_colouring(6, [&](const VertexSubset& r, const VertexSubset& b) {
      auto bg = build_bicoloured(g, r, b);
      for (const auto& s : enumerate_superpositions(bg)) {
        auto dec = decompose(bg, s);
        std::vector<int> red, blue;
        auto take = [&](const WalkStep& st) {
          (st.colour == Colour::red ? red : blue).push_back(st.edge);
        };
        for (const auto& p : dec.paths)
          for (const auto& st : p.edges) take(st);
        for (const auto& c : dec.cycles)
          for (const auto& st : c.edges) take(st);
        std::sort(red.begin(), red.end());
        std::sort(blue.begin(), blue.end());
        CHECK(red == s.red_matching);
        CHECK(blue == s.blue_matching);
      }
    });
  }
}

TEST_CASE("colour swaps") {
  Rng rng(23);
  auto g = complete_weighted(6, rng);

  SECTION("swapping twice restores everything, weights preserved") {
    for_each_colouring(6, [&](const VertexSubset& r, const VertexSubset& b) {
      auto bg = build_bicoloured(g, r, b);
      for (const auto& s : enumerate_superpositions(bg)) {
        for (int x : bg.coloured()) {
          auto res = swap_colours(bg, s, x);
          CHECK(superposition_weight(g, res.superposition) ==
                superposition_weight(g, s));
          auto bg2 =
              build_bicoloured(g, res.red_vertices, res.blue_vertices);
          auto back = swap_colours(bg2, res.superposition, x);
          CHECK(back.superposition == s);
          CHECK(back.red_vertices == r);
          CHECK(back.blue_vertices == b);
          // the declared sign change matches the recomputed signs (the call
          // itself checks this and throws otherwise)
          int wx = -1, wy = -1;
          auto coloured = bg.coloured();
          for (int i = 0; i < coloured.size(); ++i) {
            if (coloured[i] == x) wx = i + 1;
            if (coloured[i] == res.other_endpoint) wy = i + 1;
          }
          CHECK(swap_sign_change(bg, s, x) ==
                (((wy - wx + 1) % 2 == 0) ? 1 : -1));
        }
      }
    });
  }

  SECTION("a length-one path flips the edge and moves both ends") {
    auto h = OrderedGraph<Int>::from_labels({"x", "y"}, {{"x", "y", Int(4)}});
    auto bg = build_bicoloured(h, VertexSubset::of_indices({0, 1}), {});
    Superposition s{{0}, {}};
    auto res = swap_colours(bg, s, 0);
    CHECK(res.superposition.red_matching.empty());
    CHECK(res.superposition.blue_matching == std::vector<int>{0});
    CHECK(res.red_vertices.empty());
    CHECK(res.blue_vertices == VertexSubset::of_indices({0, 1}));
  }

  SECTION("opposite-colour endpoints exchange classes") {
    // even path v1 - v2 - v3 with one red and one blue end
    auto h = OrderedGraph<Int>::from_labels(
        {"v1", "v2", "v3"}, {{"v1", "v2", Int(1)}, {"v2", "v3", Int(1)}});
    auto bg = build_bicoloured(h, VertexSubset::of_indices({0}),
                               VertexSubset::of_indices({2}));
    auto sups = enumerate_superpositions(bg);
    REQUIRE(sups.size() == 1);
    auto res = swap_colours(bg, sups[0], 0);
    CHECK(res.other_endpoint == 2);
    CHECK(res.red_vertices == VertexSubset::of_indices({2}));
    CHECK(res.blue_vertices == VertexSubset::of_indices({0}));
  }

  SECTION("uncoloured vertices cannot start a swap") {
    auto bg = build_bicoloured(g, VertexSubset::of_indices({0, 2}),
                               VertexSubset::of_indices({1, 3}));
    auto sups = enumerate_superpositions(bg);
    REQUIRE(!sups.empty());
    CHECK_THROWS_AS(swap_colours(bg, sups[0], 4), std::invalid_argument);
  }

  SECTION("path parity matches the endpoint colours") {
    for_each_colouring(6, [&](const VertexSubset& r, const VertexSubset& b) {
      auto bg = build_bicoloured(g, r, b);
      for (const auto& s : enumerate_superpositions(bg)) {
        auto dec = decompose(bg, s);
        for (const auto& p : dec.paths) {
          bool same_colour =
              r.contains(p.vertices.front()) == r.contains(p.vertices.back());
          // odd length exactly when the endpoints share a colour
          CHECK(same_colour == (p.edges.size() % 2 == 1));
        }
      }
    });
  }
}

TEST_CASE("simultaneous path swaps") {
  Rng rng(31);
  auto g = complete_weighted(8, rng);
  auto r = VertexSubset::of_indices({0, 2});
  auto b = VertexSubset::of_indices({5, 7});
  auto bg = build_bicoloured(g, r, b);
  auto sups = enumerate_superpositions(bg);
  REQUIRE(!sups.empty());
  for (const auto& s : sups) {
    auto res = swap_paths(bg, s, r);
    CHECK(superposition_weight(g, res.superposition) ==
          superposition_weight(g, s));
    // swapping the same starts again restores the original
    auto bg2 = build_bicoloured(g, res.red_vertices, res.blue_vertices);
    // the original starts may have changed colour; swap at the same paths'
    // current endpoints derived from the first result
    auto back = swap_paths(bg2, res.superposition, r);
    const bool restored = back.superposition == s &&
                          back.red_vertices == r && back.blue_vertices == b;
    CHECK(restored);
  }
}
