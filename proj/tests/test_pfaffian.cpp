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

#include "pfcond/families.hpp"
#include "pfcond/io.hpp"
#include "pfcond/pfaffian.hpp"
#include "pfcond/rng.hpp"

using namespace pfcond;

namespace {

SkewArray<Int> random_array(int n, Rng& rng, int lo = -99, int hi = 99) {
  SkewArray<Int> w(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w.at(i, j) = Int(rng.nonzero(lo, hi));
  return w;
}

}  // namespace

TEST_CASE("matching signs") {
  using arcs = std::vector<std::pair<int, int>>;
  SECTION("one crossing gives -1") {
    CHECK(crossing_sign_arcs(arcs{{0, 2}, {1, 3}}) == -1);
    CHECK(canonical_sign_arcs(arcs{{0, 2}, {1, 3}}) == -1);
  }
  SECTION("disjoint and nested arcs do not cross") {
    CHECK(crossing_sign_arcs(arcs{{0, 1}, {2, 3}}) == 1);
    CHECK(crossing_sign_arcs(arcs{{0, 3}, {1, 2}}) == 1);
    CHECK(canonical_sign_arcs(arcs{{0, 1}, {2, 3}}) == 1);
    CHECK(canonical_sign_arcs(arcs{{0, 3}, {1, 2}}) == 1);
  }
  SECTION("an eight-vertex example agrees under both definitions") {
    arcs mu{{0, 2}, {1, 6}, {3, 7}, {4, 5}};
    CHECK(crossing_sign_arcs(mu) == 1);
    CHECK(canonical_sign_arcs(mu) == crossing_sign_arcs(mu));
  }
  SECTION("both definitions agree on every matching of K_2..K_8") {
    for (int n = 1; n <= 4; ++n) {
      auto g = make_complete(2 * n).graph;
      auto ms = enumerate_matchings(g);
      Int expect(1);
      for (int i = 1; i <= n; ++i) expect *= 2 * i - 1;
      REQUIRE(Int(ms.size()) == expect);
      for (const auto& m : ms)
        CHECK(crossing_sign(g, m) == canonical_sign(g, m));
    }
  }
  SECTION("arcs sharing a vertex are rejected") {
    CHECK_THROWS_AS(crossing_sign_arcs(arcs{{0, 1}, {1, 2}}),
                    std::invalid_argument);
  }
  SECTION("single-arc removal changes the sign by the between count") {
    auto g = make_complete(8).graph;
    for (const auto& m : enumerate_matchings(g)) {
      auto all = arcs_of_matching(g, m);
      int full = crossing_sign_arcs(all);
      for (std::size_t drop = 0; drop < all.size(); ++drop) {
        std::vector<std::pair<int, int>> rest;
        for (std::size_t i = 0; i < all.size(); ++i)
          if (i != drop) rest.push_back(all[i]);
        int i = std::min(all[drop].first, all[drop].second);
        int j = std::max(all[drop].first, all[drop].second);
        int factor = ((j - i - 1) % 2 == 0) ? 1 : -1;
        CHECK(full == crossing_sign_arcs(rest) * factor);
      }
    }
  }
}

TEST_CASE("Pfaffian by definition") {
  SECTION("dimension two is the single entry") {
    SkewArray<Int> a(2);
    a.at(0, 1) = 7;
    CHECK(pf_definition(a) == 7);
  }
  SECTION("dimension four expands into three products") {
    Rng rng(1);
    auto a = random_array(4, rng);
    CHECK(pf_definition(a) == a.at(0, 1) * a.at(2, 3) -
                                  a.at(0, 2) * a.at(1, 3) +
                                  a.at(0, 3) * a.at(1, 2));
  }
  SECTION("empty and odd dimensions") {
    CHECK(pf_definition(SkewArray<Int>(0)) == 1);
    CHECK(pf_definition(SkewArray<Int>(5)) == 0);
  }
  SECTION("the oracle cap is enforced") {
    CHECK_THROWS_AS(pf_definition(SkewArray<Int>(16)), std::invalid_argument);
  }
}

TEST_CASE("Pfaffians of words") {
  Rng rng(2);
  auto a = random_array(6, rng);
  SECTION("the ground word reproduces the Pfaffian") {
    std::vector<int> w{0, 1, 2, 3, 4, 5};
    CHECK(pf_word(a, w) == pf_definition(a));
  }
  SECTION("two-letter words read the array skew-symmetrically") {
    CHECK(pf_word(a, std::vector<int>{1, 4}) == a.at(1, 4));
    CHECK(pf_word(a, std::vector<int>{4, 1}) == -a.at(1, 4));
  }
  SECTION("swapping two letters flips the sign") {
    std::vector<int> w{2, 0, 5, 1};
    std::vector<int> swapped{2, 5, 0, 1};
    CHECK(pf_word(a, w) == -pf_word(a, swapped));
  }
  SECTION("odd length gives zero, repeats are an error") {
    CHECK(pf_word(a, std::vector<int>{0, 1, 2}) == 0);
    CHECK_THROWS_AS(pf_word(a, std::vector<int>{0, 0}),
                    std::invalid_argument);
  }
  SECTION("labelled overload") {
    OrderedVertexSet order({"p", "q", "r", "s", "t", "u"});
    CHECK(pf_word(order, a, std::vector<std::string>{"q", "t"}) == a.at(1, 4));
  }
}

TEST_CASE("elimination Pfaffian and determinant match the oracle") {
  Rng rng(3);
  for (int n : {2, 4, 6, 8, 10}) {
    for (int t = 0; t < 5; ++t) {
      auto a = random_array(n, rng);
      Int pf = pf_definition(a);
      CHECK(pf_eliminate(a) == pf);
      CHECK(det_skew(a) == pf * pf);
    }
  }
  SECTION("all-zero and odd arrays") {
    CHECK(pf_eliminate(SkewArray<Int>(6)) == 0);
    CHECK(pf_eliminate(SkewArray<Int>(5)) == 0);
    SkewArray<Int> two(2);
    two.at(0, 1) = -3;
    CHECK(pf_eliminate(two) == -3);
    CHECK(det_skew(SkewArray<Int>(3)) == 0);
  }
  SECTION("rational entries work directly") {
    SkewArray<Rat> a(4);
    a.at(0, 1) = Rat(1, 2);
    a.at(2, 3) = Rat(2, 3);
    a.at(0, 2) = Rat(5);
    a.at(1, 3) = Rat(-1, 7);
    CHECK(pf_eliminate(a) == pf_definition(a));
    CHECK(det_skew(a) == pf_definition(a) * pf_definition(a));
  }
  SECTION("determinant of dimension two") {
    SkewArray<Int> a(2);
    a.at(0, 1) = 9;
    CHECK(det_skew(a) == 81);
  }
}

TEST_CASE("bipartite Pfaffians") {
  Rng rng(4);
  SECTION("unequal sides vanish") {
    SkewArray<Int> a = random_array(6, rng);
    CHECK(pf_bipartite(a, VertexSubset::of_indices({0, 1}),
                       VertexSubset::of_indices({2, 3, 4, 5})) == 0);
  }
  SECTION("one against one is the single weight") {
    SkewArray<Int> a(2);
    a.at(0, 1) = 13;
    CHECK(pf_bipartite(a, VertexSubset::of_indices({0}),
                       VertexSubset::of_indices({1})) == 13);
  }
  SECTION("three against three matches the definition on the masked array") {
    SkewArray<Int> masked(6);
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) masked.at(i, j) = Int(rng.nonzero(-99, 99));
    auto a_side = VertexSubset::of_indices({0, 1, 2});
    auto b_side = VertexSubset::of_indices({3, 4, 5});
    CHECK(pf_bipartite(masked, a_side, b_side) == pf_definition(masked));
  }
}

TEST_CASE("semi-bipartite expansion") {
  Rng rng(5);
  SECTION("no left side collapses to a single term") {
    auto a = random_array(6, rng);
    auto res = pf_semibipartite(a, VertexSubset{}, VertexSubset::full(6));
    CHECK(res.pass);
    CHECK(res.value == pf_definition(a));
  }
  SECTION("three against seven") {
    auto a = random_array(10, rng);
    auto res = pf_semibipartite(a, VertexSubset::full(3),
                                set_minus(VertexSubset::full(10),
                                          VertexSubset::full(3)));
    CHECK(res.pass);
  }
  SECTION("more left than right vanishes on both sides") {
    auto a = random_array(8, rng);
    auto res = pf_semibipartite(a, VertexSubset::full(5),
                                set_minus(VertexSubset::full(8),
                                          VertexSubset::full(5)));
    CHECK(res.pass);
    CHECK(res.value == 0);
    CHECK(res.expansion == 0);
  }
}

TEST_CASE("skew array files") {
  Rng rng(6);
  auto a = random_array(5, rng);
  a.at(1, 3) = 0;
  std::ostringstream out;
  write_skew(out, a);
  std::istringstream in(out.str());
  auto back = read_skew<Int>(in);
  CHECK(back == a);
  SECTION("bad index rejected") {
    std::istringstream bad("3\n2 2 5\n");
    CHECK_THROWS_AS(read_skew<Int>(bad), std::invalid_argument);
  }
}
