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
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "pfcond/condensation.hpp"
#include "pfcond/families.hpp"
#include "pfcond/identities.hpp"
#include "pfcond/rng.hpp"

namespace pfcond {

namespace detail {

inline SkewArray<Int> random_array(int n, Rng& rng) {
  SkewArray<Int> w(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w.at(i, j) = Int(rng.nonzero(-99, 99));
  return w;
}

template <exact_ring R>
std::vector<int> outer_face_vertices(const OrderedGraph<R>& g,
                                     const Embedding& emb) {
  auto fs = faces(g, emb);
  std::vector<int> walk;
  for (int d : fs.face_darts[emb.outer_face()]) walk.push_back(dart_tail(g, d));
  return walk;
}

/// count distinct sorted positions out of 0..l-1.
inline std::vector<int> sample_positions(Rng& rng, int l, int count) {
  std::vector<int> all(l);
  for (int i = 0; i < l; ++i) all[i] = i;
  for (int i = 0; i < count; ++i)
    std::swap(all[i], all[i + rng.uniform(0, l - 1 - i)]);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

inline std::string sanitize(std::string s) {
  for (auto& c : s)
    if (c == ' ') c = '_';
  return s;
}

inline int clamp_size(int size, int lo, int hi) {
  return std::max(lo, std::min(size, hi));
}

/// Random split of {0..n-1} into alpha / beta / both with union everything.
inline void random_cover(Rng& rng, int n, VertexSubset& alpha,
                         VertexSubset& beta) {
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) {
    switch (rng.uniform(0, 2)) {
      case 0: a.push_back(v); break;
      case 1: b.push_back(v); break;
      default:
        a.push_back(v);
        b.push_back(v);
    }
  }
  alpha = VertexSubset::of_indices(std::move(a));
  beta = VertexSubset::of_indices(std::move(b));
}

inline IdentityReport merge_reports(std::vector<IdentityReport> parts,
                                    const std::string& identity) {
  for (auto& p : parts)
    if (!p.pass) return p;
  IdentityReport ok = parts.empty() ? IdentityReport{} : parts.front();
  ok.identity = identity;
  ok.pass = !parts.empty();
  return ok;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-identity random trials
// ---------------------------------------------------------------------------

inline IdentityReport trial_tanner(std::uint64_t seed, int size) {
  Rng rng(seed);
  int n = detail::clamp_size(size, 4, 12) & ~1;
  auto w = detail::random_array(n, rng);
  // even prefix keeps all Pfaffians even-dimensional, so nothing vanishes
  // for parity reasons alone
  int alpha_len = 2 * rng.uniform(0, (n - 2) / 2);
  int m = n - alpha_len;
  std::vector<IdentityReport> parts;
  for (int k = 1; k <= m; ++k) parts.push_back(check_tanner(w, alpha_len, k));
  if (n <= 8 && !exhibit_tanner_involution(w, alpha_len, 1 + rng.uniform(0, m - 1))) {
    IdentityReport bad;
    bad.identity = "tanner";
    bad.descriptor = "involution-exhibit-failed";
    return bad;
  }
  auto rep = detail::merge_reports(std::move(parts), "tanner");
  rep.descriptor = "n=" + std::to_string(n) +
                   " |alpha|=" + std::to_string(alpha_len) + " all-k";
  return rep;
}

inline IdentityReport trial_ohta(std::uint64_t seed, int size) {
  Rng rng(seed);
  int n = detail::clamp_size(size, 4, 12) & ~1;
  auto w = detail::random_array(n, rng);
  // both odd makes the summands even-dimensional Pfaffian products
  VertexSubset alpha, beta;
  do {
    detail::random_cover(rng, n, alpha, beta);
  } while (alpha.size() % 2 == 0 || beta.size() % 2 == 0);
  auto rep = check_ohta(w, alpha, beta);
  if (rep.pass && n <= 8 && !exhibit_overlap_involution(w, alpha, beta)) {
    rep.pass = false;
    rep.descriptor += " involution-exhibit-failed";
  }
  return rep;
}

inline IdentityReport trial_krattenthaler(std::uint64_t seed, int size) {
  Rng rng(seed);
  int n = detail::clamp_size(size, 4, 10) & ~1;
  auto w = detail::random_array(n, rng);
  VertexSubset alpha, beta;
  std::vector<IdentityReport> parts;
  do {
    detail::random_cover(rng, n, alpha, beta);
  } while (alpha.size() % 2 == 0 || beta.size() % 2 == 0);
  parts.push_back(check_krattenthaler(w, alpha, beta, KrattVariant::odd_s));
  parts.push_back(check_krattenthaler(w, alpha, beta, KrattVariant::uniform));
  do {
    detail::random_cover(rng, n, alpha, beta);
  } while (alpha.size() % 2 != 0 || beta.size() % 2 != 0);
  parts.push_back(check_krattenthaler(w, alpha, beta, KrattVariant::even_weak));
  parts.push_back(check_krattenthaler(w, alpha, beta, KrattVariant::uniform));
  return detail::merge_reports(std::move(parts), "krattenthaler");
}

inline IdentityReport trial_srinivasan(std::uint64_t seed, int size) {
  Rng rng(seed);
  int n = detail::clamp_size(size, 4, 12);
  if (n % 2 != 0) --n;
  auto w = detail::random_array(n, rng);
  std::vector<IdentityReport> parts;
  parts.push_back(check_srinivasan(w, rng.uniform(0, n / 2 - 1)));
  parts.push_back(check_srinivasan(w, n / 2));
  parts.push_back(check_srinivasan(w, rng.uniform(n / 2 + 1, n)));
  auto rep = detail::merge_reports(std::move(parts), "srinivasan");
  if (rep.pass) rep.descriptor = "n=" + std::to_string(n) + " m<n,m=n,m>n";
  return rep;
}

inline IdentityReport trial_general_srinivasan(std::uint64_t seed, int size) {
  Rng rng(seed);
  int n = detail::clamp_size(std::min(size, 8), 2, 8);
  auto w = detail::random_array(n, rng);
  std::vector<int> r, b;
  do {
    r.clear();
    b.clear();
    for (int v = 0; v < n; ++v) {
      int c = rng.uniform(0, 2);
      if (c == 0) r.push_back(v);
      if (c == 1) b.push_back(v);
    }
  } while (r.size() > 3 || b.size() > 3 || (r.size() + b.size()) % 2 != 0);
  return check_general_srinivasan(w, VertexSubset::of_indices(std::move(r)),
                                  VertexSubset::of_indices(std::move(b)));
}

namespace detail {

inline FamilyInstance<Int> suite_family(int which) {
  switch (which) {
    case 0: return make_grid(2, 3);
    case 1: return make_grid(2, 4);
    case 2: return make_grid(3, 3);
    case 3: return make_grid(3, 4);
    default: return make_aztec(2);
  }
}

inline OrderedGraph<Int> random_weights(const OrderedGraph<Int>& g, Rng& rng,
                                        int lo, int hi) {
  std::vector<Edge<Int>> edges = g.edges();
  for (auto& e : edges) e.w = Int(rng.nonzero(lo, hi));
  return OrderedGraph<Int>(g.vset(), std::move(edges));
}

}  // namespace detail

inline IdentityReport trial_sign_preserving(std::uint64_t seed, int trial_idx) {
  Rng rng(seed);
  auto fam = detail::suite_family(trial_idx % 5);
  auto g = detail::random_weights(fam.graph, rng, -99, 99);
  auto walk = detail::outer_face_vertices(g, *fam.embedding);
  int l = static_cast<int>(walk.size());
  int k = 1 + rng.uniform(0, std::min(3, l / 2) - 1);
  auto pos = detail::sample_positions(rng, l, 2 * k);
  std::vector<int> r, b;
  for (int i = 0; i < k; ++i) {
    r.push_back(walk[pos[2 * i]]);
    b.push_back(walk[pos[2 * i + 1]]);
  }
  std::vector<int> x;
  for (int v : r)
    if (rng.coin()) x.push_back(v);
  auto x_set = VertexSubset::of_indices(std::move(x));
  auto rep = check_sign_preserving(g, *fam.embedding, r, b, x_set);
  rep.descriptor = "fam=" + std::to_string(trial_idx % 5) + " " + rep.descriptor;
  if (rep.pass && g.n() <= 8 && k <= 2) {
    if (!check_planar_weight(g, VertexSubset::of_indices(std::move(r)),
                             VertexSubset::of_indices(std::move(b)))) {
      rep.pass = false;
      rep.descriptor += " planar-weight-check-failed";
    } else {
      rep.descriptor += " planar-weight-verified";
    }
  }
  return rep;
}

inline IdentityReport trial_kuo(std::uint64_t seed, int trial_idx) {
  Rng rng(seed);
  FamilyInstance<Int> fam;
  switch (trial_idx % 3) {
    case 0: fam = make_grid(2, 3); break;
    case 1: fam = make_grid(3, 4); break;
    default: fam = make_aztec(2);
  }
  auto g = (trial_idx % 2 == 0) ? fam.graph
                                : detail::random_weights(fam.graph, rng, 1, 99);
  auto walk = detail::outer_face_vertices(g, *fam.embedding);
  auto pos = detail::sample_positions(rng, static_cast<int>(walk.size()), 4);
  std::vector<int> corners{walk[pos[0]], walk[pos[1]], walk[pos[2]],
                           walk[pos[3]]};
  auto rep = check_kuo(g, *fam.embedding, corners[0], corners[1], corners[2],
                       corners[3]);
  rep.descriptor += (trial_idx % 2 == 0) ? " unit" : " random-positive";
  if (!rep.pass || g.n() > 12) return rep;

  // with the signed adjacency array and the four face vertices moved to the
  // end of the ground order, the same four products obey the all-plus-signs
  // Pfaffian expansion
  auto d = kasteleyn_matrix(g, kasteleyn_orient(g, *fam.embedding));
  std::vector<int> perm;
  for (int v = 0; v < g.n(); ++v)
    if (std::find(corners.begin(), corners.end(), v) == corners.end())
      perm.push_back(v);
  perm.insert(perm.end(), corners.begin(), corners.end());
  SkewArray<Int> arr(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) arr.at(i, j) = d.entry(perm[i], perm[j]);
  auto four = check_tanner(arr, g.n() - 4, 1);
  if (!four.pass) {
    four.identity = "kuo";
    four.descriptor = rep.descriptor + " [signed-four-term] " + four.descriptor;
    return four;
  }
  rep.descriptor += " signed-four-term";
  return rep;
}

inline IdentityReport trial_ciucu(std::uint64_t seed, int trial_idx) {
  Rng rng(seed);
  FamilyInstance<Int> fam;
  switch (trial_idx % 4) {
    case 0: fam = make_grid(2, 3); break;
    case 1: fam = make_grid(2, 4); break;
    case 2: fam = make_grid(2, 5); break;
    default: fam = make_grid(3, 4);
  }
  auto g = detail::random_weights(fam.graph, rng, -99, 99);
  auto side = bipartition_classes(g);
  auto walk = detail::outer_face_vertices(g, *fam.embedding);
  int l = static_cast<int>(walk.size());
  int k = 1 + rng.uniform(0, 1);
  std::vector<int> r, b;
  for (int tries = 0;; ++tries) {
    if (tries >= 40) {
      // consecutive boundary vertices alternate sides, so this always works
      r.clear();
      b.clear();
      for (int i = 0; i < k; ++i) {
        r.push_back(walk[2 * i]);
        b.push_back(walk[2 * i + 1]);
      }
      break;
    }
    auto pos = detail::sample_positions(rng, l, 2 * k);
    r.clear();
    b.clear();
    int u_count = 0, v_count = 0;
    for (int i = 0; i < 2 * k; ++i) {
      int v = walk[pos[i]];
      (i % 2 == 0 ? r : b).push_back(v);
      (side[v] == 0 ? u_count : v_count)++;
    }
    if (u_count == v_count) break;
  }
  auto rep = check_ciucu(g, *fam.embedding, r, b);
  rep.descriptor = "fam=" + std::to_string(trial_idx % 4) + " " + rep.descriptor;
  return rep;
}

inline IdentityReport trial_edge_condensation(std::uint64_t seed,
                                              int trial_idx) {
  Rng rng(seed);
  FamilyInstance<Int> fam;
  switch (trial_idx % 4) {
    case 0: fam = make_grid(2, 3); break;
    case 1: fam = make_grid(2, 4); break;
    case 2: fam = make_cycle(6); break;
    default: fam = make_grid(3, 3);
  }
  auto g = detail::random_weights(fam.graph, rng, -99, 99);
  auto fs = faces(g, *fam.embedding);
  const auto& outer_walk = fs.face_darts[fam.embedding->outer_face()];
  int l = static_cast<int>(outer_walk.size());
  int k = 1 + rng.uniform(0, 1);

  // pick k face-boundary edges, pairwise non-adjacent along the walk
  std::vector<int> picks;
  for (int tries = 0; tries < 100 && static_cast<int>(picks.size()) < k;
       ++tries) {
    int cand = rng.uniform(0, l - 1);
    bool ok = true;
    for (int p : picks) {
      int d = std::abs(cand - p);
      if (std::min(d, l - d) < 2) ok = false;
    }
    if (ok) picks.push_back(cand);
  }
  if (static_cast<int>(picks.size()) < k) picks = {0, 2};
  picks.resize(k);
  std::vector<int> edge_ids;
  for (int p : picks) edge_ids.push_back(edge_of_dart(outer_walk[p]));
  std::vector<int> b_subset;
  for (int i = 0; i < k; ++i)
    if (rng.coin()) b_subset.push_back(i);

  auto rep = check_edge_condensation(g, *fam.embedding, edge_ids, b_subset);
  if (!rep.pass) return rep;

  // the Pfaffian double-sum form on a small planar-weighted array: ground
  // order starts with the chosen edges' ends, interleaved and adjacent
  if (g.n() <= 10) {
    auto [a_of, b_of] = face_edge_pairing(g, *fam.embedding, edge_ids);
    std::vector<int> ends;
    for (int i = 0; i < k; ++i) {
      ends.push_back(a_of[i]);
      ends.push_back(b_of[i]);
    }
    std::vector<int> perm = ends;
    for (int v = 0; v < g.n(); ++v)
      if (std::find(ends.begin(), ends.end(), v) == ends.end())
        perm.push_back(v);
    SkewArray<Int> base = skew_from_graph(g);
    SkewArray<Int> arr(g.n());
    for (int i = 0; i < g.n(); ++i)
      for (int j = i + 1; j < g.n(); ++j)
        arr.at(i, j) = base.entry(perm[i], perm[j]);
    std::uint64_t bmask = 0;
    for (int i : b_subset) bmask |= (1ULL << i);
    auto arep = check_edge_condensation_array(arr, k, bmask);
    if (!arep.pass) {
      arep.descriptor += " [array form]";
      return arep;
    }
  }

  // subdivision sign and the product-expansion readings on a random array
  auto w6 = detail::random_array(6, rng);
  auto kv = complete_graph_of(w6);
  int u = rng.uniform(0, 4);
  int eid = -1;
  for (int e = 0; e < kv.edge_count(); ++e)
    if (kv.edge(e).u == u && kv.edge(e).v == u + 1) eid = e;
  auto sub = subdivide_edges(kv, {eid});
  if (!sub.sign_check.pass) {
    sub.sign_check.identity = "edge-condensation";
    sub.sign_check.descriptor = "subdivision " + sub.sign_check.descriptor;
    return sub.sign_check;
  }
  int u2 = rng.uniform(0, 4), v2 = rng.uniform(u2 + 1, 5);
  int eid2 = -1;
  for (int e = 0; e < kv.edge_count(); ++e)
    if (kv.edge(e).u == u2 && kv.edge(e).v == v2) eid2 = e;
  auto yr = check_lemma_yyz(kv, {eid2},
                            {static_cast<char>(rng.coin())},
                            {static_cast<char>(rng.coin())});
  std::string readings;
  if (yr.with_half_sign) readings += "H";
  if (yr.without_sign) readings += "N";
  if (yr.with_sign) readings += "S";
  if (readings.empty()) {
    IdentityReport bad;
    bad.identity = "edge-condensation";
    bad.descriptor = "yyz-no-reading-holds " + yr.descriptor;
    bad.lhs = yr.lhs;
    bad.rhs = yr.core;
    return bad;
  }
  rep.descriptor += " yyz=" + readings;
  return rep;
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

struct SuiteResult {
  int passed = 0;
  int total = 0;
};

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "kuo",         "tanner",          "ohta",
      "kratt",       "srinivasan",      "gen-srinivasan",
      "sign-preserving", "ciucu",       "edge-condensation"};
  return names;
}

/// Run seeded random trials of one identity suite; one line per trial in the
/// form "PASS|FAIL identity seed descriptor lhs rhs", plus a trailing
/// "SUMMARY identity passed/total".
inline SuiteResult run_identity_suite(const std::string& name, int trials,
                                      std::uint64_t seed, int size,
                                      std::ostream& out) {
  std::function<IdentityReport(std::uint64_t, int)> trial;
  if (name == "tanner")
    trial = [&](std::uint64_t s, int) { return trial_tanner(s, size); };
  else if (name == "ohta")
    trial = [&](std::uint64_t s, int) { return trial_ohta(s, size); };
  else if (name == "kratt")
    trial = [&](std::uint64_t s, int) { return trial_krattenthaler(s, size); };
  else if (name == "srinivasan")
    trial = [&](std::uint64_t s, int) { return trial_srinivasan(s, size); };
  else if (name == "gen-srinivasan")
    trial = [&](std::uint64_t s, int) {
      return trial_general_srinivasan(s, size);
    };
  else if (name == "sign-preserving")
    trial = [&](std::uint64_t s, int t) { return trial_sign_preserving(s, t); };
  else if (name == "kuo")
    trial = [&](std::uint64_t s, int t) { return trial_kuo(s, t); };
  else if (name == "ciucu")
    trial = [&](std::uint64_t s, int t) { return trial_ciucu(s, t); };
  else if (name == "edge-condensation")
    trial = [&](std::uint64_t s, int t) {
      return trial_edge_condensation(s, t);
    };
  else
    throw std::invalid_argument("unknown identity: " + name);

  SuiteResult res;
  for (int t = 0; t < trials; ++t) {
    auto rep = trial(mix_seed(seed, t), t);
    ++res.total;
    if (rep.pass) ++res.passed;
    out << (rep.pass ? "PASS " : "FAIL ") << name << ' ' << mix_seed(seed, t)
        << ' ' << detail::sanitize(rep.descriptor) << ' '
        << (rep.lhs.empty() ? "-" : rep.lhs) << ' '
        << (rep.rhs.empty() ? "-" : rep.rhs) << '\n';
  }
  out << "SUMMARY " << name << ' ' << res.passed << '/' << res.total << '\n';
  return res;
}

}  // namespace pfcond
