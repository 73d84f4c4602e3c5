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
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pfcond/matchings.hpp"
#include "pfcond/ordered_set.hpp"
#include "pfcond/ring.hpp"
#include "pfcond/subsets.hpp"

namespace pfcond {

/// Upper triangular weight array a_{i,j} (0 <= i < j < n), implicitly
/// extended to a skew-symmetric matrix: entry(j,i) = -entry(i,j) and
/// entry(i,i) = 0. Absent entries are zero.
template <exact_ring R>
class SkewArray {
 public:
  SkewArray() : n_(0) {}
  explicit SkewArray(int n) : n_(n), a_(std::size_t(n) * (n - 1) / 2, R(0)) {
    if (n < 0) throw std::invalid_argument("negative dimension");
  }

  int size() const { return n_; }

  R& at(int i, int j) { return a_[index(i, j)]; }
  const R& at(int i, int j) const { return a_[index(i, j)]; }

  R entry(int i, int j) const {
    check(i);
    check(j);
    if (i == j) return R(0);
    if (i < j) return a_[index(i, j)];
    return -a_[index(j, i)];
  }

  /// Subarray on the given vertex subset, in inherited order.
  SkewArray principal_subarray(const VertexSubset& s) const {
    SkewArray sub(s.size());
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j) sub.at(i, j) = entry(s[i], s[j]);
    return sub;
  }

  bool operator==(const SkewArray&) const = default;

 private:
  void check(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("skew array index");
  }
  std::size_t index(int i, int j) const {
    check(i);
    check(j);
    if (i >= j) throw std::out_of_range("upper triangular index required");
    // row i occupies (n-1-i) slots starting at i*n - i(i+1)/2 - i ... compact:
    return std::size_t(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  int n_;
  std::vector<R> a_;
};

// ---------------------------------------------------------------------------
// Signs of matchings on an ordered vertex set
// ---------------------------------------------------------------------------

namespace detail {

/// Normalize to (lo, hi) pairs and check the arcs are pairwise disjoint.
inline std::vector<std::pair<int, int>> normalize_arcs(
    std::span<const std::pair<int, int>> arcs) {
  std::vector<std::pair<int, int>> a;
  a.reserve(arcs.size());
  std::vector<int> seen;
  for (auto [u, v] : arcs) {
    if (u == v) throw std::invalid_argument("arc with equal endpoints");
    a.push_back({std::min(u, v), std::max(u, v)});
    seen.push_back(u);
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("arcs share a vertex");
  return a;
}

inline int count_crossings(const std::vector<std::pair<int, int>>& arcs) {
  int c = 0;
  for (std::size_t k = 0; k < arcs.size(); ++k)
    for (std::size_t l = 0; l < arcs.size(); ++l) {
      if (k == l) continue;
      // strict crossing pattern i_k < i_l < j_k < j_l
      if (arcs[k].first < arcs[l].first && arcs[l].first < arcs[k].second &&
          arcs[k].second < arcs[l].second)
        ++c;
    }
  return c;
}

inline long count_inversions(const std::vector<int>& seq) {
  long inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv;
}

}  // namespace detail

/// Sign of a matching in the half-circle drawing: (-1)^{number of crossings},
/// a crossing being a pair of arcs with i_k < i_l < j_k < j_l (arcs
/// normalized so i < j). The arcs are ambient vertex indices.
inline int crossing_sign_arcs(std::span<const std::pair<int, int>> arcs) {
  auto a = detail::normalize_arcs(arcs);
  return detail::count_crossings(a) % 2 == 0 ? 1 : -1;
}

/// Sign of the canonical representation: sort each pair ascending, sort the
/// pairs by first element, flatten to (y_1,...,y_{2n}) and take the sign of
/// the permutation carrying the ascending order of the matched vertices into
/// that sequence.
inline int canonical_sign_arcs(std::span<const std::pair<int, int>> arcs) {
  auto a = detail::normalize_arcs(arcs);
  std::sort(a.begin(), a.end());
  std::vector<int> flat;
  flat.reserve(2 * a.size());
  for (auto [x, y] : a) {
    flat.push_back(x);
    flat.push_back(y);
  }
  // rank the values so inversions are counted against ascending order
  std::vector<int> sorted = flat;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i)
    ranks[i] = int(std::lower_bound(sorted.begin(), sorted.end(), flat[i]) -
                   sorted.begin());
  return detail::count_inversions(ranks) % 2 == 0 ? 1 : -1;
}

template <exact_ring R>
std::vector<std::pair<int, int>> arcs_of_matching(const OrderedGraph<R>& g,
                                                  const Matching& mu) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(mu.edge_ids.size());
  for (int e : mu.edge_ids) arcs.push_back({g.edge(e).u, g.edge(e).v});
  return arcs;
}

/// Both sign definitions for a perfect matching of g (must cover every
/// vertex; throws otherwise).
template <exact_ring R>
int crossing_sign(const OrderedGraph<R>& g, const Matching& mu) {
  if (static_cast<int>(mu.edge_ids.size()) * 2 != g.n())
    throw std::invalid_argument("matching is not perfect");
  return crossing_sign_arcs(arcs_of_matching(g, mu));
}

template <exact_ring R>
int canonical_sign(const OrderedGraph<R>& g, const Matching& mu) {
  if (static_cast<int>(mu.edge_ids.size()) * 2 != g.n())
    throw std::invalid_argument("matching is not perfect");
  return canonical_sign_arcs(arcs_of_matching(g, mu));
}

// ---------------------------------------------------------------------------
// Pfaffians
// ---------------------------------------------------------------------------

namespace detail {

/// Enumerate all partitions of `free` (ascending ambient indices) into pairs;
/// fn receives the arcs. (2n-1)!! leaves.
template <typename F>
void for_each_pair_partition(std::vector<int>& free,
                             std::vector<std::pair<int, int>>& arcs, F&& fn) {
  if (free.empty()) {
    fn(arcs);
    return;
  }
  int x = free.front();
  for (std::size_t t = 1; t < free.size(); ++t) {
    int y = free[t];
    std::vector<int> rest;
    rest.reserve(free.size() - 2);
    for (std::size_t s = 1; s < free.size(); ++s)
      if (s != t) rest.push_back(free[s]);
    arcs.push_back({x, y});
    for_each_pair_partition(rest, arcs, std::forward<F>(fn));
    arcs.pop_back();
  }
}

}  // namespace detail

inline constexpr int kPfDefinitionMaxDim = 14;

/// Pfaffian straight from the definition: sum over all perfect matchings of
/// the complete graph on n ordered vertices of crossing sign times the
/// product of entries. Pf of the empty array is 1; odd n gives 0. This is the
/// trusted (2n-1)!! oracle, capped at n = 14.
template <exact_ring R>
R pf_definition(const SkewArray<R>& a) {
  int n = a.size();
  if (n > kPfDefinitionMaxDim)
    throw std::invalid_argument("pf_definition: dimension above oracle cap");
  if (n % 2 != 0) return R(0);
  if (n == 0) return R(1);
  std::vector<int> free(n);
  for (int i = 0; i < n; ++i) free[i] = i;
  std::vector<std::pair<int, int>> arcs;
  R total(0);
  detail::for_each_pair_partition(
      free, arcs, [&](const std::vector<std::pair<int, int>>& m) {
        R term(1);
        for (auto [i, j] : m) {
          if (a.at(i, j) == 0) return;  // dead branch, skip the sign work
          term *= a.at(i, j);
        }
        if (detail::count_crossings(m) % 2 != 0) term = -term;
        total += term;
      });
  return total;
}

template <exact_ring R>
R pf_of_subset(const SkewArray<R>& a, const VertexSubset& s) {
  return pf_definition(a.principal_subarray(s));
}

/// Pfaffian of a word (a sequence of distinct ambient indices of even
/// length): sum over pair partitions of the word with the sign of the
/// permutation taking the word into the canonical pair sequence, entries read
/// skew-symmetrically. Odd-length words give 0; repeated letters are an
/// error.
template <exact_ring R>
R pf_word(const SkewArray<R>& a, std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("pf_word: repeated letter");
  if (word.size() % 2 != 0) return R(0);
  if (word.empty()) return R(1);
  if (static_cast<int>(word.size()) > kPfDefinitionMaxDim)
    throw std::invalid_argument("pf_word: word above oracle cap");

  std::vector<int> pos_in_word(a.size(), -1);
  for (std::size_t i = 0; i < word.size(); ++i) pos_in_word[word[i]] = int(i);

  std::vector<int> letters = sorted;  // ascending ambient order
  std::vector<std::pair<int, int>> arcs;
  R total(0);
  detail::for_each_pair_partition(
      letters, arcs, [&](const std::vector<std::pair<int, int>>& m) {
        // canonical representation: pairs ascending, sorted by first letter
        auto pairs = m;
        for (auto& p : pairs)
          if (p.first > p.second) std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
        R term(1);
        for (auto [x, y] : pairs) {
          if (a.entry(x, y) == 0) return;
          term *= a.entry(x, y);
        }
        std::vector<int> perm;
        perm.reserve(word.size());
        for (auto [x, y] : pairs) {
          perm.push_back(pos_in_word[x]);
          perm.push_back(pos_in_word[y]);
        }
        if (detail::count_inversions(perm) % 2 != 0) term = -term;
        total += term;
      });
  return total;
}

/// Label-based convenience overload.
template <exact_ring R>
R pf_word(const OrderedVertexSet& order, const SkewArray<R>& a,
          std::span<const std::string> word) {
  if (order.size() != a.size())
    throw std::invalid_argument("pf_word: order/array size mismatch");
  std::vector<int> idx;
  idx.reserve(word.size());
  for (const auto& l : word) idx.push_back(order.position(l));
  return pf_word(a, idx);
}

namespace detail {

template <exact_ring R>
std::vector<std::vector<Rat>> full_rational_matrix(const SkewArray<R>& a) {
  int n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat w = to_rational(a.at(i, j));
      m[i][j] = w;
      m[j][i] = -w;
    }
  return m;
}

/// Exact determinant by Gaussian elimination with first-nonzero pivoting.
inline Rat det_dense(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  Rat det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace detail

/// Fast exact Pfaffian by Gaussian-style pair elimination over rationals:
/// O(n^3), pivot swaps of rows/columns k <-> l flip the running sign, an
/// empty pivot column band means Pf = 0. Integer input is promoted internally
/// and demoted at the end (the result of an integer array is an integer).
template <exact_ring R>
R pf_eliminate(const SkewArray<R>& a) {
  int n = a.size();
  if (n % 2 != 0) return R(0);
  if (n == 0) return R(1);
  auto m = detail::full_rational_matrix(a);
  Rat result(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; k += 2) {
    int piv = -1;
    for (int j = k + 1; j < n; ++j)
      if (m[k][j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return R(0);
    if (piv != k + 1) {
      for (int t = 0; t < n; ++t) std::swap(m[piv][t], m[k + 1][t]);
      for (int t = 0; t < n; ++t) std::swap(m[t][piv], m[t][k + 1]);
      sign = -sign;
    }
    Rat p = m[k][k + 1];
    result *= p;
    for (int i = k + 2; i < n; ++i) {
      if (m[k][i] == 0) continue;
      Rat f = m[k][i] / p;
      for (int t = 0; t < n; ++t) m[i][t] -= f * m[k + 1][t];
      for (int t = 0; t < n; ++t) m[t][i] -= f * m[t][k + 1];
    }
  }
  if (sign < 0) result = -result;
  return from_rational<R>(result);
}

/// Exact determinant of the full skew-symmetric extension of a.
template <exact_ring R>
R det_skew(const SkewArray<R>& a) {
  if (a.size() == 0) return R(1);
  return from_rational<R>(detail::det_dense(detail::full_rational_matrix(a)));
}

/// Pfaffian of the complete bipartite graph between aSide and bSide, read off
/// a weight array over the ambient order. Every aSide index must precede
/// every bSide index. Equals (-1)^{C(n,2)} det(w(a_i,b_j)) when the sides
/// have equal size n, and 0 otherwise.
template <exact_ring R>
R pf_bipartite(const SkewArray<R>& a, const VertexSubset& a_side,
               const VertexSubset& b_side) {
  int m = a_side.size(), n = b_side.size();
  if (m != n) return R(0);
  if (n == 0) return R(1);
  if (a_side[m - 1] >= b_side[0])
    throw std::invalid_argument("pf_bipartite: sides must be consecutive");
  std::vector<std::vector<Rat>> mat(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mat[i][j] = to_rational(a.at(a_side[i], b_side[j]));
  Rat d = detail::det_dense(std::move(mat));
  if ((std::int64_t(n) * (n - 1) / 2) % 2 != 0) d = -d;
  return from_rational<R>(d);
}

/// Aggregated weight array of a graph: entry (i,j) is the sum of the weights
/// of all parallel edges joining v_i and v_j.
template <exact_ring R>
SkewArray<R> skew_from_graph(const OrderedGraph<R>& g) {
  SkewArray<R> a(g.n());
  for (const auto& e : g.edges()) {
    int i = std::min(e.u, e.v), j = std::max(e.u, e.v);
    a.at(i, j) += e.w;
  }
  return a;
}

/// Graph-level bipartite Pfaffian per the ambient order (a_1..a_m,b_1..b_n);
/// edges not running between the sides are ignored (zero weight).
template <exact_ring R>
R pf_bipartite(const VertexSubset& a_side, const VertexSubset& b_side,
               const OrderedGraph<R>& g) {
  auto a = skew_from_graph(g);
  SkewArray<R> masked(a.size());
  for (int i : a_side)
    for (int j : b_side) {
      int lo = std::min(i, j), hi = std::max(i, j);
      masked.at(lo, hi) = a.at(lo, hi);
    }
  return pf_bipartite(masked, a_side, b_side);
}

template <exact_ring R>
struct SemiBipartiteResult {
  R value;      // Pf of the semi-bipartite array
  R expansion;  // minor expansion over m-subsets of B
  bool pass;    // exact equality of the two
};

/// Pfaffian of the semi-bipartite graph (all aSide-internal entries zeroed)
/// together with its expansion
///   (-1)^m sum_{Y subset B, |Y|=m} (-1)^{SETSUM(Y,B)} Pf(B\Y) det(M_Y).
/// A mismatch is reported in the result, never silently dropped.
template <exact_ring R>
SemiBipartiteResult<R> pf_semibipartite(const SkewArray<R>& arr,
                                        const VertexSubset& a_side,
                                        const VertexSubset& b_side) {
  int m = a_side.size(), n = b_side.size();
  if (m > 0 && n > 0 && a_side[m - 1] >= b_side[0])
    throw std::invalid_argument("pf_semibipartite: sides must be consecutive");
  SkewArray<R> semi = arr;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) semi.at(a_side[i], a_side[j]) = R(0);
  R value = pf_definition(semi);

  R expansion(0);
  if (m <= n) {
    for_each_subset_of_size(b_side, m, [&](const VertexSubset& y) {
      R pf_rest = pf_of_subset(arr, set_minus(b_side, y));
      if (pf_rest == 0) return;
      std::vector<std::vector<Rat>> mat(m, std::vector<Rat>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          mat[i][j] = to_rational(arr.at(a_side[i], y[j]));
      R dety = from_rational<R>(detail::det_dense(std::move(mat)));
      R term = pf_rest * dety;
      if (setsum(y, b_side) % 2 != 0) term = -term;
      expansion += term;
    });
  }
  if (m % 2 != 0) expansion = -expansion;
  return {value, expansion, value == expansion};
}

template <exact_ring R>
SemiBipartiteResult<R> pf_semibipartite(const VertexSubset& a_side,
                                        const VertexSubset& b_side,
                                        const OrderedGraph<R>& g) {
  return pf_semibipartite(skew_from_graph(g), a_side, b_side);
}

}  // namespace pfcond
