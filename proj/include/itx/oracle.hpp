#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "itx/graph.hpp"
#include "itx/itrans.hpp"
#include "itx/lattice.hpp"
#include "itx/polynomial.hpp"
#include "itx/ring.hpp"
#include "itx/zeta.hpp"

namespace itx {

// Literal-definition reference implementations. Everything here follows the
// defining sums or enumerates objects one by one, shares no machinery with
// the transform route, and is meant for cross-checking, not for speed.

// Table entry (j, Y): sum of f(X) over X in the family with |X intersect Y| = j.
template <Ring R>
IntersectionTable<typename R::value_type> brute_intersection_transform(
    const SetFamily& family, std::span<const typename R::value_type> f, const SetFamily& targets,
    int n, const R& ring) {
  require_ground_size(n);
  if (!fits_ground(family, n) || !fits_ground(targets, n))
    throw std::invalid_argument("family does not fit the ground set");
  if (f.size() != family.size())
    throw std::invalid_argument("value count does not match family size");
  IntersectionTable<typename R::value_type> out;
  out.targets = targets;
  out.ground = n;
  // Mirror the transform's recorded edge-case contract: either side empty
  // yields the empty table.
  if (family.empty() || targets.empty()) return out;
  out.values.assign(static_cast<std::size_t>(n + 1) * targets.size(), ring.zero());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const SubsetMask y = targets.mask(t);
    for (std::size_t x = 0; x < family.size(); ++x) {
      const int j = set_size(family.mask(x) & y);
      auto& cell = out.values[static_cast<std::size_t>(j) * targets.size() + t];
      cell = ring.add(cell, f[x]);
    }
  }
  return out;
}

// Directed-sum transforms by their defining double loop.
template <Ring R>
IndexedFunction<typename R::value_type> brute_zeta(ZetaKind kind, const SetFamily& family,
                                                   std::span<const typename R::value_type> f,
                                                   const SetFamily& targets, int n,
                                                   const R& ring) {
  require_ground_size(n);
  if (!fits_ground(family, n) || !fits_ground(targets, n))
    throw std::invalid_argument("family does not fit the ground set");
  if (f.size() != family.size())
    throw std::invalid_argument("value count does not match family size");
  IndexedFunction<typename R::value_type> out;
  out.domain = targets;
  out.values.assign(targets.size(), ring.zero());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const SubsetMask y = targets.mask(t);
    for (std::size_t x = 0; x < family.size(); ++x) {
      const SubsetMask m = family.mask(x);
      const bool take = kind == ZetaKind::Up ? (y & m) == y : (m & y) == m;
      if (take) out.values[t] = ring.add(out.values[t], f[x]);
    }
  }
  return out;
}

namespace detail {

inline void brute_paths_dfs(const WeightedDigraph& d,
                            const std::vector<std::vector<std::pair<int, int>>>& out_edges,
                            int target, int cur, SubsetMask visited, int length, int weight,
                            int max_length, std::vector<WeightPolynomial>& acc) {
  if (cur == target) acc[static_cast<std::size_t>(length)] += WeightPolynomial::monomial(weight);
  if (length == max_length) return;
  for (const auto& [head, w] : out_edges[static_cast<std::size_t>(cur)]) {
    if (visited >> head & 1u) continue;
    brute_paths_dfs(d, out_edges, target, head, visited | (SubsetMask{1} << head), length + 1,
                    weight + w, max_length, acc);
  }
}

inline std::vector<std::vector<std::pair<int, int>>> out_edge_lists(const WeightedDigraph& d) {
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(d.n));
  for (const Edge& e : d.edges) out[static_cast<std::size_t>(e.tail)].emplace_back(e.head, e.weight);
  return out;
}

}  // namespace detail

// One polynomial per length 0..n-1: entry len counts the simple paths from s
// to t with exactly len edges, by total weight, found by exhaustive
// depth-first enumeration.
inline std::vector<WeightPolynomial> brute_count_paths_all_lengths(const WeightedDigraph& d,
                                                                   int s, int t) {
  validate_digraph(d);
  if (s < 0 || s >= d.n || t < 0 || t >= d.n)
    throw std::invalid_argument("path endpoint out of range");
  std::vector<WeightPolynomial> acc(static_cast<std::size_t>(d.n));
  auto out_edges = detail::out_edge_lists(d);
  detail::brute_paths_dfs(d, out_edges, t, s, SubsetMask{1} << s, 0, 0, d.n - 1, acc);
  return acc;
}

inline WeightPolynomial brute_count_paths(const WeightedDigraph& d, int s, int t, int len) {
  validate_digraph(d);
  if (s < 0 || s >= d.n || t < 0 || t >= d.n)
    throw std::invalid_argument("path endpoint out of range");
  if (len < 0 || len > d.n - 1)
    throw std::invalid_argument("path length must be between 0 and n-1");
  std::vector<WeightPolynomial> acc(static_cast<std::size_t>(d.n));
  auto out_edges = detail::out_edge_lists(d);
  detail::brute_paths_dfs(d, out_edges, t, s, SubsetMask{1} << s, 0, 0, len, acc);
  return acc[static_cast<std::size_t>(len)];
}

namespace detail {

inline void brute_cycles_dfs(const std::vector<std::vector<std::pair<int, int>>>& out_edges,
                             int anchor, int cur, SubsetMask visited, int length, int weight,
                             int target_length, WeightPolynomial& acc) {
  if (length == target_length - 1) {
    // Close with every edge back to the anchor.
    for (const auto& [head, w] : out_edges[static_cast<std::size_t>(cur)])
      if (head == anchor) acc += WeightPolynomial::monomial(weight + w);
    return;
  }
  for (const auto& [head, w] : out_edges[static_cast<std::size_t>(cur)]) {
    if (head <= anchor || (visited >> head & 1u)) continue;
    brute_cycles_dfs(out_edges, anchor, head, visited | (SubsetMask{1} << head), length + 1,
                     weight + w, target_length, acc);
  }
}

}  // namespace detail

// Counts simple directed cycles with exactly len edges by enumerating the
// edge sequence from each cycle's smallest vertex.
inline WeightPolynomial brute_count_cycles(const WeightedDigraph& d, int len) {
  validate_digraph(d);
  if (len < 1 || len > d.n) throw std::invalid_argument("cycle length must be between 1 and n");
  auto out_edges = detail::out_edge_lists(d);
  WeightPolynomial acc;
  for (int v = 0; v < d.n; ++v)
    detail::brute_cycles_dfs(out_edges, v, v, SubsetMask{1} << v, 0, 0, len, acc);
  return acc;
}

}  // namespace itx
