#pragma once

// Shared helpers for the test suites: deterministic random instance
// generators and small graph constructors. Every generator takes the RNG by
// reference so suites control their seeds explicitly.

#include <random>
#include <vector>

#include "itx/itx.hpp"

namespace testsupport {

// Random family of up to max_members distinct subsets of {0..n-1} (duplicates
// collapse in the SetFamily constructor, so the result may be smaller).
template <class Rng>
inline itx::SetFamily random_family(Rng& rng, int n, int max_members) {
  std::uniform_int_distribution<int> count_dist(1, max_members);
  const int count = count_dist(rng);
  const itx::SubsetMask full = itx::full_mask(n);
  std::uniform_int_distribution<itx::SubsetMask> mask_dist(0, full);
  std::vector<itx::SubsetMask> masks;
  masks.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) masks.push_back(mask_dist(rng) & full);
  return itx::SetFamily(std::move(masks));
}

template <class Rng>
inline std::vector<long long> random_ints(Rng& rng, std::size_t count, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<long long> out(count);
  for (auto& v : out) v = dist(rng);
  return out;
}

// Random digraph: each ordered pair (u, v), u != v, gets an edge with the
// given probability; weights uniform in {0..max_weight}.
template <class Rng>
inline itx::WeightedDigraph random_digraph(Rng& rng, int n, double density, int max_weight) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(0, max_weight);
  itx::WeightedDigraph d;
  d.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng) < density) d.edges.push_back(itx::Edge{u, v, weight(rng)});
  return d;
}

// Random sparse digraph with exactly m distinct non-loop edges.
template <class Rng>
inline itx::WeightedDigraph random_sparse_digraph(Rng& rng, int n, int m, int max_weight) {
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> weight(0, max_weight);
  itx::WeightedDigraph d;
  d.n = n;
  std::vector<char> used(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  while (static_cast<int>(d.edges.size()) < m) {
    const int u = vertex(rng);
    const int v = vertex(rng);
    if (u == v) continue;
    auto& flag = used[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(v)];
    if (flag) continue;
    flag = 1;
    d.edges.push_back(itx::Edge{u, v, weight(rng)});
  }
  return d;
}

// Complete digraph: both directions of every pair, fixed weight.
inline itx::WeightedDigraph complete_digraph(int n, int w = 0) {
  itx::WeightedDigraph d;
  d.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) d.edges.push_back(itx::Edge{u, v, w});
  return d;
}

// Directed chain 0 -> 1 -> ... -> n-1 with per-edge weights (default all 0).
inline itx::WeightedDigraph chain_digraph(int n, const std::vector<int>& weights = {}) {
  itx::WeightedDigraph d;
  d.n = n;
  for (int i = 0; i + 1 < n; ++i)
    d.edges.push_back(itx::Edge{i, i + 1, i < static_cast<int>(weights.size()) ? weights[i] : 0});
  return d;
}

}  // namespace testsupport
