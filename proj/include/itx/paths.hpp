#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "itx/backend.hpp"
#include "itx/graph.hpp"
#include "itx/itrans.hpp"
#include "itx/lattice.hpp"
#include "itx/polynomial.hpp"
#include "itx/ring.hpp"
#include "itx/zeta.hpp"

namespace itx {

// Counting polynomial for paths: coeff(w) is the number of simple paths of
// the requested length with total edge weight w.
using PathCount = WeightPolynomial;

// Edge generating polynomials per ordered vertex pair: between(a, v) sums
// z^weight over the parallel edges a -> v.
class EdgePolyTable {
 public:
  explicit EdgePolyTable(const WeightedDigraph& d)
      : n_(d.n), table_(static_cast<std::size_t>(d.n) * static_cast<std::size_t>(d.n)),
        heads_(static_cast<std::size_t>(d.n)) {
    for (const Edge& e : d.edges)
      table_[idx(e.tail, e.head)] += WeightPolynomial::monomial(e.weight);
    for (int a = 0; a < n_; ++a)
      for (int v = 0; v < n_; ++v)
        if (!table_[idx(a, v)].is_zero()) heads_[static_cast<std::size_t>(a)].push_back(v);
  }

  const WeightPolynomial& between(int a, int v) const { return table_[idx(a, v)]; }
  const std::vector<int>& heads(int a) const { return heads_[static_cast<std::size_t>(a)]; }

 private:
  int n_;
  std::vector<WeightPolynomial> table_;
  std::vector<std::vector<int>> heads_;

  std::size_t idx(int a, int v) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
};

// Level-by-level table of simple-walk counting polynomials from one source:
// levels[k] maps (support S, endpoint a) — packed into one key, |S| = k,
// source in S, a in S — to the polynomial counting simple walks from the
// source to a with vertex set exactly S, by total weight.
struct SupportDPTable {
  int source = 0;
  int kmax = 0;
  std::vector<std::unordered_map<std::uint64_t, WeightPolynomial>> levels;

  static std::uint64_t key(SubsetMask support, int endpoint) {
    return (static_cast<std::uint64_t>(support) << 6) | static_cast<std::uint64_t>(endpoint);
  }
  static SubsetMask key_support(std::uint64_t k) { return static_cast<SubsetMask>(k >> 6); }
  static int key_endpoint(std::uint64_t k) { return static_cast<int>(k & 63u); }

  const WeightPolynomial* find(SubsetMask support, int endpoint) const {
    const int k = set_size(support);
    if (k < 1 || k > kmax) return nullptr;
    const auto& lvl = levels[static_cast<std::size_t>(k)];
    auto it = lvl.find(key(support, endpoint));
    return it == lvl.end() ? nullptr : &it->second;
  }
};

// Forward dynamic program over supports: the base level is the source alone,
// and each level extends every walk by one edge to a vertex outside the
// current support. Support size equals walk length + 1 throughout, which is
// exactly what makes every counted walk simple.
inline SupportDPTable support_walk_dp(const WeightedDigraph& d, int source, int kmax) {
  validate_digraph(d);
  if (source < 0 || source >= d.n) throw std::invalid_argument("source vertex out of range");
  if (kmax < 1 || kmax > d.n) throw std::invalid_argument("support size bound out of range");
  SupportDPTable t;
  t.source = source;
  t.kmax = kmax;
  t.levels.resize(static_cast<std::size_t>(kmax) + 1);
  t.levels[1].emplace(SupportDPTable::key(SubsetMask{1} << source, source), WeightPolynomial(1));
  EdgePolyTable edges(d);
  for (int k = 1; k < kmax; ++k) {
    auto& cur = t.levels[static_cast<std::size_t>(k)];
    auto& nxt = t.levels[static_cast<std::size_t>(k) + 1];
    for (const auto& [packed, poly] : cur) {
      const SubsetMask support = SupportDPTable::key_support(packed);
      const int a = SupportDPTable::key_endpoint(packed);
      for (int v : edges.heads(a)) {
        if (support >> v & 1u) continue;
        nxt[SupportDPTable::key(support | (SubsetMask{1} << v), v)] +=
            poly_mul(poly, edges.between(a, v));
      }
    }
  }
  return t;
}

namespace detail {

inline void check_path_query(const WeightedDigraph& d, int s, int t, int len) {
  validate_digraph(d);
  if (s < 0 || s >= d.n || t < 0 || t >= d.n)
    throw std::invalid_argument("path endpoint out of range");
  if (len < 0 || len > d.n - 1)
    throw std::invalid_argument("path length must be between 0 and n-1");
}

}  // namespace detail

// Reference-style streaming count: runs the support dynamic program all the
// way to level len+1, keeping only one level alive at a time, and sums the
// entries that end at t. Exact and independent of the transform route below.
inline PathCount count_paths_by_support_dp(const WeightedDigraph& d, int s, int t, int len) {
  detail::check_path_query(d, s, t, len);
  EdgePolyTable edges(d);
  std::unordered_map<std::uint64_t, WeightPolynomial> level, next;
  level.emplace(SupportDPTable::key(SubsetMask{1} << s, s), WeightPolynomial(1));
  for (int step = 0; step < len; ++step) {
    next.clear();
    for (const auto& [packed, poly] : level) {
      const SubsetMask support = SupportDPTable::key_support(packed);
      const int a = SupportDPTable::key_endpoint(packed);
      for (int v : edges.heads(a)) {
        if (support >> v & 1u) continue;
        next[SupportDPTable::key(support | (SubsetMask{1} << v), v)] +=
            poly_mul(poly, edges.between(a, v));
      }
    }
    level.swap(next);
  }
  PathCount total;
  for (const auto& [packed, poly] : level)
    if (SupportDPTable::key_endpoint(packed) == t) total += poly;
  return total;
}

// Counts simple paths from s to t with exactly len edges, by total weight.
//
// A path of length len splits at its middle vertex into a prefix of
// floor(len/2) edges and a suffix of ceil(len/2) edges; the two halves are
// simple walks whose supports share exactly the junction vertex. So with
//   p_a(S) = walks s -> a, support S, |S| = floor(len/2)+1   (forward DP)
//   q_a(T) = walks a -> t, support T, |T| = ceil(len/2)+1    (reverse DP)
// the answer is sum over a, S of p_a(S) * (intersection-indexed sum of q_a at
// S for intersection size exactly 1). That inner sum is one row of the
// intersection table of q_a — computed here per junction vertex in streaming
// mode, with sweep plans shared across junctions. Any common vertex of S and
// T other than the junction would make the glued walk non-simple, and
// |S intersect T| = 1 is precisely what rules that out (the junction itself
// always lies in both).
inline PathCount count_paths_by_weight(const WeightedDigraph& d, int s, int t, int len) {
  detail::check_path_query(d, s, t, len);
  const int n = d.n;
  const int kp = len / 2 + 1;
  const int kq = (len + 1) / 2 + 1;

  SupportDPTable fwd = support_walk_dp(d, s, kp);
  SupportDPTable bwd = support_walk_dp(reversed(d), t, kq);
  const auto& plevel = fwd.levels[static_cast<std::size_t>(kp)];
  const auto& qlevel = bwd.levels[static_cast<std::size_t>(kq)];
  if (plevel.empty() || qlevel.empty()) return PathCount();

  // Group both boundary levels by endpoint, in deterministic (mask) order.
  using Entry = std::pair<SubsetMask, const WeightPolynomial*>;
  std::vector<std::vector<Entry>> p_at(static_cast<std::size_t>(n));
  std::vector<std::vector<Entry>> q_at(static_cast<std::size_t>(n));
  for (const auto& [packed, poly] : plevel)
    p_at[static_cast<std::size_t>(SupportDPTable::key_endpoint(packed))].emplace_back(
        SupportDPTable::key_support(packed), &poly);
  for (const auto& [packed, poly] : qlevel)
    q_at[static_cast<std::size_t>(SupportDPTable::key_endpoint(packed))].emplace_back(
        SupportDPTable::key_support(packed), &poly);
  for (auto* side : {&p_at, &q_at})
    for (auto& v : *side)
      std::sort(v.begin(), v.end(),
                [](const Entry& x, const Entry& y) { return x.first < y.first; });

  // Shared sweep scaffolding: suffix supports live among the kq-subsets,
  // prefix supports among the kp-subsets.
  SweepPlan plan_f = make_sweep_plan(down_closure(all_k_subsets(n, kq)), n);
  SweepPlan plan_g = make_sweep_plan(down_closure(all_k_subsets(n, kp)), n);
  const SetFamily& dcf = plan_f.family;
  const SetFamily& dcg = plan_g.family;
  std::vector<std::vector<std::size_t>> rank_positions(static_cast<std::size_t>(kq) + 1);
  for (std::size_t p = 0; p < dcf.size(); ++p)
    rank_positions[static_cast<std::size_t>(set_size(dcf.mask(p)))].push_back(p);
  PascalPair pascal = pascal_matrices(kq);

  PolynomialRing ring;
  DirectBackend<PolynomialRing> backend(ring);
  SweepSlots<DirectBackend<PolynomialRing>> slots_f(dcf.size()), slots_g(dcg.size());

  PathCount total;
  for (int a = 0; a < n; ++a) {
    const auto& qs = q_at[static_cast<std::size_t>(a)];
    const auto& ps = p_at[static_cast<std::size_t>(a)];
    if (qs.empty() || ps.empty()) continue;

    // Upward sums of this junction's suffix-walk polynomials.
    std::fill(slots_f.begin(), slots_f.end(), std::nullopt);
    for (const auto& [mask, poly] : qs) slots_f[*dcf.find(mask)] = *poly;
    up_zeta_sweep(backend, plan_f, slots_f);

    // Ranked downward sums, read off at the prefix supports of this junction.
    const std::size_t m = ps.size();
    std::vector<std::size_t> ps_pos(m);
    for (std::size_t i = 0; i < m; ++i) ps_pos[i] = *dcg.find(ps[i].first);
    std::vector<std::vector<std::optional<WeightPolynomial>>> y(
        static_cast<std::size_t>(kq) + 1);
    for (int i = 1; i <= kq; ++i) {
      const auto& bucket = rank_positions[static_cast<std::size_t>(i)];
      if (bucket.empty()) continue;
      std::fill(slots_g.begin(), slots_g.end(), std::nullopt);
      bool any = false;
      for (std::size_t p : bucket) {
        if (!slots_f[p]) continue;
        if (auto q = dcg.find(dcf.mask(p))) {
          slots_g[*q] = slots_f[p];
          any = true;
        }
      }
      if (!any) continue;
      down_zeta_sweep(backend, plan_g, slots_g);
      auto& row = y[static_cast<std::size_t>(i)];
      row.resize(m);
      for (std::size_t idx = 0; idx < m; ++idx) row[idx] = std::move(slots_g[ps_pos[idx]]);
    }

    // Glue: the intersection-size-1 row is the alternating-Pascal mix of the
    // ranked sums, then each prefix polynomial multiplies its own entry.
    for (std::size_t idx = 0; idx < m; ++idx) {
      std::optional<WeightPolynomial> acc;
      for (int i = 1; i <= kq; ++i) {
        const auto& row = y[static_cast<std::size_t>(i)];
        if (row.empty() || !row[idx]) continue;
        const long long c = pascal.b[1][static_cast<std::size_t>(i)];
        WeightPolynomial term = backend.mul(backend.const_int(c), *row[idx]);
        acc = acc ? std::optional(backend.add(*acc, std::move(term)))
                  : std::optional(std::move(term));
      }
      if (acc && !acc->is_zero()) total += poly_mul(*ps[idx].second, *acc);
    }
  }
  return total;
}

// Counts simple directed cycles with exactly len edges, by total weight. Each
// cycle is counted once, anchored at its smallest vertex: restrict to the
// vertices >= v, count paths from v to each in-neighbor u of v, and close
// with the u -> v edges. Length-1 cycles are the self-loops (the path factor
// degenerates to the empty path at v).
inline WeightPolynomial count_cycles_by_weight(const WeightedDigraph& d, int len) {
  validate_digraph(d);
  if (len < 1 || len > d.n) throw std::invalid_argument("cycle length must be between 1 and n");
  WeightPolynomial total;
  for (int v = 0; v + len <= d.n; ++v) {
    const SubsetMask keep = full_mask(d.n) & ~full_mask(v);
    std::vector<int> old_of_new;
    WeightedDigraph sub = induced_subgraph(d, keep, old_of_new);
    // v is vertex 0 of the subgraph. Closing-edge polynomials by tail:
    std::vector<WeightPolynomial> closer(static_cast<std::size_t>(sub.n));
    for (const Edge& e : sub.edges)
      if (e.head == 0) closer[static_cast<std::size_t>(e.tail)] += WeightPolynomial::monomial(e.weight);
    for (int u = 0; u < sub.n; ++u) {
      if (closer[static_cast<std::size_t>(u)].is_zero()) continue;
      total += poly_mul(count_paths_by_weight(sub, 0, u, len - 1),
                        closer[static_cast<std::size_t>(u)]);
    }
  }
  return total;
}

// Extracts one simple path from s to t with exactly len edges and total
// weight exactly `weight`, if any exists: fix the first edge, re-count in the
// graph without s, and keep any choice whose residual count is nonzero.
// Returns the vertex sequence (len+1 vertices), or nullopt when no such path
// exists. Counting nonnegative objects means a nonzero residual coefficient
// is a certificate that the prefix extends.
inline std::optional<std::vector<int>> reconstruct_path(const WeightedDigraph& d, int s, int t,
                                                        int len, long long weight) {
  detail::check_path_query(d, s, t, len);
  auto has_weight = [](const PathCount& g, long long w) {
    return w >= 0 && w <= g.degree() && g.coeff(static_cast<int>(w)) != 0;
  };
  if (!has_weight(count_paths_by_weight(d, s, t, len), weight)) return std::nullopt;

  std::vector<int> path{s};
  WeightedDigraph cur = d;
  std::vector<int> label(static_cast<std::size_t>(d.n));
  std::iota(label.begin(), label.end(), 0);
  int curs = s;
  int curt = t;
  long long remw = weight;
  for (int reml = len; reml > 0; --reml) {
    // Remove the current vertex; ids above it shift down by one.
    std::vector<int> old_of_new;
    WeightedDigraph nxt =
        induced_subgraph(cur, full_mask(cur.n) ^ (SubsetMask{1} << curs), old_of_new);
    // Candidate first steps in deterministic order, duplicates collapsed
    // (parallel edges with equal weight leave the same residual query).
    std::vector<std::pair<int, int>> cands;
    for (const Edge& e : cur.edges)
      if (e.tail == curs && e.head != curs && e.weight <= remw)
        cands.emplace_back(e.head, e.weight);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    bool advanced = false;
    for (const auto& [h, we] : cands) {
      const int h2 = h > curs ? h - 1 : h;
      const int t2 = curt > curs ? curt - 1 : curt;
      if (has_weight(count_paths_by_weight(nxt, h2, t2, reml - 1), remw - we)) {
        path.push_back(label[static_cast<std::size_t>(h)]);
        std::vector<int> nlabel(old_of_new.size());
        for (std::size_t i = 0; i < old_of_new.size(); ++i)
          nlabel[i] = label[static_cast<std::size_t>(old_of_new[i])];
        label = std::move(nlabel);
        cur = std::move(nxt);
        curs = h2;
        curt = t2;
        remw -= we;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;  // cannot happen if the counts are consistent
  }
  return path;
}

}  // namespace itx
