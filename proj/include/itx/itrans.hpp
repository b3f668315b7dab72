#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itx/backend.hpp"
#include "itx/bigint.hpp"
#include "itx/lattice.hpp"
#include "itx/zeta.hpp"

namespace itx {

// The mutually inverse Pascal matrices of order n+1:
//   a[i][j] = C(j, i)                (binomial coefficient, 0 when j < i)
//   b[i][j] = (-1)^(i+j) * C(j, i)
// Both are upper triangular with unit diagonal; their product is the
// identity in either order. Entries fit a signed 64-bit integer for all
// supported orders (the largest is C(64, 32) ~ 1.8e18).
struct PascalPair {
  int n = 0;
  std::vector<std::vector<long long>> a;
  std::vector<std::vector<long long>> b;
};

// Exact product check with arbitrary-precision accumulators; row sums of
// products of 64-bit entries can overflow 64 bits long before the entries do.
inline bool verify_mutual_inverse(const PascalPair& p) {
  const int m = p.n + 1;
  for (const auto* mats : {&p.a, &p.b})
    if (static_cast<int>(mats->size()) != m) return false;
  for (int order = 0; order < 2; ++order) {
    const auto& l = order == 0 ? p.a : p.b;
    const auto& r = order == 0 ? p.b : p.a;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        BigInt acc = 0;
        for (int k = 0; k < m; ++k) acc += BigInt(l[i][k]) * r[k][j];
        if (acc != (i == j ? 1 : 0)) return false;
      }
    }
  }
  return true;
}

inline PascalPair pascal_matrices(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("pascal order must be between 0 and 64");
  const int m = n + 1;
  // C(j, i) by the additive recurrence; every intermediate is itself a
  // binomial coefficient, so nothing overflows.
  std::vector<std::vector<long long>> binom(m, std::vector<long long>(m, 0));
  for (int j = 0; j < m; ++j) {
    binom[j][0] = 1;
    for (int i = 1; i <= j; ++i)
      binom[j][i] = binom[j - 1][i - 1] + (i <= j - 1 ? binom[j - 1][i] : 0);
  }
  PascalPair p;
  p.n = n;
  p.a.assign(m, std::vector<long long>(m, 0));
  p.b.assign(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      p.a[i][j] = binom[j][i];
      p.b[i][j] = ((i + j) % 2 == 0 ? 1 : -1) * binom[j][i];
    }
  }
#ifndef NDEBUG
  if (!verify_mutual_inverse(p)) throw std::logic_error("pascal pair failed inverse check");
#endif
  return p;
}

// The full table of intersection-indexed sums for targets G: entry (j, Y)
// counts (in the ring) the members X of F with |X intersect Y| = j, each
// weighted by f(X). Rows run j = 0..ground; columns follow the target
// family's ascending order.
template <typename V>
struct IntersectionTable {
  SetFamily targets;
  int ground = 0;
  std::vector<V> values;  // (ground+1) * targets.size(), row-major by j

  const V& at(int j, std::size_t pos) const {
    const std::size_t idx = static_cast<std::size_t>(j) * targets.size() + pos;
    if (j < 0 || j > ground || pos >= targets.size() || idx >= values.size())
      throw std::out_of_range("intersection table index out of range");
    return values[idx];
  }
};

// Canonical output label for table entry (j, Y): "<j>:<elements>", where the
// elements render as in format_set, e.g. "2:[0 3]".
inline std::string intersection_output_label(int j, SubsetMask y) {
  return std::to_string(j) + ":" + format_set(y);
}

// Three-stage construction of the intersection table, written against the
// backend interface so the same code either emits a circuit or streams values.
//
//   stage 1  upward sums of f over the down-closure of F;
//   stage 2  for each cardinality class i of that closure, downward sums of
//            the class restricted to the down-closure of G, read at G — this
//            yields, for each Y, the auxiliary values
//              y_i(Y) = sum over X in F of f(X) * C(|X intersect Y|, i)
//            (each common subset of size i is counted once by the two sweeps);
//   stage 3  per target, invert the binomial mixing with the alternating
//            Pascal matrix: table(j, Y) = sum_i b[j][i] * y_i(Y).
//
// Only additions and multiplications by integer constants are used, so the
// construction is valid over any commutative ring.
template <EvalBackend B>
IntersectionTable<typename B::value_type> intersection_table(
    B& backend, const SetFamily& family, std::span<const typename B::value_type> f,
    const SetFamily& targets, int n) {
  using V = typename B::value_type;
  require_ground_size(n);
  if (!fits_ground(family, n) || !fits_ground(targets, n))
    throw std::invalid_argument("family does not fit the ground set");
  if (f.size() != family.size())
    throw std::invalid_argument("value count does not match family size");

  IntersectionTable<V> out;
  out.targets = targets;
  out.ground = n;
  // Recorded contract decision: an empty family on either side yields the
  // empty table (no value cells), not a zero-filled one.
  if (family.empty() || targets.empty()) return out;

  const std::size_t gsize = targets.size();

  // Stage 1.
  IndexedFunction<V> up = up_zeta_on_downclosure(backend, family, f, n);
  const SetFamily& dcf = up.domain;

  // Rank classes of the closure; ranks above the largest member of F are
  // empty and the Pascal mixing below is restricted accordingly.
  const int maxrank = dcf.max_set_size();
  std::vector<std::vector<std::size_t>> rank_positions(
      static_cast<std::size_t>(maxrank) + 1);
  for (std::size_t p = 0; p < dcf.size(); ++p)
    rank_positions[static_cast<std::size_t>(set_size(dcf.mask(p)))].push_back(p);

  // Stage 2.
  SweepPlan plan_g = make_sweep_plan(down_closure(targets), n);
  std::vector<std::size_t> target_pos(gsize);
  for (std::size_t i = 0; i < gsize; ++i)
    target_pos[i] = *plan_g.family.find(targets.mask(i));

  std::vector<std::vector<std::optional<V>>> y(static_cast<std::size_t>(maxrank) + 1);
  {
    SweepSlots<B> slots(plan_g.family.size());
    for (int i = 0; i <= maxrank; ++i) {
      if (rank_positions[static_cast<std::size_t>(i)].empty()) continue;
      std::fill(slots.begin(), slots.end(), std::nullopt);
      for (std::size_t p : rank_positions[static_cast<std::size_t>(i)])
        if (auto q = plan_g.family.find(dcf.mask(p))) slots[*q] = up.values[p];
      down_zeta_sweep(backend, plan_g, slots);
      auto& row = y[static_cast<std::size_t>(i)];
      row.resize(gsize);
      for (std::size_t t = 0; t < gsize; ++t) row[t] = slots[target_pos[t]];
    }
  }

  // Stage 3.
  PascalPair pascal = pascal_matrices(n);
  out.values.resize(static_cast<std::size_t>(n + 1) * gsize);
  for (std::size_t t = 0; t < gsize; ++t) {
    for (int j = 0; j <= n; ++j) {
      std::optional<V> acc;
      if (j <= maxrank) {
        for (int i = j; i <= maxrank; ++i) {
          const auto& yrow = y[static_cast<std::size_t>(i)];
          if (yrow.empty() || !yrow[t]) continue;
          const long long c = pascal.b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          if (c == 0) continue;
          V term = backend.mul(backend.const_int(c), *yrow[t]);
          acc = acc ? std::optional(backend.add(*acc, std::move(term))) : std::optional(std::move(term));
        }
      }
      out.values[static_cast<std::size_t>(j) * gsize + t] = acc ? std::move(*acc) : backend.zero();
    }
  }
  return out;
}

// Circuit form: inputs are the values of f in the family's ascending order;
// outputs are labeled intersection_output_label(j, Y), pushed in (j, then
// ascending-target) order. The returned table holds each entry's wire id.
inline std::pair<Circuit, IntersectionTable<GateId>> build_intersection_circuit(
    const SetFamily& family, const SetFamily& targets, int n) {
  Circuit circuit;
  CircuitBackend backend(circuit);
  std::vector<GateId> inputs;
  inputs.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) inputs.push_back(circuit.add_input());
  IntersectionTable<GateId> table =
      intersection_table(backend, family, std::span<const GateId>(inputs), targets, n);
  for (int j = 0; j <= table.ground; ++j)
    for (std::size_t t = 0; t < table.targets.size(); ++t)
      circuit.add_output(intersection_output_label(j, table.targets.mask(t)), table.at(j, t));
  return {std::move(circuit), std::move(table)};
}

// Direct evaluation over a ring, streaming through the same construction.
template <Ring R>
IntersectionTable<typename R::value_type> intersection_transform(
    const SetFamily& family, std::span<const typename R::value_type> f,
    const SetFamily& targets, int n, const R& ring) {
  DirectBackend<R> backend(ring);
  return intersection_table(backend, family, f, targets, n);
}

// Number of members of F disjoint from each target (the j = 0 row with all
// weights 1).
inline IndexedFunction<BigInt> count_disjoint(const SetFamily& family, const SetFamily& targets,
                                              int n) {
  IndexedFunction<BigInt> out;
  out.domain = targets;
  if (family.empty()) {  // nothing to count: zero members avoid every target
    require_ground_size(n);
    if (!fits_ground(targets, n))
      throw std::invalid_argument("family does not fit the ground set");
    out.values.assign(targets.size(), BigInt(0));
    return out;
  }
  BigIntRing ring;
  std::vector<BigInt> ones(family.size(), BigInt(1));
  auto table = intersection_transform(family, std::span<const BigInt>(ones), targets, n, ring);
  out.values.assign(table.values.begin(),
                    table.values.begin() + static_cast<std::ptrdiff_t>(targets.size()));
  return out;
}

// Number of members of F contained in each target: X subseteq Y exactly when
// X is disjoint from the complement of Y.
inline IndexedFunction<BigInt> count_subsets_of(const SetFamily& family, const SetFamily& targets,
                                                int n) {
  if (!fits_ground(targets, n)) throw std::invalid_argument("family does not fit the ground set");
  const SubsetMask full = full_mask(n);
  SetFamily ctargets = complement_family(targets, n);
  IndexedFunction<BigInt> disjoint = count_disjoint(family, ctargets, n);
  IndexedFunction<BigInt> out;
  out.domain = targets;
  out.values.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i)
    out.values.push_back(disjoint.values[*ctargets.find(targets.mask(i) ^ full)]);
  return out;
}

}  // namespace itx
