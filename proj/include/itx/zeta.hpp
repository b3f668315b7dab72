#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "itx/backend.hpp"
#include "itx/lattice.hpp"

namespace itx {

// A function on a set family: values[i] belongs to domain.mask(i).
template <typename V>
struct IndexedFunction {
  SetFamily domain;
  std::vector<V> values;
};

enum class ZetaKind { Up, Down };

// Precomputed neighbor positions for in-place sweeps over a down-closed
// family. For each element i and family position p:
//   with_bit[i*m + p]    = position of mask|{i}, or -1 (i already in mask, or
//                          the superset is outside the family)
//   without_bit[i*m + p] = position of mask\{i}, or -1 (i not in mask; for a
//                          down-closed family the subset itself is always
//                          present when i is)
// Tables are laid out element-major so one sweep round scans contiguously.
struct SweepPlan {
  SetFamily family;
  int ground = 0;
  std::vector<std::int32_t> with_bit;
  std::vector<std::int32_t> without_bit;
};

inline SweepPlan make_sweep_plan(SetFamily down_closed, int n) {
  require_ground_size(n);
  if (!fits_ground(down_closed, n))
    throw std::invalid_argument("family does not fit the ground set");
  const std::size_t m = down_closed.size();
  SweepPlan plan;
  plan.ground = n;
  plan.with_bit.assign(static_cast<std::size_t>(n) * m, -1);
  plan.without_bit.assign(static_cast<std::size_t>(n) * m, -1);
  for (std::size_t p = 0; p < m; ++p) {
    const SubsetMask mask = down_closed.mask(p);
    for (int i = 0; i < n; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (mask & bit) {
        auto q = down_closed.find(mask ^ bit);
        if (!q)
          throw std::invalid_argument("sweep plan requires a down-closed family");
        plan.without_bit[static_cast<std::size_t>(i) * m + p] = static_cast<std::int32_t>(*q);
      } else if (auto q = down_closed.find(mask | bit)) {
        plan.with_bit[static_cast<std::size_t>(i) * m + p] = static_cast<std::int32_t>(*q);
      }
    }
  }
  plan.family = std::move(down_closed);
  return plan;
}

// Working vector for a sweep: one slot per family position; an absent slot is
// a structural zero. Adding an absent summand forwards the present value
// without an add operation, so trimmed instances emit no padding gates.
template <EvalBackend B>
using SweepSlots = std::vector<std::optional<typename B::value_type>>;

// In-place upward accumulation: after the sweep, slot Y holds the sum of the
// initial values over all supersets of Y inside the family (Y included).
// One round per element i, updating exactly the positions without i from the
// position with i added, so round order makes the recursion well-founded.
template <EvalBackend B>
void up_zeta_sweep(B& backend, const SweepPlan& plan, SweepSlots<B>& slots) {
  const std::size_t m = plan.family.size();
  if (slots.size() != m) throw std::invalid_argument("slot count does not match sweep plan");
  for (int i = 0; i < plan.ground; ++i) {
    const std::int32_t* nb = plan.with_bit.data() + static_cast<std::size_t>(i) * m;
    for (std::size_t p = 0; p < m; ++p) {
      const std::int32_t q = nb[p];
      if (q < 0) continue;
      const auto& above = slots[static_cast<std::size_t>(q)];
      if (!above) continue;
      auto& here = slots[p];
      here = here ? std::optional(backend.add(*here, *above)) : above;
    }
  }
}

// In-place downward accumulation: after the sweep, slot Y holds the sum of
// the initial values over all subsets of Y (Y included).
template <EvalBackend B>
void down_zeta_sweep(B& backend, const SweepPlan& plan, SweepSlots<B>& slots) {
  const std::size_t m = plan.family.size();
  if (slots.size() != m) throw std::invalid_argument("slot count does not match sweep plan");
  for (int i = 0; i < plan.ground; ++i) {
    const std::int32_t* nb = plan.without_bit.data() + static_cast<std::size_t>(i) * m;
    for (std::size_t p = 0; p < m; ++p) {
      const std::int32_t q = nb[p];
      if (q < 0) continue;
      const auto& below = slots[static_cast<std::size_t>(q)];
      if (!below) continue;
      auto& here = slots[p];
      here = here ? std::optional(backend.add(*here, *below)) : below;
    }
  }
}

namespace detail {

inline void check_zeta_args(const SetFamily& family, std::size_t value_count, int n) {
  require_ground_size(n);
  if (!fits_ground(family, n)) throw std::invalid_argument("family does not fit the ground set");
  if (value_count != family.size())
    throw std::invalid_argument("value count does not match family size");
}

}  // namespace detail

// Upward-sum transform of f (given on family F) evaluated on every set of the
// down-closure of F: result value at Y is the sum of f(X) over X in F with
// Y subseteq X. Cost is proportional to n * |down_closure(F)| operations.
template <EvalBackend B>
IndexedFunction<typename B::value_type> up_zeta_on_downclosure(
    B& backend, const SetFamily& family, std::span<const typename B::value_type> f, int n) {
  detail::check_zeta_args(family, f.size(), n);
  SetFamily closure = down_closure(family);
  SweepPlan plan = make_sweep_plan(std::move(closure), n);
  SweepSlots<B> slots(plan.family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    slots[*plan.family.find(family.mask(i))] = f[i];
  up_zeta_sweep(backend, plan, slots);
  IndexedFunction<typename B::value_type> out;
  out.values.reserve(slots.size());
  for (auto& s : slots) out.values.push_back(s ? std::move(*s) : backend.zero());
  out.domain = std::move(plan.family);
  return out;
}

// Downward-sum transform of f (given on family F) evaluated on the target
// family G: result value at Y in G is the sum of f(X) over X in F with
// X subseteq Y. Members of F outside the down-closure of G cannot contribute
// and are dropped up front; cost is proportional to n * |down_closure(G)|.
template <EvalBackend B>
IndexedFunction<typename B::value_type> down_zeta_on_targets(
    B& backend, const SetFamily& family, std::span<const typename B::value_type> f,
    const SetFamily& targets, int n) {
  detail::check_zeta_args(family, f.size(), n);
  if (!fits_ground(targets, n)) throw std::invalid_argument("family does not fit the ground set");
  SetFamily closure = down_closure(targets);
  SweepPlan plan = make_sweep_plan(std::move(closure), n);
  SweepSlots<B> slots(plan.family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    if (auto p = plan.family.find(family.mask(i))) slots[*p] = f[i];
  down_zeta_sweep(backend, plan, slots);
  IndexedFunction<typename B::value_type> out;
  out.domain = targets;
  out.values.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    auto& s = slots[*plan.family.find(targets.mask(i))];
    out.values.push_back(s ? std::move(*s) : backend.zero());
  }
  return out;
}

// The remaining two directed variants, each in its advertised cost regime.
//
// Up kind — upward sums read at arbitrary targets G: any Y with a superset in
// F lies in down_closure(F) already, so the up-sweep result covers it and
// everything else is zero. Cost ~ n * (|down_closure(F)| + |G|).
//
// Down kind — downward sums at targets via complement duality: X subseteq Y
// iff complement(Y) subseteq complement(X), so the downward sum over F at Y
// equals the upward sum over complemented F at complement(Y). Cost
// ~ n * (|up_closure(F)| + |G|), since down_closure of the complements is the
// complement of the up-closure.
template <EvalBackend B>
IndexedFunction<typename B::value_type> zeta_by_complement(
    B& backend, ZetaKind kind, const SetFamily& family,
    std::span<const typename B::value_type> f, const SetFamily& targets, int n) {
  detail::check_zeta_args(family, f.size(), n);
  if (!fits_ground(targets, n)) throw std::invalid_argument("family does not fit the ground set");
  using V = typename B::value_type;
  IndexedFunction<V> out;
  out.domain = targets;
  out.values.reserve(targets.size());
  if (kind == ZetaKind::Up) {
    IndexedFunction<V> swept = up_zeta_on_downclosure(backend, family, f, n);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      auto p = swept.domain.find(targets.mask(i));
      out.values.push_back(p ? swept.values[*p] : backend.zero());
    }
    return out;
  }
  // Down kind: complement the inputs, reorder f to the complemented family's
  // ascending order, up-sweep, and read off at complemented targets.
  const SubsetMask full = full_mask(n);
  SetFamily cfamily = complement_family(family, n);
  std::vector<V> cf(family.size(), backend.zero());
  for (std::size_t i = 0; i < family.size(); ++i)
    cf[*cfamily.find(family.mask(i) ^ full)] = f[i];
  IndexedFunction<V> swept =
      up_zeta_on_downclosure(backend, cfamily, std::span<const V>(cf), n);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    auto p = swept.domain.find(targets.mask(i) ^ full);
    out.values.push_back(p ? swept.values[*p] : backend.zero());
  }
  return out;
}

}  // namespace itx
