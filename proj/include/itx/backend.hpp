#pragma once

#include <concepts>
#include <optional>

#include "itx/circuit.hpp"
#include "itx/ring.hpp"

namespace itx {

// The two interchangeable ways transform constructions execute: emit gates
// into a Circuit (values are wire ids), or compute directly in a ring (values
// are ring elements). Transform code is written once against this interface;
// the structure of the emitted circuit is exactly the trace of the direct
// computation.
template <typename B>
concept EvalBackend = requires(B& b, const typename B::value_type& v) {
  typename B::value_type;
  { b.add(v, v) } -> std::same_as<typename B::value_type>;
  { b.mul(v, v) } -> std::same_as<typename B::value_type>;
  { b.const_int(0LL) } -> std::same_as<typename B::value_type>;
  { b.zero() } -> std::same_as<typename B::value_type>;
};

// Records every operation as a gate. zero() is the wire for structurally-zero
// results; all such results share one lazily created CONST 0 gate so trimmed
// instances don't pay a constant per empty output.
class CircuitBackend {
 public:
  using value_type = GateId;

  explicit CircuitBackend(Circuit& c) : circuit_(&c) {}

  GateId add(GateId l, GateId r) { return circuit_->add_add(l, r); }
  GateId mul(GateId l, GateId r) { return circuit_->add_mul(l, r); }
  GateId const_int(long long z) { return circuit_->add_const(z); }
  GateId zero() {
    if (!zero_gate_) zero_gate_ = circuit_->add_const(0);
    return *zero_gate_;
  }

 private:
  Circuit* circuit_;
  std::optional<GateId> zero_gate_;
};

// Computes in the ring immediately; nothing is materialized beyond the values
// themselves. This is the streaming mode used for large instances.
template <Ring R>
class DirectBackend {
 public:
  using value_type = typename R::value_type;

  explicit DirectBackend(const R& ring) : ring_(&ring) {}

  value_type add(const value_type& a, const value_type& b) { return ring_->add(a, b); }
  value_type mul(const value_type& a, const value_type& b) { return ring_->mul(a, b); }
  value_type const_int(long long z) { return ring_->from_integer(z); }
  value_type zero() { return ring_->zero(); }

 private:
  const R* ring_;
};

static_assert(EvalBackend<CircuitBackend>);
static_assert(EvalBackend<DirectBackend<BigIntRing>>);

}  // namespace itx
