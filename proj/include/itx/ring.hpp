#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

#include "itx/bigint.hpp"
#include "itx/polynomial.hpp"

namespace itx {

// Commutative ring with unity, presented as a small value-policy object whose
// methods are pure. from_integer is the canonical embedding z -> z * 1_R; it
// must accept negative arguments (the recovery step multiplies by signed
// constants).
template <typename R>
concept Ring = requires(const R r, const typename R::value_type& a,
                        const typename R::value_type& b) {
  typename R::value_type;
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.add(a, b) } -> std::same_as<typename R::value_type>;
  { r.sub(a, b) } -> std::same_as<typename R::value_type>;
  { r.mul(a, b) } -> std::same_as<typename R::value_type>;
  { r.from_integer(0LL) } -> std::same_as<typename R::value_type>;
  { r.equals(a, b) } -> std::convertible_to<bool>;
};

// Exact integers of unbounded size.
struct BigIntRing {
  using value_type = BigInt;
  value_type zero() const { return BigInt(0); }
  value_type one() const { return BigInt(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type from_integer(long long z) const { return BigInt(z); }
  bool equals(const value_type& a, const value_type& b) const { return a == b; }
};

// Integers modulo a fixed machine-word prime p. Elements are canonical
// residues in [0, p). The modulus must leave headroom for overflow-free
// addition, hence the 2^63 bound; products go through 128-bit arithmetic.
struct ModPrimeRing {
  using value_type = std::uint64_t;

  explicit ModPrimeRing(std::uint64_t prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    if (p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("modulus must be below 2^63");
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;  // safe: a, b < p < 2^63
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % p);
  }
  value_type from_integer(long long z) const {
    long long r = z % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<value_type>(r);
  }
  bool equals(value_type a, value_type b) const { return a == b; }

  std::uint64_t p;
};

// Polynomials in one variable over the exact integers; the ring used for
// counting by weight.
struct PolynomialRing {
  using value_type = WeightPolynomial;
  value_type zero() const { return WeightPolynomial(); }
  value_type one() const { return WeightPolynomial(1); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return poly_mul(a, b); }
  value_type from_integer(long long z) const { return WeightPolynomial(z); }
  bool equals(const value_type& a, const value_type& b) const { return a == b; }
};

static_assert(Ring<BigIntRing>);
static_assert(Ring<ModPrimeRing>);
static_assert(Ring<PolynomialRing>);

}  // namespace itx
