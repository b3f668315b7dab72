#pragma once

#include <cmath>
#include <stdexcept>

#include "itx/bigint.hpp"
#include "itx/lattice.hpp"

namespace itx {

// Natural-log binary entropy H(p) = -p ln p - (1-p) ln(1-p), with the
// continuous extension H(0) = H(1) = 0.
inline double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("entropy argument must be in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
}

// Exact sum of C(n, i) for i = 0..k.
inline BigInt binomial_sum(int n, int k) {
  require_ground_size(n);
  if (k < 0 || k > n) throw std::invalid_argument("binomial sum bound out of range");
  BigInt c = 1;  // C(n, 0)
  BigInt s = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - i + 1) / i;
    s += c;
  }
  return s;
}

struct EntropyBound {
  int n = 0;
  int supports_up_to = 0;   // largest support size a half-walk needs
  double fraction = 0.0;    // supports_up_to / n
  double predicted = 0.0;   // e^{H(fraction) n} when fraction <= 1/2, else 2^n
  BigInt measured;          // exact count of sets of size <= supports_up_to
};

// Size of the set-family workspace for counting paths of the given length on
// n vertices: every support involved has at most ceil(len/2)+1 elements, so
// the workspace is the sets of at most that size. The entropy form
// e^{H(p) n} bounds the exact count whenever p <= 1/2; past that the trivial
// 2^n takes over (and at len = n-1 the workspace genuinely is everything).
inline EntropyBound entropy_bound(int n, int len) {
  require_ground_size(n);
  if (n < 1) throw std::invalid_argument("ground set must be nonempty");
  if (len < 0 || len > n - 1)
    throw std::invalid_argument("path length must be between 0 and n-1");
  EntropyBound b;
  b.n = n;
  b.supports_up_to = (len + 1) / 2 + 1;
  b.fraction = static_cast<double>(b.supports_up_to) / static_cast<double>(n);
  b.predicted = b.fraction <= 0.5 ? std::exp(binary_entropy(b.fraction) * n)
                                  : std::ldexp(1.0, n);
  b.measured = binomial_sum(n, b.supports_up_to);
  return b;
}

}  // namespace itx
