#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "itx/bigint.hpp"

namespace itx {

// Dense univariate polynomial in z with exact integer coefficients, used to
// count objects by total weight: coeff(w) is the number (or ring value) of
// objects of weight w. Invariant: the zero polynomial is the empty coefficient
// vector; otherwise the leading (highest-index) coefficient is nonzero.
class WeightPolynomial {
 public:
  WeightPolynomial() = default;

  // Constant embedding z^0 * c. Intentionally implicit so integer literals
  // can be used where a polynomial is expected.
  WeightPolynomial(long long c) {
    if (c != 0) coeffs_.emplace_back(c);
  }
  explicit WeightPolynomial(BigInt c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }

  static WeightPolynomial monomial(int weight, BigInt c = BigInt(1)) {
    if (weight < 0) throw std::invalid_argument("monomial weight must be nonnegative");
    WeightPolynomial p;
    if (c != 0) {
      p.coeffs_.assign(static_cast<std::size_t>(weight) + 1, BigInt(0));
      p.coeffs_.back() = std::move(c);
    }
    return p;
  }

  // Adopt a dense coefficient buffer (index = weight), trimming high zeros.
  static WeightPolynomial from_coeffs(std::vector<BigInt> coeffs) {
    WeightPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt coeff(int weight) const {
    if (weight < 0 || static_cast<std::size_t>(weight) >= coeffs_.size()) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(weight)];
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  // Sum of all coefficients, i.e. the evaluation at z = 1. For a counting
  // polynomial this is the total object count ignoring weights.
  BigInt coefficient_sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs_) s += c;
    return s;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  WeightPolynomial& operator+=(const WeightPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  WeightPolynomial& operator-=(const WeightPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) {
    a += b;
    return a;
  }
  friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) {
    a -= b;
    return a;
  }

  friend bool operator==(const WeightPolynomial& a, const WeightPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const WeightPolynomial& a, const WeightPolynomial& b) {
    return !(a == b);
  }

  // Text form: space-separated "weight:coefficient" pairs in ascending weight
  // with zero terms omitted; the zero polynomial renders as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t w = 0; w < coeffs_.size(); ++w) {
      if (coeffs_[w] == 0) continue;
      if (!first) os << ' ';
      os << w << ':' << coeffs_[w];
      first = false;
    }
    return os.str();
  }

  static WeightPolynomial parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    std::vector<std::pair<int, BigInt>> terms;
    bool saw_zero_literal = false;
    while (is >> tok) {
      if (saw_zero_literal) throw std::runtime_error("polynomial: tokens after zero literal");
      if (tok == "0" && terms.empty()) {
        saw_zero_literal = true;
        continue;
      }
      std::size_t colon = tok.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
        throw std::runtime_error("polynomial: malformed term '" + tok + "'");
      int w = 0;
      try {
        std::size_t used = 0;
        w = std::stoi(tok.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::runtime_error("polynomial: bad weight in term '" + tok + "'");
      }
      if (w < 0) throw std::runtime_error("polynomial: negative weight in term '" + tok + "'");
      BigInt c;
      try {
        c = BigInt(tok.substr(colon + 1));
      } catch (const std::exception&) {
        throw std::runtime_error("polynomial: bad coefficient in term '" + tok + "'");
      }
      if (c == 0) throw std::runtime_error("polynomial: explicit zero term '" + tok + "'");
      if (!terms.empty() && terms.back().first >= w)
        throw std::runtime_error("polynomial: weights must be strictly ascending");
      terms.emplace_back(w, std::move(c));
    }
    if (saw_zero_literal) return WeightPolynomial();
    if (terms.empty()) throw std::runtime_error("polynomial: empty text");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(terms.back().first) + 1, BigInt(0));
    for (auto& [w, c] : terms) coeffs[static_cast<std::size_t>(w)] = std::move(c);
    return from_coeffs(std::move(coeffs));
  }

 private:
  std::vector<BigInt> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
};

inline WeightPolynomial poly_mul(const WeightPolynomial& a, const WeightPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return WeightPolynomial();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<BigInt> out(ca.size() + cb.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      out[i + j] += ca[i] * cb[j];
    }
  }
  return WeightPolynomial::from_coeffs(std::move(out));
}

inline WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
  return poly_mul(a, b);
}

}  // namespace itx
