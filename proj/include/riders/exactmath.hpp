#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace riders {

using Integer = mpz_class;
using Rational = mpq_class;

/// C(n, k); zero outside 0 <= k <= n. Rows up to a fixed size are memoized.
Integer binomial(std::int64_t n, std::int64_t k);

/// Unsigned Stirling number of the first kind c(n, k): permutations of n
/// elements with exactly k cycles. Backed by a triangular table grown on
/// demand and shared between threads.
Integer stirling_first_unsigned(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

Integer power(const Integer& base, std::int64_t exponent);

// One distinct part of a partition together with how often it occurs.
struct PartMultiplicity {
  std::int64_t part = 0;
  std::int64_t multiplicity = 0;

  friend bool operator==(const PartMultiplicity&, const PartMultiplicity&) = default;
};

// Parts are stored with strictly decreasing `part`.
struct IntegerPartition {
  std::vector<PartMultiplicity> parts;

  std::int64_t total() const;
  // Number of parts counted with multiplicity.
  std::int64_t length() const;

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
};

/// Every partition of q exactly once, in decreasing lexicographic order of the
/// part sequence: {4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}.
std::vector<IntegerPartition> partitions_of(std::int64_t q);

bool is_integral(const Rational& value);

// Throws InternalError when `value` is not an integer. `what` names the
// computation for the diagnostic.
Integer require_integral(const Rational& value, const std::string& what);

std::string to_string(const Integer& value);
// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& value);

// Dense univariate polynomial; index i holds the coefficient of x^i. The
// highest stored coefficient is never zero, so the zero polynomial has no
// coefficients at all.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Coeff> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  static Polynomial constant(const Coeff& value) { return Polynomial({value}); }

  // value + x
  static Polynomial shifted_x(const Coeff& value) { return Polynomial({value, Coeff(1)}); }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  Coeff coefficient(std::int64_t power) const {
    if (power < 0 || power >= static_cast<std::int64_t>(coeffs_.size())) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(power)];
  }

  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
  }

  // Schoolbook convolution.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    if constexpr (std::is_same_v<Coeff, mpq_class>) {
      for (auto& c : coeffs_) c.canonicalize();
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

template <class Coeff>
Polynomial<Coeff> poly_mul(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
  return a * b;
}

// Repeated squaring; a^0 is the constant 1 (also for a = 0).
template <class Coeff>
Polynomial<Coeff> poly_pow(Polynomial<Coeff> base, std::int64_t exponent) {
  auto result = Polynomial<Coeff>::constant(Coeff(1));
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

struct SamplePoint {
  std::int64_t abscissa = 0;
  Rational value;
};

/// The unique polynomial of degree < points.size() through every sample,
/// computed with Newton divided differences in exact rationals.
/// Throws InputError on an empty sample set or a repeated abscissa.
RatPolynomial interpolate(std::span<const SamplePoint> points);

/// (x+1)(x+2)...(x+s-1), expanded by direct multiplication. The coefficient of
/// x^j equals c(s, j+1).
IntPolynomial rising_factorial_coeffs(std::int64_t s);

}  // namespace riders
