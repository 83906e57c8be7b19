#pragma once

// Integer polynomials and the sequences that count spanning trees of fans
// and wheels: Morgan-Voyce B_n, the wheel family W_n, the companion C_n,
// Fibonacci and Lucas numbers and polynomials, and two triangular arrays.

#include <cstddef>
#include <string>
#include <vector>

#include "kirchhoff/exact.hpp"

namespace kirchhoff {

/// Polynomial with BigInt coefficients in ascending degree. The coefficient
/// vector never ends in a zero; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  static IntPolynomial constant(const BigInt& c);
  /// The monomial x^k.
  static IntPolynomial monomial(std::size_t k);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  BigInt coefficient(std::size_t k) const;
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// P(x^k).
  IntPolynomial substitute_power(std::size_t k) const;

  bool operator==(const IntPolynomial&) const = default;

  /// e.g. "3 + 4x + x^2".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const BigInt& c, const IntPolynomial& p);

/// Horner evaluation.
Rational eval(const IntPolynomial& p, const Rational& x);

BigInt binomial(long n, long k);

/// B_0 = 1, B_1 = 2 + x, B_n = (x + 2) B_{n-1} - B_{n-2}.
IntPolynomial morgan_voyce(std::size_t n);
/// W_0 = 1, W_1 = 4 + x, W_n = (x + 2) W_{n-1} - W_{n-2} + 2.
IntPolynomial w_poly(std::size_t n);
/// C_0 = 2, C_1 = 2 + x, C_n = (x + 2) C_{n-1} - C_{n-2}.
IntPolynomial companion_poly(std::size_t n);

/// Coefficient of x^k in B_n: C(n + k + 1, n - k).
BigInt morgan_voyce_coefficient(std::size_t n, std::size_t k);
/// Coefficient of x^k in W_n: (2n + 2)/(n + 2 + k) C(n + 2 + k, n - k).
/// The division is exact and asserted.
BigInt w_coefficient(std::size_t n, std::size_t k);

BigInt fibonacci(std::size_t n);
BigInt lucas(std::size_t n);
/// F_0 = 0, F_1 = 1, F_n = x F_{n-1} + F_{n-2}.
IntPolynomial fibonacci_poly(std::size_t n);
/// L_0 = 2, L_1 = x, L_n = x L_{n-1} + L_{n-2}.
IntPolynomial lucas_poly(std::size_t n);

/// T(0,0) = 1, T(n,k) = T(n-1,k-1) + 2T(n-1,k) - T(n-2,k); zero outside
/// 0 <= k <= n. Row n holds the coefficients of B_n.
BigInt triangular_fan(long n, long k);

/// Row n holds the coefficients of W_n: 1 / 4,1 / 9,6,1 / 16,20,8,1.
/// Built from the array U with U(n,0) = 1, U(n,n) = 2 (n > 0), U(0,0) = 1 and
/// U(n,k) = U(n-1,k-1) + sum_{i=0..k} U(n-1-i, k-i) for 0 < k < n, read as
/// U(n+1, n-k).
BigInt triangular_wheel(long n, long k);

/// The array U above.
BigInt wheel_array(long n, long k);

}  // namespace kirchhoff
