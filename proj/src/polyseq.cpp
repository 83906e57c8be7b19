#include "kirchhoff/polyseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace kirchhoff {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(std::size_t k) {
  std::vector<BigInt> c(k + 1, 0);
  c[k] = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitute_power needs k >= 1");
  if (is_zero()) return {};
  std::vector<BigInt> c((coeffs_.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * k] = coeffs_[i];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += magnitude.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + BigInt(-1) * b;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) {
  std::vector<BigInt> out = p.coefficients();
  for (auto& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

Rational eval(const IntPolynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

const IntPolynomial& x_plus_two() {
  static const IntPolynomial p({2, 1});
  return p;
}

// P_n = (x + 2) P_{n-1} - P_{n-2} + shift, from the first two terms.
IntPolynomial chebyshev_like(std::size_t n, IntPolynomial p0, IntPolynomial p1, const BigInt& shift) {
  if (n == 0) return p0;
  const IntPolynomial extra = IntPolynomial::constant(shift);
  for (std::size_t i = 2; i <= n; ++i) {
    IntPolynomial next = x_plus_two() * p1 - p0 + extra;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

// F-type recurrence P_n = x P_{n-1} + P_{n-2}.
IntPolynomial fibonacci_like(std::size_t n, IntPolynomial p0, IntPolynomial p1) {
  if (n == 0) return p0;
  const IntPolynomial x = IntPolynomial::monomial(1);
  for (std::size_t i = 2; i <= n; ++i) {
    IntPolynomial next = x * p1 + p0;
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

}  // namespace

IntPolynomial morgan_voyce(std::size_t n) {
  return chebyshev_like(n, IntPolynomial({1}), IntPolynomial({2, 1}), 0);
}

IntPolynomial w_poly(std::size_t n) {
  return chebyshev_like(n, IntPolynomial({1}), IntPolynomial({4, 1}), 2);
}

IntPolynomial companion_poly(std::size_t n) {
  return chebyshev_like(n, IntPolynomial({2}), IntPolynomial({2, 1}), 0);
}

BigInt morgan_voyce_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  const long ln = static_cast<long>(n);
  const long lk = static_cast<long>(k);
  return binomial(ln + lk + 1, ln - lk);
}

BigInt w_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  const long ln = static_cast<long>(n);
  const long lk = static_cast<long>(k);
  const BigInt numerator = BigInt(2 * ln + 2) * binomial(ln + 2 + lk, ln - lk);
  const BigInt denominator = ln + 2 + lk;
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw std::logic_error("W_n coefficient is not an integer");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

namespace {

// Terms of a_n = a_{n-1} + a_{n-2}.
BigInt additive_sequence(std::size_t n, BigInt a0, BigInt a1) {
  if (n == 0) return a0;
  for (std::size_t i = 2; i <= n; ++i) {
    BigInt next = a0 + a1;
    a0 = std::move(a1);
    a1 = std::move(next);
  }
  return a1;
}

}  // namespace

BigInt fibonacci(std::size_t n) { return additive_sequence(n, 0, 1); }

BigInt lucas(std::size_t n) { return additive_sequence(n, 2, 1); }

IntPolynomial fibonacci_poly(std::size_t n) {
  return fibonacci_like(n, IntPolynomial(), IntPolynomial({1}));
}

IntPolynomial lucas_poly(std::size_t n) {
  return fibonacci_like(n, IntPolynomial({2}), IntPolynomial({0, 1}));
}

namespace {

using Table = std::vector<std::vector<BigInt>>;

BigInt lookup(const Table& table, long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Table fan_table(long rows) {
  Table t;
  for (long n = 0; n <= rows; ++n) {
    t.emplace_back(static_cast<std::size_t>(n + 1), 0);
    for (long k = 0; k <= n; ++k) {
      t.back()[static_cast<std::size_t>(k)] =
          n == 0 ? BigInt(1)
                 : lookup(t, n - 1, k - 1) + 2 * lookup(t, n - 1, k) - lookup(t, n - 2, k);
    }
  }
  return t;
}

Table wheel_table(long rows) {
  Table t;
  for (long n = 0; n <= rows; ++n) {
    t.emplace_back(static_cast<std::size_t>(n + 1), 0);
    auto& row = t.back();
    row[0] = 1;
    if (n == 0) continue;
    row[static_cast<std::size_t>(n)] = 2;
    for (long k = 1; k < n; ++k) {
      BigInt value = lookup(t, n - 1, k - 1);
      for (long i = 0; i <= k; ++i) value += lookup(t, n - 1 - i, k - i);
      row[static_cast<std::size_t>(k)] = value;
    }
  }
  return t;
}

}  // namespace

BigInt triangular_fan(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return lookup(fan_table(n), n, k);
}

BigInt wheel_array(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return lookup(wheel_table(n), n, k);
}

BigInt triangular_wheel(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return wheel_array(n + 1, n - k);
}

}  // namespace kirchhoff
