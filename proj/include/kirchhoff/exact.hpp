#pragma once

// Exact scalars and dense rational matrices.
//
// BigInt and Rational are the GMP C++ classes. Every arithmetic result of
// mpq_class is already in lowest terms with a positive denominator; the only
// non-canonical entry point is the two-argument constructor, which callers
// should avoid in favour of make_rational().

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "kirchhoff/errors.hpp"

namespace kirchhoff {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "n", "-n" or "n/d". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& value);

/// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Decimal rendering with `significant` significant digits.
std::string to_decimal(const Rational& value, int significant = 12);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// All-ones matrix (J).
  static RationalMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const RationalMatrix& other) const = default;

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool is_integral() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& scale, const RationalMatrix& m);

/// Exact determinant. Rows are scaled to integers and reduced with Bareiss'
/// fraction-free elimination, so every intermediate is an exact integer.
Rational det_fraction_free(const RationalMatrix& m);

/// Bareiss determinant of an n-by-n integer matrix stored row-major.
BigInt det_bareiss(std::vector<BigInt> entries, std::size_t n);

/// Gauss-Jordan inverse. Throws SingularMatrixError with the failing column.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace kirchhoff
