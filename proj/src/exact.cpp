#include "kirchhoff/exact.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kirchhoff {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    i = 1;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

std::string to_decimal(const Rational& value, int significant) {
  std::ostringstream out;
  out << std::setprecision(significant) << value.get_d();
  return out.str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged matrix initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (auto& x : m.data_) {
    x = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : data_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum of mismatched shapes");
  }
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) = a(r, c) + b(r, c);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix difference of mismatched shapes");
  }
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(r, c) = a(r, c) - b(r, c);
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product of non-conformable shapes");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& lhs = a(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) += lhs * b(k, c);
      }
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& scale, const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = scale * m(r, c);
    }
  }
  return out;
}

BigInt det_bareiss(std::vector<BigInt> a, std::size_t n) {
  if (a.size() != n * n) {
    throw DimensionError("determinant of non-square matrix");
  }
  if (n == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };

  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt value = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        // Sylvester's identity: the division is exact.
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        at(i, j) = std::move(value);
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  BigInt det = at(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

Rational det_fraction_free(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<BigInt> entries(n * n);
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      entries[r * n + c] = m(r, c).get_num() * (row_lcm / m(r, c).get_den());
    }
    scale *= row_lcm;
  }
  return make_rational(det_bareiss(std::move(entries), n), scale);
}

RationalMatrix invert(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && work(pivot, k) == 0) ++pivot;
    if (pivot == n) {
      throw SingularMatrixError(k);
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(k, c), work(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Rational scale = 1 / work(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      work(k, c) *= scale;
      inv(k, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || work(r, k) == 0) continue;
      const Rational factor = work(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(k, c);
        inv(r, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

}  // namespace kirchhoff
