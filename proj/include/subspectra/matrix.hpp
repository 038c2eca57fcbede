#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "subspectra/poly.hpp"
#include "subspectra/ratfunc.hpp"

namespace subspectra {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);
  /// Row-list literal for tests and fixtures.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix zeros(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix identity(std::size_t n);
  /// J_{rows,cols}: all ones.
  static IntMatrix ones(std::size_t rows, std::size_t cols);
  /// I_n scaled by k.
  static IntMatrix scalar(std::size_t n, const mpz_class& k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<mpz_class>& entries() const { return data_; }

  IntMatrix transpose() const;
  mpz_class trace() const;
  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const IntMatrix& block);

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  IntMatrix& operator*=(const mpz_class& k);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const mpz_class& k) { return a *= k; }
  friend IntMatrix operator*(const mpz_class& k, IntMatrix a) { return a *= k; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Kronecker product a ⊗ b.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant with row pivoting.
mpz_class bareiss_det(IntMatrix m);

/// Dense square matrix over ℚ, used for pointwise evaluation of
/// Schur-complement style expressions.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t n) : n_(n), data_(n * n) {}
  explicit RatMatrix(const IntMatrix& m);
  std::size_t size() const { return n_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  mpq_class det() const;
  /// Throws DivisionByZeroFunction if singular.
  RatMatrix inverse() const;

 private:
  std::size_t n_;
  std::vector<mpq_class> data_;
};

/// f_M(λ) = det(λI − M) by the Faddeev–LeVerrier recurrence.
/// Zero entries of M are skipped, so sparse 0/1 matrices are cheap.
IntPoly charpoly(const IntMatrix& m);

/// Independent charpoly: Bareiss determinants of λ₀I − M at λ₀ = 0..n
/// followed by interpolation. Limited to n ≤ 10.
IntPoly charpoly_oracle(const IntMatrix& m);

/// χ_M(λ) = 1ᵀ(λI − M)⁻¹1, computed as f_{M−J}(λ)/f_M(λ) − 1.
RatFunc coronal(const IntMatrix& m);

/// Independent coronal: Σ of adj(λI − M) entries over det(λI − M), both
/// interpolated from integer-point Bareiss determinants. Limited to n ≤ 6.
RatFunc coronal_oracle(const IntMatrix& m);

inline constexpr std::size_t kCharpolyOracleMax = 10;
inline constexpr std::size_t kCoronalOracleMax = 6;

}  // namespace subspectra
