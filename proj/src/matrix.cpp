#include "subspectra/matrix.hpp"

#include <sstream>
#include <utility>

#include "subspectra/error.hpp"

namespace subspectra {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::ones(std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (auto& x : m.data_) x = 1;
  return m;
}

IntMatrix IntMatrix::scalar(std::size_t n, const mpz_class& k) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

mpz_class IntMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::NotSquare, "trace of a non-square matrix");
  mpz_class t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

void IntMatrix::set_block(std::size_t row, std::size_t col, const IntMatrix& block) {
  if (row + block.rows_ > rows_ || col + block.cols_ > cols_)
    throw Error(ErrorCode::DimensionMismatch, "block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(row + i, col + j) = block(i, j);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const mpz_class& k) {
  for (auto& x : data_) x *= k;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return out;
}

mpz_class bareiss_det(IntMatrix m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m(i, j) * m(k, k);
        mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  mpz_class det = m(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

RatMatrix::RatMatrix(const IntMatrix& m) : n_(m.rows()), data_(m.rows() * m.cols()) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "RatMatrix must be square");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = m.entries()[k];
}

mpq_class RatMatrix::det() const {
  std::vector<mpq_class> a = data_;
  const std::size_t n = n_;
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a[pivot * n + k]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      det = -det;
    }
    const mpq_class piv = a[k * n + k];
    det *= piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a[i * n + k]) == 0) continue;
      const mpq_class factor = a[i * n + k] / piv;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= factor * a[k * n + j];
    }
  }
  det.canonicalize();
  return det;
}

RatMatrix RatMatrix::inverse() const {
  const std::size_t n = n_;
  std::vector<mpq_class> a = data_;
  RatMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a[pivot * n + k]) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::DivisionByZeroFunction, "singular matrix has no inverse");
    if (pivot != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[k * n + j], a[pivot * n + j]);
        std::swap(inv(k, j), inv(pivot, j));
      }
    const mpq_class piv = a[k * n + k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k * n + j] /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a[i * n + k]) == 0) continue;
      const mpq_class factor = a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= factor * a[k * n + j];
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

IntPoly charpoly(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};

  struct Entry {
    std::size_t col;
    mpz_class value;
  };
  std::vector<std::vector<Entry>> nz(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(m(i, j)) != 0) nz[i].push_back({j, m(i, j)});

  std::vector<mpz_class> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix c = IntMatrix::identity(n);
  IntMatrix am(n, n);
  mpz_class tr;
  for (std::size_t k = 1; k <= n; ++k) {
    tr = 0;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) am(i, j) = 0;
        for (const Entry& e : nz[i])
          for (std::size_t j = 0; j < n; ++j) {
            const mpz_class& cj = c(e.col, j);
            if (sgn(cj) == 0) continue;
            if (e.value == 1)
              am(i, j) += cj;
            else
              mpz_addmul(am(i, j).get_mpz_t(), e.value.get_mpz_t(), cj.get_mpz_t());
          }
        tr += am(i, i);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (const Entry& e : nz[i]) mpz_addmul(tr.get_mpz_t(), e.value.get_mpz_t(), c(e.col, i).get_mpz_t());
    }
    mpz_class coef = -tr;
    if (!mpz_divisible_ui_p(coef.get_mpz_t(), k))
      throw Error(ErrorCode::InternalInconsistency, "Faddeev-LeVerrier division was not exact");
    mpz_divexact_ui(coef.get_mpz_t(), coef.get_mpz_t(), k);
    coeffs[n - k] = coef;
    if (k < n) {
      std::swap(c, am);
      for (std::size_t i = 0; i < n; ++i) c(i, i) += coef;
    }
  }
  return IntPoly(std::move(coeffs));
}

namespace {

IntMatrix shifted(const IntMatrix& m, long lambda0) {
  IntMatrix out = IntMatrix::scalar(m.rows(), lambda0);
  out -= m;
  return out;
}

IntMatrix minor_of(const IntMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  IntMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

IntPoly charpoly_oracle(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "charpoly_oracle of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > kCharpolyOracleMax) throw Error(ErrorCode::TooLarge, "charpoly_oracle is limited to n <= 10");
  std::vector<mpz_class> xs;
  std::vector<mpq_class> ys;
  for (std::size_t p = 0; p <= n; ++p) {
    xs.emplace_back(static_cast<long>(p));
    ys.emplace_back(bareiss_det(shifted(m, static_cast<long>(p))));
  }
  return interpolate(xs, ys);
}

RatFunc coronal(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "coronal of a non-square matrix");
  const IntPoly f = charpoly(m);
  const IntPoly g = charpoly(m - IntMatrix::ones(m.rows(), m.cols()));
  return RatFunc(g - f, f);
}

RatFunc coronal_oracle(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "coronal_oracle of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > kCoronalOracleMax) throw Error(ErrorCode::TooLarge, "coronal_oracle is limited to n <= 6");
  std::vector<mpz_class> xs;
  std::vector<mpq_class> dets;
  std::vector<mpq_class> adj_sums;
  for (std::size_t p = 0; p <= n; ++p) {
    const IntMatrix s = shifted(m, static_cast<long>(p));
    xs.emplace_back(static_cast<long>(p));
    dets.emplace_back(bareiss_det(s));
    mpz_class total = 0;
    // adj(S)_{ij} = (−1)^{i+j} det(S with row j and column i removed)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class cof = bareiss_det(minor_of(s, j, i));
        if ((i + j) % 2) cof = -cof;
        total += cof;
      }
    adj_sums.emplace_back(total);
  }
  return RatFunc(interpolate(xs, adj_sums), interpolate(xs, dets));
}

}  // namespace subspectra
