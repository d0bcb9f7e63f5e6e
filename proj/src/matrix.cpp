#include "malcev/matrix.hpp"

#include <cassert>

#include "malcev/errors.hpp"

namespace malcev {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(Errc::DimensionMismatch, "row length != column count");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw Error(Errc::DimensionMismatch, "column length != row count");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational Matrix::trace() const {
  assert(is_square());
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::pow(std::size_t exponent) const {
  assert(is_square());
  Matrix acc = identity(rows_);
  for (std::size_t k = 0; k < exponent; ++k) acc = acc * (*this);
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix apply");
  Vec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::unflatten(const Vec& flat, std::size_t side) {
  if (flat.size() != side * side) throw Error(Errc::DimensionMismatch, "unflatten");
  Matrix m(side, side);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) m.at(i, j) = flat[i * side + j];
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::DimensionMismatch, "matrix add");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::DimensionMismatch, "matrix sub");
  Matrix out(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix mul");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

Matrix operator*(const Rational& c, const Matrix& m) {
  Matrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = c * m.entries_[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::size_t rref_in_place(std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && rows[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational lead = rows[rank][col];
    if (lead != 1)
      for (std::size_t j = col; j < n; ++j) rows[rank][j] /= lead;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace malcev
