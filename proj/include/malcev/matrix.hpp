#pragma once

#include <cstddef>
#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  Rational trace() const;

  /// Matrix power by repeated multiplication; requires a square matrix.
  Matrix pow(std::size_t exponent) const;

  /// m * v with v a column vector of length cols().
  Vec apply(const Vec& v) const;

  /// Row-major flattening, used to treat operators as vectors.
  Vec flatten() const { return entries_; }
  static Matrix unflatten(const Vec& flat, std::size_t side);

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// In-place reduced row echelon form; returns the rank. Zero rows end up last.
std::size_t rref_in_place(std::vector<Vec>& rows);

}  // namespace malcev
