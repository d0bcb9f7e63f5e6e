#include "malcev/subspace.hpp"

#include <algorithm>

#include "malcev/errors.hpp"

namespace malcev {

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
  for (const auto& v : vectors)
    if (v.size() != ambient_dim)
      throw Error(Errc::DimensionMismatch, "span vector length != ambient dimension");
  std::vector<Vec> rows = vectors;
  const std::size_t rank = rref_in_place(rows);
  rows.resize(rank);
  return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, {});
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  rows.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vec(ambient_dim, i));
  return Subspace(ambient_dim, std::move(rows));
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(basis_.size());
  for (const auto& row : basis_) {
    std::size_t j = 0;
    while (j < ambient_ && row[j] == 0) ++j;
    out.push_back(j);
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "reduce");
  Vec r = v;
  const auto piv = pivots();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = r[piv[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[i][j] != 0) r[j] -= c * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::DimensionMismatch, "contains");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "coordinates");
  const auto piv = pivots();
  Vec coeffs(basis_.size());
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coeffs[i] = r[piv[i]];
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_[i][j] != 0) r[j] -= coeffs[i] * basis_[i][j];
  }
  if (!vec_is_zero(r)) return std::nullopt;
  return coeffs;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::DimensionMismatch, "subspace sum");
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(rows, a.ambient_dim());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(Errc::DimensionMismatch, "subspace intersect");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  const std::size_t p = a.dim();
  const std::size_t q = b.dim();
  // Columns: a's basis then b's basis negated. A kernel vector (x, y) means
  // sum x_i a_i = sum y_j b_j, a vector of the intersection.
  std::vector<Vec> cols;
  cols.reserve(p + q);
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) cols.push_back(vec_scale(Rational(-1), v));
  const Matrix m = Matrix::from_cols(cols, a.ambient_dim());
  const Subspace ker = kernel(m);
  std::vector<Vec> gens;
  gens.reserve(ker.dim());
  for (const auto& k : ker.basis()) {
    Vec w = zero_vec(a.ambient_dim());
    for (std::size_t i = 0; i < p; ++i)
      if (k[i] != 0) w = vec_add(w, vec_scale(k[i], a.basis()[i]));
    gens.push_back(std::move(w));
  }
  return Subspace::span(gens, a.ambient_dim());
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const std::size_t rank = rref_in_place(rows);
  rows.resize(rank);

  std::vector<std::size_t> pivot_of_row(rank);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < n && rows[i][j] == 0) ++j;
    pivot_of_row[i] = j;
    is_pivot[j] = true;
  }

  std::vector<Vec> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_of_row[i]] = -rows[i][f];
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, n);
}

Subspace generalized_kernel(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "generalized kernel");
  const std::size_t n = m.rows();
  const Matrix shifted = m - lambda * Matrix::identity(n);
  return kernel(shifted.pow(n));
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw Error(Errc::DimensionMismatch, "solve");
  const std::size_t n = m.cols();
  std::vector<Vec> aug;
  aug.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec row = m.row(i);
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  const std::size_t rank = rref_in_place(aug);
  Vec x = zero_vec(n);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (j < n && aug[i][j] == 0) ++j;
    if (j == n) return std::nullopt;
    x[j] = aug[i][n];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse");
  const std::size_t n = m.rows();
  std::vector<Vec> aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = m.row(i);
    Vec id = zero_vec(n);
    id[i] = 1;
    row.insert(row.end(), id.begin(), id.end());
    aug.push_back(std::move(row));
  }
  rref_in_place(aug);
  // Invertible iff every pivot lands in the left block, which then reduces
  // to the identity.
  for (std::size_t i = 0; i < n; ++i)
    if (aug[i][i] != 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug[i][n + j];
  return inv;
}

}  // namespace malcev
