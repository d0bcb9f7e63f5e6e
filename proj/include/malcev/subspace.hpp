#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "malcev/matrix.hpp"
#include "malcev/rational.hpp"

namespace malcev {

/// Linear subspace stored as its reduced-row-echelon basis. The basis is a
/// canonical form: two subspaces of the same ambient space are equal as sets
/// iff their stored bases are identical entry-wise.
class Subspace {
public:
  /// Canonical span of the given vectors. Throws DimensionMismatch when a
  /// vector's length differs from ambient_dim.
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the stored basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Reduces v modulo the subspace: the unique representative of v + S with
  /// zeros in all pivot coordinates.
  Vec reduce(const Vec& v) const;

  /// Pivot column of each basis row.
  std::vector<std::size_t> pivots() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Subspace(std::size_t ambient, std::vector<Vec> rref_basis)
      : ambient_(ambient), basis_(std::move(rref_basis)) {}

  std::size_t ambient_;
  std::vector<Vec> basis_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Null space {v : m v = 0}, canonical.
Subspace kernel(const Matrix& m);

/// Kernel of (m - lambda I)^n with n the side of m: the stabilized
/// generalized eigenspace for lambda.
Subspace generalized_kernel(const Matrix& m, const Rational& lambda);

/// Exact solve of m x = rhs. Returns a particular solution (free variables
/// set to zero) or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

/// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace malcev
