#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "malcev/matrix.hpp"
#include "malcev/rational.hpp"
#include "malcev/subspace.hpp"

namespace malcev {

class Algebra;

/// Element of a fixed algebra: a coordinate vector in its basis.
class Element {
public:
  Element(const Algebra* algebra, Vec coords);

  const Algebra& algebra() const { return *algebra_; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return vec_is_zero(coords_); }

  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Rational& c, const Element& x);
  friend bool operator==(const Element& x, const Element& y);
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

private:
  const Algebra* algebra_;
  Vec coords_;
};

/// Basis tuple on which an identity failed, with its nonzero residual.
struct Witness {
  std::vector<std::size_t> indices;
  Vec residual;
};

struct ValidationReport {
  bool anticommutative = true;
  bool is_lie = true;
  bool is_malcev = true;
  /// Failing basis triples of the Jacobi identity, capped; the full count
  /// is lie_failures.
  std::vector<Witness> lie_witnesses;
  std::size_t lie_failures = 0;
  /// Failing basis 4-tuples of the linearized identity
  /// [J(a,b,c),d] + [J(d,b,c),a] - J(a,b,[d,c]) - J(d,b,[a,c]) = 0, capped.
  std::vector<Witness> malcev_witnesses;
  std::size_t malcev_failures = 0;

  static constexpr std::size_t witness_cap = 100;
};

/// Finite-dimensional anticommutative algebra over the rationals, fixed by
/// structure constants on a named basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
/// Construction takes one entry per unordered basis pair and fills the
/// opposite orientation by antisymmetry, so c is antisymmetric by shape.
class Algebra {
public:
  struct Entry {
    std::size_t left, right;
    Vec value;
  };

  Algebra(std::string name, std::vector<std::string> basis_names,
          const std::vector<Entry>& entries);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Coordinates of [e_i, e_j].
  const Vec& constants(std::size_t i, std::size_t j) const { return c_[i][j]; }

  Element element(Vec coords) const;
  Element basis_element(std::size_t i) const;
  Element zero() const;

  /// Coordinate-level bilinear bracket.
  Vec bracket_coords(const Vec& x, const Vec& y) const;
  /// Coordinate-level Jacobian [[x,y],z] + [[y,z],x] + [[z,x],y].
  Vec jacobian_coords(const Vec& x, const Vec& y, const Vec& z) const;

  friend bool operator==(const Algebra& a, const Algebra& b);
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

private:
  std::string name_;
  std::vector<std::string> basis_;
  std::vector<std::vector<Vec>> c_;
};

Element bracket(const Element& x, const Element& y);
Element jacobian(const Element& x, const Element& y, const Element& z);

/// Checks anticommutativity of the tensor, the Jacobi identity on basis
/// triples, and the linearized identity above on basis 4-tuples. The basis
/// checks decide the identities for all elements by multilinearity; the
/// linearized form is equivalent to the quadratic one in characteristic 0.
ValidationReport validate(const Algebra& a);

/// Matrix of y -> [x, y] in the fixed basis.
Matrix adjoint_matrix(const Element& x);

/// Block-diagonal sum; cross brackets zero. Clashing basis labels from the
/// right summand get numeric suffixes.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Whether [A, s] lies in s (two-sided by anticommutativity).
bool is_ideal(const Algebra& a, const Subspace& s);

struct Quotient {
  Algebra algebra;
  /// Matrix of the canonical epimorphism onto coordinates of the quotient
  /// basis (non-pivot columns of the ideal's canonical basis).
  Matrix projection;
};

/// Residue-class algebra on a/ideal. Verifies the ideal property (throws
/// NotAnIdeal otherwise) and asserts the induced bracket is independent of
/// coset representatives.
Quotient quotient_algebra(const Algebra& a, const Subspace& ideal);

}  // namespace malcev
