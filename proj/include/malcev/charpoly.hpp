#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "malcev/matrix.hpp"
#include "malcev/rational.hpp"

namespace malcev {

/// Polynomial over the rationals, coefficients in ascending degree order.
/// The zero polynomial has an empty coefficient list.
struct Polynomial {
  std::vector<Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rational eval(const Rational& x) const;

  /// Drops trailing zero coefficients so degree() is honest.
  void normalize();

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

/// det(lambda I - m), monic, computed exactly (Faddeev-LeVerrier).
Polynomial char_poly(const Matrix& m);

struct RootReport {
  /// (root, multiplicity), roots in ascending order.
  std::vector<std::pair<Rational, std::size_t>> roots;
  /// True when the multiplicities account for the full degree, i.e. the
  /// polynomial splits over the rationals.
  bool splits = false;
};

/// All rational roots with multiplicities via the rational-root theorem on
/// the primitive integer form. Throws ZeroPolynomial for the zero polynomial.
RootReport rational_roots(const Polynomial& p);

}  // namespace malcev
