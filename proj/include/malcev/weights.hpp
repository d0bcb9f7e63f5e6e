#pragma once

#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/ideals.hpp"
#include "malcev/matrix.hpp"
#include "malcev/subspace.hpp"

namespace malcev {

/// Linear functional on the chosen subalgebra, given by its values on the
/// subalgebra's canonical basis.
struct WeightFunction {
  Vec values;

  bool is_zero() const { return vec_is_zero(values); }
  friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
    return a.values == b.values;
  }
  friend bool operator!=(const WeightFunction& a, const WeightFunction& b) {
    return !(a == b);
  }
};

struct WeightSpace {
  WeightFunction weight;
  /// Stored in ambient algebra coordinates; always a subspace of the nucleus.
  Subspace space;
};

struct WeightDecomposition {
  /// The acting subalgebra, in ambient coordinates.
  Subspace h_space;
  /// Nonempty generalized weight spaces only.
  std::vector<WeightSpace> spaces;
  /// Every generator's spectrum split over the rationals.
  bool all_split;
  /// Weight-space dimensions add up to the nucleus dimension.
  bool complete;
  /// h_space lies in the zero weight space.
  bool h_in_zero;
  /// [N_a, N_b] lands in N_{a+b}, the zero space when a+b is not a weight.
  bool graded;
};

/// Matrix, in the nucleus basis, of n -> [pi(a), n]. Throws NotDirect,
/// AlgebraMismatch; NotInN signals an internal consistency failure.
Matrix adjoint_action(const Decomposition& ctx, const Element& a);

/// Lower central series of h reaches zero. Throws NotASubalgebra when h is
/// not closed under the bracket.
bool is_nilpotent_subalgebra(const Algebra& a, const Subspace& h);

/// Generalized weight spaces of the nucleus under h: per-generator rational
/// spectra, candidate weights as root tuples, spaces as intersected
/// generalized kernels. Throws NotDirect, NotInsideN, NotNilpotent.
WeightDecomposition weight_decomposition(const Decomposition& ctx, const Subspace& h);

struct LiftReport {
  /// The lifted spaces equal the nucleus weight spaces (the projection is
  /// the identity on the nucleus).
  std::vector<WeightSpace> lifted;
  bool h_in_zero;
  bool graded;
  /// Lifted spaces alone sum directly to the whole algebra.
  bool literal_direct;
  std::size_t literal_total_dim;
  /// Zero space widened to N_0 + J before the direct-sum test.
  bool extended_direct;
  std::size_t extended_total_dim;
};

/// Lift through the projection: requires pi(H) = w.h_space (HMismatch
/// otherwise). Throws NotDirect.
LiftReport lift_weight_spaces(const Decomposition& ctx, const WeightDecomposition& w,
                              const Subspace& H);

}  // namespace malcev
