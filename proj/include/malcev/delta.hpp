#pragma once

#include <optional>

#include "malcev/algebra.hpp"
#include "malcev/matrix.hpp"
#include "malcev/subspace.hpp"

namespace malcev {

enum class DeltaStatus { Unique, NonUnique, NoSolution };

const char* delta_status_name(DeltaStatus s);

struct DeltaSolution {
  /// A d with [z, d] = J(z, x, y) for all z, when the stacked system is
  /// consistent.
  std::optional<Element> particular;
  /// Right annihilator {d : [z, d] = 0 for all z}; the solution set is
  /// particular + kernel.
  Subspace kernel;
  DeltaStatus status;
};

/// Exact solve of the stacked system [e_i, d] = J(e_i, x, y).
/// Throws NotMalcev, AlgebraMismatch.
DeltaSolution delta_element(const Algebra& a, const Element& x, const Element& y);

/// Matrix of z -> J(z, x, y); bilinear and antisymmetric in (x, y).
/// Throws NotMalcev, AlgebraMismatch.
Matrix delta_operator(const Algebra& a, const Element& x, const Element& y);

/// Span of the flattened operators over basis pairs, inside the
/// dim^2-dimensional matrix space. Throws NotMalcev.
Subspace delta_span(const Algebra& a);

/// Whether commutators of the span's basis matrices stay inside the span.
/// Throws DimensionMismatch when the ambient space is not n^2-dimensional.
bool lie_closure_check(const Subspace& span);

}  // namespace malcev
