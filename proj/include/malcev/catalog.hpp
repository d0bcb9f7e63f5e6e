#pragma once

#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

/// Built-in example algebras, constructed once:
///   abelian1..3   zero bracket
///   sl2           [h,e]=2e, [h,f]=-2f, [e,f]=h
///   cross3        3-dim cross product
///   heisenberg3   [x,y]=z
///   M7            7-dim simple non-Lie: imaginary octonion commutators
///   solv4         4-dim solvable non-Lie
///   sl2_plus_M7   direct sum of sl2 and M7
/// Every entry passes the linearized-identity validator; M7, solv4 and
/// sl2_plus_M7 fail the Jacobi identity (tests pin both facts).
const std::vector<Algebra>& catalog();

std::vector<std::string> catalog_names();

/// Throws UnknownAlgebra.
const Algebra& catalog_algebra(const std::string& name);

}  // namespace malcev
