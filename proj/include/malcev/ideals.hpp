#pragma once

#include <optional>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/matrix.hpp"
#include "malcev/subspace.hpp"

namespace malcev {

struct IdealHandle {
  const Algebra* algebra;
  Subspace space;
  /// Whether the space contains the span of all basis-triple Jacobians.
  bool contains_j;
};

/// Everything derived from the Jacobian span J and the nucleus
/// N = {x : J(x,A,A) = 0} of one algebra.
struct Decomposition {
  const Algebra* algebra;
  Subspace j;
  Subspace n;
  /// N and J intersect trivially and together span the algebra.
  bool direct;
  /// Canonical epimorphism onto the quotient coordinates, (dim - dim J) x dim.
  Matrix phi;
  /// Residue-class algebra on A/J.
  Algebra quotient;
  bool quotient_is_lie;
  /// Projection onto N along J in ambient coordinates; present iff direct.
  std::optional<Matrix> pi;
};

/// Span of all basis-triple Jacobians, verified to be an ideal.
/// Throws NotMalcev when the algebra fails the linearized identity.
IdealHandle j_ideal(const Algebra& a);

/// Kernel of x -> (J(x, e_i, e_j))_{i<j}, verified to be an ideal.
/// Throws NotMalcev.
IdealHandle j_nucleus(const Algebra& a);

/// Whether every product of a nucleus basis vector with a Jacobian-span
/// basis vector vanishes.
bool check_annihilation(const Algebra& a);

/// Throws NotMalcev.
Decomposition decompose(const Algebra& a);

struct MinimalityReport {
  bool quotient_is_lie;
  bool contains_j;
  /// quotient_is_lie implies contains_j.
  bool holds;
};

/// Tests that the candidate cannot witness a smaller Lie quotient than J
/// does. Throws NotAnIdeal when the candidate is not an ideal.
MinimalityReport j_minimality_check(const Algebra& a, const IdealHandle& candidate);

/// Smallest ideal containing the seed: span closure under bracketing with
/// basis vectors. Throws AlgebraMismatch.
IdealHandle ideal_generated_by(const Algebra& a, const std::vector<Element>& seed);

/// Span of pairwise brackets of basis vectors. Not necessarily an ideal;
/// callers test with is_ideal. Throws AlgebraMismatch.
Subspace ideal_product(const IdealHandle& p, const IdealHandle& q);

/// Whether x sits inside the nucleus and is stable under bracketing with
/// every nucleus basis vector (equivalently under the projected action of
/// the whole algebra). Throws NotDirect when ctx has no projection.
bool is_nucleus_ideal(const Decomposition& ctx, const Subspace& x);

struct CorrespondenceResult {
  /// is_ideal(s) implies is_nucleus_ideal(pi(s)).
  bool forward;
  /// is_nucleus_ideal(pi(s)) and s = pi(s) + J imply is_ideal(s).
  bool backward;
};

/// Throws NotDirect.
CorrespondenceResult correspondence_check(const Decomposition& ctx, const Subspace& s);

struct CoprimeResult {
  /// p + q = N.
  bool coprime;
  bool product_is_nucleus_ideal;
};

/// Throws NotIIdeal when p or q fails is_nucleus_ideal, NotDirect without
/// a projection.
CoprimeResult coprime_product_check(const Decomposition& ctx, const Subspace& p,
                                    const Subspace& q);

/// Ideals generated by basis subsets of size <= max_seed_size, deduplicated,
/// in order of first discovery (seeds by size, then lexicographic).
std::vector<IdealHandle> enumerate_ideals(const Algebra& a, std::size_t max_seed_size);

/// Same enumeration inside the nucleus: closures of nucleus-basis subsets
/// under bracketing with nucleus basis vectors. Throws NotDirect.
std::vector<Subspace> enumerate_nucleus_ideals(const Decomposition& ctx,
                                               std::size_t max_seed_size);

struct ProductCounterexample {
  IdealHandle p, q;
  Subspace product;
};

/// First enumerated ideal pair whose product fails is_ideal, if any.
/// Throws NotMalcev.
std::optional<ProductCounterexample> product_counterexample_search(
    const Algebra& a, std::size_t max_seed_size);

}  // namespace malcev
