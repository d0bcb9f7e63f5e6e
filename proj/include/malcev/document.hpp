#pragma once

#include <string>

#include "malcev/algebra.hpp"
#include "malcev/rational.hpp"

namespace malcev {

/// Rational from "p" or "p/q" with an optional leading minus and a positive
/// denominator. Reduced on the way in. Throws MalformedRational.
Rational parse_rational(const std::string& text);

/// Lowest-terms "p" or "p/q".
std::string format_rational(const Rational& r);

/// Algebra from a JSON document {"name", "dim", "basis", "brackets"} where
/// brackets hold {"left", "right", "value"} with value a label-to-rational
/// map. Entries may come in any order and orientation. Throws ParseError,
/// UnknownBasisLabel, SelfBracket, DuplicatePair, MalformedRational.
Algebra parse_algebra(const std::string& text);

/// Canonical document: basis order preserved, one entry per nonzero pair
/// with the lower basis index on the left, pairs in lexicographic index
/// order, value coefficients in basis order with zeros omitted, rationals
/// in lowest terms. parse_algebra(serialize_algebra(a)) reproduces a.
std::string serialize_algebra(const Algebra& a);

}  // namespace malcev
