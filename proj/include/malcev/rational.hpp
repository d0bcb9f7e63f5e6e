#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace malcev {

/// Exact rational scalar. GMP keeps values canonical: lowest terms,
/// positive denominator, so set equality is value equality.
using Rational = mpq_class;

using Vec = std::vector<Rational>;

/// Parses "p" or "p/q" with optional leading '-'. Throws MalformedRational
/// on anything else (including q = 0).
Rational rational_from_string(const std::string& text);

/// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace malcev
