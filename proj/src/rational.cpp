#include "malcev/rational.hpp"

#include <cctype>
#include <cstddef>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size()))
      throw Error(Errc::MalformedRational, "'" + text + "'");
    return Rational(mpz_class(text), 1);
  }
  if (!all_digits(text, start, slash) || !all_digits(text, slash + 1, text.size()))
    throw Error(Errc::MalformedRational, "'" + text + "'");
  mpz_class num(text.substr(0, slash));
  mpz_class den(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::MalformedRational, "zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace malcev
