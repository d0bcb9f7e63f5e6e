#include "malcev/charpoly.hpp"

#include <algorithm>
#include <set>

#include "malcev/errors.hpp"

namespace malcev {

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Polynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "char poly");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_1 = m, c_{n-k} = -tr(M_k)/k, M_{k+1} = m (M_k + c_{n-k} I).
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational c = -mk.trace() / Rational(static_cast<long>(k));
    coeffs[n - k] = c;
    if (k < n) mk = m * (mk + c * Matrix::identity(n));
  }
  Polynomial p{std::move(coeffs)};
  p.normalize();
  return p;
}

namespace {

// p(x) / (x - r) by synthetic division. Requires p(r) == 0.
Polynomial divide_out_root(const Polynomial& p, const Rational& r) {
  const std::size_t d = p.degree();
  Polynomial q;
  q.coeffs.assign(d, Rational(0));
  Rational carry = 0;
  for (std::size_t i = d; i-- > 0;) {
    carry = p.coeffs[i + 1] + r * carry;
    q.coeffs[i] = carry;
  }
  q.normalize();
  return q;
}

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> divs;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    divs.push_back(d);
    mpz_class other = v / d;
    if (other != d) divs.push_back(other);
  }
  return divs;
}

}  // namespace

RootReport rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "rational roots");

  RootReport report;
  if (p.degree() == 0) {
    report.splits = true;
    return report;
  }

  // Factor out x^k first so the constant term used below is nonzero.
  std::size_t zero_mult = 0;
  Polynomial rest = p;
  while (!rest.coeffs.empty() && rest.coeffs.front() == 0) {
    rest.coeffs.erase(rest.coeffs.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) report.roots.emplace_back(Rational(0), zero_mult);

  if (rest.degree() >= 1) {
    mpz_class a0 = 1, lead = 1;
    {
      mpz_class d = 1;
      for (const auto& c : rest.coeffs) {
        mpz_class den = c.get_den();
        d = d / gcd(d, den) * den;
      }
      const Rational scaled_front = rest.coeffs.front() * Rational(d);
      const Rational scaled_back = rest.coeffs.back() * Rational(d);
      a0 = scaled_front.get_num();
      lead = scaled_back.get_num();
    }
    std::set<Rational> candidates;
    for (const auto& num : positive_divisors(a0))
      for (const auto& den : positive_divisors(lead)) {
        Rational r(num, den);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      if (rest.eval(r) != 0) continue;
      std::size_t mult = 0;
      while (rest.degree() >= 1 && rest.eval(r) == 0) {
        rest = divide_out_root(rest, r);
        ++mult;
      }
      report.roots.emplace_back(r, mult);
      if (rest.degree() == 0) break;
    }
  }

  std::sort(report.roots.begin(), report.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t accounted = 0;
  for (const auto& [root, mult] : report.roots) accounted += mult;
  report.splits = accounted == p.degree();
  return report;
}

}  // namespace malcev
