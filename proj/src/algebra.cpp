#include "malcev/algebra.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "malcev/errors.hpp"

namespace malcev {

Element::Element(const Algebra* algebra, Vec coords)
    : algebra_(algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim())
    throw Error(Errc::DimensionMismatch, "element coordinate length");
}

namespace {

void require_same(const Element& x, const Element& y) {
  if (&x.algebra() != &y.algebra())
    throw Error(Errc::AlgebraMismatch, "elements of different algebras");
}

}  // namespace

Element operator+(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(&x.algebra(), vec_add(x.coords(), y.coords()));
}

Element operator-(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(&x.algebra(), vec_sub(x.coords(), y.coords()));
}

Element operator*(const Rational& c, const Element& x) {
  return Element(&x.algebra(), vec_scale(c, x.coords()));
}

bool operator==(const Element& x, const Element& y) {
  require_same(x, y);
  return x.coords() == y.coords();
}

Algebra::Algebra(std::string name, std::vector<std::string> basis_names,
                 const std::vector<Entry>& entries)
    : name_(std::move(name)), basis_(std::move(basis_names)) {
  const std::size_t n = basis_.size();
  {
    std::set<std::string> seen(basis_.begin(), basis_.end());
    if (seen.size() != n) throw Error(Errc::ParseError, "duplicate basis label");
  }
  c_.assign(n, std::vector<Vec>(n, zero_vec(n)));
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : entries) {
    if (e.left >= n || e.right >= n)
      throw Error(Errc::UnknownBasisLabel, "basis index out of range");
    if (e.left == e.right)
      throw Error(Errc::SelfBracket, "bracket of a basis vector with itself");
    if (e.value.size() != n)
      throw Error(Errc::DimensionMismatch, "bracket value length");
    const std::pair<std::size_t, std::size_t> key = std::minmax(e.left, e.right);
    if (!pairs.insert(key).second)
      throw Error(Errc::DuplicatePair,
                  "pair {" + basis_[e.left] + "," + basis_[e.right] + "} given twice");
    c_[e.left][e.right] = e.value;
    c_[e.right][e.left] = vec_scale(Rational(-1), e.value);
  }
}

std::optional<std::size_t> Algebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == label) return i;
  return std::nullopt;
}

Element Algebra::element(Vec coords) const { return Element(this, std::move(coords)); }

Element Algebra::basis_element(std::size_t i) const {
  return Element(this, unit_vec(dim(), i));
}

Element Algebra::zero() const { return Element(this, zero_vec(dim())); }

Vec Algebra::bracket_coords(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw Error(Errc::DimensionMismatch, "bracket operand length");
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational f = x[i] * y[j];
      const Vec& cij = c_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (cij[k] != 0) out[k] += f * cij[k];
    }
  }
  return out;
}

Vec Algebra::jacobian_coords(const Vec& x, const Vec& y, const Vec& z) const {
  Vec acc = bracket_coords(bracket_coords(x, y), z);
  acc = vec_add(acc, bracket_coords(bracket_coords(y, z), x));
  acc = vec_add(acc, bracket_coords(bracket_coords(z, x), y));
  return acc;
}

Element bracket(const Element& x, const Element& y) {
  require_same(x, y);
  return Element(&x.algebra(), x.algebra().bracket_coords(x.coords(), y.coords()));
}

Element jacobian(const Element& x, const Element& y, const Element& z) {
  require_same(x, y);
  require_same(x, z);
  return Element(&x.algebra(),
                 x.algebra().jacobian_coords(x.coords(), y.coords(), z.coords()));
}

ValidationReport validate(const Algebra& a) {
  const std::size_t n = a.dim();
  ValidationReport report;

  for (std::size_t i = 0; i < n && report.anticommutative; ++i)
    for (std::size_t j = 0; j < n && report.anticommutative; ++j) {
      const Vec neg = vec_scale(Rational(-1), a.constants(j, i));
      if (a.constants(i, j) != neg) report.anticommutative = false;
    }

  // jac[i][j][k] for i<j<k; other index orders follow by the alternating
  // property and are not needed below.
  std::vector<std::vector<std::vector<Vec>>> jac(
      n, std::vector<std::vector<Vec>>(n, std::vector<Vec>(n)));
  auto jac_basis = [&](std::size_t i, std::size_t j, std::size_t k) -> Vec {
    // Signed lookup for arbitrary index order.
    std::size_t s[3] = {i, j, k};
    int sign = 1;
    if (s[0] > s[1]) { std::swap(s[0], s[1]); sign = -sign; }
    if (s[1] > s[2]) { std::swap(s[1], s[2]); sign = -sign; }
    if (s[0] > s[1]) { std::swap(s[0], s[1]); sign = -sign; }
    if (s[0] == s[1] || s[1] == s[2]) return zero_vec(n);
    const Vec& v = jac[s[0]][s[1]][s[2]];
    return sign == 1 ? v : vec_scale(Rational(-1), v);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec v = a.jacobian_coords(unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
        if (!vec_is_zero(v)) {
          report.is_lie = false;
          ++report.lie_failures;
          if (report.lie_witnesses.size() < ValidationReport::witness_cap)
            report.lie_witnesses.push_back({{i, j, k}, v});
        }
        jac[i][j][k] = std::move(v);
      }

  // Linearized identity on basis 4-tuples; symmetric under swapping the two
  // outer slots, so the outer loop runs over unordered pairs.
  for (std::size_t ia = 0; ia < n; ++ia)
    for (std::size_t id = ia; id < n; ++id)
      for (std::size_t ib = 0; ib < n; ++ib)
        for (std::size_t ic = 0; ic < n; ++ic) {
          Vec t = a.bracket_coords(jac_basis(ia, ib, ic), unit_vec(n, id));
          t = vec_add(t, a.bracket_coords(jac_basis(id, ib, ic), unit_vec(n, ia)));
          const Vec& dc = a.constants(id, ic);
          const Vec& ac = a.constants(ia, ic);
          for (std::size_t k = 0; k < n; ++k) {
            if (dc[k] != 0) t = vec_sub(t, vec_scale(dc[k], jac_basis(ia, ib, k)));
            if (ac[k] != 0) t = vec_sub(t, vec_scale(ac[k], jac_basis(id, ib, k)));
          }
          if (!vec_is_zero(t)) {
            report.is_malcev = false;
            ++report.malcev_failures;
            if (report.malcev_witnesses.size() < ValidationReport::witness_cap)
              report.malcev_witnesses.push_back({{ia, ib, ic, id}, std::move(t)});
          }
        }

  return report;
}

Matrix adjoint_matrix(const Element& x) {
  const Algebra& a = x.algebra();
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(a.bracket_coords(x.coords(), unit_vec(n, j)));
  return Matrix::from_cols(cols, n);
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na + nb;

  std::vector<std::string> labels = a.basis_names();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (const auto& l : b.basis_names()) {
    std::string candidate = l;
    for (std::size_t k = 2; !taken.insert(candidate).second; ++k)
      candidate = l + "_" + std::to_string(k);
    labels.push_back(candidate);
  }

  std::vector<Algebra::Entry> entries;
  auto widen = [&](const Vec& v, std::size_t offset) {
    Vec w = zero_vec(n);
    for (std::size_t k = 0; k < v.size(); ++k) w[offset + k] = v[k];
    return w;
  };
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      if (!vec_is_zero(a.constants(i, j)))
        entries.push_back({i, j, widen(a.constants(i, j), 0)});
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j)
      if (!vec_is_zero(b.constants(i, j)))
        entries.push_back({na + i, na + j, widen(b.constants(i, j), na)});

  return Algebra(a.name() + "_plus_" + b.name(), std::move(labels), entries);
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim())
    throw Error(Errc::DimensionMismatch, "subspace ambient != algebra dim");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(a.bracket_coords(unit_vec(a.dim(), i), v))) return false;
  return true;
}

Quotient quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal))
    throw Error(Errc::NotAnIdeal, "quotient by a non-ideal subspace");
  const std::size_t n = a.dim();
  const auto piv = ideal.pivots();
  std::vector<bool> is_piv(n, false);
  for (std::size_t p : piv) is_piv[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) complement.push_back(j);
  const std::size_t q = complement.size();

  // phi(v) = coordinates of v + ideal on the complement columns of the
  // reduced representative.
  Matrix phi(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec reduced = ideal.reduce(unit_vec(n, j));
    for (std::size_t r = 0; r < q; ++r) phi.at(r, j) = reduced[complement[r]];
  }

  std::vector<std::string> labels;
  labels.reserve(q);
  for (std::size_t r = 0; r < q; ++r) labels.push_back(a.basis_names()[complement[r]]);

  std::vector<Algebra::Entry> entries;
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t s = r + 1; s < q; ++s) {
      const Vec prod =
          a.bracket_coords(unit_vec(n, complement[r]), unit_vec(n, complement[s]));
      const Vec image = phi.apply(prod);
      if (!vec_is_zero(image)) entries.push_back({r, s, image});
    }
  Quotient result{Algebra(a.name() + "/I", std::move(labels), entries), phi};

  // Representative independence: shifting either argument by an ideal basis
  // vector must not change the induced bracket.
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t s = 0; s < q; ++s)
      for (const auto& b : ideal.basis()) {
        const Vec er = unit_vec(n, complement[r]);
        const Vec es = unit_vec(n, complement[s]);
        const Vec base = phi.apply(a.bracket_coords(er, es));
        if (phi.apply(a.bracket_coords(vec_add(er, b), es)) != base)
          throw Error(Errc::NotAnIdeal, "induced bracket depends on representatives");
      }

  return result;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.name_ == b.name_ && a.basis_ == b.basis_ && a.c_ == b.c_;
}

}  // namespace malcev
