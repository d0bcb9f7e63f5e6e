#include "malcev/delta.hpp"

#include "malcev/errors.hpp"

namespace malcev {

namespace {

void require_malcev(const Algebra& a) {
  if (!validate(a).is_malcev)
    throw Error(Errc::NotMalcev, a.name() + " fails the linearized identity");
}

void require_of(const Algebra& a, const Element& x) {
  if (&x.algebra() != &a)
    throw Error(Errc::AlgebraMismatch, "element from a different algebra");
}

// Stacked matrix of d -> ([e_i, d])_i, one n x n block per basis vector.
Matrix stacked_left_brackets(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> rows;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) cols.push_back(a.constants(i, j));
    const Matrix block = Matrix::from_cols(cols, n);
    for (std::size_t r = 0; r < n; ++r) rows.push_back(block.row(r));
  }
  return Matrix::from_rows(rows, n);
}

}  // namespace

const char* delta_status_name(DeltaStatus s) {
  switch (s) {
    case DeltaStatus::Unique: return "Unique";
    case DeltaStatus::NonUnique: return "NonUnique";
    case DeltaStatus::NoSolution: return "NoSolution";
  }
  return "?";
}

DeltaSolution delta_element(const Algebra& a, const Element& x, const Element& y) {
  require_malcev(a);
  require_of(a, x);
  require_of(a, y);
  const std::size_t n = a.dim();
  const Matrix system = stacked_left_brackets(a);
  Vec rhs;
  rhs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ji = a.jacobian_coords(unit_vec(n, i), x.coords(), y.coords());
    rhs.insert(rhs.end(), ji.begin(), ji.end());
  }
  const auto d = solve(system, rhs);
  Subspace ker = kernel(system);
  if (!d)
    return DeltaSolution{std::nullopt, std::move(ker), DeltaStatus::NoSolution};
  const DeltaStatus status = ker.is_zero() ? DeltaStatus::Unique : DeltaStatus::NonUnique;
  return DeltaSolution{a.element(*d), std::move(ker), status};
}

Matrix delta_operator(const Algebra& a, const Element& x, const Element& y) {
  require_malcev(a);
  require_of(a, x);
  require_of(a, y);
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(a.jacobian_coords(unit_vec(n, j), x.coords(), y.coords()));
  return Matrix::from_cols(cols, n);
}

Subspace delta_span(const Algebra& a) {
  require_malcev(a);
  const std::size_t n = a.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Vec> cols;
      cols.reserve(n);
      for (std::size_t k = 0; k < n; ++k)
        cols.push_back(a.jacobian_coords(unit_vec(n, k), unit_vec(n, i), unit_vec(n, j)));
      gens.push_back(Matrix::from_cols(cols, n).flatten());
    }
  return Subspace::span(gens, n * n);
}

bool lie_closure_check(const Subspace& span) {
  std::size_t side = 0;
  while (side * side < span.ambient_dim()) ++side;
  if (side * side != span.ambient_dim())
    throw Error(Errc::DimensionMismatch, "ambient space is not a matrix space");
  for (const auto& f1 : span.basis()) {
    const Matrix d1 = Matrix::unflatten(f1, side);
    for (const auto& f2 : span.basis()) {
      const Matrix d2 = Matrix::unflatten(f2, side);
      if (!span.contains((d1 * d2 - d2 * d1).flatten())) return false;
    }
  }
  return true;
}

}  // namespace malcev
