#include "malcev/ideals.hpp"

#include "malcev/errors.hpp"

namespace malcev {

namespace {

void require_malcev(const Algebra& a) {
  if (!validate(a).is_malcev)
    throw Error(Errc::NotMalcev, a.name() + " fails the linearized identity");
}

// Span of all basis-triple Jacobians; no identity gate so it can back the
// contains_j cache on arbitrary anticommutative algebras.
Subspace jacobian_span(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        gens.push_back(a.jacobian_coords(unit_vec(n, i), unit_vec(n, j), unit_vec(n, k)));
  return Subspace::span(gens, n);
}

Subspace nucleus_space(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Subspace::zero(0);
  std::vector<Vec> stacked;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // Rows of the matrix of x -> J(x, e_i, e_j).
      std::vector<Vec> cols;
      for (std::size_t k = 0; k < n; ++k)
        cols.push_back(a.jacobian_coords(unit_vec(n, k), unit_vec(n, i), unit_vec(n, j)));
      const Matrix block = Matrix::from_cols(cols, n);
      for (std::size_t r = 0; r < n; ++r) stacked.push_back(block.row(r));
    }
  if (stacked.empty()) return Subspace::full(n);
  return kernel(Matrix::from_rows(stacked, n));
}

Subspace ideal_closure(const Algebra& a, std::vector<Vec> gens) {
  const std::size_t n = a.dim();
  Subspace s = Subspace::span(gens, n);
  for (;;) {
    std::vector<Vec> next = s.basis();
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& v : s.basis()) next.push_back(a.bracket_coords(unit_vec(n, i), v));
    const Subspace grown = Subspace::span(next, n);
    if (grown.dim() == s.dim()) return grown;
    s = grown;
  }
}

// Subsets of {0..count-1} of size <= cap, smaller subsets first, then
// lexicographic. The empty seed (zero ideal) comes first.
std::vector<std::vector<std::size_t>> seed_subsets(std::size_t count, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::size_t> pick;
  auto extend = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (pick.size() == size) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < count; ++i) {
      pick.push_back(i);
      self(self, i + 1, size);
      pick.pop_back();
    }
  };
  for (std::size_t size = 1; size <= cap && size <= count; ++size) extend(extend, 0, size);
  return out;
}

Subspace project(const Matrix& pi, const Subspace& s) {
  std::vector<Vec> images;
  images.reserve(s.dim());
  for (const auto& v : s.basis()) images.push_back(pi.apply(v));
  return Subspace::span(images, s.ambient_dim());
}

void require_direct(const Decomposition& ctx) {
  if (!ctx.direct || !ctx.pi)
    throw Error(Errc::NotDirect, ctx.algebra->name() + ": nucleus + Jacobian span is not a direct decomposition");
}

}  // namespace

IdealHandle j_ideal(const Algebra& a) {
  require_malcev(a);
  Subspace s = jacobian_span(a);
  if (!is_ideal(a, s))
    throw Error(Errc::NotAnIdeal, "Jacobian span failed the ideal check");
  return IdealHandle{&a, std::move(s), true};
}

IdealHandle j_nucleus(const Algebra& a) {
  require_malcev(a);
  Subspace s = nucleus_space(a);
  if (!is_ideal(a, s))
    throw Error(Errc::NotAnIdeal, "nucleus failed the ideal check");
  const bool cj = s.contains(jacobian_span(a));
  return IdealHandle{&a, std::move(s), cj};
}

bool check_annihilation(const Algebra& a) {
  const Subspace j = jacobian_span(a);
  const Subspace n = nucleus_space(a);
  for (const auto& x : n.basis())
    for (const auto& y : j.basis())
      if (!vec_is_zero(a.bracket_coords(x, y))) return false;
  return true;
}

Decomposition decompose(const Algebra& a) {
  require_malcev(a);
  const std::size_t dim = a.dim();
  Subspace j = jacobian_span(a);
  Subspace n = nucleus_space(a);
  const bool direct =
      subspace_intersect(n, j).is_zero() && subspace_sum(n, j).is_full();

  Quotient q = quotient_algebra(a, j);
  const bool quotient_is_lie = validate(q.algebra).is_lie;

  std::optional<Matrix> pi;
  if (direct) {
    // Columns of the split are the N-basis then the J-basis; x's N-component
    // uses the first dim(N) coefficients of the inverse applied to x.
    std::vector<Vec> cols = n.basis();
    cols.insert(cols.end(), j.basis().begin(), j.basis().end());
    const auto inv = inverse(Matrix::from_cols(cols, dim));
    if (!inv) throw Error(Errc::NotDirect, "component split is singular");
    std::vector<Vec> top_rows;
    for (std::size_t r = 0; r < n.dim(); ++r) top_rows.push_back(inv->row(r));
    pi = Matrix::from_cols(n.basis(), dim) * Matrix::from_rows(top_rows, dim);
  }

  return Decomposition{&a,    std::move(j),       std::move(n), direct,
                       q.projection, std::move(q.algebra), quotient_is_lie, std::move(pi)};
}

MinimalityReport j_minimality_check(const Algebra& a, const IdealHandle& candidate) {
  if (candidate.algebra != &a)
    throw Error(Errc::AlgebraMismatch, "candidate from a different algebra");
  if (!is_ideal(a, candidate.space))
    throw Error(Errc::NotAnIdeal, "minimality candidate is not an ideal");
  const Quotient q = quotient_algebra(a, candidate.space);
  const bool quotient_is_lie = validate(q.algebra).is_lie;
  const bool contains_j = candidate.space.contains(jacobian_span(a));
  return MinimalityReport{quotient_is_lie, contains_j, !quotient_is_lie || contains_j};
}

IdealHandle ideal_generated_by(const Algebra& a, const std::vector<Element>& seed) {
  std::vector<Vec> gens;
  gens.reserve(seed.size());
  for (const auto& x : seed) {
    if (&x.algebra() != &a)
      throw Error(Errc::AlgebraMismatch, "seed element from a different algebra");
    gens.push_back(x.coords());
  }
  Subspace s = ideal_closure(a, std::move(gens));
  const bool cj = s.contains(jacobian_span(a));
  return IdealHandle{&a, std::move(s), cj};
}

Subspace ideal_product(const IdealHandle& p, const IdealHandle& q) {
  if (p.algebra != q.algebra)
    throw Error(Errc::AlgebraMismatch, "product of ideals of different algebras");
  const Algebra& a = *p.algebra;
  std::vector<Vec> gens;
  for (const auto& x : p.space.basis())
    for (const auto& y : q.space.basis()) gens.push_back(a.bracket_coords(x, y));
  return Subspace::span(gens, a.dim());
}

bool is_nucleus_ideal(const Decomposition& ctx, const Subspace& x) {
  require_direct(ctx);
  if (!ctx.n.contains(x)) return false;
  for (const auto& nu : ctx.n.basis())
    for (const auto& v : x.basis())
      if (!x.contains(ctx.algebra->bracket_coords(nu, v))) return false;
  return true;
}

CorrespondenceResult correspondence_check(const Decomposition& ctx, const Subspace& s) {
  require_direct(ctx);
  const Subspace image = project(*ctx.pi, s);
  const bool ideal = is_ideal(*ctx.algebra, s);
  const bool image_nucleus_ideal = is_nucleus_ideal(ctx, image);
  const bool saturated = s == subspace_sum(image, ctx.j);
  return CorrespondenceResult{!ideal || image_nucleus_ideal,
                              !(image_nucleus_ideal && saturated) || ideal};
}

CoprimeResult coprime_product_check(const Decomposition& ctx, const Subspace& p,
                                    const Subspace& q) {
  require_direct(ctx);
  if (!is_nucleus_ideal(ctx, p) || !is_nucleus_ideal(ctx, q))
    throw Error(Errc::NotIIdeal, "coprime check needs nucleus ideals");
  const bool coprime = subspace_sum(p, q) == ctx.n;
  std::vector<Vec> gens;
  for (const auto& x : p.basis())
    for (const auto& y : q.basis()) gens.push_back(ctx.algebra->bracket_coords(x, y));
  const Subspace product = Subspace::span(gens, ctx.algebra->dim());
  return CoprimeResult{coprime, is_nucleus_ideal(ctx, product)};
}

std::vector<IdealHandle> enumerate_ideals(const Algebra& a, std::size_t max_seed_size) {
  const std::size_t n = a.dim();
  const Subspace jspan = jacobian_span(a);
  std::vector<IdealHandle> out;
  for (const auto& subset : seed_subsets(n, max_seed_size)) {
    std::vector<Vec> gens;
    for (std::size_t i : subset) gens.push_back(unit_vec(n, i));
    Subspace s = ideal_closure(a, std::move(gens));
    bool fresh = true;
    for (const auto& h : out)
      if (h.space == s) {
        fresh = false;
        break;
      }
    if (fresh) {
      const bool cj = s.contains(jspan);
      out.push_back(IdealHandle{&a, std::move(s), cj});
    }
  }
  return out;
}

std::vector<Subspace> enumerate_nucleus_ideals(const Decomposition& ctx,
                                               std::size_t max_seed_size) {
  require_direct(ctx);
  const Algebra& a = *ctx.algebra;
  const std::size_t dim = a.dim();
  std::vector<Subspace> out;
  for (const auto& subset : seed_subsets(ctx.n.dim(), max_seed_size)) {
    std::vector<Vec> gens;
    for (std::size_t i : subset) gens.push_back(ctx.n.basis()[i]);
    // Closure under bracketing with nucleus basis vectors only.
    Subspace s = Subspace::span(gens, dim);
    for (;;) {
      std::vector<Vec> next = s.basis();
      for (const auto& nu : ctx.n.basis())
        for (const auto& v : s.basis()) next.push_back(a.bracket_coords(nu, v));
      const Subspace grown = Subspace::span(next, dim);
      if (grown.dim() == s.dim()) break;
      s = grown;
    }
    bool fresh = true;
    for (const auto& seen : out)
      if (seen == s) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(std::move(s));
  }
  return out;
}

std::optional<ProductCounterexample> product_counterexample_search(
    const Algebra& a, std::size_t max_seed_size) {
  require_malcev(a);
  const std::vector<IdealHandle> ideals = enumerate_ideals(a, max_seed_size);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t k = i; k < ideals.size(); ++k) {
      Subspace product = ideal_product(ideals[i], ideals[k]);
      if (!is_ideal(a, product))
        return ProductCounterexample{ideals[i], ideals[k], std::move(product)};
    }
  return std::nullopt;
}

}  // namespace malcev
