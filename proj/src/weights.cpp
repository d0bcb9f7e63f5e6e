#include "malcev/weights.hpp"

#include <tuple>
#include <utility>

#include "malcev/charpoly.hpp"
#include "malcev/errors.hpp"

namespace malcev {

namespace {

void require_direct(const Decomposition& ctx) {
  if (!ctx.direct || !ctx.pi)
    throw Error(Errc::NotDirect,
                ctx.algebra->name() + ": nucleus + Jacobian span is not a direct decomposition");
}

Vec ambient_from_nucleus(const Decomposition& ctx, const Vec& coords) {
  Vec v = zero_vec(ctx.algebra->dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) v = vec_add(v, vec_scale(coords[i], ctx.n.basis()[i]));
  return v;
}

Subspace ambient_from_nucleus(const Decomposition& ctx, const Subspace& s) {
  std::vector<Vec> gens;
  gens.reserve(s.dim());
  for (const auto& v : s.basis()) gens.push_back(ambient_from_nucleus(ctx, v));
  return Subspace::span(gens, ctx.algebra->dim());
}

}  // namespace

Matrix adjoint_action(const Decomposition& ctx, const Element& a) {
  require_direct(ctx);
  if (&a.algebra() != ctx.algebra)
    throw Error(Errc::AlgebraMismatch, "element from a different algebra");
  const Vec pa = ctx.pi->apply(a.coords());
  const std::size_t k = ctx.n.dim();
  std::vector<Vec> cols;
  cols.reserve(k);
  for (const auto& nb : ctx.n.basis()) {
    const Vec image = ctx.algebra->bracket_coords(pa, nb);
    const auto coords = ctx.n.coordinates(image);
    if (!coords)
      throw Error(Errc::NotInN, "bracket with a nucleus vector left the nucleus");
    cols.push_back(*coords);
  }
  return Matrix::from_cols(cols, k);
}

bool is_nilpotent_subalgebra(const Algebra& a, const Subspace& h) {
  if (h.ambient_dim() != a.dim())
    throw Error(Errc::DimensionMismatch, "subalgebra ambient != algebra dim");
  for (const auto& x : h.basis())
    for (const auto& y : h.basis())
      if (!h.contains(a.bracket_coords(x, y)))
        throw Error(Errc::NotASubalgebra, "not closed under the bracket");

  Subspace term = h;
  for (;;) {
    std::vector<Vec> gens;
    for (const auto& x : h.basis())
      for (const auto& y : term.basis()) gens.push_back(a.bracket_coords(x, y));
    const Subspace next = Subspace::span(gens, a.dim());
    if (next.is_zero()) return true;
    if (next.dim() == term.dim()) return false;
    term = next;
  }
}

WeightDecomposition weight_decomposition(const Decomposition& ctx, const Subspace& h) {
  require_direct(ctx);
  const Algebra& a = *ctx.algebra;
  if (!ctx.n.contains(h))
    throw Error(Errc::NotInsideN, "acting subalgebra must lie in the nucleus");
  if (!is_nilpotent_subalgebra(a, h))
    throw Error(Errc::NotNilpotent, "acting subalgebra has a stable lower central series");

  const std::size_t k = ctx.n.dim();
  const std::size_t m = h.dim();

  std::vector<Matrix> action;
  std::vector<std::vector<Rational>> root_sets;
  bool all_split = true;
  for (const auto& gen : h.basis()) {
    const Matrix ad = adjoint_action(ctx, a.element(gen));
    const RootReport roots = rational_roots(char_poly(ad));
    if (!roots.splits) all_split = false;
    std::vector<Rational> values;
    for (const auto& [r, mult] : roots.roots) values.push_back(r);
    action.push_back(ad);
    root_sets.push_back(std::move(values));
  }

  // Candidate weights: Cartesian product of the per-generator root sets.
  std::vector<Vec> candidates{Vec{}};
  for (const auto& values : root_sets) {
    std::vector<Vec> grown;
    for (const auto& partial : candidates)
      for (const auto& r : values) {
        Vec tuple = partial;
        tuple.push_back(r);
        grown.push_back(std::move(tuple));
      }
    candidates = std::move(grown);
  }

  std::vector<WeightSpace> spaces;
  std::size_t total = 0;
  for (const auto& tuple : candidates) {
    Subspace space = Subspace::full(k);
    for (std::size_t i = 0; i < m; ++i)
      space = subspace_intersect(space, generalized_kernel(action[i], tuple[i]));
    if (space.is_zero() && k > 0) continue;
    total += space.dim();
    spaces.push_back(WeightSpace{WeightFunction{tuple}, ambient_from_nucleus(ctx, space)});
  }
  const bool complete = total == k;

  const auto find_space = [&](const Vec& tuple) -> Subspace {
    for (const auto& ws : spaces)
      if (ws.weight.values == tuple) return ws.space;
    return Subspace::zero(a.dim());
  };

  const bool h_in_zero = find_space(zero_vec(m)).contains(h);

  bool graded = true;
  for (const auto& wa : spaces)
    for (const auto& wb : spaces) {
      const Subspace target = find_space(vec_add(wa.weight.values, wb.weight.values));
      for (const auto& x : wa.space.basis())
        for (const auto& y : wb.space.basis())
          if (!target.contains(a.bracket_coords(x, y))) graded = false;
    }

  return WeightDecomposition{h, std::move(spaces), all_split, complete, h_in_zero, graded};
}

LiftReport lift_weight_spaces(const Decomposition& ctx, const WeightDecomposition& w,
                              const Subspace& H) {
  require_direct(ctx);
  const Algebra& a = *ctx.algebra;
  const std::size_t dim = a.dim();
  {
    std::vector<Vec> images;
    for (const auto& v : H.basis()) images.push_back(ctx.pi->apply(v));
    if (Subspace::span(images, dim) != w.h_space)
      throw Error(Errc::HMismatch, "projection of H differs from the acting subalgebra");
  }

  LiftReport report;
  report.lifted = w.spaces;
  report.h_in_zero = w.h_in_zero;
  report.graded = w.graded;

  const std::size_t m = w.h_space.dim();
  const auto is_zero_weight = [&](const WeightSpace& ws) {
    return ws.weight.values == zero_vec(m);
  };

  const auto direct_sum_of = [&](const std::vector<Subspace>& parts) {
    std::size_t total = 0;
    Subspace sum = Subspace::zero(dim);
    for (const auto& p : parts) {
      total += p.dim();
      sum = subspace_sum(sum, p);
    }
    return std::pair<bool, std::size_t>{sum.is_full() && sum.dim() == total, total};
  };

  std::vector<Subspace> literal;
  for (const auto& ws : report.lifted) literal.push_back(ws.space);
  std::tie(report.literal_direct, report.literal_total_dim) = direct_sum_of(literal);

  Subspace zero_part = Subspace::zero(dim);
  std::vector<Subspace> extended;
  for (const auto& ws : report.lifted)
    if (is_zero_weight(ws))
      zero_part = ws.space;
    else
      extended.push_back(ws.space);
  extended.insert(extended.begin(), subspace_sum(zero_part, ctx.j));
  std::tie(report.extended_direct, report.extended_total_dim) = direct_sum_of(extended);

  return report;
}

}  // namespace malcev
