#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malcev/catalog.hpp"
#include "malcev/errors.hpp"
#include "malcev/ideals.hpp"

using namespace malcev;

namespace {

Vec V(std::initializer_list<long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

Algebra make_broken() {
  return Algebra("broken", {"a", "b", "c"},
                 {{0, 1, V({0, 0, 1})}, {0, 2, V({1, 0, 0})}});
}

Subspace block(std::size_t ambient, std::size_t lo, std::size_t hi) {
  std::vector<Vec> gens;
  for (std::size_t i = lo; i < hi; ++i) gens.push_back(unit_vec(ambient, i));
  return Subspace::span(gens, ambient);
}

}  // namespace

TEST_CASE("jacobian span and nucleus across the catalog") {
  for (const char* lie : {"abelian1", "abelian2", "abelian3", "sl2", "cross3", "heisenberg3"}) {
    const Algebra& a = catalog_algebra(lie);
    CHECK(j_ideal(a).space.is_zero());
    CHECK(j_nucleus(a).space.is_full());
  }

  const Algebra& m7 = catalog_algebra("M7");
  CHECK(j_ideal(m7).space.is_full());
  CHECK(j_nucleus(m7).space.is_zero());

  const Algebra& solv = catalog_algebra("solv4");
  const Subspace line = Subspace::span({V({0, 0, 0, 1})}, 4);
  CHECK(j_ideal(solv).space == line);
  CHECK(j_nucleus(solv).space == line);

  const Algebra& sm = catalog_algebra("sl2_plus_M7");
  CHECK(j_ideal(sm).space == block(10, 3, 10));
  CHECK(j_nucleus(sm).space == block(10, 0, 3));
  CHECK(j_nucleus(sm).contains_j == false);
  CHECK(j_ideal(sm).contains_j);
}

TEST_CASE("identity gate") {
  const Algebra broken = make_broken();
  CHECK_THROWS_AS(j_ideal(broken), Error);
  CHECK_THROWS_AS(decompose(broken), Error);
  try {
    j_nucleus(broken);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMalcev);
  }
}

TEST_CASE("nucleus annihilates the Jacobian span") {
  for (const Algebra& a : catalog()) CHECK(check_annihilation(a));
}

TEST_CASE("decompose sl2") {
  const Decomposition ctx = decompose(catalog_algebra("sl2"));
  CHECK(ctx.j.is_zero());
  CHECK(ctx.n.is_full());
  CHECK(ctx.direct);
  REQUIRE(ctx.pi.has_value());
  CHECK(*ctx.pi == Matrix::identity(3));
  CHECK(ctx.phi == Matrix::identity(3));
  CHECK(ctx.quotient.dim() == 3);
  CHECK(ctx.quotient_is_lie);
}

TEST_CASE("decompose M7: everything falls into the Jacobian span") {
  const Decomposition ctx = decompose(catalog_algebra("M7"));
  CHECK(ctx.j.is_full());
  CHECK(ctx.n.is_zero());
  CHECK(ctx.direct);
  REQUIRE(ctx.pi.has_value());
  CHECK(ctx.pi->is_zero());
  CHECK(ctx.quotient.dim() == 0);
  CHECK(ctx.quotient_is_lie);
}

TEST_CASE("decompose solv4: the decomposition is not direct") {
  const Decomposition ctx = decompose(catalog_algebra("solv4"));
  CHECK(ctx.j == ctx.n);
  CHECK(ctx.j.dim() == 1);
  CHECK_FALSE(ctx.direct);
  CHECK_FALSE(ctx.pi.has_value());
  REQUIRE(ctx.quotient.dim() == 3);
  CHECK(ctx.quotient_is_lie);
  CHECK(ctx.quotient.constants(0, 1) == V({0, 1, 0}));
  CHECK(ctx.quotient.constants(0, 2) == V({0, 0, 1}));
  CHECK(ctx.quotient.constants(1, 2) == V({0, 0, 0}));
}

TEST_CASE("decompose sl2_plus_M7: projection identities") {
  const Decomposition ctx = decompose(catalog_algebra("sl2_plus_M7"));
  CHECK(ctx.direct);
  CHECK(ctx.quotient_is_lie);
  CHECK(ctx.quotient.dim() == 3);
  REQUIRE(ctx.pi.has_value());
  const Matrix& pi = *ctx.pi;

  CHECK(pi * pi == pi);
  for (const auto& v : ctx.n.basis()) CHECK(pi.apply(v) == v);
  CHECK(kernel(pi) == ctx.j);
  std::vector<Vec> images;
  for (std::size_t i = 0; i < 10; ++i) images.push_back(pi.apply(unit_vec(10, i)));
  CHECK(Subspace::span(images, 10) == ctx.n);
}

TEST_CASE("minimality of the Jacobian span among Lie-quotient ideals") {
  const Algebra& sm = catalog_algebra("sl2_plus_M7");
  const Decomposition ctx = decompose(sm);

  const IdealHandle sl2_block{&sm, block(10, 0, 3), false};
  const MinimalityReport r1 = j_minimality_check(sm, sl2_block);
  CHECK_FALSE(r1.quotient_is_lie);
  CHECK_FALSE(r1.contains_j);
  CHECK(r1.holds);

  const IdealHandle jh{&sm, ctx.j, true};
  const MinimalityReport r2 = j_minimality_check(sm, jh);
  CHECK(r2.quotient_is_lie);
  CHECK(r2.contains_j);
  CHECK(r2.holds);

  const IdealHandle full{&sm, Subspace::full(10), true};
  CHECK(j_minimality_check(sm, full).holds);

  const IdealHandle bad{&sm, Subspace::span({unit_vec(10, 1)}, 10), false};
  CHECK_THROWS_AS(j_minimality_check(sm, bad), Error);

  for (const Algebra& a : catalog())
    for (const IdealHandle& h : enumerate_ideals(a, 2))
      CHECK(j_minimality_check(a, h).holds);
}

TEST_CASE("ideal generation by closure") {
  const Algebra& sl2 = catalog_algebra("sl2");
  CHECK(ideal_generated_by(sl2, {sl2.zero()}).space.is_zero());
  CHECK(ideal_generated_by(sl2, {sl2.basis_element(1)}).space.is_full());

  const Algebra& m7 = catalog_algebra("M7");
  for (std::size_t i = 0; i < 7; ++i)
    CHECK(ideal_generated_by(m7, {m7.basis_element(i)}).space.is_full());

  const Algebra& solv = catalog_algebra("solv4");
  const IdealHandle h = ideal_generated_by(solv, {solv.basis_element(1)});
  CHECK(h.space == Subspace::span({V({0, 1, 0, 0}), V({0, 0, 0, 1})}, 4));
  CHECK(h.contains_j);
  CHECK(is_ideal(solv, h.space));

  CHECK_THROWS_AS(ideal_generated_by(solv, {sl2.basis_element(0)}), Error);
}

TEST_CASE("ideal products") {
  const Algebra& sl2 = catalog_algebra("sl2");
  const IdealHandle full{&sl2, Subspace::full(3), true};
  const IdealHandle zero{&sl2, Subspace::zero(3), false};
  CHECK(ideal_product(full, zero).is_zero());
  CHECK(ideal_product(full, full).is_full());

  const Algebra& solv = catalog_algebra("solv4");
  const IdealHandle p{&solv, Subspace::span({V({0, 1, 0, 0}), V({0, 0, 0, 1})}, 4), true};
  const IdealHandle q{&solv, Subspace::span({V({0, 0, 1, 0}), V({0, 0, 0, 1})}, 4), true};
  const Subspace prod = ideal_product(p, q);
  CHECK(prod == Subspace::span({V({0, 0, 0, 1})}, 4));
  CHECK(is_ideal(solv, prod));

  const IdealHandle other{&sl2, Subspace::full(3), true};
  CHECK_THROWS_AS(ideal_product(other, p), Error);
}

TEST_CASE("ideal enumeration on solv4 is exhaustive and ordered") {
  const Algebra& solv = catalog_algebra("solv4");
  const auto ideals = enumerate_ideals(solv, 2);
  REQUIRE(ideals.size() == 6);
  CHECK(ideals[0].space.is_zero());
  CHECK(ideals[1].space.is_full());
  CHECK(ideals[2].space == Subspace::span({V({0, 1, 0, 0}), V({0, 0, 0, 1})}, 4));
  CHECK(ideals[3].space == Subspace::span({V({0, 0, 1, 0}), V({0, 0, 0, 1})}, 4));
  CHECK(ideals[4].space == Subspace::span({V({0, 0, 0, 1})}, 4));
  CHECK(ideals[5].space ==
        Subspace::span({V({0, 1, 0, 0}), V({0, 0, 1, 0}), V({0, 0, 0, 1})}, 4));
  CHECK_FALSE(ideals[0].contains_j);
  for (std::size_t i = 1; i < 6; ++i) CHECK(ideals[i].contains_j);
  for (const auto& h : ideals) CHECK(is_ideal(solv, h.space));

  const auto m7_ideals = enumerate_ideals(catalog_algebra("M7"), 1);
  REQUIRE(m7_ideals.size() == 2);
  CHECK(m7_ideals[0].space.is_zero());
  CHECK(m7_ideals[1].space.is_full());
}

TEST_CASE("nucleus ideal predicate") {
  const Decomposition ctx = decompose(catalog_algebra("sl2_plus_M7"));
  CHECK(is_nucleus_ideal(ctx, Subspace::zero(10)));
  CHECK(is_nucleus_ideal(ctx, ctx.n));
  CHECK_FALSE(is_nucleus_ideal(ctx, Subspace::span({unit_vec(10, 1)}, 10)));
  CHECK_FALSE(is_nucleus_ideal(ctx, Subspace::span({unit_vec(10, 3)}, 10)));

  const Decomposition bad = decompose(catalog_algebra("solv4"));
  CHECK_THROWS_AS(is_nucleus_ideal(bad, Subspace::zero(4)), Error);
  try {
    correspondence_check(bad, Subspace::zero(4));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDirect);
  }
}

TEST_CASE("ideal correspondence through the projection") {
  const Algebra& sm = catalog_algebra("sl2_plus_M7");
  const Decomposition ctx = decompose(sm);

  for (const auto& h : enumerate_ideals(sm, 2)) {
    const CorrespondenceResult r = correspondence_check(ctx, h.space);
    CHECK(r.forward);
    CHECK(r.backward);
  }

  const CorrespondenceResult on_j = correspondence_check(ctx, ctx.j);
  CHECK(on_j.forward);
  CHECK(on_j.backward);

  // Non-ideal: forward holds vacuously.
  const Subspace skew = Subspace::span({vec_add(unit_vec(10, 0), unit_vec(10, 3))}, 10);
  CHECK_FALSE(is_ideal(sm, skew));
  CHECK(correspondence_check(ctx, skew).forward);
}

TEST_CASE("coprime nucleus-ideal products") {
  const Decomposition sm = decompose(catalog_algebra("sl2_plus_M7"));
  const CoprimeResult both_full = coprime_product_check(sm, sm.n, sm.n);
  CHECK(both_full.coprime);
  CHECK(both_full.product_is_nucleus_ideal);
  const CoprimeResult with_zero = coprime_product_check(sm, sm.n, Subspace::zero(10));
  CHECK(with_zero.coprime);
  CHECK(with_zero.product_is_nucleus_ideal);
  CHECK_THROWS_AS(
      coprime_product_check(sm, Subspace::span({unit_vec(10, 1)}, 10), sm.n), Error);

  const Decomposition heis = decompose(catalog_algebra("heisenberg3"));
  const Subspace p = Subspace::span({V({1, 0, 0}), V({0, 0, 1})}, 3);
  const Subspace q = Subspace::span({V({0, 1, 0}), V({0, 0, 1})}, 3);
  CHECK(is_nucleus_ideal(heis, p));
  CHECK(is_nucleus_ideal(heis, q));
  const CoprimeResult r = coprime_product_check(heis, p, q);
  CHECK(r.coprime);
  CHECK(r.product_is_nucleus_ideal);

  const CoprimeResult non = coprime_product_check(heis, p, p);
  CHECK_FALSE(non.coprime);
}

TEST_CASE("nucleus ideal enumeration") {
  const Decomposition sm = decompose(catalog_algebra("sl2_plus_M7"));
  const auto sm_list = enumerate_nucleus_ideals(sm, 2);
  REQUIRE(sm_list.size() == 2);
  CHECK(sm_list[0].is_zero());
  CHECK(sm_list[1] == sm.n);

  const Decomposition heis = decompose(catalog_algebra("heisenberg3"));
  const auto hl = enumerate_nucleus_ideals(heis, 2);
  REQUIRE(hl.size() == 5);
  CHECK(hl[0].is_zero());
  CHECK(hl[1] == Subspace::span({V({1, 0, 0}), V({0, 0, 1})}, 3));
  CHECK(hl[2] == Subspace::span({V({0, 1, 0}), V({0, 0, 1})}, 3));
  CHECK(hl[3] == Subspace::span({V({0, 0, 1})}, 3));
  CHECK(hl[4].is_full());
  for (const auto& x : hl) CHECK(is_nucleus_ideal(heis, x));
}

TEST_CASE("no product counterexample at desk scale") {
  CHECK_FALSE(product_counterexample_search(catalog_algebra("sl2"), 2).has_value());
  CHECK_FALSE(product_counterexample_search(catalog_algebra("M7"), 1).has_value());
  CHECK_FALSE(product_counterexample_search(catalog_algebra("solv4"), 4).has_value());
}
