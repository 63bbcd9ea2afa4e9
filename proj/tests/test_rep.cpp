#include <doctest.h>

#include <random>

#include "commahom/errors.hpp"
#include "commahom/rep.hpp"
#include "fixtures.hpp"

using namespace commahom;
using namespace fixtures;

TEST_CASE("hom dimensions over A2") {
  auto a = a2();
  Rep s1 = simple(a, "1"), s2 = simple(a, "2"), p1 = proj(a, "1");
  CHECK(hom_dim(s1, s1) == 1);
  CHECK(hom_dim(s1, s2) == 0);
  CHECK(hom_dim(s2, p1) == 1);
  CHECK(hom_dim(p1, s1) == 1);
  CHECK(hom_dim(p1, s2) == 0);
  CHECK(hom_dim(p1, p1) == 1);
}

TEST_CASE("Hom(P(i), M) has dimension dim M_i") {
  for (auto alg : {example_s(), example_lambda(), zero_square()}) {
    std::vector<Rep> mods;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      mods.push_back(standard_module(alg, StandardKind::injective, v));
      mods.push_back(standard_module(alg, StandardKind::projective, v));
      mods.push_back(standard_module(alg, StandardKind::simple, v));
    }
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      Rep p = standard_module(alg, StandardKind::projective, v);
      Rep e = standard_module(alg, StandardKind::injective, v);
      for (const auto& m : mods) {
        CHECK(hom_dim(p, m) == m.dim(v));
        CHECK(hom_dim(m, e) == m.dim(v));
      }
    }
  }
}

TEST_CASE("invalid reps and morphisms are rejected") {
  auto s = example_s();
  // a1 and a2 both acting by 1 violates a1a2 = 0.
  CHECK_THROWS_AS(thin(s, {"1", "2", "3"}, {"a1", "a2"}), InvalidRep);
  auto a = a2();
  Rep s1 = simple(a, "1"), p1 = proj(a, "1");
  // The projection P(1) -> S(1) is fine, the "inclusion" S(1) -> P(1) is not.
  std::vector<Matrix> blocks{Matrix::identity(a->field(), 1), Matrix(a->field(), 1, 0)};
  CHECK_NOTHROW(RepMor(p1, s1, {Matrix::identity(a->field(), 1), Matrix(a->field(), 0, 1)}));
  CHECK_THROWS_AS(RepMor(s1, p1, {Matrix::identity(a->field(), 1), Matrix(a->field(), 1, 0)}), InvalidRep);
}

TEST_CASE("kernel, image and cokernel") {
  auto a = a2();
  Rep p1 = proj(a, "1"), s1 = simple(a, "1"), s2 = simple(a, "2");
  auto hb = hom_basis(p1, s1);
  REQUIRE(hb.size() == 1);
  const RepMor& pi = hb[0];
  CHECK(pi.is_epi());
  CHECK_FALSE(pi.is_mono());
  auto k = kernel(pi);
  CHECK(is_iso(k.rep, s2));
  CHECK(k.inclusion.is_mono());
  CHECK((pi * k.inclusion).is_zero());
  auto c = cokernel(k.inclusion);
  CHECK(is_iso(c.rep, s1));
  CHECK(image(pi).rep.total_dim() == 1);
}

TEST_CASE("direct sums split") {
  auto s = example_s();
  Rep a = proj(s, "4"), b = inj(s, "1");
  std::vector<Rep> parts{a, b};
  auto ds = direct_sum(s, parts);
  CHECK(ds.sum.total_dim() == a.total_dim() + b.total_dim());
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      RepMor c = ds.projections[i] * ds.injections[j];
      if (i == j) CHECK(c.is_iso()); else CHECK(c.is_zero());
    }
  }
  CHECK(hom_dim(ds.sum, ds.sum) ==
        hom_dim(a, a) + hom_dim(a, b) + hom_dim(b, a) + hom_dim(b, b));
}

TEST_CASE("duality") {
  auto s = example_s();
  for (std::size_t v = 0; v < s->vertex_count(); ++v) {
    Rep p = standard_module(s, StandardKind::projective, v);
    Rep e_op = standard_module(opposite(s), StandardKind::injective, v);
    CHECK(is_iso(dual(p), e_op));
    CHECK(dual(dual(p)) == p);
  }
  auto hb = hom_basis(proj(s, "4"), simple(s, "4"));
  REQUIRE(hb.size() == 1);
  RepMor d = dual(hb[0]);
  CHECK(d.is_mono());
}

TEST_CASE("isomorphism search") {
  auto s = example_s();
  CHECK(is_iso(proj(s, "1"), inj(s, "2")));
  CHECK_FALSE(is_iso(proj(s, "4"), inj(s, "4")));
  CHECK_FALSE(is_iso(simple(s, "1"), simple(s, "2")));
  // A base-changed copy is still isomorphic.
  Rep p4 = proj(s, "4");
  Rep twice = direct_sum(p4, simple(s, "5"));
  std::mt19937_64 rng(3);
  std::vector<Matrix> g;
  for (std::size_t v = 0; v < s->vertex_count(); ++v) {
    Matrix m = Matrix::identity(s->field(), twice.dim(v));
    do m = Matrix::random(s->field(), twice.dim(v), twice.dim(v), rng);
    while (!is_invertible(m));
    g.push_back(m);
  }
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < s->quiver().arrow_count(); ++a) {
    const auto& ar = s->quiver().arrow(a);
    act.push_back(g[ar.target] * twice.action(a) * *inverse(g[ar.source]));
  }
  Rep conj(s, twice.dims(), act);
  auto iso = find_iso(twice, conj);
  REQUIRE(iso);
  CHECK(iso->is_iso());
}

TEST_CASE("HomSpace coordinates round trip") {
  auto s = example_s();
  Rep m = direct_sum(proj(s, "4"), inj(s, "1"));
  HomSpace h(m, m);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vec c = h.coordinates_of(h.basis()[i]);
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == (i == j ? s->field().one() : s->field().zero()));
  }
  RepMor id = RepMor::identity(m);
  CHECK(h.element(h.coordinates_of(id)).coordinates() == id.coordinates());
}
