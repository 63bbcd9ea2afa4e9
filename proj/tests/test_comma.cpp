#include <doctest.h>

#include "commahom/comma.hpp"
#include "commahom/errors.hpp"
#include "comma_fixtures.hpp"
#include "fixtures.hpp"

using namespace commahom;
using namespace fixtures;


TEST_CASE("setup validation") {
  auto setup = example_setup();
  CHECK(setup.bimodule_dim() == 1);
  CHECK(setup.bimodule_r().total_dim() == 1);
  CHECK(is_iso(setup.bimodule_dual_s(), simple(example_s(), "5")));

  auto missing = example_partition();
  missing.erase("3");
  CHECK_THROWS_AS(TriangularSetup(example_r(), example_s(), example_lambda(), missing), HypothesisFailed);

  auto flipped = example_partition();
  for (auto& [v, side] : flipped) side = side == Side::r ? Side::s : Side::r;
  CHECK_THROWS_AS(TriangularSetup(example_s(), example_r(), example_lambda(), flipped), HypothesisFailed);

  // Dropping a6a7 makes Lambda too big for R + S + M with M_5 = k.
  auto bigger = make(Field::prime(2), {"1", "2", "3", "4", "5", "6", "7"},
                     {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "4"}, {"a4", "4", "1"}, {"a5", "6", "4"},
                      {"a6", "4", "5"}, {"a7", "5", "7"}},
                     {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a1"}, {"a5", "a6"}});
  auto s = TriangularSetup(example_r(), example_s(), bigger, example_partition());
  CHECK(s.bimodule_dim() == 3);  // M_5, M_4 and M_3 are all nonzero now
}

TEST_CASE("functor T") {
  auto setup = example_setup();
  auto k = simple(setup.r(), "7");
  CHECK(functor_t(setup, Rep::zero(setup.r())).is_zero());
  CHECK(is_iso(functor_t(setup, k), simple(setup.s(), "5")));
  CHECK(is_iso(functor_t(setup, direct_sum(k, k)), direct_sum(simple(setup.s(), "5"), simple(setup.s(), "5"))));

  // A nontrivial S-action: R = A2, M = P(1), T(A) = Hom(P(1), A) = A_1.
  auto a2s = a2_setup();
  for (const auto& v : {"1", "2"}) {
    auto a = proj(a2s.r(), v);
    CHECK(functor_t(a2s, a).total_dim() == a.dim(0));
  }
}

TEST_CASE("T on morphisms is a functor") {
  auto setup = a2_setup();
  auto p1 = proj(setup.r(), "1"), s1 = simple(setup.r(), "1"), s2 = simple(setup.r(), "2");
  HomSpace h(p1, s1);
  REQUIRE(h.dim() == 1);
  auto f = h.basis()[0];
  auto tf = functor_t(setup, f);
  CHECK(tf.is_iso());  // Hom(P1, P1) -> Hom(P1, S1) is iso
  HomSpace g(s2, p1);
  REQUIRE(g.dim() == 1);
  CHECK(functor_t(setup, f * g.basis()[0]).is_zero());
  CHECK(functor_t(setup, RepMor::identity(p1)).is_iso());
}

TEST_CASE("functor h and q") {
  auto setup = example_setup();
  auto k = simple(setup.r(), "7");
  auto zs = Rep::zero(setup.s());

  auto h0 = functor_h(setup, Rep::zero(setup.r()), simple(setup.s(), "2"));
  CHECK(h0.phi.is_zero());
  CHECK(is_iso(h0.b, simple(setup.s(), "2")));

  auto hk = functor_h(setup, k, zs);
  CHECK(is_iso(hk.b, simple(setup.s(), "5")));
  CHECK(hk.phi.is_iso());
  Rep x = from_triplet(setup, hk);
  const auto& lq = setup.lambda()->quiver();
  CHECK(x.total_dim() == 2);
  CHECK(x.dim(lq.vertex_index("5")) == 1);
  CHECK(x.dim(lq.vertex_index("7")) == 1);
  CHECK(is_invertible(x.action(lq.arrow_index("a7"))));

  auto [qa, qb] = functor_q(hk);
  CHECK(is_iso(qa, k));
  CHECK(is_iso(qb, simple(setup.s(), "5")));
  auto q0 = functor_q(to_triplet(setup, Rep::zero(setup.lambda())));
  CHECK(q0.first.is_zero());
  CHECK(q0.second.is_zero());
}

TEST_CASE("h preserves injectives") {
  auto setup = example_setup();
  for (std::size_t v = 0; v < setup.s()->vertex_count(); ++v) {
    auto i = standard_module(setup.s(), StandardKind::injective, v);
    CHECK(is_injective(from_triplet(setup, functor_h(setup, Rep::zero(setup.r()), i))));
  }
  auto ik = inj(setup.r(), "7");
  CHECK(is_injective(from_triplet(setup, functor_h(setup, ik, Rep::zero(setup.s())))));
}

TEST_CASE("h on morphisms") {
  auto setup = a2_setup();
  auto p1 = proj(setup.r(), "1"), s1 = simple(setup.r(), "1");
  auto ks = simple(setup.s(), "s");
  auto alpha = HomSpace(p1, s1).basis()[0];
  auto beta = RepMor::identity(ks);
  auto m = functor_h(setup, alpha, beta);
  CHECK(m.is_epi());
  auto id = functor_h(setup, RepMor::identity(p1), beta);
  CHECK(id.is_iso());
}

TEST_CASE("triplets: examples and round trip") {
  auto setup = example_setup();
  auto s7 = simple(setup.lambda(), "7");
  auto t = to_triplet(setup, s7);
  CHECK(is_iso(t.a, simple(setup.r(), "7")));
  CHECK(t.b.is_zero());
  CHECK(t.phi.is_zero());

  auto z = to_triplet(setup, Rep::zero(setup.lambda()));
  CHECK(z.a.is_zero());
  CHECK(z.b.is_zero());

  auto u = enumerate_universe(setup.lambda(), 4);
  REQUIRE(u.indecomposables.size() == 18);
  for (const auto& x : u.indecomposables.members()) {
    auto back = from_triplet(setup, to_triplet(setup, x));
    CHECK(back == x);
  }

  auto a2s = a2_setup();
  auto u2 = enumerate_universe(a2s.lambda(), 4);
  for (const auto& x : u2.indecomposables.members()) CHECK(from_triplet(a2s, to_triplet(a2s, x)) == x);
}

TEST_CASE("invalid triplets are rejected") {
  auto setup = example_setup();
  auto k = simple(setup.r(), "7");
  auto s5 = simple(setup.s(), "5");
  auto s4 = simple(setup.s(), "4");
  // phi must land in T(k) = S(5) and start at B.
  Rep tk = functor_t(setup, k);
  CHECK_THROWS(make_comma_object(setup, k, s4, RepMor(s4, s5, {})));
  CHECK_THROWS_AS(make_comma_object(setup, k, s4, RepMor::zero(s4, s4)), InvalidPhi);
  CHECK_THROWS_AS(make_comma_object(setup, k, s4, RepMor::zero(s5, tk)), InvalidPhi);
  CHECK_NOTHROW(make_comma_object(setup, k, s4, RepMor::zero(s4, tk)));
}

TEST_CASE("adjunction dimension identity") {
  for (auto setup : {example_setup(), a2_setup()}) {
    auto ur = enumerate_universe(setup.r(), 3).indecomposables;
    auto us = enumerate_universe(setup.s(), 3).indecomposables;
    auto ul = enumerate_universe(setup.lambda(), 3).indecomposables;
    std::vector<Rep> as(ur.members().begin(), ur.members().end());
    as.push_back(Rep::zero(setup.r()));
    std::vector<Rep> bs(us.members().begin(), us.members().end());
    bs.push_back(Rep::zero(setup.s()));
    for (const auto& zl : ul.members()) {
      auto zt = to_triplet(setup, zl);
      for (const auto& a : as)
        for (const auto& b : bs) {
          Rep h = from_triplet(setup, functor_h(setup, a, b));
          CHECK(hom_dim(zl, h) == hom_dim(zt.a, a) + hom_dim(zt.b, b));
        }
    }
  }
}

TEST_CASE("h is additive") {
  auto setup = example_setup();
  auto k = simple(setup.r(), "7");
  for (std::size_t v = 0; v < setup.s()->vertex_count(); ++v) {
    auto b = standard_module(setup.s(), StandardKind::projective, v);
    Rep whole = from_triplet(setup, functor_h(setup, k, b));
    Rep parts = direct_sum(from_triplet(setup, functor_h(setup, k, Rep::zero(setup.s()))),
                           from_triplet(setup, functor_h(setup, Rep::zero(setup.r()), b)));
    CHECK(is_iso(whole, parts));
  }
}

TEST_CASE("class D") {
  auto setup = example_setup();
  auto all_r = ObjectClass(setup.r(), {simple(setup.r(), "7")});
  auto inj_s = ObjectClass(setup.s(), {});
  for (std::size_t v = 0; v < setup.s()->vertex_count(); ++v)
    inj_s.insert(standard_module(setup.s(), StandardKind::injective, v));

  for (const auto& x : all_r.members())
    for (const auto& y : inj_s.members()) CHECK(in_class_d(functor_h(setup, x, y), all_r, inj_s));

  // (A, 0, 0) with TA != 0: phi is not epi.
  auto k = simple(setup.r(), "7");
  Rep zs = Rep::zero(setup.s());
  CHECK_FALSE(in_class_d(make_comma_object(setup, k, zs, RepMor::zero(zs, functor_t(setup, k))), all_r, inj_s));

  auto e7 = to_triplet(setup, inj(setup.lambda(), "7"));
  CHECK(in_class_d(e7, all_r, inj_s));

  // (X, TX, id) lies in D for X in X.
  Rep tk = functor_t(setup, k);
  CHECK(in_class_d(make_comma_object(setup, k, tk, RepMor::identity(tk)), all_r, inj_s));
}

TEST_CASE("X-exactness") {
  auto setup = example_setup();
  auto u = enumerate_universe(setup.r(), 3).indecomposables;
  CHECK(is_x_exact(setup, u));

  auto a2s = a2_setup();
  CHECK(is_x_exact(a2s, ObjectClass(a2s.r(), {simple(a2s.r(), "2")})));
  CHECK(is_x_exact(a2s, enumerate_universe(a2s.r(), 3).indecomposables));

  // M = S(1) over A2 is not projective: Ext^1(S1, S2) != 0.
  auto r = make(Field::prime(2), {"1", "2"}, {{"a", "1", "2"}}, {});
  auto s = make(Field::prime(2), {"s"}, {}, {});
  auto lam = make(Field::prime(2), {"1", "2", "s"}, {{"a", "1", "2"}, {"c", "s", "1"}}, {{"c", "a"}});
  TriangularSetup bad(r, s, lam, {{"1", Side::r}, {"2", Side::r}, {"s", Side::s}});
  CHECK(is_iso(bad.bimodule_r(), simple(r, "1")));
  CHECK_FALSE(is_x_exact(bad, ObjectClass(r, {simple(r, "2")})));
  CHECK(is_x_exact(bad, ObjectClass(r, {simple(r, "1")})));
}

TEST_CASE("h is exact on X-exact sequences") {
  auto setup = a2_setup();
  auto r = setup.r();
  // 0 -> S2 -> P1 -> S1 -> 0 with S2 in an X on which T is exact.
  auto s2 = simple(r, "2"), p1 = proj(r, "1"), s1 = simple(r, "1");
  REQUIRE(is_x_exact(setup, ObjectClass(r, {s2})));
  auto i = HomSpace(s2, p1).basis()[0];
  auto p = HomSpace(p1, s1).basis()[0];
  auto b = simple(setup.s(), "s");
  auto zb = Rep::zero(setup.s());
  // 0 -> (S2, 0) -> (P1, B) -> (S1, B) -> 0 componentwise.
  auto f = functor_h(setup, i, RepMor::zero(zb, zb));
  auto g = functor_h(setup, p, RepMor::identity(zb));
  CHECK(f.is_mono());
  CHECK(g.is_epi());
  CHECK((g * f).is_zero());
  CHECK(f.target().total_dim() == f.source().total_dim() + g.target().total_dim());
  auto f2 = functor_h(setup, i, RepMor::zero(zb, b));
  auto g2 = functor_h(setup, p, RepMor::identity(b));
  CHECK(f2.is_mono());
  CHECK(g2.is_epi());
  CHECK(f2.target().total_dim() == f2.source().total_dim() + g2.target().total_dim());
}

TEST_CASE("closure of h(X, Y)") {
  auto setup = example_setup();
  auto u = enumerate_universe(setup.lambda(), 4);
  auto all_r = ObjectClass(setup.r(), {simple(setup.r(), "7")});
  auto inj_s = ObjectClass(setup.s(), {});
  for (std::size_t v = 0; v < setup.s()->vertex_count(); ++v)
    inj_s.insert(standard_module(setup.s(), StandardKind::injective, v));
  auto c = closure_h(setup, all_r, inj_s, u);
  CHECK(c.via_class_d);
  auto k = simple(setup.r(), "7");
  for (const auto& y : inj_s.members())
    for (const auto& s : decompose(from_triplet(setup, functor_h(setup, k, y)))) CHECK(c.members.contains(s));
  for (const auto& y : inj_s.members()) CHECK(c.members.contains(from_triplet(setup, functor_h(setup, Rep::zero(setup.r()), y))));

  // Not extension-closed Y: falls back to saturation, still contains h(X, Y).
  auto odd = ObjectClass(setup.s(), {simple(setup.s(), "1"), simple(setup.s(), "2")});
  auto c2 = closure_h(setup, all_r, odd, u);
  CHECK_FALSE(c2.via_class_d);
  CHECK(c2.members.contains(from_triplet(setup, functor_h(setup, Rep::zero(setup.r()), simple(setup.s(), "1")))));
  CHECK(c2.members.contains(thin(setup.lambda(), {"1", "2"}, {"a1"})));
}
