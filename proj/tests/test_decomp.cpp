#include <doctest.h>

#include <random>

#include "commahom/decomp.hpp"
#include "commahom/errors.hpp"
#include "fixtures.hpp"

using namespace commahom;
using namespace fixtures;

namespace {

// Same multiset of iso classes.
bool same_multiset(std::vector<Rep> a, std::vector<Rep> b) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    bool hit = false;
    for (std::size_t j = 0; j < b.size() && !hit; ++j)
      if (!used[j] && is_iso(x, b[j])) used[j] = hit = true;
    if (!hit) return false;
  }
  return true;
}

Rep sum_of(const AlgebraPtr& alg, const std::vector<Rep>& parts) { return direct_sum(alg, parts).sum; }

// Random change of basis at every vertex.
Rep scramble(const Rep& m, std::mt19937_64& rng) {
  const auto& alg = m.algebra();
  std::vector<Matrix> g;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    Matrix x = Matrix::identity(alg->field(), m.dim(v));
    do x = Matrix::random(alg->field(), m.dim(v), m.dim(v), rng);
    while (!is_invertible(x));
    g.push_back(x);
  }
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < alg->quiver().arrow_count(); ++a) {
    const auto& ar = alg->quiver().arrow(a);
    act.push_back(g[ar.target] * m.action(a) * *inverse(g[ar.source]));
  }
  return Rep(alg, m.dims(), act);
}

}  // namespace

TEST_CASE("indecomposability examples") {
  auto a = a2();
  CHECK(is_indecomposable(simple(a, "1")));
  CHECK(is_indecomposable(proj(a, "1")));
  CHECK_FALSE(is_indecomposable(direct_sum(simple(a, "1"), simple(a, "1"))));
  CHECK_FALSE(is_indecomposable(Rep::zero(a)));
  auto lam = example_lambda();
  for (std::size_t v = 0; v < lam->vertex_count(); ++v) {
    CHECK(is_indecomposable(standard_module(lam, StandardKind::projective, v)));
    CHECK(is_indecomposable(standard_module(lam, StandardKind::injective, v)));
  }
  CHECK(is_indecomposable(proj(one_loop(), "1")));
}

TEST_CASE("decompose examples") {
  auto a = a2();
  CHECK(decompose(Rep::zero(a)).empty());
  auto two = decompose(direct_sum(simple(a, "1"), simple(a, "1")));
  REQUIRE(two.size() == 2);
  CHECK(is_iso(two[0], simple(a, "1")));
  CHECK(is_iso(two[1], simple(a, "1")));
  auto ps = decompose(direct_sum(proj(a, "1"), simple(a, "1")));
  CHECK(same_multiset(ps, {proj(a, "1"), simple(a, "1")}));
}

TEST_CASE("decompose recovers scrambled sums, independent of the seed") {
  std::mt19937_64 rng(11);
  for (auto alg : {example_s(), example_lambda(), zero_square()}) {
    std::vector<Rep> pool;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
      pool.push_back(standard_module(alg, StandardKind::projective, v));
      pool.push_back(standard_module(alg, StandardKind::injective, v));
      pool.push_back(standard_module(alg, StandardKind::simple, v));
    }
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Rep> parts;
      for (int i = 0; i < 3; ++i) parts.push_back(pool[rng() % pool.size()]);
      Rep m = scramble(sum_of(alg, parts), rng);
      DecompOptions o1, o2;
      o1.seed = 1;
      o2.seed = 99;
      auto d1 = decompose(m, o1);
      auto d2 = decompose(m, o2);
      CHECK(same_multiset(d1, parts));
      CHECK(same_multiset(d1, d2));
      CHECK(is_iso(sum_of(alg, d1), m));
    }
  }
}

TEST_CASE("rational modules decompose too") {
  auto a = a2(Field::rationals());
  auto d = decompose(direct_sum(proj(a, "1"), direct_sum(simple(a, "1"), simple(a, "2"))));
  CHECK(d.size() == 3);
}

TEST_CASE("universe census: A2") {
  auto u = brute_force_universe(a2(), 2);
  CHECK(u.size() == 3);
  CHECK(u.exhaustive);
  auto a = a2();
  auto u2 = brute_force_universe(a, 2);
  CHECK(u2.indecomposables.contains(simple(a, "1")));
  CHECK(u2.indecomposables.contains(simple(a, "2")));
  CHECK(u2.indecomposables.contains(proj(a, "1")));
}

TEST_CASE("universe census: S and Lambda, cross-validated") {
  auto s = example_s();
  auto bs = brute_force_universe(s, 3);
  auto ss = string_universe(s, 3);
  CHECK(bs.size() == 16);
  CHECK(ss.universe.size() == 16);
  CHECK_FALSE(ss.bands_found);

  auto lam = example_lambda();
  auto bl = brute_force_universe(lam, 3);
  auto sl = string_universe(lam, 3);
  CHECK(bl.size() == 18);
  CHECK(sl.universe.size() == 18);
  for (const auto& m : sl.universe.indecomposables.members()) CHECK(bl.indecomposables.contains(m));
  // Every indecomposable of Lambda has dimension at most 3.
  CHECK(string_universe(lam, 6).universe.size() == 18);
  // Injectives are exactly 7 of them.
  std::size_t inj_count = 0;
  for (std::size_t v = 0; v < lam->vertex_count(); ++v)
    inj_count += bl.indecomposables.contains(standard_module(lam, StandardKind::injective, v));
  CHECK(inj_count == 7);
}

TEST_CASE("strategy cross-validation on the gentle test algebras") {
  for (auto alg : {a2(), one_loop(), zero_square(), opposite(example_s())}) {
    for (std::size_t bound : {2u, 3u}) {
      auto b = brute_force_universe(alg, bound);
      auto s = string_universe(alg, bound);
      CHECK(b.size() == s.universe.size());
      for (const auto& m : s.universe.indecomposables.members()) CHECK(b.indecomposables.contains(m));
    }
  }
}

TEST_CASE("bands are detected") {
  // Kronecker quiver: a, b: 1 -> 2, the band a b^-1.
  auto k = make(Field::prime(2), {"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {});
  auto census = string_universe(k, 3);
  CHECK(census.bands_found);
  CHECK_FALSE(enumerate_universe(k, 2, {}).indecomposables.empty());
  CHECK_FALSE(string_universe(example_lambda(), 4).bands_found);
}

TEST_CASE("ObjectClass dedupes and tests additive membership") {
  auto a = a2();
  ObjectClass c(a, {simple(a, "1"), proj(a, "1"), simple(a, "1")});
  CHECK(c.size() == 2);
  CHECK(c.contains_additive(direct_sum(proj(a, "1"), simple(a, "1"))));
  CHECK_FALSE(c.contains_additive(direct_sum(proj(a, "1"), simple(a, "2"))));
  auto closed = smd(a, {direct_sum(simple(a, "1"), simple(a, "2"))});
  CHECK(closed.size() == 2);
  CHECK(smd(a, {}).empty());
}
