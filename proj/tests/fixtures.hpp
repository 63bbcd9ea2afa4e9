#pragma once

// Algebras shared by the test suites.

#include <string>
#include <vector>

#include "commahom/quiver.hpp"
#include "commahom/rep.hpp"

namespace fixtures {

using namespace commahom;

inline AlgebraPtr make(Field f, const std::vector<std::string>& vertices,
                       const std::vector<std::vector<std::string>>& arrows,
                       const std::vector<std::vector<std::string>>& relations) {
  Quiver q;
  for (const auto& v : vertices) q.add_vertex(v);
  for (const auto& a : arrows) q.add_arrow(a[0], a[1], a[2]);
  std::vector<Path> rels;
  for (const auto& r : relations) rels.push_back(make_path(q, r));
  return build_algebra(f, std::move(q), std::move(rels));
}

/// 1 -a-> 2
inline AlgebraPtr a2(Field f = Field::prime(2)) { return make(f, {"1", "2"}, {{"a", "1", "2"}}, {}); }

/// S of the worked example: the 4-cycle with all length-two relations,
/// plus 6 -a5-> 4 -a6-> 5 with a5a6 = 0.
inline AlgebraPtr example_s(Field f = Field::prime(2)) {
  return make(f, {"1", "2", "3", "4", "5", "6"},
              {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "4"}, {"a4", "4", "1"}, {"a5", "6", "4"},
               {"a6", "4", "5"}},
              {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a1"}, {"a5", "a6"}});
}

/// Lambda: S glued to k at vertex 7 through a7: 5 -> 7 with a6a7 = 0.
inline AlgebraPtr example_lambda(Field f = Field::prime(2)) {
  return make(f, {"1", "2", "3", "4", "5", "6", "7"},
              {{"a1", "1", "2"}, {"a2", "2", "3"}, {"a3", "3", "4"}, {"a4", "4", "1"}, {"a5", "6", "4"},
               {"a6", "4", "5"}, {"a7", "5", "7"}},
              {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a1"}, {"a5", "a6"}, {"a6", "a7"}});
}

/// R = k, sitting at vertex 7.
inline AlgebraPtr example_r(Field f = Field::prime(2)) { return make(f, {"7"}, {}, {}); }

/// k[x]/(x^2) as one loop with relation xx.
inline AlgebraPtr one_loop(Field f = Field::prime(2)) {
  return make(f, {"1"}, {{"x", "1", "1"}}, {{"x", "x"}});
}

/// The square 1 -> 2 -> 4, 1 -> 3 -> 4 with both length-two paths zero.
inline AlgebraPtr zero_square(Field f = Field::prime(2)) {
  return make(f, {"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}},
              {{"a", "b"}, {"c", "d"}});
}

inline Rep simple(const AlgebraPtr& a, const std::string& v) { return standard_module(a, StandardKind::simple, v); }
inline Rep proj(const AlgebraPtr& a, const std::string& v) { return standard_module(a, StandardKind::projective, v); }
inline Rep inj(const AlgebraPtr& a, const std::string& v) { return standard_module(a, StandardKind::injective, v); }

/// Module with one basis vector per listed vertex and the listed arrows
/// acting by 1 (a "string" of distinct vertices).
inline Rep thin(const AlgebraPtr& alg, const std::vector<std::string>& support,
                const std::vector<std::string>& arrows) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& v : support) dims[q.vertex_index(v)] = 1;
  std::vector<Matrix> act;
  for (const auto& a : q.arrows()) act.emplace_back(alg->field(), dims[a.target], dims[a.source]);
  for (const auto& a : arrows) act[q.arrow_index(a)](0, 0) = alg->field().one();
  return Rep(alg, dims, act);
}

}  // namespace fixtures
