#pragma once

// The bundled glued-algebra example: S (six vertices), R = k at vertex 7,
// and the algebra Lambda joining them along a7: 5 -> 7. Each check returns
// a NamedCheck so that the CLI and the acceptance binary share them.

#include <cstdint>

#include "commahom/comma.hpp"
#include "commahom/cotorsion.hpp"
#include "commahom/decomp.hpp"
#include "commahom/gorenstein.hpp"

namespace commahom::examples {

struct ExampleOptions {
  std::size_t dim_bound = 3;
  std::uint64_t seed = 0;
};

/// Parses the bundled specs and computes the universes and GI classes.
struct Example {
  explicit Example(const ExampleOptions& o = {});

  ExampleOptions opts;
  AlgebraPtr s, r, lambda;
  TriangularSetup setup;
  Universe us, ur, ul;
  GIResult gi_s, gi_r, gi_l;
};

UniverseOptions universe_options(std::uint64_t seed);
GIOptions gi_options(std::uint64_t seed);
ApproxOptions approx_options(std::uint64_t seed);

/// The four non-injective Gorenstein-injectives on the other side of the
/// algebra together with all indecomposable injectives there: S(1), S(2),
/// S(3) and the two-dimensional module on {4, 5} joined by a6.
ObjectClass expected_left_gi(const AlgebraPtr& opposite_alg);

NamedCheck check_dimensions(const Example& ex);
NamedCheck check_census(const Example& ex);
/// GI computed on the opposite algebras, against the expected lists.
NamedCheck check_gi_lists(const Example& ex, bool lambda_side);
NamedCheck check_gi_ground_field(const Example& ex);
NamedCheck check_cocompatible(const Example& ex);
/// Special GI-preenvelopes of every indecomposable of S, Lambda and R.
NamedCheck check_preenvelopes(const Example& ex);
/// left perp of <h(GI_R, GI_S)> equals the componentwise left perps.
NamedCheck check_left_perp_of_h(const Example& ex);
/// <h(U_R, U_S)> equals the right perp of h(0, projectives).
NamedCheck check_h_of_everything(const Example& ex);
/// GI(Lambda) equals the triplets in D(GI_R, GI_S).
NamedCheck check_gi_is_class_d(const Example& ex);
NamedCheck check_adjunction(const Example& ex);
NamedCheck check_closure_chain(const Example& ex);
/// Every transfer statement evaluated inside the universes.
std::vector<NamedCheck> check_transfer(const Example& ex);

}  // namespace commahom::examples
