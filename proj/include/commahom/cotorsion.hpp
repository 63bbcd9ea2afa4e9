#pragma once

// Orthogonal classes and cotorsion pairs inside a finite universe of
// indecomposables, special approximations, and the lifting statements for
// comma categories.

#include <cstddef>
#include <string>
#include <vector>

#include "commahom/comma.hpp"
#include "commahom/decomp.hpp"
#include "commahom/homalg.hpp"

namespace commahom {

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);
Verdict verdict_and(Verdict a, Verdict b);
inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

/// {M in U : Ext^1(M, C) = 0 for all C}.
ObjectClass left_perp(const ObjectClass& c, const ObjectClass& universe);
/// {M in U : Ext^1(C, M) = 0 for all C}.
ObjectClass right_perp(const ObjectClass& c, const ObjectClass& universe);

/// Same members up to isomorphism.
bool same_class(const ObjectClass& a, const ObjectClass& b);
/// Every member of a is isomorphic to a member of b.
bool is_subclass(const ObjectClass& a, const ObjectClass& b);

/// X = left_perp(Y) and Y = right_perp(X), both inside the universe.
bool is_cotorsion_pair(const ObjectClass& x, const ObjectClass& y, const ObjectClass& universe);

struct HereditaryCheck {
  Verdict verdict = Verdict::unknown;
  std::string witness;
};
/// Ext^i(X, Y) = 0 for all i >= 1, via the finite set of indecomposable
/// summands of iterated syzygies of the members of X.
HereditaryCheck is_hereditary(const ObjectClass& x, const ObjectClass& y, const DimOptions& opts = {});

struct ApproxOptions {
  std::size_t iteration_cap = 16;
  DecompOptions decomp{};
};

/// 0 -> M -> E -> C -> 0 (preenvelope: E in add Y, C in add X) or
/// 0 -> K -> E -> M -> 0 (precover: E in add X, K in add Y).
struct Approximation {
  Rep object;       // E
  RepMor map;       // M -> E or E -> M
  Rep other;        // C or K
  RepMor other_map; // E -> C or K -> E
  std::size_t steps = 0;
  std::vector<Rep> object_summands;
  std::vector<Rep> other_summands;
};

/// Iterated universal extensions by the members of X until Ext^1(X, E) = 0.
/// Throws IterationCapExceeded or PostconditionFailed.
Approximation special_preenvelope(const Rep& m, const ObjectClass& x, const ObjectClass& y,
                                  const ApproxOptions& opts = {});
/// The dual construction, computed over the opposite algebra.
Approximation special_precover(const Rep& m, const ObjectClass& x, const ObjectClass& y,
                               const ApproxOptions& opts = {});

struct CotorsionReport {
  ObjectClass left;
  ObjectClass right;
  std::size_t dim_bound = 0;
  Verdict is_pair = Verdict::unknown;
  Verdict is_hereditary = Verdict::unknown;
  Verdict is_complete = Verdict::unknown;
  std::vector<std::string> witnesses;
};

/// Pair, hereditary and completeness checks. Completeness means every
/// universe member gets a verified special precover and preenvelope.
CotorsionReport analyse_pair(const ObjectClass& x, const ObjectClass& y, const Universe& u,
                             const ApproxOptions& opts = {});

/// The same class on the opposite algebra, member-wise dual.
ObjectClass dual_class(const ObjectClass& c);

/// Projective and injective indecomposables of an algebra.
ObjectClass projectives(const AlgebraPtr& alg);
ObjectClass injectives(const AlgebraPtr& alg);

// ---------------------------------------------------------------- comma side

/// Lambda-universe members whose triplet has A in add X and B in add Y.
ObjectClass triplet_class(const TriangularSetup& setup, const ObjectClass& x, const ObjectClass& y,
                          const ObjectClass& lambda_universe, const DecompOptions& opts = {});
/// Indecomposable summands of the h(X, 0) and h(0, Y).
ObjectClass h_generators(const TriangularSetup& setup, const ObjectClass& x, const ObjectClass& y,
                         const DecompOptions& opts = {});

struct NamedCheck {
  std::string name;
  Verdict verdict = Verdict::unknown;
  std::string detail;
};

struct LiftingReport {
  std::vector<NamedCheck> checks;
  Verdict overall() const;
};

struct LiftingInput {
  const TriangularSetup* setup = nullptr;
  ObjectClass x;  // right class of a pair on the R-side
  ObjectClass y;  // right class of a pair on the S-side
  const Universe* ur = nullptr;
  const Universe* us = nullptr;
  const Universe* ul = nullptr;
};

/// Lifting statements inside the given universes: left perps of <h(X,Y)>,
/// the description of <h>, lifted pairs (plain and hereditary) and
/// (co)resolving transfer.
LiftingReport check_lifting(const LiftingInput& in, const DimOptions& opts = {});

/// Resolving: contains projectives, closed under extensions and kernels of
/// epimorphisms. Coresolving is the dual.
Verdict is_resolving(const ObjectClass& c, const ObjectClass& universe, const DecompOptions& opts = {});
Verdict is_coresolving(const ObjectClass& c, const ObjectClass& universe, const DecompOptions& opts = {});

struct FrobeniusCheck {
  bool holds = false;
  std::string reason;
};
/// Projectives equal injectives on both sides and T(injectives) are
/// injective. Throws HypothesisFailed when T is not exact.
FrobeniusCheck is_frobenius_hull(const TriangularSetup& setup);

}  // namespace commahom
