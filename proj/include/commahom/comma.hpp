#pragma once

// The comma category (mod-S | T) for T = Hom_R(M, -), realised as the
// representations of a glued quiver algebra Lambda.
//
// Lambda's vertices are split into an R-side and an S-side. Arrows run
// inside a side or from the S-side to the R-side (cross arrows). For an
// S-vertex s, M_s is the R-part of P_Lambda(s); an S-arrow b: s -> s' acts
// on M by prepending, M_s' -> M_s, and T(A)_s = Hom_R(M_s, A) with b acting
// by precomposition.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commahom/decomp.hpp"
#include "commahom/homalg.hpp"
#include "commahom/rep.hpp"

namespace commahom {

enum class Side { r, s };

class TriangularSetup {
 public:
  /// Verifies that Lambda restricted to each side is the given algebra, that
  /// no arrow runs from the R-side to the S-side and that
  /// dim Lambda = dim R + dim S + dim M. Throws HypothesisFailed.
  TriangularSetup(AlgebraPtr r, AlgebraPtr s, AlgebraPtr lambda, const std::map<std::string, Side>& partition);

  const AlgebraPtr& r() const { return r_; }
  const AlgebraPtr& s() const { return s_; }
  const AlgebraPtr& lambda() const { return lambda_; }

  Side side(std::size_t lambda_vertex) const { return side_.at(lambda_vertex); }
  /// Index of a Lambda vertex inside its side's algebra.
  std::size_t local_vertex(std::size_t lambda_vertex) const { return local_.at(lambda_vertex); }
  std::size_t lambda_vertex(Side side, std::size_t local) const;

  /// M_s as an R-module, indexed by S-vertex.
  const std::vector<Rep>& bimodule_parts() const { return parts_; }
  /// The sum of the M_s, i.e. M as a right R-module.
  Rep bimodule_r() const;
  /// D(M) as an S-module; this is T(DR), the image of the injective
  /// cogenerator of R.
  Rep bimodule_dual_s() const;
  std::size_t bimodule_dim() const;

  /// lambda_b: M_s' -> M_s for the S-arrow b: s -> s'.
  const RepMor& prepend(std::size_t s_arrow) const { return prepend_.at(s_arrow); }

  /// Restrictions of a Lambda-module to the two sides.
  Rep restrict_r(const Rep& x) const;
  Rep restrict_s(const Rep& x) const;

 private:
  AlgebraPtr r_, s_, lambda_;
  std::vector<Side> side_;
  std::vector<std::size_t> local_;
  std::vector<std::size_t> r_to_lambda_, s_to_lambda_;
  std::vector<std::optional<std::size_t>> r_arrow_, s_arrow_;  // per R/S arrow: Lambda arrow
  std::vector<Rep> parts_;
  std::vector<RepMor> prepend_;
};

/// T(A) together with the bases of the Hom spaces it is built from.
struct TValue {
  Rep rep;
  std::vector<HomSpace> spaces;  // per S-vertex: Hom_R(M_s, A)
};

TValue functor_t_detailed(const TriangularSetup& setup, const Rep& a);
Rep functor_t(const TriangularSetup& setup, const Rep& a);
RepMor functor_t(const TriangularSetup& setup, const RepMor& alpha);

/// (A, B, phi: B -> T(A)).
struct CommaObject {
  Rep a;
  Rep b;
  RepMor phi;
};

/// Checks that phi is a morphism B -> T(A); throws InvalidPhi.
CommaObject make_comma_object(const TriangularSetup& setup, const Rep& a, const Rep& b, const RepMor& phi);

/// h(A, B) = (A, B + TA, projection).
CommaObject functor_h(const TriangularSetup& setup, const Rep& a, const Rep& b);
/// h on morphisms: (alpha, beta + T alpha), returned as the Lambda-morphism
/// between from_triplet(h(A,B)) and from_triplet(h(A',B')).
RepMor functor_h(const TriangularSetup& setup, const RepMor& alpha, const RepMor& beta);
/// q(A, B, phi) = (A, B).
std::pair<Rep, Rep> functor_q(const CommaObject& obj);

CommaObject to_triplet(const TriangularSetup& setup, const Rep& x);
/// Throws InvalidPhi when the triplet is not a comma object.
Rep from_triplet(const TriangularSetup& setup, const CommaObject& obj);

/// A in add(X), phi epi and ker phi in add(Y).
bool in_class_d(const CommaObject& obj, const ObjectClass& x, const ObjectClass& y, const DecompOptions& opts = {});

/// Ext^1_R(M, X) = 0 for every member X, i.e. T preserves exactness of
/// short exact sequences starting in X.
bool is_x_exact(const TriangularSetup& setup, const ObjectClass& x);

/// Membership in <h(X, Y)>, the extension closure of the h(X, Y), restricted
/// to a Lambda-universe.
struct HClosure {
  ObjectClass members;
  /// True when the members were obtained as the class D(X, Y), which needs
  /// X, Y closed under extensions and T X-exact. Otherwise members come
  /// from saturating h(X, Y) under extensions inside the universe and form
  /// a lower approximation.
  bool via_class_d = false;
  std::string note;
};

HClosure closure_h(const TriangularSetup& setup, const ObjectClass& x, const ObjectClass& y, const Universe& lambda_u,
                   const DecompOptions& opts = {});

}  // namespace commahom
