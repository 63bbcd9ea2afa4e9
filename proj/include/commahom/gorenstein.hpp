#pragma once

// Gorenstein-injective modules, totally acyclic witnesses and the
// cocompatibility conditions of T = Hom_R(M, -).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "commahom/comma.hpp"
#include "commahom/cotorsion.hpp"
#include "commahom/homalg.hpp"

namespace commahom {

/// A complex of injectives repeating with the given period;
/// maps[k]: terms[k] -> terms[(k + 1) % period]. terms[0] contains the
/// cycle Z_0 = ker maps[0].
struct PeriodicComplex {
  std::vector<Rep> terms;
  std::vector<RepMor> maps;

  std::size_t period() const { return terms.size(); }
  Rep cycle(std::size_t k) const { return kernel(maps.at(k)).rep; }
};

bool is_exact(const PeriodicComplex& c);
/// Exact, injective terms, and Hom(E, -) exact for every indecomposable
/// injective E.
bool is_totally_acyclic(const PeriodicComplex& c);

/// 0 -> I -> I + I -> ... with d = [[0, 1], [0, 0]], Z_0 = I.
PeriodicComplex split_complex(const Rep& injective);
/// Walks injective envelopes from g until a cosyzygy is isomorphic to g;
/// the loop closes into a periodic complex with Z_0 = g.
std::optional<PeriodicComplex> periodic_witness(const Rep& g, std::size_t max_steps = 32);

/// Terms T(I), maps T(d).
PeriodicComplex apply_t(const TriangularSetup& setup, const PeriodicComplex& c);

struct IGCheck {
  bool holds = false;
  /// max id of the P(i) and max pd of the E(i), when finite.
  std::size_t id_projectives = 0;
  std::size_t pd_injectives = 0;
  std::string detail;
};
/// Whether the algebra is Iwanaga-Gorenstein within the budget: every
/// indecomposable projective has finite injective dimension and vice versa.
IGCheck iwanaga_gorenstein(const AlgebraPtr& alg, const DimOptions& opts = {});

struct GIOptions {
  std::size_t walk_bound = 32;
  DimOptions dims{};
};

struct GIResult {
  ObjectClass members;
  /// Per member: a totally acyclic periodic complex with Z_0 the member.
  std::vector<std::optional<PeriodicComplex>> witnesses;
  /// Non-projective universe members of finite pd, with that pd.
  std::vector<std::pair<Rep, std::size_t>> finite_pd;
  IGCheck ig;
  std::vector<std::string> notes;

  std::size_t complex_certified() const;
};

/// GI = {M in U : Ext^i(L, M) = 0 for 1 <= i <= pd L, all L in U of finite
/// pd}. Valid for Iwanaga-Gorenstein algebras; throws
/// NotGorensteinWithinBudget otherwise.
GIResult gorenstein_injectives(const AlgebraPtr& alg, const Universe& u, const GIOptions& opts = {});

enum class CondStatus { holds_by_criterion, holds_by_search, fails, unknown };
std::string to_string(CondStatus s);

struct Condition {
  CondStatus status = CondStatus::unknown;
  std::string witness;
  bool holds() const { return status == CondStatus::holds_by_criterion || status == CondStatus::holds_by_search; }
};

struct CocompatReport {
  Condition c1, c2, w1;
  /// pd_R M, and pd_S of D(M) = T(DR), the quantity used for (C2).
  HomDim pd_m;
  HomDim pd_dual_m;

  bool cocompatible() const { return c1.holds() && c2.holds(); }
  bool weak_cocompatible() const { return w1.holds() && c2.holds(); }
};

/// (C1) by pd_R M finite, (C2) by pd_S T(DR) finite; otherwise, given the GI
/// classes, by search: (W1) iff Ext^1_R(M, G) = 0 for every GI G, (C2) iff
/// Ext^1_S(T I, G) = 0 for injective I and GI G, and (C1) agrees with (W1)
/// over an Iwanaga-Gorenstein R.
CocompatReport check_cocompatible(const TriangularSetup& setup, const GIResult* gi_r = nullptr,
                                  const GIResult* gi_s = nullptr, const DimOptions& opts = {});

struct TransferInput {
  const TriangularSetup* setup = nullptr;
  const Universe* ur = nullptr;
  const Universe* us = nullptr;
  const Universe* ul = nullptr;
  const GIResult* gi_r = nullptr;
  const GIResult* gi_s = nullptr;
  const GIResult* gi_l = nullptr;
};

/// Transfer of Gorenstein-injectives along h and the cocompatibility
/// conditions, checked inside the universes.
LiftingReport verify_gi_transfer(const TransferInput& in, const ApproxOptions& approx = {});

}  // namespace commahom
