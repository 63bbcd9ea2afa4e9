#pragma once

// Projective covers, injective envelopes, syzygies, Ext and homological
// dimensions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "commahom/decomp.hpp"
#include "commahom/rep.hpp"

namespace commahom {

/// P -> M (projective cover) or M -> I (injective envelope).
struct Cover {
  Rep object;
  RepMor map;
};

Cover projective_cover(const Rep& m);
Cover injective_envelope(const Rep& m);

/// The map P(v) -> M sending e_v to x, for x in M_v.
RepMor from_projective(const Rep& m, std::size_t vertex, const Vec& x);

/// Omega M = ker(P0 -> M), with its inclusion into P0.
struct Syzygy {
  Cover cover;
  SubRep kernel;
};
Syzygy syzygy(const Rep& m);

/// Sigma M = coker(M -> I0), with the projection from I0.
struct Cosyzygy {
  Cover envelope;
  QuotientRep cokernel;
};
Cosyzygy cosyzygy(const Rep& m);

struct Resolution {
  enum class Direction { projective, injective };
  Direction direction;
  std::vector<Rep> terms;
  /// Projective: maps[k]: terms[k+1] -> terms[k], maps[0] = P0 -> M is the
  /// augmentation. Injective: maps[k]: terms[k-1] -> terms[k] with
  /// maps[0]: M -> I0.
  std::vector<RepMor> maps;
  std::vector<Rep> syzygies;
};

Resolution projective_resolution(const Rep& m, std::size_t length);
Resolution injective_resolution(const Rep& m, std::size_t length);

/// dim Ext^i(M, N), i >= 1, by dimension shifting.
std::size_t ext_dim(std::size_t i, const Rep& m, const Rep& n);

/// Ext^1(M, N) presented as Hom(Omega M, N) modulo maps factoring
/// through P0.
class Ext1Space {
 public:
  Ext1Space(const Rep& m, const Rep& n);

  const Rep& left() const { return m_; }
  const Rep& right() const { return n_; }
  std::size_t dim() const { return reps_.size(); }
  const Syzygy& presentation() const { return syz_; }

  /// A cocycle Omega M -> N representing the class with these coordinates.
  RepMor cocycle(const Vec& class_coords) const;
  /// Class coordinates of a cocycle.
  Vec class_of(const RepMor& cocycle) const;
  /// Basis cocycles, one per Ext^1 dimension.
  const std::vector<RepMor>& basis() const { return reps_; }

 private:
  Rep m_, n_;
  Syzygy syz_;
  HomSpace hom_;
  Matrix quotient_;  // rows: class coordinates from Hom(Omega M, N) coordinates
  std::vector<RepMor> reps_;
};

/// 0 -> N -> E -> M -> 0.
struct Extension {
  Vec class_coords;
  Rep middle;
  RepMor inclusion;   // N -> E
  RepMor projection;  // E -> M
};

/// Pushout of 0 -> Omega M -> P0 -> M -> 0 along a cocycle.
Extension extension_from_cocycle(const Ext1Space& space, const RepMor& cocycle);

/// One extension per class of Ext^1(M, N), the split class first.
/// Throws ClassCountExceeded when |Ext^1| would exceed max_classes.
std::vector<Extension> ext1_middle_terms(const Rep& m, const Rep& n, std::uint64_t max_classes = 1u << 12);

/// The universal extension 0 -> N -> E -> M^(d) -> 0 with d = dim Ext^1(M, N)
/// and every class of Ext^1(M, N) obtained by pullback.
Extension universal_extension(const Rep& m, const Rep& n);
/// Same with right end the sum of the m^(dim Ext^1(m, N)) over the list.
Extension universal_extension(const std::vector<Rep>& ms, const Rep& n);

/// Whether every middle term of every Ext^1 class between members lies in
/// add(C). On failure `witness` names the offending pair.
struct ExtensionClosure {
  bool closed = true;
  std::string witness;
};
ExtensionClosure closed_under_extensions(const ObjectClass& c, const DecompOptions& opts = {},
                                         std::uint64_t max_classes = 1u << 12);

struct HomDim {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::size_t value = 0;
  /// For infinite: a cycle of indecomposables, each a summand of the
  /// (co)syzygy of the previous one.
  std::vector<Rep> cycle;
  std::string certificate;

  bool is_finite() const { return kind == Kind::finite; }
  std::string to_string() const;
};

enum class DimKind { pd, id };

struct DimOptions {
  /// Maximal number of distinct indecomposables explored.
  std::size_t budget = 64;
  DecompOptions decomp{};
};

/// pd via the graph of indecomposable syzygy summands: finite when every
/// path reaches projectives, infinite when a cycle is reachable. id is pd
/// over the opposite algebra of the dual. fd = pd for finite-dimensional
/// modules, so there is no separate fd query.
HomDim homological_dimension(DimKind kind, const Rep& m, const DimOptions& opts = {});

bool is_projective(const Rep& m);
bool is_injective(const Rep& m);

}  // namespace commahom
