#pragma once

// Finite-dimensional modules as quiver representations and their morphisms.
//
// An arrow a: i -> j acts as a linear map M_i -> M_j given by a
// dims[j] x dims[i] matrix on column vectors; the path ab acts as
// M_b * M_a.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commahom/exactla.hpp"
#include "commahom/quiver.hpp"

namespace commahom {

class Rep {
 public:
  /// Validates matrix shapes and that every relation acts as zero; throws
  /// InvalidRep otherwise.
  Rep(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> action);
  static Rep zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return dims_.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& action(std::size_t arrow) const { return action_.at(arrow); }
  const std::vector<Matrix>& actions() const { return action_; }
  /// dims[end] x dims[start] matrix of a path's action.
  Matrix path_action(const Path& p) const;

  /// "(1,1,0)" style dimension vector.
  std::string dim_string() const;
  std::string describe() const;

  bool operator==(const Rep& o) const;

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> action_;
};

class RepMor {
 public:
  /// Validates block shapes and the intertwining identity
  /// target.action(a) * blocks[s] == blocks[t] * source.action(a).
  RepMor(Rep source, Rep target, std::vector<Matrix> blocks);
  static RepMor zero(const Rep& source, const Rep& target);
  static RepMor identity(const Rep& m);
  /// Builds from a row-major per-vertex flattening (see coordinates()).
  static RepMor from_coordinates(const Rep& source, const Rep& target, const Vec& coords);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_.at(v); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// Per-vertex row-major flattening of all blocks.
  Vec coordinates() const;

  bool is_zero() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const;
  std::size_t rank() const;

  RepMor operator+(const RepMor& o) const;
  RepMor operator-(const RepMor& o) const;
  RepMor scaled(const Scalar& s) const;
  /// Composition: (g * f) = g after f.
  RepMor operator*(const RepMor& f) const;

 private:
  struct Unchecked {};
  RepMor(Unchecked, Rep source, Rep target, std::vector<Matrix> blocks);

  Rep source_;
  Rep target_;
  std::vector<Matrix> blocks_;
};

/// Hom(M, N) with a fixed basis and coordinate conversion.
class HomSpace {
 public:
  HomSpace(const Rep& source, const Rep& target);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RepMor>& basis() const { return basis_; }
  RepMor element(const Vec& coords) const;
  /// Coordinates of f in this basis; throws if f is not a morphism M -> N.
  Vec coordinates_of(const RepMor& f) const;

 private:
  Rep source_;
  Rep target_;
  std::vector<RepMor> basis_;
  Matrix basis_columns_;
};

/// Basis of the solution space of the intertwining equations.
std::vector<RepMor> hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);

struct SubRep {
  Rep rep;
  RepMor inclusion;
};

struct QuotientRep {
  Rep rep;
  RepMor projection;
};

SubRep kernel(const RepMor& f);
QuotientRep cokernel(const RepMor& f);
SubRep image(const RepMor& f);
/// Subrepresentation spanned by the columns of bases[v]; the spaces must be
/// invariant under the arrows (throws InvalidRep otherwise).
SubRep subrep(const Rep& m, const std::vector<Matrix>& bases);

/// The unique h with h * p == g, for p epi and g vanishing on ker p.
/// Throws InvalidRep when g does not factor.
RepMor factor_through_epi(const RepMor& p, const RepMor& g);
/// The unique h with i * h == g, for i mono and im g inside im i.
RepMor factor_through_mono(const RepMor& i, const RepMor& g);

struct DirectSum {
  Rep sum;
  std::vector<RepMor> injections;
  std::vector<RepMor> projections;
};

DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Rep> parts);
Rep direct_sum(const Rep& a, const Rep& b);
/// Block morphism between direct sums; entry (i, j) maps part j to part i.
RepMor block_morphism(const DirectSum& source, const DirectSum& target,
                      const std::vector<std::vector<std::optional<RepMor>>>& entries);

/// Vector-space dual as a representation of the opposite algebra.
Rep dual(const Rep& m);
RepMor dual(const RepMor& f);

struct IsoSearch {
  /// Exhaustive search over Hom(M, N) when |Hom| <= this many elements.
  std::uint64_t exhaustive_limit = 1u << 16;
  std::size_t random_trials = 512;
  std::uint64_t seed = 0;
};

/// An isomorphism M -> N, nullopt when a certificate of non-isomorphism is
/// found (dimension or hom-dimension fingerprint, or exhaustive search).
/// Throws Undecided when neither is certified within budget.
std::optional<RepMor> find_iso(const Rep& m, const Rep& n, const IsoSearch& opts = {},
                               std::span<const Rep> probes = {});
bool is_iso(const Rep& m, const Rep& n, const IsoSearch& opts = {},
            std::span<const Rep> probes = {});

}  // namespace commahom
