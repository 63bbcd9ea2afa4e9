#pragma once

// Krull-Schmidt decomposition and finite censuses of indecomposables.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commahom/rep.hpp"

namespace commahom {

struct DecompOptions {
  /// End(M) is enumerated element by element when |End(M)| <= this.
  std::uint64_t exhaustive_limit = 1u << 14;
  std::size_t random_trials = 256;
  std::uint64_t seed = 0;
  IsoSearch iso{};
};

/// M = ker(e^n) + im(e^n) for an endomorphism e that is neither nilpotent
/// nor invertible. nullopt means End(M) was certified local.
std::optional<std::pair<SubRep, SubRep>> fitting_split(const Rep& m, const DecompOptions& opts = {});

/// Throws Undecided when neither a split nor a locality certificate is found.
bool is_indecomposable(const Rep& m, const DecompOptions& opts = {});

/// Indecomposable summands, sorted by (total dimension, dimension vector).
std::vector<Rep> decompose(const Rep& m, const DecompOptions& opts = {});

/// A finite list of pairwise non-isomorphic indecomposables standing for
/// their additive closure.
class ObjectClass {
 public:
  explicit ObjectClass(AlgebraPtr alg) : alg_(std::move(alg)) {}
  /// Members are assumed indecomposable; duplicates up to iso are dropped.
  ObjectClass(AlgebraPtr alg, const std::vector<Rep>& members, const IsoSearch& iso = {});

  /// Trusts that members are pairwise non-isomorphic indecomposables.
  static ObjectClass from_distinct(AlgebraPtr alg, const std::vector<Rep>& members);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Rep>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Rep& operator[](std::size_t i) const { return members_.at(i); }

  /// Position of the member isomorphic to an indecomposable x.
  std::optional<std::size_t> index_of(const Rep& x) const;
  bool contains(const Rep& x) const { return index_of(x).has_value(); }
  /// Adds x unless an isomorphic member exists; returns its position.
  std::size_t insert(const Rep& x);
  /// Membership of an arbitrary module in add(C).
  bool contains_additive(const Rep& m, const DecompOptions& opts = {}) const;

  /// Members whose index satisfies pred, preserving order.
  template <class Pred>
  ObjectClass filter(Pred pred) const {
    ObjectClass out(alg_);
    out.iso_ = iso_;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (pred(i)) out.push_unchecked(members_[i]);
    return out;
  }

 private:
  void push_unchecked(const Rep& x);

  AlgebraPtr alg_;
  std::vector<Rep> members_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_dims_;
  IsoSearch iso_{};
};

/// Closes a list of modules under indecomposable summands.
ObjectClass smd(const AlgebraPtr& alg, const std::vector<Rep>& modules, const DecompOptions& opts = {});

struct Universe {
  ObjectClass indecomposables;
  std::size_t dim_bound = 0;
  /// False when a budget cut enumeration short.
  bool exhaustive = true;
  std::string strategy;

  const AlgebraPtr& algebra() const { return indecomposables.algebra(); }
  std::size_t size() const { return indecomposables.size(); }
  const Rep& operator[](std::size_t i) const { return indecomposables[i]; }
};

struct UniverseOptions {
  /// Maximal number of candidate representations examined.
  std::uint64_t candidate_budget = 1u << 22;
  DecompOptions decomp{};
};

/// Brute force over GF(p): every dimension vector with connected support,
/// every arrow action satisfying the relations, then indecomposability and
/// iso dedupe. Throws BudgetExceeded unless `allow_partial`.
Universe brute_force_universe(const AlgebraPtr& alg, std::size_t dim_bound, const UniverseOptions& opts = {},
                              bool allow_partial = false);

struct StringCensus {
  Universe universe;
  /// Canonical words of the strings, in universe order.
  std::vector<std::string> words;
  /// A closed walk whose square is again a string exists within the bound.
  bool bands_found = false;
};

/// String modules of a string algebra (any field).
StringCensus string_universe(const AlgebraPtr& alg, std::size_t dim_bound);

/// Brute force over finite fields when the budget allows, string
/// enumeration for string algebras otherwise.
Universe enumerate_universe(const AlgebraPtr& alg, std::size_t dim_bound, const UniverseOptions& opts = {});

}  // namespace commahom
