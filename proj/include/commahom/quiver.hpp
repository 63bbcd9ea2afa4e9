#pragma once

// Quivers, monomial admissible ideals and path bases of A = kQ/I.
//
// Paths compose left to right: for arrows a, b with target(a) = source(b)
// the path "ab" means a, then b.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "commahom/exactla.hpp"

namespace commahom {

struct Arrow {
  std::string id;
  std::size_t source;
  std::size_t target;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& id);
  std::size_t add_arrow(const std::string& id, const std::string& source, const std::string& target);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  /// Throws UnknownVertex.
  std::size_t vertex_index(const std::string& id) const;
  /// Throws MalformedPath.
  std::size_t arrow_index(const std::string& id) const;

  bool operator==(const Quiver& o) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_lookup_;
  std::map<std::string, std::size_t> arrow_lookup_;
};

struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t v) { return Path{v, {}}; }
  std::size_t length() const { return arrows.size(); }
  std::size_t end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }
  std::string to_string(const Quiver& q) const;

  auto operator<=>(const Path&) const = default;
};

/// Builds a composable path from arrow ids; throws MalformedPath.
Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids);

class QuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const QuiverAlgebra>;

/// A = kQ/I with I generated by paths. The path basis consists of every
/// path that contains no relation as a contiguous subword.
class QuiverAlgebra {
 public:
  const Field& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t vertex_count() const { return quiver_.vertex_count(); }

  std::optional<std::size_t> basis_index(const Path& p) const;
  bool is_nonzero(const Path& p) const { return basis_index(p).has_value(); }
  /// Basis paths from `from` to `to`, in basis order.
  const std::vector<std::size_t>& paths_between(std::size_t from, std::size_t to) const;
  std::vector<std::size_t> paths_from(std::size_t v) const;
  std::vector<std::size_t> paths_to(std::size_t v) const;
  std::size_t max_path_length() const;

  /// Monomial, at most two arrows in and out at each vertex, and every arrow
  /// has at most one non-zero continuation on each side.
  bool is_string_algebra() const;
  /// String algebra whose relations all have length two and where every
  /// arrow has at most one zero continuation on each side.
  bool is_gentle() const;

  bool operator==(const QuiverAlgebra& o) const;

  friend AlgebraPtr build_algebra(Field field, Quiver quiver, std::vector<Path> relations,
                                  std::size_t length_bound);
  friend AlgebraPtr opposite(const AlgebraPtr& alg);

 private:
  QuiverAlgebra(Field f) : field_(f) {}

  Field field_;
  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::vector<std::vector<std::size_t>>> between_;

  mutable std::mutex opposite_mutex_;
  mutable std::shared_ptr<const QuiverAlgebra> opposite_strong_;
  mutable std::weak_ptr<const QuiverAlgebra> opposite_weak_;
};

constexpr std::size_t kDefaultPathLengthBound = 64;

/// Enumerates the path basis. Throws MalformedPath for a relation that is
/// not composable or shorter than two, NonAdmissible when paths of length
/// `length_bound` still survive.
AlgebraPtr build_algebra(Field field, Quiver quiver, std::vector<Path> relations,
                         std::size_t length_bound = kDefaultPathLengthBound);

/// The opposite algebra: arrows reversed, relations read backwards. Its
/// representations are the modules on the other side. Cached, so
/// opposite(opposite(a)) == a.
AlgebraPtr opposite(const AlgebraPtr& alg);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

enum class StandardKind { simple, projective, injective };

class Rep;

/// S(i), P(i) (basis: paths starting at i) or E(i) (dual basis of paths
/// ending at i). Throws UnknownVertex.
Rep standard_module(const AlgebraPtr& alg, StandardKind kind, std::size_t vertex);
Rep standard_module(const AlgebraPtr& alg, StandardKind kind, const std::string& vertex_id);

}  // namespace commahom
