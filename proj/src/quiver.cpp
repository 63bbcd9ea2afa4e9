#include "commahom/quiver.hpp"

#include <algorithm>
#include <deque>

#include "commahom/errors.hpp"
#include "commahom/rep.hpp"

namespace commahom {

// ---------------------------------------------------------------- Quiver

std::size_t Quiver::add_vertex(const std::string& id) {
  if (vertex_lookup_.count(id)) throw Error("duplicate vertex id '" + id + "'");
  vertex_lookup_[id] = vertices_.size();
  vertices_.push_back(id);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& id, const std::string& source,
                              const std::string& target) {
  if (arrow_lookup_.count(id)) throw Error("duplicate arrow id '" + id + "'");
  Arrow a{id, vertex_index(source), vertex_index(target)};
  arrow_lookup_[id] = arrows_.size();
  arrows_.push_back(std::move(a));
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const {
  auto it = arrow_lookup_.find(id);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw UnknownVertex("unknown vertex '" + id + "'");
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  if (auto a = find_arrow(id)) return *a;
  throw MalformedPath("unknown arrow '" + id + "'");
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto &a = arrows_[i], &b = o.arrows_[i];
    if (a.id != b.id || a.source != b.source || a.target != b.target) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Path

std::string Path::to_string(const Quiver& q) const {
  if (arrows.empty()) return "e" + q.vertex_id(start);
  std::string s;
  for (auto a : arrows) s += q.arrow(a).id;
  return s;
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_ids) {
  if (arrow_ids.empty()) throw MalformedPath("empty path");
  Path p;
  for (std::size_t i = 0; i < arrow_ids.size(); ++i) {
    std::size_t a = q.arrow_index(arrow_ids[i]);
    if (i == 0) {
      p.start = q.arrow(a).source;
    } else if (q.arrow(p.arrows.back()).target != q.arrow(a).source) {
      throw MalformedPath("arrows " + arrow_ids[i - 1] + " and " + arrow_ids[i] + " do not compose");
    }
    p.arrows.push_back(a);
  }
  return p;
}

// ---------------------------------------------------------------- algebra

namespace {

bool has_relation_suffix(const Path& p, const std::vector<Path>& relations) {
  for (const auto& r : relations) {
    if (r.arrows.size() > p.arrows.size()) continue;
    if (std::equal(r.arrows.rbegin(), r.arrows.rend(), p.arrows.rbegin())) return true;
  }
  return false;
}

}  // namespace

AlgebraPtr build_algebra(Field field, Quiver quiver, std::vector<Path> relations,
                         std::size_t length_bound) {
  for (const auto& r : relations) {
    if (r.arrows.size() < 2) throw MalformedPath("relation of length < 2 is not admissible");
    for (std::size_t i = 0; i < r.arrows.size(); ++i) {
      if (r.arrows[i] >= quiver.arrow_count()) throw MalformedPath("relation uses unknown arrow");
      if (i > 0 && quiver.arrow(r.arrows[i - 1]).target != quiver.arrow(r.arrows[i]).source)
        throw MalformedPath("relation is not composable");
    }
    if (quiver.arrow(r.arrows.front()).source != r.start) throw MalformedPath("relation start vertex");
  }

  std::shared_ptr<QuiverAlgebra> alg(new QuiverAlgebra(field));
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(relations);
  const Quiver& q = alg->quiver_;

  std::vector<Path> frontier;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  std::size_t length = 0;
  while (!frontier.empty()) {
    for (auto& p : frontier) alg->basis_.push_back(p);
    if (length == length_bound)
      throw NonAdmissible("paths of length " + std::to_string(length_bound) +
                          " survive the relations; the ideal is not admissible");
    std::vector<Path> next;
    for (const auto& p : frontier) {
      std::size_t end = p.end(q);
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != end) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        if (!has_relation_suffix(ext, alg->relations_)) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
    ++length;
  }

  const std::size_t n = q.vertex_count();
  alg->between_.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t i = 0; i < alg->basis_.size(); ++i) {
    const Path& p = alg->basis_[i];
    alg->index_[p] = i;
    alg->between_[p.start][p.end(q)].push_back(i);
  }
  return alg;
}

std::optional<std::size_t> QuiverAlgebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& QuiverAlgebra::paths_between(std::size_t from, std::size_t to) const {
  return between_.at(from).at(to);
}

std::vector<std::size_t> QuiverAlgebra::paths_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < vertex_count(); ++w)
    for (auto i : between_.at(v)[w]) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> QuiverAlgebra::paths_to(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < vertex_count(); ++w)
    for (auto i : between_[w].at(v)) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t QuiverAlgebra::max_path_length() const {
  std::size_t m = 0;
  for (const auto& p : basis_) m = std::max(m, p.length());
  return m;
}

bool QuiverAlgebra::is_string_algebra() const {
  const Quiver& q = quiver_;
  std::vector<int> in(q.vertex_count(), 0), out(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) {
    ++out[a.source];
    ++in[a.target];
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (in[v] > 2 || out[v] > 2) return false;
  for (std::size_t b = 0; b < q.arrow_count(); ++b) {
    int before = 0, after = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).target == q.arrow(b).source && is_nonzero(Path{q.arrow(a).source, {a, b}})) ++before;
      if (q.arrow(b).target == q.arrow(a).source && is_nonzero(Path{q.arrow(b).source, {b, a}})) ++after;
    }
    if (before > 1 || after > 1) return false;
  }
  return true;
}

bool QuiverAlgebra::is_gentle() const {
  if (!is_string_algebra()) return false;
  for (const auto& r : relations_)
    if (r.length() != 2) return false;
  const Quiver& q = quiver_;
  for (std::size_t b = 0; b < q.arrow_count(); ++b) {
    int before = 0, after = 0;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      if (q.arrow(a).target == q.arrow(b).source && !is_nonzero(Path{q.arrow(a).source, {a, b}})) ++before;
      if (q.arrow(b).target == q.arrow(a).source && !is_nonzero(Path{q.arrow(b).source, {b, a}})) ++after;
    }
    if (before > 1 || after > 1) return false;
  }
  return true;
}

bool QuiverAlgebra::operator==(const QuiverAlgebra& o) const {
  return field_ == o.field_ && quiver_ == o.quiver_ && relations_ == o.relations_;
}

AlgebraPtr opposite(const AlgebraPtr& alg) {
  std::lock_guard<std::mutex> lock(alg->opposite_mutex_);
  if (alg->opposite_strong_) return alg->opposite_strong_;
  if (auto back = alg->opposite_weak_.lock()) return back;

  const Quiver& q = alg->quiver();
  Quiver op;
  for (const auto& v : q.vertices()) op.add_vertex(v);
  for (const auto& a : q.arrows()) op.add_arrow(a.id, q.vertex_id(a.target), q.vertex_id(a.source));
  std::vector<Path> rels;
  for (const auto& r : alg->relations()) {
    Path p;
    p.start = r.end(q);
    p.arrows.assign(r.arrows.rbegin(), r.arrows.rend());
    rels.push_back(std::move(p));
  }
  auto built = build_algebra(alg->field(), std::move(op), std::move(rels));
  auto mutable_built = std::const_pointer_cast<QuiverAlgebra>(built);
  mutable_built->opposite_weak_ = alg;
  alg->opposite_strong_ = built;
  return built;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------- standard modules

Rep standard_module(const AlgebraPtr& alg, StandardKind kind, std::size_t vertex) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  const std::size_t n = q.vertex_count();
  if (vertex >= n) throw UnknownVertex("vertex index " + std::to_string(vertex) + " out of range");

  if (kind == StandardKind::simple) {
    std::vector<std::size_t> dims(n, 0);
    dims[vertex] = 1;
    std::vector<Matrix> act;
    for (const auto& a : q.arrows()) act.emplace_back(f, dims[a.target], dims[a.source]);
    return Rep(alg, std::move(dims), std::move(act));
  }

  // Basis of the vertex-w space: paths vertex -> w (projective) or
  // w -> vertex (injective).
  std::vector<std::vector<std::size_t>> spaces(n);
  for (std::size_t w = 0; w < n; ++w)
    spaces[w] = kind == StandardKind::projective ? alg->paths_between(vertex, w)
                                                 : alg->paths_between(w, vertex);
  auto position = [&](std::size_t w, std::size_t path_index) -> std::optional<std::size_t> {
    const auto& s = spaces[w];
    auto it = std::find(s.begin(), s.end(), path_index);
    if (it == s.end()) return std::nullopt;
    return static_cast<std::size_t>(it - s.begin());
  };

  std::vector<std::size_t> dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = spaces[w].size();
  std::vector<Matrix> act;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    Matrix m(f, dims[a.target], dims[a.source]);
    for (std::size_t col = 0; col < spaces[a.source].size(); ++col) {
      const Path& p = alg->basis()[spaces[a.source][col]];
      if (kind == StandardKind::projective) {
        Path ext = p;
        ext.arrows.push_back(ai);
        if (auto idx = alg->basis_index(ext))
          if (auto row = position(a.target, *idx)) m(*row, col) = f.one();
      } else {
        // p* maps to q* when p = a q.
        if (p.arrows.empty() || p.arrows.front() != ai) continue;
        Path rest{a.target, std::vector<std::size_t>(p.arrows.begin() + 1, p.arrows.end())};
        if (auto idx = alg->basis_index(rest))
          if (auto row = position(a.target, *idx)) m(*row, col) = f.one();
      }
    }
    act.push_back(std::move(m));
  }
  return Rep(alg, std::move(dims), std::move(act));
}

Rep standard_module(const AlgebraPtr& alg, StandardKind kind, const std::string& vertex_id) {
  return standard_module(alg, kind, alg->quiver().vertex_index(vertex_id));
}

}  // namespace commahom
