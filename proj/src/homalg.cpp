#include "commahom/homalg.hpp"

#include <functional>

#include "commahom/errors.hpp"

namespace commahom {

RepMor from_projective(const Rep& m, std::size_t vertex, const Vec& x) {
  const auto& alg = m.algebra();
  Rep p = standard_module(alg, StandardKind::projective, vertex);
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < alg->vertex_count(); ++w) {
    std::vector<Vec> cols;
    for (auto idx : alg->paths_between(vertex, w)) cols.push_back(m.path_action(alg->basis()[idx]).apply(x));
    blocks.push_back(Matrix::from_columns(m.field(), m.dim(w), cols));
  }
  return RepMor(p, m, std::move(blocks));
}

Cover projective_cover(const Rep& m) {
  const auto& alg = m.algebra();
  const Quiver& q = alg->quiver();
  const Field& f = m.field();
  std::vector<Rep> parts;
  std::vector<RepMor> maps;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    Matrix rad(f, m.dim(v), 0);
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).target == v) rad = hstack(rad, m.action(a));
    const std::size_t r = rad.cols();
    auto red = rref(hstack(rad, Matrix::identity(f, m.dim(v))));
    for (auto c : red.pivot_cols) {
      if (c < r) continue;
      Vec x = zero_vec(f, m.dim(v));
      x[c - r] = f.one();
      maps.push_back(from_projective(m, v, x));
      parts.push_back(maps.back().source());
    }
  }
  DirectSum ds = direct_sum(alg, parts);
  RepMor map = RepMor::zero(ds.sum, m);
  for (std::size_t i = 0; i < parts.size(); ++i) map = map + maps[i] * ds.projections[i];
  return {ds.sum, RepMor(ds.sum, m, map.blocks())};
}

Cover injective_envelope(const Rep& m) {
  Cover c = projective_cover(dual(m));
  RepMor mono = dual(c.map);
  return {mono.target(), mono};
}

Syzygy syzygy(const Rep& m) {
  Cover c = projective_cover(m);
  SubRep k = kernel(c.map);
  return {std::move(c), std::move(k)};
}

Cosyzygy cosyzygy(const Rep& m) {
  Cover e = injective_envelope(m);
  QuotientRep q = cokernel(e.map);
  return {std::move(e), std::move(q)};
}

bool is_projective(const Rep& m) { return projective_cover(m).object.total_dim() == m.total_dim(); }
bool is_injective(const Rep& m) { return injective_envelope(m).object.total_dim() == m.total_dim(); }

Resolution projective_resolution(const Rep& m, std::size_t length) {
  Resolution r{Resolution::Direction::projective, {}, {}, {m}};
  Rep cur = m;
  std::optional<RepMor> prev_inclusion;
  for (std::size_t k = 0; k <= length && !cur.is_zero(); ++k) {
    Syzygy s = syzygy(cur);
    r.terms.push_back(s.cover.object);
    r.maps.push_back(prev_inclusion ? (*prev_inclusion) * s.cover.map : s.cover.map);
    prev_inclusion = s.kernel.inclusion;
    cur = s.kernel.rep;
    r.syzygies.push_back(cur);
  }
  return r;
}

Resolution injective_resolution(const Rep& m, std::size_t length) {
  Resolution r{Resolution::Direction::injective, {}, {}, {m}};
  Rep cur = m;
  std::optional<RepMor> prev_projection;
  for (std::size_t k = 0; k <= length && !cur.is_zero(); ++k) {
    Cosyzygy s = cosyzygy(cur);
    r.terms.push_back(s.envelope.object);
    r.maps.push_back(prev_projection ? s.envelope.map * (*prev_projection) : s.envelope.map);
    prev_projection = s.cokernel.projection;
    cur = s.cokernel.rep;
    r.syzygies.push_back(cur);
  }
  return r;
}

std::size_t ext_dim(std::size_t i, const Rep& m, const Rep& n) {
  if (i == 0) throw Error("ext_dim needs i >= 1");
  if (!same_algebra(m.algebra(), n.algebra())) throw AlgebraMismatch("Ext between different algebras");
  Rep cur = m;
  for (std::size_t k = 1; k < i && !cur.is_zero(); ++k) cur = syzygy(cur).kernel.rep;
  if (cur.is_zero() || n.is_zero()) return 0;
  // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1(M,N) -> 0
  Syzygy s = syzygy(cur);
  return hom_dim(s.kernel.rep, n) + hom_dim(cur, n) - hom_dim(s.cover.object, n);
}

// ---------------------------------------------------------------- Ext^1

Ext1Space::Ext1Space(const Rep& m, const Rep& n)
    : m_(m), n_(n), syz_(syzygy(m)), hom_(syz_.kernel.rep, n), quotient_(m.field(), 0, 0) {
  if (!same_algebra(m.algebra(), n.algebra())) throw AlgebraMismatch("Ext between different algebras");
  const Field& f = m.field();
  std::vector<Vec> cob;
  for (const auto& g : hom_basis(syz_.cover.object, n)) cob.push_back(hom_.coordinates_of(g * syz_.kernel.inclusion));
  Matrix b = Matrix::from_columns(f, hom_.dim(), cob);
  quotient_ = cokernel_projection(b);
  for (std::size_t i = 0; i < quotient_.rows(); ++i) {
    Vec e = zero_vec(f, quotient_.rows());
    e[i] = f.one();
    reps_.push_back(cocycle(e));
  }
}

RepMor Ext1Space::cocycle(const Vec& class_coords) const {
  if (class_coords.size() != quotient_.rows()) throw DimensionMismatch("Ext class coordinates");
  auto x = solve(quotient_, class_coords);
  return hom_.element(*x);
}

Vec Ext1Space::class_of(const RepMor& cocycle) const { return quotient_.apply(hom_.coordinates_of(cocycle)); }

namespace {

// Pushout of 0 -> K -(iota)-> P -(pi)-> M -> 0 along f: K -> N.
Extension pushout_extension(const RepMor& iota, const RepMor& pi, const RepMor& f) {
  const auto& alg = iota.source().algebra();
  std::vector<Rep> parts{pi.source(), f.target()};
  DirectSum ds = direct_sum(alg, parts);
  RepMor u = ds.injections[0] * iota - ds.injections[1] * f;
  QuotientRep q = cokernel(u);
  RepMor incl = q.projection * ds.injections[1];
  RepMor proj = factor_through_epi(q.projection, pi * ds.projections[0]);
  return {{}, q.rep, incl, proj};
}

}  // namespace

Extension extension_from_cocycle(const Ext1Space& space, const RepMor& cocycle) {
  const Syzygy& s = space.presentation();
  Extension e = pushout_extension(s.kernel.inclusion, s.cover.map, cocycle);
  e.class_coords = space.class_of(cocycle);
  return e;
}

std::vector<Extension> ext1_middle_terms(const Rep& m, const Rep& n, std::uint64_t max_classes) {
  Ext1Space space(m, n);
  const Field& f = m.field();
  const std::size_t d = space.dim();
  std::uint64_t count = 1;
  if (d > 0) {
    auto order = f.order();
    if (!order) throw ClassCountExceeded("Ext^1 over an infinite field has infinitely many classes");
    for (std::size_t i = 0; i < d; ++i) {
      count *= *order;
      if (count > max_classes)
        throw ClassCountExceeded("Ext^1 has more than " + std::to_string(max_classes) + " classes");
    }
  }
  std::vector<Extension> out;
  Vec c = zero_vec(f, d);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = f.element(x % *f.order());
      x /= *f.order();
    }
    out.push_back(extension_from_cocycle(space, space.cocycle(c)));
  }
  return out;
}

Extension universal_extension(const Rep& m, const Rep& n) { return universal_extension(std::vector<Rep>{m}, n); }

Extension universal_extension(const std::vector<Rep>& ms, const Rep& n) {
  const auto& alg = n.algebra();
  std::vector<Rep> ks, ps, rs;
  std::vector<const Ext1Space*> owner;
  std::vector<std::size_t> which;
  std::vector<Ext1Space> spaces;
  spaces.reserve(ms.size());
  for (const auto& m : ms) spaces.emplace_back(m, n);
  for (const auto& sp : spaces)
    for (std::size_t i = 0; i < sp.dim(); ++i) {
      ks.push_back(sp.presentation().kernel.rep);
      ps.push_back(sp.presentation().cover.object);
      rs.push_back(sp.left());
      owner.push_back(&sp);
      which.push_back(i);
    }
  DirectSum dk = direct_sum(alg, ks), dp = direct_sum(alg, ps), dm = direct_sum(alg, rs);
  RepMor iota = RepMor::zero(dk.sum, dp.sum);
  RepMor pi = RepMor::zero(dp.sum, dm.sum);
  RepMor f = RepMor::zero(dk.sum, n);
  for (std::size_t i = 0; i < owner.size(); ++i) {
    const Syzygy& s = owner[i]->presentation();
    iota = iota + dp.injections[i] * s.kernel.inclusion * dk.projections[i];
    pi = pi + dm.injections[i] * s.cover.map * dp.projections[i];
    f = f + owner[i]->basis()[which[i]] * dk.projections[i];
  }
  return pushout_extension(iota, pi, f);
}

ExtensionClosure closed_under_extensions(const ObjectClass& c, const DecompOptions& opts, std::uint64_t max_classes) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      for (const auto& e : ext1_middle_terms(c[j], c[i], max_classes))
        if (!c.contains_additive(e.middle, opts))
          return {false, "extension of " + c[j].describe() + " by " + c[i].describe() + " has middle term " +
                             e.middle.describe() + " outside the class"};
  return {};
}

// ---------------------------------------------------------------- dimensions

std::string HomDim::to_string() const {
  switch (kind) {
    case Kind::finite:
      return "finite(" + std::to_string(value) + ")";
    case Kind::infinite:
      return "infinite";
    case Kind::unknown:
      break;
  }
  return "unknown";
}

namespace {

HomDim projective_dimension(const Rep& m, const DimOptions& opts) {
  const auto& alg = m.algebra();
  ObjectClass nodes(alg, {}, opts.decomp.iso);
  std::vector<std::vector<std::size_t>> children;
  std::vector<char> projective;
  bool over_budget = false;

  // Registers x and, recursively, the summands of its syzygy.
  std::function<std::size_t(const Rep&)> visit = [&](const Rep& x) -> std::size_t {
    if (auto i = nodes.index_of(x)) return *i;
    if (nodes.size() >= opts.budget) {
      over_budget = true;
      return SIZE_MAX;
    }
    std::size_t id = nodes.insert(x);
    children.emplace_back();
    Syzygy s = syzygy(x);
    projective.push_back(s.kernel.rep.is_zero());
    if (!projective[id]) {
      for (const auto& y : decompose(s.kernel.rep, opts.decomp)) {
        std::size_t c = visit(y);
        if (c == SIZE_MAX) return id;
        children[id].push_back(c);
      }
    }
    return id;
  };

  std::vector<std::size_t> roots;
  for (const auto& x : decompose(m, opts.decomp)) {
    roots.push_back(visit(x));
    if (over_budget) break;
  }
  HomDim out;
  if (over_budget) {
    out.certificate = "syzygy graph exceeded " + std::to_string(opts.budget) + " indecomposables";
    return out;
  }

  // Depth-first longest path with cycle detection.
  const std::size_t n = nodes.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> depth(n, 0), parent(n, SIZE_MAX);
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
    state[v] = 1;
    std::size_t best = 0;
    for (auto c : children[v]) {
      if (state[c] == 1) {
        for (std::size_t w = v; w != c && w != SIZE_MAX; w = parent[w]) cycle.push_back(w);
        cycle.push_back(c);
        std::reverse(cycle.begin(), cycle.end());
        return false;
      }
      if (state[c] == 0) {
        parent[c] = v;
        if (!dfs(c)) return false;
      }
      best = std::max(best, depth[c]);
    }
    depth[v] = projective[v] ? 0 : 1 + best;
    state[v] = 2;
    return true;
  };
  std::size_t pd = 0;
  for (auto r : roots) {
    if (state[r] == 0 && !dfs(r)) {
      out.kind = HomDim::Kind::infinite;
      for (auto i : cycle) out.cycle.push_back(nodes[i]);
      out.certificate = "syzygy cycle of length " + std::to_string(cycle.size());
      return out;
    }
    pd = std::max(pd, depth[r]);
  }
  out.kind = HomDim::Kind::finite;
  out.value = pd;
  out.certificate = "resolution reaches projectives";
  return out;
}

}  // namespace

HomDim homological_dimension(DimKind kind, const Rep& m, const DimOptions& opts) {
  if (kind == DimKind::pd) return projective_dimension(m, opts);
  HomDim h = projective_dimension(dual(m), opts);
  for (auto& x : h.cycle) x = dual(x);
  if (h.kind == HomDim::Kind::infinite) h.certificate = "cosyzygy cycle of length " + std::to_string(h.cycle.size());
  if (h.kind == HomDim::Kind::finite) h.certificate = "coresolution reaches injectives";
  return h;
}

}  // namespace commahom
