#include "commahom/comma.hpp"

#include <algorithm>

#include "commahom/errors.hpp"

namespace commahom {

namespace {

std::size_t position_in(const std::vector<std::size_t>& xs, std::size_t x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) throw Error("path is not in the expected basis list");
  return static_cast<std::size_t>(it - xs.begin());
}

// Restriction of a Lambda-module along an embedding of a side.
Rep restrict_to(const AlgebraPtr& side, const Rep& x, const std::vector<std::size_t>& to_lambda,
                const std::vector<std::optional<std::size_t>>& arrow_map) {
  std::vector<std::size_t> dims;
  for (auto v : to_lambda) dims.push_back(x.dim(v));
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < side->quiver().arrow_count(); ++a) act.push_back(x.action(*arrow_map[a]));
  return Rep(side, std::move(dims), std::move(act));
}

}  // namespace

TriangularSetup::TriangularSetup(AlgebraPtr r, AlgebraPtr s, AlgebraPtr lambda,
                                 const std::map<std::string, Side>& partition)
    : r_(std::move(r)), s_(std::move(s)), lambda_(std::move(lambda)) {
  const Quiver& lq = lambda_->quiver();
  if (!(r_->field() == lambda_->field()) || !(s_->field() == lambda_->field()))
    throw HypothesisFailed("R, S and Lambda must share the ground field");

  r_to_lambda_.assign(r_->vertex_count(), SIZE_MAX);
  s_to_lambda_.assign(s_->vertex_count(), SIZE_MAX);
  for (std::size_t v = 0; v < lq.vertex_count(); ++v) {
    const std::string& id = lq.vertex_id(v);
    auto it = partition.find(id);
    if (it == partition.end()) throw HypothesisFailed("vertex " + id + " is missing from the partition");
    const AlgebraPtr& side = it->second == Side::r ? r_ : s_;
    auto local = side->quiver().find_vertex(id);
    if (!local) throw HypothesisFailed("vertex " + id + " does not belong to its side's algebra");
    side_.push_back(it->second);
    local_.push_back(*local);
    (it->second == Side::r ? r_to_lambda_ : s_to_lambda_)[*local] = v;
  }
  for (std::size_t v = 0; v < r_->vertex_count(); ++v)
    if (r_to_lambda_[v] == SIZE_MAX) throw HypothesisFailed("R-vertex " + r_->quiver().vertex_id(v) + " missing in Lambda");
  for (std::size_t v = 0; v < s_->vertex_count(); ++v)
    if (s_to_lambda_[v] == SIZE_MAX) throw HypothesisFailed("S-vertex " + s_->quiver().vertex_id(v) + " missing in Lambda");

  r_arrow_.assign(r_->quiver().arrow_count(), std::nullopt);
  s_arrow_.assign(s_->quiver().arrow_count(), std::nullopt);
  for (std::size_t a = 0; a < lq.arrow_count(); ++a) {
    const Arrow& ar = lq.arrow(a);
    Side from = side_[ar.source], to = side_[ar.target];
    if (from == Side::r && to == Side::s)
      throw HypothesisFailed("arrow " + ar.id + " runs from the R-side to the S-side");
    if (from != to) continue;
    const AlgebraPtr& side = from == Side::r ? r_ : s_;
    auto local = side->quiver().find_arrow(ar.id);
    if (!local) throw HypothesisFailed("arrow " + ar.id + " is not an arrow of its side's algebra");
    const Arrow& la = side->quiver().arrow(*local);
    if (la.source != local_[ar.source] || la.target != local_[ar.target])
      throw HypothesisFailed("arrow " + ar.id + " has different endpoints in its side's algebra");
    (from == Side::r ? r_arrow_ : s_arrow_)[*local] = a;
  }
  auto check_side = [&](const AlgebraPtr& side, const std::vector<std::size_t>& to_lambda,
                        const std::vector<std::optional<std::size_t>>& arrows, const char* name) {
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (!arrows[a]) throw HypothesisFailed(std::string(name) + "-arrow " + side->quiver().arrow(a).id + " missing in Lambda");
    std::size_t inside = 0;
    for (const auto& p : lambda_->basis()) {
      bool in = side_[p.start] == (side == r_ ? Side::r : Side::s);
      for (auto a : p.arrows) in = in && side_[lq.arrow(a).target] == side_[p.start];
      inside += in;
    }
    for (const auto& p : side->basis()) {
      Path lp{to_lambda[p.start], {}};
      for (auto a : p.arrows) lp.arrows.push_back(*arrows[a]);
      if (!lambda_->is_nonzero(lp))
        throw HypothesisFailed(std::string(name) + "-path " + p.to_string(side->quiver()) + " vanishes in Lambda");
    }
    if (inside != side->dimension())
      throw HypothesisFailed(std::string("Lambda restricted to the ") + name + "-side has dimension " +
                             std::to_string(inside) + ", expected " + std::to_string(side->dimension()));
  };
  check_side(r_, r_to_lambda_, r_arrow_, "R");
  check_side(s_, s_to_lambda_, s_arrow_, "S");

  for (std::size_t sv = 0; sv < s_->vertex_count(); ++sv)
    parts_.push_back(restrict_r(standard_module(lambda_, StandardKind::projective, s_to_lambda_[sv])));

  const Field& f = lambda_->field();
  for (std::size_t b = 0; b < s_->quiver().arrow_count(); ++b) {
    const Arrow& sa = s_->quiver().arrow(b);
    const std::size_t ls = s_to_lambda_[sa.source], lt = s_to_lambda_[sa.target];
    std::vector<Matrix> blocks;
    for (std::size_t rv = 0; rv < r_->vertex_count(); ++rv) {
      const std::size_t lr = r_to_lambda_[rv];
      const auto& from = lambda_->paths_between(lt, lr);
      const auto& to = lambda_->paths_between(ls, lr);
      Matrix m(f, to.size(), from.size());
      for (std::size_t j = 0; j < from.size(); ++j) {
        Path p = lambda_->basis()[from[j]];
        p.start = ls;
        p.arrows.insert(p.arrows.begin(), *s_arrow_[b]);
        if (auto idx = lambda_->basis_index(p)) m(position_in(to, *idx), j) = f.one();
      }
      blocks.push_back(std::move(m));
    }
    prepend_.emplace_back(parts_[sa.target], parts_[sa.source], std::move(blocks));
  }

  if (lambda_->dimension() != r_->dimension() + s_->dimension() + bimodule_dim())
    throw HypothesisFailed("dim Lambda = " + std::to_string(lambda_->dimension()) + " differs from dim R + dim S + dim M = " +
                           std::to_string(r_->dimension() + s_->dimension() + bimodule_dim()));
}

std::size_t TriangularSetup::lambda_vertex(Side side, std::size_t local) const {
  return (side == Side::r ? r_to_lambda_ : s_to_lambda_).at(local);
}

Rep TriangularSetup::bimodule_r() const { return direct_sum(r_, parts_).sum; }

Rep TriangularSetup::bimodule_dual_s() const {
  std::vector<Rep> inj;
  for (std::size_t v = 0; v < r_->vertex_count(); ++v) inj.push_back(standard_module(r_, StandardKind::injective, v));
  return functor_t(*this, direct_sum(r_, inj).sum);
}

std::size_t TriangularSetup::bimodule_dim() const {
  std::size_t d = 0;
  for (const auto& p : parts_) d += p.total_dim();
  return d;
}

Rep TriangularSetup::restrict_r(const Rep& x) const { return restrict_to(r_, x, r_to_lambda_, r_arrow_); }
Rep TriangularSetup::restrict_s(const Rep& x) const { return restrict_to(s_, x, s_to_lambda_, s_arrow_); }

// ---------------------------------------------------------------- T, h, q

TValue functor_t_detailed(const TriangularSetup& setup, const Rep& a) {
  if (!same_algebra(a.algebra(), setup.r())) throw AlgebraMismatch("T is defined on R-modules");
  const auto& s = setup.s();
  std::vector<HomSpace> spaces;
  std::vector<std::size_t> dims;
  for (const auto& part : setup.bimodule_parts()) {
    spaces.emplace_back(part, a);
    dims.push_back(spaces.back().dim());
  }
  std::vector<Matrix> act;
  for (std::size_t b = 0; b < s->quiver().arrow_count(); ++b) {
    const Arrow& sa = s->quiver().arrow(b);
    const HomSpace& from = spaces[sa.source];
    const HomSpace& to = spaces[sa.target];
    std::vector<Vec> cols;
    for (const auto& g : from.basis()) cols.push_back(to.coordinates_of(g * setup.prepend(b)));
    act.push_back(Matrix::from_columns(a.field(), to.dim(), cols));
  }
  Rep rep(s, std::move(dims), std::move(act));
  return {std::move(rep), std::move(spaces)};
}

Rep functor_t(const TriangularSetup& setup, const Rep& a) { return functor_t_detailed(setup, a).rep; }

RepMor functor_t(const TriangularSetup& setup, const RepMor& alpha) {
  TValue src = functor_t_detailed(setup, alpha.source());
  TValue tgt = functor_t_detailed(setup, alpha.target());
  std::vector<Matrix> blocks;
  for (std::size_t sv = 0; sv < src.spaces.size(); ++sv) {
    std::vector<Vec> cols;
    for (const auto& g : src.spaces[sv].basis()) cols.push_back(tgt.spaces[sv].coordinates_of(alpha * g));
    blocks.push_back(Matrix::from_columns(alpha.source().field(), tgt.spaces[sv].dim(), cols));
  }
  return RepMor(src.rep, tgt.rep, std::move(blocks));
}

CommaObject make_comma_object(const TriangularSetup& setup, const Rep& a, const Rep& b, const RepMor& phi) {
  if (!same_algebra(a.algebra(), setup.r()) || !same_algebra(b.algebra(), setup.s()))
    throw InvalidPhi("comma object components over the wrong algebras");
  if (!(phi.source() == b)) throw InvalidPhi("phi does not start at B");
  if (!(phi.target() == functor_t(setup, a))) throw InvalidPhi("phi does not land in T(A)");
  return {a, b, phi};
}

CommaObject functor_h(const TriangularSetup& setup, const Rep& a, const Rep& b) {
  Rep ta = functor_t(setup, a);
  std::vector<Rep> parts{b, ta};
  DirectSum ds = direct_sum(setup.s(), parts);
  return {a, ds.sum, ds.projections[1]};
}

RepMor functor_h(const TriangularSetup& setup, const RepMor& alpha, const RepMor& beta) {
  CommaObject src = functor_h(setup, alpha.source(), beta.source());
  CommaObject tgt = functor_h(setup, alpha.target(), beta.target());
  RepMor ta = functor_t(setup, alpha);
  Rep x = from_triplet(setup, src), y = from_triplet(setup, tgt);
  const Field& f = x.field();
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < setup.lambda()->vertex_count(); ++v) {
    const std::size_t l = setup.local_vertex(v);
    if (setup.side(v) == Side::r) {
      blocks.push_back(alpha.block(l));
    } else {
      Matrix m(f, y.dim(v), x.dim(v));
      m.set_block(0, 0, beta.block(l));
      m.set_block(beta.target().dim(l), beta.source().dim(l), ta.block(l));
      blocks.push_back(std::move(m));
    }
  }
  return RepMor(x, y, std::move(blocks));
}

std::pair<Rep, Rep> functor_q(const CommaObject& obj) { return {obj.a, obj.b}; }

CommaObject to_triplet(const TriangularSetup& setup, const Rep& x) {
  if (!same_algebra(x.algebra(), setup.lambda())) throw AlgebraMismatch("to_triplet needs a Lambda-module");
  const auto& lam = setup.lambda();
  const Field& f = x.field();
  Rep a = setup.restrict_r(x);
  Rep b = setup.restrict_s(x);
  TValue t = functor_t_detailed(setup, a);
  std::vector<Matrix> phi;
  for (std::size_t sv = 0; sv < setup.s()->vertex_count(); ++sv) {
    const std::size_t ls = setup.lambda_vertex(Side::s, sv);
    const Rep& part = setup.bimodule_parts()[sv];
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < b.dim(sv); ++j) {
      Vec e = zero_vec(f, b.dim(sv));
      e[j] = f.one();
      std::vector<Matrix> blocks;
      for (std::size_t rv = 0; rv < setup.r()->vertex_count(); ++rv) {
        const std::size_t lr = setup.lambda_vertex(Side::r, rv);
        std::vector<Vec> g;
        for (auto idx : lam->paths_between(ls, lr)) g.push_back(x.path_action(lam->basis()[idx]).apply(e));
        blocks.push_back(Matrix::from_columns(f, a.dim(rv), g));
      }
      cols.push_back(t.spaces[sv].coordinates_of(RepMor(part, a, std::move(blocks))));
    }
    phi.push_back(Matrix::from_columns(f, t.rep.dim(sv), cols));
  }
  RepMor p(b, t.rep, std::move(phi));
  return {std::move(a), std::move(b), std::move(p)};
}

Rep from_triplet(const TriangularSetup& setup, const CommaObject& obj) {
  const auto& lam = setup.lambda();
  const Quiver& lq = lam->quiver();
  const Field& f = lam->field();
  TValue t = functor_t_detailed(setup, obj.a);
  if (!(obj.phi.source() == obj.b) || !(obj.phi.target() == t.rep)) throw InvalidPhi("phi is not a map B -> T(A)");

  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < lq.vertex_count(); ++v)
    dims.push_back(setup.side(v) == Side::r ? obj.a.dim(setup.local_vertex(v)) : obj.b.dim(setup.local_vertex(v)));
  std::vector<Matrix> act;
  for (std::size_t ai = 0; ai < lq.arrow_count(); ++ai) {
    const Arrow& ar = lq.arrow(ai);
    const Side from = setup.side(ar.source), to = setup.side(ar.target);
    const std::size_t ls = setup.local_vertex(ar.source), lt = setup.local_vertex(ar.target);
    if (from == to) {
      const Rep& side = from == Side::r ? obj.a : obj.b;
      const AlgebraPtr& alg = from == Side::r ? setup.r() : setup.s();
      act.push_back(side.action(*alg->quiver().find_arrow(ar.id)));
      continue;
    }
    // Cross arrow c: s -> r acts by b |-> phi_s(b)(c).
    const std::size_t pos = position_in(lam->paths_between(ar.source, ar.target), *lam->basis_index(Path{ar.source, {ai}}));
    const Matrix& ph = obj.phi.block(ls);
    Matrix m(f, obj.a.dim(lt), obj.b.dim(ls));
    for (std::size_t k = 0; k < t.spaces[ls].dim(); ++k) {
      Vec col = t.spaces[ls].basis()[k].block(lt).column(pos);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (ph(k, j).is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) += ph(k, j) * col[i];
      }
    }
    act.push_back(std::move(m));
  }
  try {
    return Rep(lam, std::move(dims), std::move(act));
  } catch (const InvalidRep& e) {
    throw InvalidPhi(std::string("triplet does not define a Lambda-module: ") + e.what());
  }
}

// ---------------------------------------------------------------- classes

bool in_class_d(const CommaObject& obj, const ObjectClass& x, const ObjectClass& y, const DecompOptions& opts) {
  if (!obj.phi.is_epi()) return false;
  if (!x.contains_additive(obj.a, opts)) return false;
  return y.contains_additive(kernel(obj.phi).rep, opts);
}

bool is_x_exact(const TriangularSetup& setup, const ObjectClass& x) {
  Rep m = setup.bimodule_r();
  for (const auto& member : x.members())
    if (ext_dim(1, m, member) != 0) return false;
  return true;
}

HClosure closure_h(const TriangularSetup& setup, const ObjectClass& x, const ObjectClass& y, const Universe& lambda_u,
                   const DecompOptions& opts) {
  HClosure out{ObjectClass(setup.lambda(), {}, opts.iso), false, ""};
  auto cx = closed_under_extensions(x, opts);
  auto cy = closed_under_extensions(y, opts);
  const bool exact = is_x_exact(setup, x);
  if (cx.closed && cy.closed && exact) {
    out.via_class_d = true;
    out.members = lambda_u.indecomposables.filter(
        [&](std::size_t i) { return in_class_d(to_triplet(setup, lambda_u[i]), x, y, opts); });
    out.note = "membership via D(X, Y)";
    return out;
  }
  if (!cx.closed) out.note = "X not closed under extensions: " + cx.witness;
  else if (!cy.closed) out.note = "Y not closed under extensions: " + cy.witness;
  else out.note = "T is not X-exact";

  // Saturate the h(X, 0) and h(0, Y) under extensions inside the universe.
  auto add_summands = [&](const Rep& m) {
    bool grew = false;
    for (const auto& s : decompose(m, opts)) {
      if (!lambda_u.indecomposables.contains(s)) continue;
      std::size_t before = out.members.size();
      out.members.insert(s);
      grew = grew || out.members.size() != before;
    }
    return grew;
  };
  Rep zero_r = Rep::zero(setup.r()), zero_s = Rep::zero(setup.s());
  for (const auto& a : x.members()) add_summands(from_triplet(setup, functor_h(setup, a, zero_s)));
  for (const auto& b : y.members()) add_summands(from_triplet(setup, functor_h(setup, zero_r, b)));
  std::size_t done = 0;
  while (done < out.members.size() * out.members.size()) {
    const std::size_t n = out.members.size();
    bool grew = false;
    for (std::size_t i = 0; i < n && !grew; ++i)
      for (std::size_t j = 0; j < n && !grew; ++j) {
        if (i < done / std::max<std::size_t>(n, 1)) continue;
        for (const auto& e : ext1_middle_terms(out.members[j], out.members[i]))
          if (add_summands(e.middle)) grew = true;
      }
    if (!grew) break;
    done = 0;
  }
  out.note += "; members form a lower approximation inside the universe";
  return out;
}

}  // namespace commahom
