#include "commahom/gorenstein.hpp"

#include "commahom/errors.hpp"

namespace commahom {

namespace {

std::size_t next(const PeriodicComplex& c, std::size_t k) { return (k + 1) % c.period(); }
std::size_t prev(const PeriodicComplex& c, std::size_t k) { return (k + c.period() - 1) % c.period(); }

// Matrix of g |-> d * g from Hom(e, from) to Hom(e, to).
Matrix postcompose(const HomSpace& from, const HomSpace& to, const RepMor& d) {
  std::vector<Vec> cols;
  for (const auto& g : from.basis()) cols.push_back(to.coordinates_of(d * g));
  return Matrix::from_columns(d.source().field(), to.dim(), cols);
}

}  // namespace

bool is_exact(const PeriodicComplex& c) {
  if (c.period() == 0 || c.maps.size() != c.period()) return false;
  for (std::size_t k = 0; k < c.period(); ++k) {
    const RepMor& d = c.maps[k];
    const RepMor& before = c.maps[prev(c, k)];
    if (!(d.source() == c.terms[k]) || !(d.target() == c.terms[next(c, k)])) return false;
    if (!(d * before).is_zero()) return false;
    if (c.terms[k].total_dim() - d.rank() != before.rank()) return false;
  }
  return true;
}

bool is_totally_acyclic(const PeriodicComplex& c) {
  if (!is_exact(c)) return false;
  for (const auto& t : c.terms)
    if (!is_injective(t)) return false;
  const AlgebraPtr& alg = c.terms[0].algebra();
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    Rep e = standard_module(alg, StandardKind::injective, v);
    std::vector<HomSpace> spaces;
    for (const auto& t : c.terms) spaces.emplace_back(e, t);
    std::vector<Matrix> ds;
    for (std::size_t k = 0; k < c.period(); ++k) ds.push_back(postcompose(spaces[k], spaces[next(c, k)], c.maps[k]));
    for (std::size_t k = 0; k < c.period(); ++k)
      if (spaces[k].dim() - rank(ds[k]) != rank(ds[prev(c, k)])) return false;
  }
  return true;
}

PeriodicComplex split_complex(const Rep& injective) {
  std::vector<Rep> parts{injective, injective};
  DirectSum ds = direct_sum(injective.algebra(), parts);
  RepMor d = block_morphism(ds, ds, {{std::nullopt, RepMor::identity(injective)}, {std::nullopt, std::nullopt}});
  return {{ds.sum}, {d}};
}

std::optional<PeriodicComplex> periodic_witness(const Rep& g, std::size_t max_steps) {
  std::vector<Cosyzygy> walk;
  Rep x = g;
  for (std::size_t step = 0; step < max_steps; ++step) {
    walk.push_back(cosyzygy(x));
    x = walk.back().cokernel.rep;
    if (x.is_zero()) return std::nullopt;
    auto theta = find_iso(x, g);
    if (!theta) continue;
    PeriodicComplex c;
    const std::size_t p = walk.size();
    for (std::size_t k = 0; k < p; ++k) c.terms.push_back(walk[k].envelope.object);
    for (std::size_t k = 0; k + 1 < p; ++k)
      c.maps.push_back(walk[k + 1].envelope.map * walk[k].cokernel.projection);
    c.maps.push_back(walk[0].envelope.map * (*theta * walk[p - 1].cokernel.projection));
    return c;
  }
  return std::nullopt;
}

PeriodicComplex apply_t(const TriangularSetup& setup, const PeriodicComplex& c) {
  PeriodicComplex out;
  for (const auto& t : c.terms) out.terms.push_back(functor_t(setup, t));
  for (const auto& d : c.maps) out.maps.push_back(functor_t(setup, d));
  return out;
}

IGCheck iwanaga_gorenstein(const AlgebraPtr& alg, const DimOptions& opts) {
  IGCheck r{true, 0, 0, ""};
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
    const std::string& id = alg->quiver().vertex_id(v);
    HomDim a = homological_dimension(DimKind::id, standard_module(alg, StandardKind::projective, v), opts);
    HomDim b = homological_dimension(DimKind::pd, standard_module(alg, StandardKind::injective, v), opts);
    if (!a.is_finite()) {
      r.holds = false;
      r.detail = "id P(" + id + ") is " + a.to_string();
      return r;
    }
    if (!b.is_finite()) {
      r.holds = false;
      r.detail = "pd E(" + id + ") is " + b.to_string();
      return r;
    }
    r.id_projectives = std::max(r.id_projectives, a.value);
    r.pd_injectives = std::max(r.pd_injectives, b.value);
  }
  r.detail = "id of projectives <= " + std::to_string(r.id_projectives) + ", pd of injectives <= " +
             std::to_string(r.pd_injectives);
  return r;
}

std::size_t GIResult::complex_certified() const {
  std::size_t n = 0;
  for (const auto& w : witnesses) n += w.has_value();
  return n;
}

GIResult gorenstein_injectives(const AlgebraPtr& alg, const Universe& u, const GIOptions& opts) {
  GIResult r{ObjectClass(alg), {}, {}, iwanaga_gorenstein(alg, opts.dims), {}};
  if (!r.ig.holds) throw NotGorensteinWithinBudget("not Iwanaga-Gorenstein within budget: " + r.ig.detail);
  const ObjectClass& all = u.indecomposables;
  for (const auto& l : all.members()) {
    HomDim h = homological_dimension(DimKind::pd, l, opts.dims);
    if (h.kind == HomDim::Kind::unknown) r.notes.push_back("pd of " + l.describe() + " unknown; not used");
    if (h.is_finite() && h.value > 0) r.finite_pd.emplace_back(l, h.value);
  }
  r.members = all.filter([&](std::size_t i) {
    for (const auto& [l, n] : r.finite_pd)
      for (std::size_t k = 1; k <= n; ++k)
        if (ext_dim(k, l, all[i]) != 0) return false;
    return true;
  });
  for (const auto& m : r.members.members()) {
    std::optional<PeriodicComplex> w =
        is_injective(m) ? std::optional<PeriodicComplex>(split_complex(m)) : periodic_witness(m, opts.walk_bound);
    if (w && !is_totally_acyclic(*w)) {
      r.notes.push_back("periodic complex for " + m.describe() + " is not totally acyclic");
      w.reset();
    }
    if (!w) r.notes.push_back(m.describe() + " is certified by orthogonality only");
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

std::string to_string(CondStatus s) {
  switch (s) {
    case CondStatus::holds_by_criterion: return "holds_by_criterion";
    case CondStatus::holds_by_search: return "holds_by_search";
    case CondStatus::fails: return "fails";
    case CondStatus::unknown: break;
  }
  return "unknown";
}

CocompatReport check_cocompatible(const TriangularSetup& setup, const GIResult* gi_r, const GIResult* gi_s,
                                  const DimOptions& opts) {
  CocompatReport r;
  Rep m = setup.bimodule_r();
  r.pd_m = homological_dimension(DimKind::pd, m, opts);
  r.pd_dual_m = homological_dimension(DimKind::pd, setup.bimodule_dual_s(), opts);

  // (W1): T J exact for totally acyclic J iff Ext^1(M, Z) = 0 for its cycles.
  if (r.pd_m.is_finite()) {
    r.c1 = {CondStatus::holds_by_criterion, "pd_R M = " + std::to_string(r.pd_m.value)};
    r.w1 = {CondStatus::holds_by_criterion, "implied by (C1)"};
  } else if (gi_r) {
    r.w1 = {CondStatus::holds_by_search, "Ext^1(M, G) = 0 for all " + std::to_string(gi_r->members.size()) + " GI"};
    for (std::size_t i = 0; i < gi_r->members.size(); ++i) {
      const Rep& g = gi_r->members[i];
      if (ext_dim(1, m, g) == 0) continue;
      r.w1 = {CondStatus::fails, "Ext^1(M, " + g.describe() + ") != 0"};
      if (gi_r->witnesses[i] && !is_exact(apply_t(setup, *gi_r->witnesses[i])))
        r.w1.witness += "; T of its totally acyclic complex is not exact";
      break;
    }
    if (gi_r->ig.holds) r.c1 = {r.w1.status, r.w1.witness + " (R is Iwanaga-Gorenstein)"};
    else r.c1 = {CondStatus::unknown, "pd_R M = " + r.pd_m.to_string()};
  } else {
    r.c1 = {CondStatus::unknown, "pd_R M = " + r.pd_m.to_string()};
    r.w1 = {CondStatus::unknown, "no GI classes supplied"};
  }

  // (C2): Hom(T I, J) exact iff Ext^1(T I, Z) = 0; finite pd T(DR) suffices.
  if (r.pd_dual_m.is_finite()) {
    r.c2 = {CondStatus::holds_by_criterion, "pd_S D(M) = " + std::to_string(r.pd_dual_m.value)};
  } else if (gi_s) {
    r.c2 = {CondStatus::holds_by_search, "Ext^1(T I, G) = 0 for all injective I and GI G"};
    const ObjectClass inj = injectives(setup.r());
    for (const auto& i : inj.members()) {
      Rep ti = functor_t(setup, i);
      for (const auto& g : gi_s->members.members())
        if (ext_dim(1, ti, g) != 0) {
          r.c2 = {CondStatus::fails, "Ext^1(T" + i.describe() + ", " + g.describe() + ") != 0"};
          return r;
        }
    }
  } else {
    r.c2 = {CondStatus::unknown, "pd_S D(M) = " + r.pd_dual_m.to_string()};
  }
  return r;
}

namespace {

bool all_summands_in(const Rep& m, const ObjectClass& c) {
  for (const auto& s : decompose(m))
    if (!c.contains(s)) return false;
  return true;
}

Verdict preenveloping(const ObjectClass& gi, const ObjectClass& all, const ApproxOptions& approx, std::string& detail) {
  ObjectClass left = left_perp(gi, all);
  std::size_t ok = 0;
  for (const auto& m : all.members()) {
    try {
      special_preenvelope(m, left, gi, approx);
      ++ok;
    } catch (const PostconditionFailed& e) {
      detail = m.describe() + ": " + e.what();
      return Verdict::no;
    } catch (const Undecided& e) {
      detail = m.describe() + ": " + e.what();
      return Verdict::unknown;
    }
  }
  detail = std::to_string(ok) + " verified";
  return Verdict::yes;
}

}  // namespace

LiftingReport verify_gi_transfer(const TransferInput& in, const ApproxOptions& approx) {
  const TriangularSetup& setup = *in.setup;
  const ObjectClass& gr = in.gi_r->members;
  const ObjectClass& gs = in.gi_s->members;
  const ObjectClass& gl = in.gi_l->members;
  const Rep zr = Rep::zero(setup.r()), zs = Rep::zero(setup.s());
  LiftingReport rep;

  {
    NamedCheck c{"h(0,G) GI implies G GI", Verdict::yes, ""};
    std::size_t n = 0;
    for (const auto& g : in.us->indecomposables.members()) {
      if (!all_summands_in(from_triplet(setup, functor_h(setup, zr, g)), gl)) continue;
      ++n;
      if (!gs.contains(g)) {
        c.verdict = Verdict::no;
        c.detail = g.describe();
      }
    }
    if (c.verdict == Verdict::yes) c.detail = std::to_string(n) + " premises";
    rep.checks.push_back(c);
  }
  {
    NamedCheck c{"h(L,0) GI implies L GI", Verdict::yes, ""};
    std::size_t n = 0;
    for (const auto& l : in.ur->indecomposables.members()) {
      if (!all_summands_in(from_triplet(setup, functor_h(setup, l, zs)), gl)) continue;
      ++n;
      if (!gr.contains(l)) {
        c.verdict = Verdict::no;
        c.detail = l.describe();
      }
    }
    if (c.verdict == Verdict::yes) c.detail = std::to_string(n) + " premises";
    rep.checks.push_back(c);
  }

  CocompatReport cc = check_cocompatible(setup, in.gi_r, in.gi_s);
  bool h_g0 = true, h_0l = true;
  for (const auto& g : gr.members()) h_g0 = h_g0 && all_summands_in(from_triplet(setup, functor_h(setup, g, zs)), gl);
  for (const auto& l : gs.members()) h_0l = h_0l && all_summands_in(from_triplet(setup, functor_h(setup, zr, l)), gl);
  auto iff = [](std::string name, const Condition& cond, bool rhs) {
    NamedCheck c{std::move(name), Verdict::unknown, ""};
    c.detail = "condition " + to_string(cond.status) + ", h-images " + (rhs ? "GI" : "not all GI");
    if (cond.status != CondStatus::unknown) c.verdict = verdict_of(cond.holds() == rhs);
    return c;
  };
  rep.checks.push_back(iff("(W1) iff h(G,0) GI", cc.w1, h_g0));
  rep.checks.push_back(iff("(C2) iff h(0,L) GI", cc.c2, h_0l));

  HClosure hc = closure_h(setup, gr, gs, *in.ul);
  {
    NamedCheck c{"<h(GI_R, GI_S)> in GI iff weakly cocompatible", Verdict::unknown, ""};
    const bool inside = is_subclass(hc.members, gl);
    c.detail = std::string("closure ") + (inside ? "inside" : "not inside") + " GI, weakly cocompatible: " +
               (cc.weak_cocompatible() ? "yes" : "no");
    if (cc.w1.status != CondStatus::unknown && cc.c2.status != CondStatus::unknown)
      c.verdict = verdict_of(inside == cc.weak_cocompatible());
    rep.checks.push_back(c);
  }
  {
    NamedCheck c{"GI(Lambda) = <h(GI_R, GI_S)> when cocompatible", Verdict::yes, "not cocompatible"};
    if (cc.cocompatible()) {
      c.verdict = verdict_of(same_class(hc.members, gl));
      c.detail = std::to_string(hc.members.size()) + " vs " + std::to_string(gl.size()) +
                 (hc.via_class_d ? " (via class D)" : " (saturation)");
    }
    rep.checks.push_back(c);
  }
  {
    NamedCheck c{"GI special preenveloping on both sides iff on Lambda", Verdict::unknown, ""};
    std::string dr, ds, dl;
    Verdict vr = preenveloping(gr, in.ur->indecomposables, approx, dr);
    Verdict vs = preenveloping(gs, in.us->indecomposables, approx, ds);
    Verdict vl = preenveloping(gl, in.ul->indecomposables, approx, dl);
    Verdict sides = verdict_and(vr, vs);
    c.detail = "R: " + dr + "; S: " + ds + "; Lambda: " + dl;
    if (!cc.cocompatible()) {
      c.verdict = Verdict::yes;
      c.detail = "not cocompatible; " + c.detail;
    } else if (sides != Verdict::unknown && vl != Verdict::unknown) {
      c.verdict = verdict_of(sides == vl);
    }
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace commahom
