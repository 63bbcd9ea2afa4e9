#include "commahom/cotorsion.hpp"

#include "commahom/errors.hpp"

namespace commahom {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::unknown: break;
  }
  return "unknown";
}

Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::yes;
}

namespace {

bool ext1_vanishes(const Rep& m, const ObjectClass& c, bool m_on_left) {
  for (const auto& x : c.members())
    if ((m_on_left ? ext_dim(1, m, x) : ext_dim(1, x, m)) != 0) return false;
  return true;
}

ObjectClass union_of(const ObjectClass& a, const ObjectClass& b) {
  ObjectClass out = a;
  for (const auto& m : b.members()) out.insert(m);
  return out;
}

}  // namespace

ObjectClass left_perp(const ObjectClass& c, const ObjectClass& universe) {
  return universe.filter([&](std::size_t i) { return ext1_vanishes(universe[i], c, true); });
}

ObjectClass right_perp(const ObjectClass& c, const ObjectClass& universe) {
  return universe.filter([&](std::size_t i) { return ext1_vanishes(universe[i], c, false); });
}

bool is_subclass(const ObjectClass& a, const ObjectClass& b) {
  for (const auto& m : a.members())
    if (!b.contains(m)) return false;
  return true;
}

bool same_class(const ObjectClass& a, const ObjectClass& b) {
  return a.size() == b.size() && is_subclass(a, b);
}

bool is_cotorsion_pair(const ObjectClass& x, const ObjectClass& y, const ObjectClass& universe) {
  return same_class(x, left_perp(y, universe)) && same_class(y, right_perp(x, universe));
}

HereditaryCheck is_hereditary(const ObjectClass& x, const ObjectClass& y, const DimOptions& opts) {
  ObjectClass seen(x.algebra());
  std::vector<std::size_t> depth;
  for (const auto& m : x.members()) {
    std::size_t before = seen.size();
    seen.insert(m);
    if (seen.size() != before) depth.push_back(0);
  }
  try {
    for (std::size_t i = 0; i < seen.size(); ++i) {
      const Rep z = seen[i];
      for (const auto& t : y.members())
        if (ext_dim(1, z, t) != 0)
          return {Verdict::no, "Ext^" + std::to_string(depth[i] + 1) + " nonzero: syzygy summand " + z.describe() +
                                   " against " + t.describe()};
      if (is_projective(z)) continue;
      for (const auto& s : decompose(syzygy(z).kernel.rep, opts.decomp)) {
        std::size_t before = seen.size();
        seen.insert(s);
        if (seen.size() == before) continue;
        depth.push_back(depth[i] + 1);
        if (seen.size() > opts.budget)
          return {Verdict::unknown, "more than " + std::to_string(opts.budget) + " syzygy summands"};
      }
    }
  } catch (const Undecided& e) {
    return {Verdict::unknown, e.what()};
  }
  return {Verdict::yes, std::to_string(seen.size()) + " syzygy summands checked"};
}

Approximation special_preenvelope(const Rep& m, const ObjectClass& x, const ObjectClass& y, const ApproxOptions& opts) {
  Rep e = m;
  RepMor total = RepMor::identity(m);
  std::size_t step = 0;
  for (;; ++step) {
    bool done = true;
    for (const auto& u : x.members())
      if (ext_dim(1, u, e) != 0) {
        done = false;
        break;
      }
    if (done) break;
    if (step == opts.iteration_cap)
      throw IterationCapExceeded("special preenvelope of " + m.describe() + " not reached after " +
                                 std::to_string(step) + " universal extensions");
    Extension ext = universal_extension(x.members(), e);
    total = ext.inclusion * total;
    e = ext.middle;
  }
  QuotientRep c = cokernel(total);
  Approximation out{e, total, c.rep, c.projection, step, decompose(e, opts.decomp), decompose(c.rep, opts.decomp)};
  if (!total.is_mono()) throw PostconditionFailed("preenvelope map is not mono");
  for (const auto& s : out.object_summands)
    if (!y.contains(s)) throw PostconditionFailed("preenvelope summand " + s.describe() + " is not in the right class");
  for (const auto& s : out.other_summands)
    if (!x.contains(s)) throw PostconditionFailed("cokernel summand " + s.describe() + " is not in the left class");
  return out;
}

ObjectClass dual_class(const ObjectClass& c) {
  std::vector<Rep> ms;
  for (const auto& m : c.members()) ms.push_back(dual(m));
  return ObjectClass::from_distinct(opposite(c.algebra()), ms);
}

Approximation special_precover(const Rep& m, const ObjectClass& x, const ObjectClass& y, const ApproxOptions& opts) {
  Approximation a = special_preenvelope(dual(m), dual_class(y), dual_class(x), opts);
  Approximation out{dual(a.object), dual(a.map), dual(a.other), dual(a.other_map), a.steps, {}, {}};
  for (const auto& s : a.object_summands) out.object_summands.push_back(dual(s));
  for (const auto& s : a.other_summands) out.other_summands.push_back(dual(s));
  return out;
}

CotorsionReport analyse_pair(const ObjectClass& x, const ObjectClass& y, const Universe& u, const ApproxOptions& opts) {
  CotorsionReport r{x, y, u.dim_bound, Verdict::unknown, Verdict::unknown, Verdict::unknown, {}};
  const ObjectClass& all = u.indecomposables;
  auto lp = left_perp(y, all), rp = right_perp(x, all);
  r.is_pair = verdict_of(same_class(x, lp) && same_class(y, rp));
  if (!same_class(x, lp)) r.witnesses.push_back("left class differs from the left perpendicular of the right class");
  if (!same_class(y, rp)) r.witnesses.push_back("right class differs from the right perpendicular of the left class");

  auto h = is_hereditary(x, y, DimOptions{64, opts.decomp});
  r.is_hereditary = h.verdict;
  if (h.verdict != Verdict::yes) r.witnesses.push_back("hereditary: " + h.witness);

  r.is_complete = Verdict::yes;
  for (const auto& m : all.members()) {
    for (int side = 0; side < 2; ++side) {
      try {
        if (side == 0) special_preenvelope(m, x, y, opts);
        else special_precover(m, x, y, opts);
      } catch (const PostconditionFailed& e) {
        r.is_complete = Verdict::no;
        r.witnesses.push_back(std::string(side == 0 ? "preenvelope of " : "precover of ") + m.describe() + ": " + e.what());
      } catch (const Undecided& e) {
        r.is_complete = verdict_and(r.is_complete, Verdict::unknown);
        r.witnesses.push_back(std::string(side == 0 ? "preenvelope of " : "precover of ") + m.describe() + ": " + e.what());
      }
    }
  }
  return r;
}

ObjectClass projectives(const AlgebraPtr& alg) {
  std::vector<Rep> ms;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) ms.push_back(standard_module(alg, StandardKind::projective, v));
  return ObjectClass(alg, ms);
}

ObjectClass injectives(const AlgebraPtr& alg) {
  std::vector<Rep> ms;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) ms.push_back(standard_module(alg, StandardKind::injective, v));
  return ObjectClass(alg, ms);
}

// ---------------------------------------------------------------- comma side

ObjectClass triplet_class(const TriangularSetup& setup, const ObjectClass& x, const ObjectClass& y,
                          const ObjectClass& lambda_universe, const DecompOptions& opts) {
  return lambda_universe.filter([&](std::size_t i) {
    CommaObject t = to_triplet(setup, lambda_universe[i]);
    return x.contains_additive(t.a, opts) && y.contains_additive(t.b, opts);
  });
}

ObjectClass h_generators(const TriangularSetup& setup, const ObjectClass& x, const ObjectClass& y,
                         const DecompOptions& opts) {
  std::vector<Rep> gens;
  for (const auto& a : x.members()) gens.push_back(from_triplet(setup, functor_h(setup, a, Rep::zero(setup.s()))));
  for (const auto& b : y.members()) gens.push_back(from_triplet(setup, functor_h(setup, Rep::zero(setup.r()), b)));
  return smd(setup.lambda(), gens, opts);
}

Verdict LiftingReport::overall() const {
  Verdict v = Verdict::yes;
  for (const auto& c : checks) v = verdict_and(v, c.verdict);
  return v;
}

namespace {

Verdict closed_under_kernels_or_cokernels(const ObjectClass& c, const ObjectClass& universe, bool kernels,
                                          const DecompOptions& opts) {
  // kernels: 0 -> A -> E -> C -> 0 with E, C in c forces A in c.
  // cokernels: 0 -> A -> E -> C -> 0 with A, E in c forces C in c.
  try {
    for (const auto& in : c.members())
      for (const auto& other : universe.members()) {
        if (c.contains(other)) continue;
        auto exts = kernels ? ext1_middle_terms(in, other) : ext1_middle_terms(other, in);
        for (const auto& e : exts)
          if (c.contains_additive(e.middle, opts)) return Verdict::no;
      }
  } catch (const Undecided&) {
    return Verdict::unknown;
  }
  return Verdict::yes;
}

Verdict resolving_impl(const ObjectClass& c, const ObjectClass& universe, bool co, const DecompOptions& opts) {
  ObjectClass base = co ? injectives(c.algebra()) : projectives(c.algebra());
  if (!is_subclass(base, c)) return Verdict::no;
  try {
    if (!closed_under_extensions(c, opts).closed) return Verdict::no;
  } catch (const Undecided&) {
    return Verdict::unknown;
  }
  return closed_under_kernels_or_cokernels(c, universe, !co, opts);
}

NamedCheck class_equality(std::string name, const ObjectClass& lhs, const ObjectClass& rhs) {
  NamedCheck c{std::move(name), verdict_of(same_class(lhs, rhs)), ""};
  c.detail = std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()) + " indecomposables";
  return c;
}

}  // namespace

Verdict is_resolving(const ObjectClass& c, const ObjectClass& universe, const DecompOptions& opts) {
  return resolving_impl(c, universe, false, opts);
}

Verdict is_coresolving(const ObjectClass& c, const ObjectClass& universe, const DecompOptions& opts) {
  return resolving_impl(c, universe, true, opts);
}

LiftingReport check_lifting(const LiftingInput& in, const DimOptions& opts) {
  const TriangularSetup& setup = *in.setup;
  const ObjectClass& ur = in.ur->indecomposables;
  const ObjectClass& us = in.us->indecomposables;
  const ObjectClass& ul = in.ul->indecomposables;
  const DecompOptions& d = opts.decomp;
  if (!is_x_exact(setup, in.x)) throw HypothesisFailed("T is not X-exact");

  LiftingReport rep;
  const ObjectClass empty_r(setup.r());
  const ObjectClass proj_s = projectives(setup.s());
  const ObjectClass zero_p = h_generators(setup, empty_r, proj_s, d);
  const ObjectClass lx = left_perp(in.x, ur), ly = left_perp(in.y, us);

  rep.checks.push_back(class_equality("left perp of <h(X,Y)> = (perp X ; perp Y)",
                                      left_perp(h_generators(setup, in.x, in.y, d), ul),
                                      triplet_class(setup, lx, ly, ul, d)));

  rep.checks.push_back(class_equality("<h(U_R,U_S)> = (0;P) perp", closure_h(setup, ur, us, *in.ul, d).members,
                                      right_perp(zero_p, ul)));

  {
    ObjectClass rx = right_perp(in.x, ur), ry = right_perp(in.y, us);
    ObjectClass lhs = closure_h(setup, rx, ry, *in.ul, d).members;
    ObjectClass rhs = right_perp(union_of(triplet_class(setup, in.x, in.y, ul, d), zero_p), ul);
    rep.checks.push_back(class_equality("<h(X perp, Y perp)> = (X;Y) perp meet (0;P) perp", lhs, rhs));
  }

  const bool cx = closed_under_extensions(in.x, d).closed;
  const bool cy = closed_under_extensions(in.y, d).closed;
  HClosure hxy = closure_h(setup, in.x, in.y, *in.ul, d);
  const ObjectClass dl = triplet_class(setup, lx, ly, ul, d);
  {
    const bool lhs = is_cotorsion_pair(lx, in.x, ur) && is_cotorsion_pair(ly, in.y, us);
    const bool rhs = is_cotorsion_pair(dl, hxy.members, ul) && cx && cy;
    NamedCheck c{"pairs on both sides iff lifted pair", verdict_of(lhs == rhs), ""};
    c.detail = std::string("sides: ") + (lhs ? "pairs" : "not pairs") + ", lifted: " + (rhs ? "pair" : "not a pair");
    rep.checks.push_back(c);

    Verdict hl = verdict_and(verdict_of(lhs), verdict_and(is_hereditary(lx, in.x, opts).verdict,
                                                          is_hereditary(ly, in.y, opts).verdict));
    Verdict hr = verdict_and(verdict_of(rhs), is_hereditary(dl, hxy.members, opts).verdict);
    NamedCheck ch{"hereditary on both sides iff lifted pair hereditary", Verdict::unknown, ""};
    if (hl != Verdict::unknown && hr != Verdict::unknown) ch.verdict = verdict_of(hl == hr);
    ch.detail = "sides: " + to_string(hl) + ", lifted: " + to_string(hr);
    rep.checks.push_back(ch);
  }

  {
    Verdict l = is_resolving(dl, ul, d);
    Verdict r = verdict_and(is_resolving(lx, ur, d), is_resolving(ly, us, d));
    NamedCheck c{"(perp X ; perp Y) resolving iff both are", Verdict::unknown,
                 "lifted: " + to_string(l) + ", sides: " + to_string(r)};
    if (l != Verdict::unknown && r != Verdict::unknown) c.verdict = verdict_of(l == r);
    rep.checks.push_back(c);
  }
  {
    NamedCheck c{"<h(X,Y)> coresolving iff X, Y are", Verdict::yes, "X or Y not extension-closed"};
    if (cx && cy) {
      Verdict l = is_coresolving(hxy.members, ul, d);
      Verdict r = verdict_and(is_coresolving(in.x, ur, d), is_coresolving(in.y, us, d));
      c.detail = "lifted: " + to_string(l) + ", sides: " + to_string(r);
      c.verdict = (l == Verdict::unknown || r == Verdict::unknown) ? Verdict::unknown : verdict_of(l == r);
    }
    rep.checks.push_back(c);
  }
  return rep;
}

FrobeniusCheck is_frobenius_hull(const TriangularSetup& setup) {
  if (!is_projective(setup.bimodule_r())) throw HypothesisFailed("T is not exact: M is not projective over R");
  if (!same_class(projectives(setup.r()), injectives(setup.r())))
    return {false, "projective and injective R-modules differ"};
  if (!same_class(projectives(setup.s()), injectives(setup.s())))
    return {false, "projective and injective S-modules differ"};
  const ObjectClass inj_r = injectives(setup.r());
  for (const auto& i : inj_r.members()) {
    Rep t = functor_t(setup, i);
    if (!is_injective(t)) return {false, "T" + i.describe() + " is not injective"};
  }
  return {true, "both sides self-injective and T preserves injectives"};
}

}  // namespace commahom
