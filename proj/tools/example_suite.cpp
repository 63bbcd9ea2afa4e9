#include "example_suite.hpp"

#include <sstream>

#include "commahom/errors.hpp"
#include "commahom/homalg.hpp"
#include "example_specs.hpp"
#include "spec_io.hpp"

namespace commahom::examples {

namespace {

NamedCheck make_check(std::string name, bool ok, std::string detail) {
  return NamedCheck{std::move(name), verdict_of(ok), std::move(detail)};
}

Rep thin(const AlgebraPtr& alg, const std::vector<std::string>& support, const std::vector<std::string>& arrows) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& v : support) dims[q.vertex_index(v)] = 1;
  std::vector<Matrix> act;
  for (const auto& a : q.arrows()) act.emplace_back(alg->field(), dims[a.target], dims[a.source]);
  for (const auto& a : arrows) act[q.arrow_index(a)](0, 0) = alg->field().one();
  return Rep(alg, dims, act);
}

std::string sizes(const ObjectClass& got, const ObjectClass& want) {
  return std::to_string(got.size()) + " computed, " + std::to_string(want.size()) + " expected";
}

// Verifies the postconditions of a GI-preenvelope independently of the
// construction: mono, exact, E in add GI, Ext^1(C, GI) = 0.
std::optional<std::string> preenvelope_failure(const Rep& m, const ObjectClass& gi, const ObjectClass& left,
                                               const ApproxOptions& ao) {
  try {
    auto a = special_preenvelope(m, left, gi, ao);
    if (!a.map.is_mono()) return "map not mono";
    if (!a.other_map.is_epi() || !(a.other_map * a.map).is_zero() ||
        a.object.total_dim() != m.total_dim() + a.other.total_dim())
      return "sequence not exact";
    if (!gi.contains_additive(a.object, ao.decomp)) return "envelope not in GI";
    for (const auto& g : gi.members())
      if (ext_dim(1, a.other, g) != 0) return "cokernel not in the left perp of GI";
    return std::nullopt;
  } catch (const Error& e) {
    return e.what();
  }
}

}  // namespace

UniverseOptions universe_options(std::uint64_t seed) {
  UniverseOptions o;
  o.decomp.seed = seed;
  o.decomp.iso.seed = seed;
  return o;
}

GIOptions gi_options(std::uint64_t seed) {
  GIOptions o;
  o.dims.decomp.seed = seed;
  o.dims.decomp.iso.seed = seed;
  return o;
}

ApproxOptions approx_options(std::uint64_t seed) {
  ApproxOptions o;
  o.decomp.seed = seed;
  o.decomp.iso.seed = seed;
  return o;
}

Example::Example(const ExampleOptions& o)
    : opts(o),
      s(io::parse_algebra(kS, "example_s.alg")),
      r(io::parse_algebra(kR, "example_r.alg")),
      lambda(io::parse_algebra(kLambda, "example_lambda.alg")),
      setup(r, s, lambda, io::parse_partition(kPartition, "example.partition")),
      us(enumerate_universe(s, o.dim_bound, universe_options(o.seed))),
      ur(enumerate_universe(r, o.dim_bound, universe_options(o.seed))),
      ul(enumerate_universe(lambda, o.dim_bound, universe_options(o.seed))),
      gi_s(gorenstein_injectives(s, us, gi_options(o.seed))),
      gi_r(gorenstein_injectives(r, ur, gi_options(o.seed))),
      gi_l(gorenstein_injectives(lambda, ul, gi_options(o.seed))) {}

ObjectClass expected_left_gi(const AlgebraPtr& alg) {
  std::vector<Rep> ms;
  for (auto v : {"1", "2", "3"}) ms.push_back(standard_module(alg, StandardKind::simple, v));
  ms.push_back(thin(alg, {"4", "5"}, {"a6"}));
  for (std::size_t v = 0; v < alg->vertex_count(); ++v) ms.push_back(standard_module(alg, StandardKind::injective, v));
  return ObjectClass(alg, ms);
}

NamedCheck check_dimensions(const Example& ex) {
  std::size_t l = ex.lambda->dimension(), s = ex.s->dimension(), r = ex.r->dimension(), m = ex.setup.bimodule_dim();
  std::ostringstream d;
  d << "dim Lambda = " << l << ", dim S + dim R + dim M = " << s << " + " << r << " + " << m;
  return make_check("dimension identity", l == 16 && l == s + r + m, d.str());
}

NamedCheck check_census(const Example& ex) {
  std::size_t inj = 0;
  for (const auto& m : ex.ul.indecomposables.members()) inj += is_injective(m) ? 1 : 0;
  std::ostringstream d;
  d << ex.ul.size() << " indecomposables over Lambda (" << inj << " injective), " << ex.us.size() << " over S, "
    << ex.ur.size() << " over R";
  bool ok = ex.ul.size() == 18 && inj == 7 && ex.us.size() == 16 && ex.ur.size() == 1 && ex.ul.exhaustive;
  return make_check("census", ok, d.str());
}

NamedCheck check_gi_lists(const Example& ex, bool lambda_side) {
  AlgebraPtr op = opposite(lambda_side ? ex.lambda : ex.s);
  auto u = enumerate_universe(op, ex.opts.dim_bound, universe_options(ex.opts.seed));
  auto g = gorenstein_injectives(op, u, gi_options(ex.opts.seed));
  auto want = expected_left_gi(op);
  bool ok = same_class(g.members, want) && g.members.size() == (lambda_side ? 11u : 10u) &&
            g.complex_certified() == g.members.size();
  return make_check(lambda_side ? "GI(Lambda) list" : "GI(S) list", ok,
                    sizes(g.members, want) + ", " + std::to_string(g.complex_certified()) + " with complete resolutions");
}

NamedCheck check_gi_ground_field(const Example& ex) {
  bool ok = ex.gi_r.members.size() == 1 && ex.gi_r.members.contains(standard_module(ex.r, StandardKind::simple, 0));
  return make_check("GI(k) = {k}", ok, std::to_string(ex.gi_r.members.size()) + " member(s)");
}

NamedCheck check_cocompatible(const Example& ex) {
  auto c = commahom::check_cocompatible(ex.setup, &ex.gi_r, &ex.gi_s);
  bool ok = c.c1.status == CondStatus::holds_by_criterion && c.c2.status == CondStatus::holds_by_criterion &&
            c.pd_m.is_finite() && c.pd_m.value == 0 && c.pd_dual_m.is_finite() && c.pd_dual_m.value == 0;
  std::ostringstream d;
  d << "C1 " << to_string(c.c1.status) << ", C2 " << to_string(c.c2.status) << ", pd M = " << c.pd_m.to_string()
    << ", pd D(M) = " << c.pd_dual_m.to_string();
  return make_check("cocompatibility", ok, d.str());
}

NamedCheck check_preenvelopes(const Example& ex) {
  auto ao = approx_options(ex.opts.seed);
  std::size_t done = 0;
  std::vector<std::string> failures;
  auto side = [&](const std::string& name, const Universe& u, const GIResult& g) {
    auto left = left_perp(g.members, u.indecomposables);
    for (std::size_t i = 0; i < u.size(); ++i) {
      ++done;
      if (auto f = preenvelope_failure(u[i], g.members, left, ao))
        failures.push_back(name + " #" + std::to_string(i) + " " + u[i].dim_string() + ": " + *f);
    }
  };
  side("Lambda", ex.ul, ex.gi_l);
  side("S", ex.us, ex.gi_s);
  side("R", ex.ur, ex.gi_r);
  std::string detail = std::to_string(done) + " preenvelopes, " + std::to_string(failures.size()) + " failures";
  if (!failures.empty()) detail += "; first: " + failures.front();
  return make_check("GI-preenvelopes", failures.empty() && done == 18 + 16 + 1, detail);
}

NamedCheck check_left_perp_of_h(const Example& ex) {
  const auto& ul = ex.ul.indecomposables;
  auto closure = closure_h(ex.setup, ex.gi_r.members, ex.gi_s.members, ex.ul);
  auto lhs = left_perp(closure.members, ul);
  auto rhs = triplet_class(ex.setup, left_perp(ex.gi_r.members, ex.ur.indecomposables),
                           left_perp(ex.gi_s.members, ex.us.indecomposables), ul);
  return make_check("left perp of <h(GI_R, GI_S)>", same_class(lhs, rhs), sizes(lhs, rhs));
}

NamedCheck check_h_of_everything(const Example& ex) {
  const auto& ul = ex.ul.indecomposables;
  auto closure = closure_h(ex.setup, ex.ur.indecomposables, ex.us.indecomposables, ex.ul).members;
  auto perp = right_perp(h_generators(ex.setup, ObjectClass(ex.r), projectives(ex.s)), ul);
  std::size_t mismatches = 0;
  for (const auto& z : ul.members()) mismatches += closure.contains(z) != perp.contains(z) ? 1 : 0;
  return make_check("<h(U_R, U_S)> = (0; projectives) right perp", mismatches == 0,
                    std::to_string(ul.size()) + " members, " + std::to_string(mismatches) + " mismatches");
}

NamedCheck check_gi_is_class_d(const Example& ex) {
  const auto& ul = ex.ul.indecomposables;
  std::size_t mismatches = 0;
  for (const auto& z : ul.members()) {
    bool d = in_class_d(to_triplet(ex.setup, z), ex.gi_r.members, ex.gi_s.members);
    mismatches += d != ex.gi_l.members.contains(z) ? 1 : 0;
  }
  return make_check("GI(Lambda) = D(GI_R, GI_S)", mismatches == 0,
                    std::to_string(ul.size()) + " members, " + std::to_string(mismatches) + " mismatches");
}

NamedCheck check_adjunction(const Example& ex) {
  std::vector<Rep> as(ex.ur.indecomposables.members());
  as.push_back(Rep::zero(ex.r));
  std::vector<Rep> bs(ex.us.indecomposables.members());
  bs.push_back(Rep::zero(ex.s));
  std::size_t pairs = 0, mismatches = 0;
  for (const auto& z : ex.ul.indecomposables.members()) {
    auto t = to_triplet(ex.setup, z);
    for (const auto& a : as)
      for (const auto& b : bs) {
        ++pairs;
        Rep h = from_triplet(ex.setup, functor_h(ex.setup, a, b));
        if (hom_dim(z, h) != hom_dim(t.a, a) + hom_dim(t.b, b)) ++mismatches;
      }
  }
  return make_check("Hom(Z, h(A, B)) = Hom(A_Z, A) + Hom(B_Z, B)", mismatches == 0,
                    std::to_string(pairs) + " triples, " + std::to_string(mismatches) + " mismatches");
}

NamedCheck check_closure_chain(const Example& ex) {
  const auto& ul = ex.ul.indecomposables;
  auto d = ul.filter([&](std::size_t i) {
    return in_class_d(to_triplet(ex.setup, ul[i]), ex.gi_r.members, ex.gi_s.members);
  });
  auto cr = closed_under_extensions(ex.gi_r.members);
  auto cs = closed_under_extensions(ex.gi_s.members);
  auto cd = closed_under_extensions(d);
  std::ostringstream det;
  det << "GI_R " << (cr.closed ? "closed" : "open") << ", GI_S " << (cs.closed ? "closed" : "open") << ", D ("
      << d.size() << " members) " << (cd.closed ? "closed" : "open: " + cd.witness);
  return make_check("extension closure of GI_R, GI_S and D", cr.closed && cs.closed && cd.closed, det.str());
}

std::vector<NamedCheck> check_transfer(const Example& ex) {
  return verify_gi_transfer({&ex.setup, &ex.ur, &ex.us, &ex.ul, &ex.gi_r, &ex.gi_s, &ex.gi_l},
                            approx_options(ex.opts.seed))
      .checks;
}

}  // namespace commahom::examples
