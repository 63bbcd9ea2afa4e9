// commahom: command-line front end.
//
// Exit codes: 0 every check passed, 1 a check failed, 2 a result is
// unknown within budget, 3 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commahom/errors.hpp"
#include "commahom/gorenstein.hpp"
#include "example_suite.hpp"
#include "spec_io.hpp"

using namespace commahom;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;

struct Global {
  bool json = false;
  std::optional<std::uint64_t> seed_flag;
  std::string side = "right";
  std::uint64_t seed = 0;
};

/// Collects a report as text lines and as the mirroring JSON object.
class Report {
 public:
  Report(const Global& g, const std::string& command) : json_mode_(g.json) {
    doc_["command"] = command;
    doc_["header"] = json::object();
    text_.push_back("# commahom " + command);
    header("seed", g.seed);
    header("side", g.side);
  }

  void header(const std::string& key, const json& value) {
    doc_["header"][key] = value;
    text_.push_back("# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()));
  }

  void header_budgets(const UniverseOptions& uo, const GIOptions& go, const ApproxOptions& ao) {
    json b;
    b["universe_candidates"] = uo.candidate_budget;
    b["decomp_exhaustive"] = uo.decomp.exhaustive_limit;
    b["decomp_random_trials"] = uo.decomp.random_trials;
    b["iso_exhaustive"] = uo.decomp.iso.exhaustive_limit;
    b["iso_random_trials"] = uo.decomp.iso.random_trials;
    b["dim_budget"] = go.dims.budget;
    b["walk_bound"] = go.walk_bound;
    b["iteration_cap"] = ao.iteration_cap;
    std::string line;
    for (auto it = b.begin(); it != b.end(); ++it) line += (line.empty() ? "" : " ") + it.key() + "=" + it.value().dump();
    doc_["header"]["budgets"] = b;
    text_.push_back("# budgets: " + line);
  }

  void add(const std::string& key, const json& value, const std::string& text) {
    doc_[key] = value;
    text_.push_back(text);
  }

  void line(const std::string& text) { text_.push_back(text); }

  void check(const NamedCheck& c) {
    doc_["checks"].push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    std::string tag = c.verdict == Verdict::yes ? "PASS" : c.verdict == Verdict::no ? "FAIL" : "UNKNOWN";
    text_.push_back(tag + "  " + c.name + (c.detail.empty() ? "" : "  (" + c.detail + ")"));
    note(c.verdict);
  }

  void note(Verdict v) {
    if (v == Verdict::no) failed_ = true;
    if (v == Verdict::unknown) unknown_ = true;
  }

  int emit() const {
    if (json_mode_) {
      json out = doc_;
      out["status"] = status_name();
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& l : text_) std::cout << l << "\n";
      std::cout << "status: " << status_name() << "\n";
    }
    return failed_ ? kExitFail : unknown_ ? kExitUnknown : 0;
  }

 private:
  std::string status_name() const { return failed_ ? "fail" : unknown_ ? "unknown" : "pass"; }

  bool json_mode_;
  json doc_;
  std::vector<std::string> text_;
  bool failed_ = false;
  bool unknown_ = false;
};

AlgebraPtr load_side(const Global& g, const std::string& path) {
  auto alg = io::load_algebra(path);
  return g.side == "left" ? opposite(alg) : alg;
}

/// "S(1)", "P(2)", "E(3)" for standard modules, otherwise "M".
std::string label(const Rep& m) {
  const auto& alg = m.algebra();
  std::string out;
  for (std::size_t v = 0; v < alg->vertex_count(); ++v)
    for (auto [kind, name] : {std::pair{StandardKind::simple, "S"}, std::pair{StandardKind::projective, "P"},
                              std::pair{StandardKind::injective, "E"}}) {
      Rep st = standard_module(alg, kind, v);
      if (st.dims() == m.dims() && is_iso(st, m)) {
        std::string l = std::string(name) + "(" + alg->quiver().vertex_id(v) + ")";
        out += out.empty() ? l : "=" + l;
      }
    }
  return out.empty() ? "M" : out;
}

json member_json(std::size_t i, const Rep& m) {
  return {{"index", i}, {"label", label(m)}, {"dims", m.dims()}, {"description", m.describe()}};
}

std::string member_text(std::size_t i, const Rep& m) { return "  [" + std::to_string(i) + "] " + label(m) + "  " + m.describe(); }

void add_members(Report& rep, const std::string& key, const ObjectClass& c) {
  json arr = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) arr.push_back(member_json(i, c[i]));
  rep.add(key, arr, key + ": " + std::to_string(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) rep.line(member_text(i, c[i]));
}

/// Hom graph in DOT: an edge i -> j labelled dim Hom(M_i, M_j) when nonzero.
void write_dot(const std::string& path, const ObjectClass& c, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot write file");
  out << "digraph " << name << " {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    out << "  n" << i << " [label=\"" << label(c[i]) << "\\n" << c[i].dim_string() << "\"];\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      if (auto d = hom_dim(c[i], c[j])) out << "  n" << i << " -> n" << j << " [label=\"" << d << "\"];\n";
    }
  out << "}\n";
}

void header_algebra(Report& rep, const AlgebraPtr& alg, std::optional<std::size_t> bound) {
  rep.header("field", alg->field().name());
  rep.header("dim_bound", bound ? json(*bound) : json("none"));
}

void header_budgets(Report& rep, const Global& g) {
  rep.header_budgets(examples::universe_options(g.seed), examples::gi_options(g.seed), examples::approx_options(g.seed));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- commands

int cmd_basis(const Global& g, const std::string& path) {
  auto alg = load_side(g, path);
  Report rep(g, "basis");
  header_algebra(rep, alg, std::nullopt);
  header_budgets(rep, g);
  const Quiver& q = alg->quiver();
  rep.add("dim", alg->dimension(), "dim " + std::to_string(alg->dimension()));
  json paths = json::array();
  for (const auto& p : alg->basis()) {
    std::string word;
    if (p.arrows.empty()) {
      word = "e" + q.vertex_id(p.start);
    } else {
      for (auto a : p.arrows) word += (word.empty() ? "" : " ") + q.arrow(a).id;
    }
    paths.push_back({{"path", word}, {"source", q.vertex_id(p.start)}, {"target", q.vertex_id(p.end(q))}});
    rep.line("  " + word + "  : " + q.vertex_id(p.start) + " -> " + q.vertex_id(p.end(q)));
  }
  rep.add("basis", paths, "paths: " + std::to_string(paths.size()));
  rep.add("gentle", alg->is_gentle(), "gentle: " + yes_no(alg->is_gentle()));
  return rep.emit();
}

int cmd_universe(const Global& g, const std::string& path, std::size_t bound, const std::string& dot) {
  auto alg = load_side(g, path);
  auto u = enumerate_universe(alg, bound, examples::universe_options(g.seed));
  Report rep(g, "universe");
  header_algebra(rep, alg, bound);
  header_budgets(rep, g);
  std::size_t inj = 0, proj = 0;
  for (const auto& m : u.indecomposables.members()) {
    inj += is_injective(m) ? 1 : 0;
    proj += is_projective(m) ? 1 : 0;
  }
  rep.add("count", u.size(), std::to_string(u.size()) + " indecomposables");
  rep.add("injectives", inj, "injectives: " + std::to_string(inj));
  rep.add("projectives", proj, "projectives: " + std::to_string(proj));
  rep.add("strategy", u.strategy, "strategy: " + u.strategy);
  rep.add("exhaustive", u.exhaustive, "exhaustive: " + yes_no(u.exhaustive));
  add_members(rep, "members", u.indecomposables);
  if (!u.exhaustive) rep.note(Verdict::unknown);
  if (!dot.empty()) write_dot(dot, u.indecomposables, "universe");
  return rep.emit();
}

int cmd_ext(const Global& g, const std::string& path, const std::string& m_arg, const std::string& n_arg, std::size_t i) {
  auto alg = load_side(g, path);
  Rep m = io::load_module(alg, m_arg), n = io::load_module(alg, n_arg);
  Report rep(g, "ext");
  header_algebra(rep, alg, std::nullopt);
  header_budgets(rep, g);
  rep.add("M", member_json(0, m), "M: " + label(m) + "  " + m.describe());
  rep.add("N", member_json(1, n), "N: " + label(n) + "  " + n.describe());
  rep.add("i", i, "i: " + std::to_string(i));
  std::size_t d = i == 0 ? hom_dim(m, n) : ext_dim(i, m, n);
  rep.add("dim", d, "dim Ext^" + std::to_string(i) + "(M, N) = " + std::to_string(d));
  return rep.emit();
}

int cmd_gi(const Global& g, const std::string& path, std::size_t bound, const std::string& dot) {
  auto alg = load_side(g, path);
  auto u = enumerate_universe(alg, bound, examples::universe_options(g.seed));
  auto res = gorenstein_injectives(alg, u, examples::gi_options(g.seed));
  Report rep(g, "gi");
  header_algebra(rep, alg, bound);
  header_budgets(rep, g);
  rep.add("iwanaga_gorenstein", res.ig.detail, "Iwanaga-Gorenstein: " + res.ig.detail);
  rep.add("universe", u.size(), "universe: " + std::to_string(u.size()) + " indecomposables");
  json arr = json::array();
  for (std::size_t k = 0; k < res.members.size(); ++k) {
    const auto& w = res.witnesses[k];
    json mj = member_json(k, res.members[k]);
    mj["injective"] = is_injective(res.members[k]);
    mj["complete_resolution_period"] = w ? json(w->period()) : json(nullptr);
    arr.push_back(mj);
    rep.line(member_text(k, res.members[k]) +
             (w ? "  [complete resolution, period " + std::to_string(w->period()) + "]" : "  [orthogonality only]"));
  }
  rep.add("members", arr, std::to_string(res.members.size()) + " Gorenstein-injective indecomposables");
  rep.add("complex_certified", res.complex_certified(),
          "with complete resolution: " + std::to_string(res.complex_certified()));
  for (const auto& n : res.notes) rep.line("note: " + n);
  if (!u.exhaustive) rep.note(Verdict::unknown);
  if (!dot.empty()) write_dot(dot, res.members, "gi");
  return rep.emit();
}

struct Classes {
  ObjectClass left, right;
};

Classes resolve_pair(const Global& g, const AlgebraPtr& alg, const Universe& u, const std::string& l,
                     const std::string& r, Report& rep) {
  auto ls = io::load_class(l), rs = io::load_class(r);
  std::optional<GIResult> gi;
  if (ls.uses_gi() || rs.uses_gi()) gi = gorenstein_injectives(alg, u, examples::gi_options(g.seed));
  io::ClassContext ctx{&u.indecomposables, gi ? &gi->members : nullptr};
  Classes c{io::resolve_class(alg, ls, ctx), io::resolve_class(alg, rs, ctx)};
  rep.add("left_spec", ls.describe(), "left class: " + ls.describe() + "  (" + std::to_string(c.left.size()) + " members)");
  rep.add("right_spec", rs.describe(),
          "right class: " + rs.describe() + "  (" + std::to_string(c.right.size()) + " members)");
  return c;
}

int cmd_cotorsion(const Global& g, const std::string& path, const std::string& l, const std::string& r, std::size_t bound) {
  auto alg = load_side(g, path);
  auto u = enumerate_universe(alg, bound, examples::universe_options(g.seed));
  Report rep(g, "cotorsion");
  header_algebra(rep, alg, bound);
  header_budgets(rep, g);
  auto c = resolve_pair(g, alg, u, l, r, rep);
  add_members(rep, "left", c.left);
  add_members(rep, "right", c.right);
  auto res = analyse_pair(c.left, c.right, u, examples::approx_options(g.seed));
  rep.check({"cotorsion pair", res.is_pair, ""});
  rep.check({"hereditary", res.is_hereditary, ""});
  rep.check({"complete", res.is_complete, ""});
  json w = res.witnesses;
  for (const auto& s : res.witnesses) rep.line("witness: " + s);
  rep.add("witnesses", w, "witnesses: " + std::to_string(res.witnesses.size()));
  if (!u.exhaustive) rep.note(Verdict::unknown);
  return rep.emit();
}

int cmd_comma(const Global& g, const std::string& r_path, const std::string& s_path, const std::string& l_path,
              const std::string& partition, std::size_t bound, const std::string& x_arg, const std::string& y_arg) {
  auto r = load_side(g, r_path), s = load_side(g, s_path), l = load_side(g, l_path);
  std::optional<TriangularSetup> setup;
  try {
    setup.emplace(r, s, l, io::load_partition(partition));
  } catch (const HypothesisFailed& e) {
    throw ParseError(l_path, 0, std::string("does not glue the given R and S: ") + e.what());
  }
  Report rep(g, "comma");
  header_algebra(rep, l, bound);
  header_budgets(rep, g);
  auto uo = examples::universe_options(g.seed);
  auto ur = enumerate_universe(r, bound, uo), us = enumerate_universe(s, bound, uo), ul = enumerate_universe(l, bound, uo);
  std::ostringstream dims;
  dims << "dim Lambda = " << l->dimension() << " = " << s->dimension() << " + " << r->dimension() << " + "
       << setup->bimodule_dim();
  rep.add("dimension_identity",
          {{"lambda", l->dimension()}, {"s", s->dimension()}, {"r", r->dimension()}, {"m", setup->bimodule_dim()}},
          dims.str());
  rep.add("bimodule_r", member_json(0, setup->bimodule_r()), "M over R: " + setup->bimodule_r().describe());
  rep.add("universes", {{"r", ur.size()}, {"s", us.size()}, {"lambda", ul.size()}},
          "universes: R " + std::to_string(ur.size()) + ", S " + std::to_string(us.size()) + ", Lambda " +
              std::to_string(ul.size()));

  auto xs = io::load_class(x_arg), ys = io::load_class(y_arg);
  std::optional<GIResult> gi_r, gi_s;
  auto try_gi = [&](const AlgebraPtr& a, const Universe& u, std::optional<GIResult>& out) {
    try {
      out = gorenstein_injectives(a, u, examples::gi_options(g.seed));
    } catch (const Undecided&) {
    }
  };
  try_gi(r, ur, gi_r);
  try_gi(s, us, gi_s);
  auto cc = check_cocompatible(*setup, gi_r ? &*gi_r : nullptr, gi_s ? &*gi_s : nullptr);
  rep.add("cocompatibility",
          {{"c1", to_string(cc.c1.status)}, {"c2", to_string(cc.c2.status)}, {"w1", to_string(cc.w1.status)},
           {"pd_m", cc.pd_m.to_string()}, {"pd_dual_m", cc.pd_dual_m.to_string()}},
          "cocompatibility: C1 " + to_string(cc.c1.status) + ", C2 " + to_string(cc.c2.status) + ", W1 " +
              to_string(cc.w1.status) + ", pd M = " + cc.pd_m.to_string() + ", pd D(M) = " + cc.pd_dual_m.to_string());

  auto need_gi = [&](const std::optional<GIResult>& gi, const io::ClassSpec& spec) -> const ObjectClass* {
    if (!spec.uses_gi()) return nullptr;
    if (!gi) throw NotGorensteinWithinBudget("class '" + spec.describe() + "' needs GI of a non-Gorenstein algebra");
    return &gi->members;
  };
  auto x = io::resolve_class(r, xs, {&ur.indecomposables, need_gi(gi_r, xs)});
  auto y = io::resolve_class(s, ys, {&us.indecomposables, need_gi(gi_s, ys)});
  rep.add("x", xs.describe(), "X: " + xs.describe() + "  (" + std::to_string(x.size()) + " members)");
  rep.add("y", ys.describe(), "Y: " + ys.describe() + "  (" + std::to_string(y.size()) + " members)");
  bool exact = is_x_exact(*setup, x);
  rep.check({"T is X-exact", verdict_of(exact), ""});
  if (exact) {
    LiftingInput in{&*setup, x, y, &ur, &us, &ul};
    for (const auto& c : check_lifting(in).checks) rep.check(c);
  }
  if (!ur.exhaustive || !us.exhaustive || !ul.exhaustive) rep.note(Verdict::unknown);
  return rep.emit();
}

int cmd_preenvelope(const Global& g, const std::string& path, const std::string& m_arg,
                    const std::vector<std::string>& pair, std::size_t bound) {
  auto alg = load_side(g, path);
  Rep m = io::load_module(alg, m_arg);
  auto u = enumerate_universe(alg, bound, examples::universe_options(g.seed));
  Report rep(g, "preenvelope");
  header_algebra(rep, alg, bound);
  header_budgets(rep, g);
  auto c = resolve_pair(g, alg, u, pair.at(0), pair.at(1), rep);
  rep.add("M", member_json(0, m), "M: " + label(m) + "  " + m.describe());
  auto a = special_preenvelope(m, c.left, c.right, examples::approx_options(g.seed));
  rep.add("steps", a.steps, "steps: " + std::to_string(a.steps));
  json ej = json::array(), cj = json::array();
  rep.line("envelope summands:");
  for (std::size_t i = 0; i < a.object_summands.size(); ++i) {
    ej.push_back(member_json(i, a.object_summands[i]));
    rep.line(member_text(i, a.object_summands[i]));
  }
  rep.add("envelope", ej, "envelope dim " + std::to_string(a.object.total_dim()));
  rep.line("cokernel summands:");
  for (std::size_t i = 0; i < a.other_summands.size(); ++i) {
    cj.push_back(member_json(i, a.other_summands[i]));
    rep.line(member_text(i, a.other_summands[i]));
  }
  rep.add("cokernel", cj, "cokernel dim " + std::to_string(a.other.total_dim()));
  auto ao = examples::approx_options(g.seed);
  rep.check({"monomorphism", verdict_of(a.map.is_mono()), ""});
  rep.check({"short exact", verdict_of(a.other_map.is_epi() && (a.other_map * a.map).is_zero() &&
                                       a.object.total_dim() == m.total_dim() + a.other.total_dim()),
             ""});
  rep.check({"envelope in right class", verdict_of(c.right.contains_additive(a.object, ao.decomp)), ""});
  rep.check({"cokernel in left class", verdict_of(c.left.contains_additive(a.other, ao.decomp)), ""});
  if (!u.exhaustive) rep.note(Verdict::unknown);
  return rep.emit();
}

int cmd_verify_example(const Global& g, std::size_t bound) {
  examples::Example ex({bound, g.seed});
  Report rep(g, "verify-example");
  header_algebra(rep, ex.lambda, bound);
  header_budgets(rep, g);
  for (bool lambda_side : {false, true}) {
    auto op = opposite(lambda_side ? ex.lambda : ex.s);
    auto u = enumerate_universe(op, bound, examples::universe_options(g.seed));
    auto gi = gorenstein_injectives(op, u, examples::gi_options(g.seed));
    std::string key = lambda_side ? "gi_lambda_left" : "gi_s_left";
    rep.line(std::string("GI of left ") + (lambda_side ? "Lambda" : "S") + "-modules:");
    add_members(rep, key, gi.members);
  }
  rep.check(examples::check_dimensions(ex));
  rep.check(examples::check_census(ex));
  rep.check(examples::check_gi_lists(ex, false));
  rep.check(examples::check_gi_lists(ex, true));
  rep.check(examples::check_gi_ground_field(ex));
  rep.check(examples::check_cocompatible(ex));
  rep.check(examples::check_preenvelopes(ex));
  rep.check(examples::check_left_perp_of_h(ex));
  rep.check(examples::check_h_of_everything(ex));
  rep.check(examples::check_gi_is_class_d(ex));
  rep.check(examples::check_adjunction(ex));
  rep.check(examples::check_closure_chain(ex));
  for (const auto& c : examples::check_transfer(ex)) rep.check(c);
  return rep.emit();
}

std::uint64_t parse_seed(const std::string& s, const std::string& origin) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError(origin, 0, "seed must be a non-negative integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological algebra over monomial quiver algebras and their triangular gluings"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_flag("--json", g.json, "Machine-readable JSON report");
  app.add_option("--seed", g.seed_flag, "Seed for randomised searches (default: COMMAHOM_SEED or 0)");
  app.add_option("--side", g.side, "Module side: right (representations) or left (opposite algebra)")
      ->check(CLI::IsMember({"right", "left"}));

  std::string alg, m_arg, n_arg, left, right, r_alg, s_alg, lambda, partition, dot;
  std::string x_arg = "injectives", y_arg = "injectives";
  std::vector<std::string> pair;
  std::size_t bound = 3, ext_i = 1;

  auto* basis = app.add_subcommand("basis", "Dimension and path basis of an algebra");
  basis->add_option("algebra", alg)->required();

  auto* universe = app.add_subcommand("universe", "Indecomposables up to a dimension bound");
  universe->add_option("algebra", alg)->required();
  universe->add_option("--bound", bound, "Total dimension bound")->capture_default_str();
  universe->add_option("--dot", dot, "Write the Hom graph in DOT format");

  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N)");
  ext->add_option("algebra", alg)->required();
  ext->add_option("M", m_arg, "Module file or S(i), P(i), I(i)")->required();
  ext->add_option("N", n_arg, "Module file or S(i), P(i), I(i)")->required();
  ext->add_option("--i", ext_i, "Degree (0 gives Hom)")->capture_default_str();

  auto* gi = app.add_subcommand("gi", "Gorenstein-injective indecomposables");
  gi->add_option("algebra", alg)->required();
  gi->add_option("--bound", bound, "Total dimension bound")->capture_default_str();
  gi->add_option("--dot", dot, "Write the Hom graph of the class in DOT format");

  auto* cot = app.add_subcommand("cotorsion", "Check a pair of classes");
  cot->add_option("algebra", alg)->required();
  cot->add_option("--left", left, "Class file or term")->required();
  cot->add_option("--right", right, "Class file or term")->required();
  cot->add_option("--bound", bound, "Total dimension bound")->capture_default_str();

  auto* comma = app.add_subcommand("comma", "Glue R and S and check the lifting statements");
  comma->add_option("R", r_alg)->required();
  comma->add_option("S", s_alg)->required();
  comma->add_option("--lambda", lambda, "The glued algebra")->required();
  comma->add_option("--partition", partition, "Vertex partition file")->required();
  comma->add_option("--bound", bound, "Total dimension bound")->capture_default_str();
  comma->add_option("--x", x_arg, "Class over R")->capture_default_str();
  comma->add_option("--y", y_arg, "Class over S")->capture_default_str();

  auto* pre = app.add_subcommand("preenvelope", "Special preenvelope with respect to a pair");
  pre->add_option("algebra", alg)->required();
  pre->add_option("M", m_arg, "Module file or S(i), P(i), I(i)")->required();
  pre->add_option("--pair", pair, "Left and right class")->required()->expected(2);
  pre->add_option("--bound", bound, "Total dimension bound")->capture_default_str();

  auto* verify = app.add_subcommand("verify-example", "Run the bundled glued-algebra example");
  verify->add_option("--bound", bound, "Total dimension bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (g.seed_flag) {
      g.seed = *g.seed_flag;
    } else if (const char* env = std::getenv("COMMAHOM_SEED")) {
      g.seed = parse_seed(env, "COMMAHOM_SEED");
    }
    if (*basis) return cmd_basis(g, alg);
    if (*universe) return cmd_universe(g, alg, bound, dot);
    if (*ext) return cmd_ext(g, alg, m_arg, n_arg, ext_i);
    if (*gi) return cmd_gi(g, alg, bound, dot);
    if (*cot) return cmd_cotorsion(g, alg, left, right, bound);
    if (*comma) return cmd_comma(g, r_alg, s_alg, lambda, partition, bound, x_arg, y_arg);
    if (*pre) return cmd_preenvelope(g, alg, m_arg, pair, bound);
    if (*verify) return cmd_verify_example(g, bound);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownVertex& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidRep& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const AlgebraMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Undecided& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const Error& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
