#include "spec_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "commahom/cotorsion.hpp"
#include "commahom/decomp.hpp"
#include "commahom/errors.hpp"

namespace commahom::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
  std::string text;  // comment stripped and trimmed
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
  return s;
}

// Non-empty lines with ':' and '->' split off as their own tokens.
std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string t = trim(raw);
    if (t.empty()) continue;
    std::istringstream ts(replace_all(replace_all(t, "->", " -> "), ":", " : "));
    Line l{n, {}, t};
    for (std::string tok; ts >> tok;) l.tokens.push_back(tok);
    out.push_back(std::move(l));
  }
  return out;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long parse_int(const std::string& s, const std::string& name, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError(name, line, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParseError(name, line, "expected an integer, got '" + s + "'");
  return v;
}

Scalar parse_scalar(const Field& f, const std::string& s, const std::string& name, int line) {
  auto slash = s.find('/');
  long long num = parse_int(s.substr(0, slash), name, line);
  long long den = slash == std::string::npos ? 1 : parse_int(s.substr(slash + 1), name, line);
  if (den == 0) throw ParseError(name, line, "zero denominator in '" + s + "'");
  try {
    return f.from_fraction(num, den);
  } catch (const Error& e) {
    throw ParseError(name, line, "entry '" + s + "': " + e.what());
  }
}

// "[[1,0],[0,1]]" -> rows of entries; "[]" -> no rows.
std::vector<std::vector<std::string>> parse_matrix_text(std::string s, const std::string& name, int line) {
  s = replace_all(replace_all(s, " ", ""), "\t", "");
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError(name, line, "matrix must be written [[...], ...]");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] != '[') throw ParseError(name, line, "expected '[' starting a matrix row");
    auto close = body.find(']', i);
    if (close == std::string::npos) throw ParseError(name, line, "unterminated matrix row");
    std::string row = body.substr(i + 1, close - i - 1);
    std::vector<std::string> entries;
    if (!row.empty()) {
      std::istringstream rs(row);
      for (std::string e; std::getline(rs, e, ',');) {
        if (e.empty()) throw ParseError(name, line, "empty matrix entry");
        entries.push_back(e);
      }
    }
    rows.push_back(std::move(entries));
    i = close + 1;
    if (i < body.size()) {
      if (body[i] != ',') throw ParseError(name, line, "expected ',' between matrix rows");
      ++i;
    }
  }
  return rows;
}

const std::regex& standard_pattern() {
  static const std::regex re(R"(^([SPIE])\((.+)\)$)");
  return re;
}

std::optional<Rep> standard_from_text(const AlgebraPtr& alg, const std::string& s, const std::string& name, int line) {
  std::smatch m;
  if (!std::regex_match(s, m, standard_pattern())) return std::nullopt;
  StandardKind kind = m[1] == "S" ? StandardKind::simple : m[1] == "P" ? StandardKind::projective : StandardKind::injective;
  auto v = alg->quiver().find_vertex(m[2]);
  if (!v) throw ParseError(name, line, "unknown vertex '" + m[2].str() + "'");
  return standard_module(alg, kind, *v);
}

ClassExpr parse_term(const std::string& raw, const std::string& name, int line, const std::string& base_dir) {
  std::string t = trim(raw);
  ClassExpr e;
  e.source = t;
  if (t == "all") return e.kind = ClassExpr::Kind::all, e;
  if (t == "projectives") return e.kind = ClassExpr::Kind::projectives, e;
  if (t == "injectives") return e.kind = ClassExpr::Kind::injectives, e;
  if (t == "gi") return e.kind = ClassExpr::Kind::gi, e;
  for (auto [prefix, kind] : {std::pair{"lperp(", ClassExpr::Kind::lperp}, std::pair{"rperp(", ClassExpr::Kind::rperp}}) {
    std::string p = prefix;
    if (t.rfind(p, 0) == 0) {
      if (t.back() != ')') throw ParseError(name, line, "missing ')' in '" + t + "'");
      e.kind = kind;
      e.inner = std::make_shared<ClassExpr>(parse_term(t.substr(p.size(), t.size() - p.size() - 1), name, line, base_dir));
      return e;
    }
  }
  if (std::regex_match(t, standard_pattern())) {
    e.kind = ClassExpr::Kind::module;
    e.module_ref = t;
    return e;
  }
  if (t.rfind("module ", 0) == 0) {
    std::string path = trim(t.substr(7));
    e.kind = ClassExpr::Kind::module;
    e.module_ref = (std::filesystem::path(base_dir) / path).string();
    return e;
  }
  throw ParseError(name, line, "unknown class term '" + t + "'");
}

ObjectClass resolve_term(const AlgebraPtr& alg, const ClassExpr& e, const ClassContext& ctx) {
  auto need_universe = [&]() -> const ObjectClass& {
    if (!ctx.universe) throw Error("class term '" + e.source + "' needs a universe");
    return *ctx.universe;
  };
  switch (e.kind) {
    case ClassExpr::Kind::all:
      return need_universe();
    case ClassExpr::Kind::projectives:
      return projectives(alg);
    case ClassExpr::Kind::injectives:
      return injectives(alg);
    case ClassExpr::Kind::gi:
      if (!ctx.gi) throw Error("class term 'gi' used without a Gorenstein-injective class");
      return *ctx.gi;
    case ClassExpr::Kind::module:
      return smd(alg, {load_module(alg, e.module_ref)});
    case ClassExpr::Kind::lperp:
      return left_perp(resolve_term(alg, *e.inner, ctx), need_universe());
    case ClassExpr::Kind::rperp:
      return right_perp(resolve_term(alg, *e.inner, ctx), need_universe());
  }
  return ObjectClass(alg);
}

bool term_uses_gi(const ClassExpr& e) {
  return e.kind == ClassExpr::Kind::gi || (e.inner && term_uses_gi(*e.inner));
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraPtr parse_algebra(const std::string& text, const std::string& name) {
  Field field = Field::prime(2);
  bool field_seen = false;
  Quiver q;
  std::vector<std::pair<int, std::vector<std::string>>> relation_lines;
  int last_line = 0;
  for (const auto& l : lines_of(text)) {
    last_line = l.number;
    const auto& t = l.tokens;
    if (t[0] == "field") {
      if (field_seen) throw ParseError(name, l.number, "field given twice");
      field_seen = true;
      if (t.size() != 2) throw ParseError(name, l.number, "expected 'field GF(p)' or 'field Q'");
      std::smatch m;
      if (t[1] == "Q") {
        field = Field::rationals();
      } else if (std::regex_match(t[1], m, std::regex(R"(^GF\((\d+)\)$)"))) {
        unsigned long p = std::stoul(m[1]);
        if (!is_prime(p) || p > (1ul << 31)) throw ParseError(name, l.number, "GF(p) needs a prime p below 2^31");
        field = Field::prime(static_cast<std::uint32_t>(p));
      } else {
        throw ParseError(name, l.number, "unknown field '" + t[1] + "'");
      }
    } else if (t[0] == "vertex") {
      if (t.size() < 2) throw ParseError(name, l.number, "expected 'vertex <id>'");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (q.find_vertex(t[i])) throw ParseError(name, l.number, "duplicate vertex '" + t[i] + "'");
        q.add_vertex(t[i]);
      }
    } else if (t[0] == "arrow") {
      if (t.size() != 6 || t[2] != ":" || t[4] != "->")
        throw ParseError(name, l.number, "expected 'arrow <id>: <source> -> <target>'");
      if (q.find_arrow(t[1])) throw ParseError(name, l.number, "duplicate arrow '" + t[1] + "'");
      for (const auto& v : {t[3], t[5]})
        if (!q.find_vertex(v)) throw ParseError(name, l.number, "unknown vertex '" + v + "'");
      q.add_arrow(t[1], t[3], t[5]);
    } else if (t[0] == "relation") {
      if (t.size() < 3) throw ParseError(name, l.number, "a relation needs at least two arrows");
      relation_lines.emplace_back(l.number, std::vector<std::string>(t.begin() + 1, t.end()));
    } else {
      throw ParseError(name, l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (q.vertex_count() == 0) throw ParseError(name, std::max(last_line, 1), "no vertices");
  std::vector<Path> rels;
  for (const auto& [line, ids] : relation_lines) {
    for (const auto& a : ids)
      if (!q.find_arrow(a)) throw ParseError(name, line, "unknown arrow '" + a + "'");
    try {
      rels.push_back(make_path(q, ids));
    } catch (const MalformedPath& e) {
      throw ParseError(name, line, std::string("relation is not a path: ") + e.what());
    }
  }
  try {
    return build_algebra(field, std::move(q), std::move(rels));
  } catch (const NonAdmissible& e) {
    throw ParseError(name, last_line, std::string("algebra is not finite dimensional: ") + e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path) { return parse_algebra(read_file(path), path); }

Rep parse_module(const AlgebraPtr& alg, const std::string& text, const std::string& name) {
  const Quiver& q = alg->quiver();
  std::optional<Rep> standard;
  std::optional<std::vector<std::size_t>> dims;
  std::vector<std::optional<Matrix>> maps(q.arrow_count());
  int last_line = 0;
  for (const auto& l : lines_of(text)) {
    last_line = l.number;
    const auto& t = l.tokens;
    if (standard) throw ParseError(name, l.number, "nothing may follow a 'standard' line");
    if (t[0] == "standard") {
      if (dims) throw ParseError(name, l.number, "'standard' cannot be mixed with 'dims'");
      if (t.size() != 2) throw ParseError(name, l.number, "expected 'standard S(i)', 'P(i)' or 'I(i)'");
      standard = standard_from_text(alg, t[1], name, l.number);
      if (!standard) throw ParseError(name, l.number, "expected S(i), P(i) or I(i), got '" + t[1] + "'");
    } else if (t[0] == "dims") {
      if (dims) throw ParseError(name, l.number, "dims given twice");
      if (t.size() < 2 || t[1] != ":") throw ParseError(name, l.number, "expected 'dims: <vertex>=<dim> ...'");
      dims.emplace(q.vertex_count(), 0);
      for (std::size_t i = 2; i < t.size(); ++i) {
        auto eq = t[i].find('=');
        if (eq == std::string::npos) throw ParseError(name, l.number, "expected <vertex>=<dim>, got '" + t[i] + "'");
        auto v = q.find_vertex(t[i].substr(0, eq));
        if (!v) throw ParseError(name, l.number, "unknown vertex '" + t[i].substr(0, eq) + "'");
        long long d = parse_int(t[i].substr(eq + 1), name, l.number);
        if (d < 0) throw ParseError(name, l.number, "negative dimension");
        (*dims)[*v] = static_cast<std::size_t>(d);
      }
    } else if (t[0] == "map") {
      if (!dims) throw ParseError(name, l.number, "'map' before 'dims'");
      if (t.size() < 4 || t[2] != "=") throw ParseError(name, l.number, "expected 'map <arrow> = [[...]]'");
      auto a = q.find_arrow(t[1]);
      if (!a) throw ParseError(name, l.number, "unknown arrow '" + t[1] + "'");
      if (maps[*a]) throw ParseError(name, l.number, "map for '" + t[1] + "' given twice");
      std::string mtext;
      for (std::size_t i = 3; i < t.size(); ++i) mtext += t[i];
      auto rows = parse_matrix_text(mtext, name, l.number);
      std::size_t rdim = (*dims)[q.arrow(*a).target], cdim = (*dims)[q.arrow(*a).source];
      bool shape_ok = rows.empty() ? rdim == 0 : rows.size() == rdim;
      for (const auto& r : rows) shape_ok = shape_ok && r.size() == cdim;
      if (!shape_ok)
        throw ParseError(name, l.number,
                         "map '" + t[1] + "' must be " + std::to_string(rdim) + "x" + std::to_string(cdim));
      Matrix m(alg->field(), rdim, cdim);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cdim; ++c) m(r, c) = parse_scalar(alg->field(), rows[r][c], name, l.number);
      maps[*a] = std::move(m);
    } else {
      throw ParseError(name, l.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (standard) return *standard;
  if (!dims) throw ParseError(name, last_line, "module needs 'standard' or 'dims'");
  std::vector<Matrix> action;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    action.push_back(maps[a] ? *maps[a] : Matrix(alg->field(), (*dims)[q.arrow(a).target], (*dims)[q.arrow(a).source]));
  try {
    return Rep(alg, *dims, std::move(action));
  } catch (const InvalidRep& e) {
    throw ParseError(name, last_line, std::string("not a module: ") + e.what());
  }
}

Rep load_module(const AlgebraPtr& alg, const std::string& path_or_inline) {
  if (!std::filesystem::exists(path_or_inline))
    if (auto s = standard_from_text(alg, path_or_inline, path_or_inline, 0)) return *s;
  return parse_module(alg, read_file(path_or_inline), path_or_inline);
}

std::map<std::string, Side> parse_partition(const std::string& text, const std::string& name) {
  std::map<std::string, Side> out;
  for (const auto& l : lines_of(text)) {
    const auto& t = l.tokens;
    std::size_t first = (t.size() > 1 && t[1] == ":") ? 2 : 1;
    Side side;
    if (t[0] == "r" || t[0] == "R") {
      side = Side::r;
    } else if (t[0] == "s" || t[0] == "S") {
      side = Side::s;
    } else {
      throw ParseError(name, l.number, "expected 'r <vertex> ...' or 's <vertex> ...'");
    }
    for (std::size_t i = first; i < t.size(); ++i)
      if (!out.emplace(t[i], side).second) throw ParseError(name, l.number, "vertex '" + t[i] + "' listed twice");
  }
  return out;
}

std::map<std::string, Side> load_partition(const std::string& path) { return parse_partition(read_file(path), path); }

std::string ClassSpec::describe() const {
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : " + ") + t.source;
  return s.empty() ? "0" : s;
}

bool ClassSpec::uses_gi() const {
  for (const auto& t : terms)
    if (term_uses_gi(t)) return true;
  return false;
}

ClassSpec parse_class(const std::string& text, const std::string& name, const std::string& base_dir) {
  ClassSpec spec;
  for (const auto& l : lines_of(text)) spec.terms.push_back(parse_term(l.text, name, l.number, base_dir));
  return spec;
}

ClassSpec load_class(const std::string& path_or_inline) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(path_or_inline)) {
    auto dir = fs::path(path_or_inline).parent_path();
    return parse_class(read_file(path_or_inline), path_or_inline, dir.empty() ? "." : dir.string());
  }
  ClassSpec spec;
  try {
    spec.terms.push_back(parse_term(path_or_inline, path_or_inline, 0, "."));
  } catch (const ParseError&) {
    throw ParseError(path_or_inline, 0, "neither a class file nor a class term");
  }
  return spec;
}

ObjectClass resolve_class(const AlgebraPtr& alg, const ClassSpec& spec, const ClassContext& ctx) {
  std::vector<Rep> members;
  for (const auto& t : spec.terms) {
    const ObjectClass part = resolve_term(alg, t, ctx);
    members.insert(members.end(), part.members().begin(), part.members().end());
  }
  return ObjectClass(alg, members);
}

std::string format_algebra(const AlgebraPtr& alg) {
  const Quiver& q = alg->quiver();
  std::ostringstream os;
  os << "field " << (alg->field().is_prime() ? "GF(" + std::to_string(alg->field().characteristic()) + ")" : "Q")
     << "\n";
  for (const auto& v : q.vertices()) os << "vertex " << v << "\n";
  for (const auto& a : q.arrows())
    os << "arrow " << a.id << ": " << q.vertex_id(a.source) << " -> " << q.vertex_id(a.target) << "\n";
  for (const auto& r : alg->relations()) {
    os << "relation";
    for (auto a : r.arrows) os << " " << q.arrow(a).id;
    os << "\n";
  }
  return os.str();
}

}  // namespace commahom::io
