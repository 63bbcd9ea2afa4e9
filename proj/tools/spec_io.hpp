#pragma once

// Text formats for algebras, modules, vertex partitions and classes.
//
//   algebra:    field GF(p) | field Q; vertex <id>; arrow <id>: <s> -> <t>;
//               relation <arrow> <arrow> ...
//   module:     standard S(i) | P(i) | I(i), or dims: i=d ... plus
//               map <arrow> = [[...], ...] (row-major, rows = target dim)
//   partition:  r <vertex> ... ; s <vertex> ...
//   class:      one term per line, see ClassExpr
//
// '#' starts a comment everywhere. Errors are ParseError with line numbers.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "commahom/comma.hpp"
#include "commahom/quiver.hpp"
#include "commahom/rep.hpp"

namespace commahom::io {

std::string read_file(const std::string& path);

AlgebraPtr parse_algebra(const std::string& text, const std::string& name = "<algebra>");
AlgebraPtr load_algebra(const std::string& path);

Rep parse_module(const AlgebraPtr& alg, const std::string& text, const std::string& name = "<module>");
/// A path to a module file, or an inline standard module such as "S(3)",
/// "P(1)", "I(2)" or "E(2)".
Rep load_module(const AlgebraPtr& alg, const std::string& path_or_inline);

std::map<std::string, Side> parse_partition(const std::string& text, const std::string& name = "<partition>");
std::map<std::string, Side> load_partition(const std::string& path);

/// Class terms: all | projectives | injectives | gi | S(i) | P(i) | I(i) |
/// module <path> | lperp(<term>) | rperp(<term>). A class is the union of
/// its terms.
struct ClassExpr {
  enum class Kind { all, projectives, injectives, gi, module, lperp, rperp };
  Kind kind = Kind::all;
  std::string module_ref;                  // for module
  std::shared_ptr<const ClassExpr> inner;  // for lperp / rperp
  std::string source;                      // text, for reports
};

struct ClassSpec {
  std::vector<ClassExpr> terms;
  std::string describe() const;
  bool uses_gi() const;
};

/// `base_dir` resolves relative module paths.
ClassSpec parse_class(const std::string& text, const std::string& name = "<class>", const std::string& base_dir = ".");
/// A class file, or a single inline term such as "gi" or "lperp(gi)".
ClassSpec load_class(const std::string& path_or_inline);

struct ClassContext {
  const ObjectClass* universe = nullptr;
  const ObjectClass* gi = nullptr;  // required when a term uses gi
};
ObjectClass resolve_class(const AlgebraPtr& alg, const ClassSpec& spec, const ClassContext& ctx);

/// Canonical text of an algebra, parseable by parse_algebra.
std::string format_algebra(const AlgebraPtr& alg);

}  // namespace commahom::io
