#include "commahom/decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "commahom/errors.hpp"

namespace commahom {

namespace {

std::size_t max_vertex_dim(const Rep& m) {
  std::size_t k = 0;
  for (auto d : m.dims()) k = std::max(k, d);
  return k;
}

RepMor endo_power(const RepMor& e, std::size_t k) {
  std::vector<Matrix> blocks;
  for (const auto& b : e.blocks()) blocks.push_back(power(b, k));
  return RepMor(e.source(), e.target(), std::move(blocks));
}

enum class EndoKind { nilpotent, invertible, splitting };

EndoKind classify(const RepMor& e, std::size_t k, RepMor* fitting = nullptr) {
  RepMor f = endo_power(e, k);
  if (f.is_zero()) return EndoKind::nilpotent;
  if (f.is_iso()) return EndoKind::invertible;
  if (fitting) *fitting = f;
  return EndoKind::splitting;
}

std::pair<SubRep, SubRep> split_along(const RepMor& f) { return {kernel(f), image(f)}; }

Scalar trace(const RepMor& e) {
  Scalar t = e.source().field().zero();
  for (const auto& b : e.blocks())
    for (std::size_t i = 0; i < b.rows(); ++i) t += b(i, i);
  return t;
}

// End(M) = k.id + N with N a nilpotent subalgebra certifies locality.
// Returns a splitting endomorphism if one shows up on the way.
struct LocalityProbe {
  bool local = false;
  std::optional<RepMor> splitter;
};

LocalityProbe probe_locality(const Rep& m, const std::vector<RepMor>& end) {
  const Field& f = m.field();
  const std::size_t n = m.total_dim();
  const std::size_t k = max_vertex_dim(m);
  RepMor id = RepMor::identity(m);
  std::vector<RepMor> nil;
  for (const auto& b : end) {
    std::vector<Scalar> lambdas;
    const Scalar dimn = f.from_int(static_cast<long long>(n));
    if (!dimn.is_zero()) {
      lambdas.push_back(trace(b) / dimn);
    } else if (auto order = f.order(); order && *order <= 64) {
      for (std::uint64_t i = 0; i < *order; ++i) lambdas.push_back(f.element(i));
    } else {
      return {};
    }
    bool found = false;
    for (const auto& lam : lambdas) {
      RepMor c = b - id.scaled(lam);
      RepMor fit = c;
      EndoKind kind = classify(c, k, &fit);
      if (kind == EndoKind::nilpotent) {
        if (!c.is_zero()) nil.push_back(c);
        found = true;
        break;
      }
      if (kind == EndoKind::splitting) return {false, fit};
    }
    if (!found) return {};
  }
  // Closure under products and nilpotency of the span.
  auto span_of = [&](const std::vector<RepMor>& xs) {
    std::vector<Vec> cols;
    for (const auto& x : xs) cols.push_back(x.coordinates());
    std::size_t len = id.coordinates().size();
    return column_space(Matrix::from_columns(f, len, cols));
  };
  Matrix nspan = span_of(nil);
  std::vector<RepMor> layer = nil;
  for (std::size_t step = 0; step <= n + 1 && !layer.empty(); ++step) {
    std::vector<RepMor> next;
    for (const auto& a : layer)
      for (const auto& b : nil) {
        RepMor p = a * b;
        if (p.is_zero()) continue;
        if (!solve(nspan, p.coordinates())) return {};
        next.push_back(p);
      }
    if (next.empty()) return {true, std::nullopt};
    Matrix basis = span_of(next);
    layer.clear();
    for (std::size_t c = 0; c < basis.cols(); ++c) layer.push_back(RepMor::from_coordinates(m, m, basis.column(c)));
  }
  return {layer.empty(), std::nullopt};
}

}  // namespace

std::optional<std::pair<SubRep, SubRep>> fitting_split(const Rep& m, const DecompOptions& opts) {
  if (m.is_zero()) throw InvalidRep("fitting_split of the zero module");
  const std::size_t k = max_vertex_dim(m);
  HomSpace end(m, m);
  const std::size_t d = end.dim();
  if (d == 1) return std::nullopt;

  RepMor fit = RepMor::identity(m);
  for (const auto& b : end.basis())
    if (classify(b, k, &fit) == EndoKind::splitting) return split_along(fit);

  auto probe = probe_locality(m, end.basis());
  if (probe.splitter) return split_along(*probe.splitter);
  if (probe.local) return std::nullopt;

  const Field& f = m.field();
  if (auto order = f.order()) {
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < d && small; ++i) {
      count *= *order;
      small = count <= opts.exhaustive_limit;
    }
    if (small) {
      Vec c(d, f.zero());
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < d; ++i) {
          c[i] = f.element(x % *order);
          x /= *order;
        }
        if (classify(end.element(c), k, &fit) == EndoKind::splitting) return split_along(fit);
      }
      return std::nullopt;
    }
  }

  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_trials; ++t) {
    Vec c(d, f.zero());
    for (auto& x : c) x = f.is_prime() ? f.random(rng) : f.from_int(static_cast<long long>(rng() % 7) - 3);
    if (classify(end.element(c), k, &fit) == EndoKind::splitting) return split_along(fit);
  }
  throw Undecided("indecomposability undecided within budget (End dimension " + std::to_string(d) + ")");
}

bool is_indecomposable(const Rep& m, const DecompOptions& opts) {
  if (m.is_zero()) return false;
  return !fitting_split(m, opts).has_value();
}

std::vector<Rep> decompose(const Rep& m, const DecompOptions& opts) {
  std::vector<Rep> out, stack;
  if (!m.is_zero()) stack.push_back(m);
  while (!stack.empty()) {
    Rep x = stack.back();
    stack.pop_back();
    auto split = fitting_split(x, opts);
    if (!split) {
      out.push_back(std::move(x));
      continue;
    }
    stack.push_back(split->first.rep);
    stack.push_back(split->second.rep);
  }
  std::stable_sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims() < b.dims();
  });
  return out;
}

// ---------------------------------------------------------------- classes

ObjectClass::ObjectClass(AlgebraPtr alg, const std::vector<Rep>& members, const IsoSearch& iso)
    : alg_(std::move(alg)), iso_(iso) {
  for (const auto& m : members) insert(m);
}

ObjectClass ObjectClass::from_distinct(AlgebraPtr alg, const std::vector<Rep>& members) {
  ObjectClass out(std::move(alg));
  for (const auto& m : members) out.push_unchecked(m);
  return out;
}

void ObjectClass::push_unchecked(const Rep& x) {
  if (!same_algebra(x.algebra(), alg_)) throw AlgebraMismatch("class member over a different algebra");
  by_dims_[x.dims()].push_back(members_.size());
  members_.push_back(x);
}

std::optional<std::size_t> ObjectClass::index_of(const Rep& x) const {
  if (!same_algebra(x.algebra(), alg_)) throw AlgebraMismatch("class lookup over a different algebra");
  auto it = by_dims_.find(x.dims());
  if (it == by_dims_.end()) return std::nullopt;
  for (auto i : it->second)
    if (is_iso(members_[i], x, iso_)) return i;
  return std::nullopt;
}

std::size_t ObjectClass::insert(const Rep& x) {
  if (auto i = index_of(x)) return *i;
  push_unchecked(x);
  return members_.size() - 1;
}

bool ObjectClass::contains_additive(const Rep& m, const DecompOptions& opts) const {
  for (const auto& s : decompose(m, opts))
    if (!contains(s)) return false;
  return true;
}

ObjectClass smd(const AlgebraPtr& alg, const std::vector<Rep>& modules, const DecompOptions& opts) {
  ObjectClass out(alg, {}, opts.iso);
  for (const auto& m : modules)
    for (const auto& s : decompose(m, opts)) out.insert(s);
  return out;
}

// ---------------------------------------------------------------- brute force

namespace {

bool connected_support(const Quiver& q, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < dims.size(); ++v)
    if (dims[v]) support.push_back(v);
  if (support.empty()) return false;
  std::vector<char> seen(dims.size(), 0);
  std::vector<std::size_t> todo{support.front()};
  seen[support.front()] = 1;
  while (!todo.empty()) {
    std::size_t v = todo.back();
    todo.pop_back();
    for (const auto& a : q.arrows()) {
      if (!dims[a.source] || !dims[a.target]) continue;
      std::size_t w = a.source == v ? a.target : a.target == v ? a.source : v;
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return std::all_of(support.begin(), support.end(), [&](std::size_t v) { return seen[v]; });
}

void for_each_dim_vector(std::size_t n, std::size_t bound, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> d(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
    if (v == n) {
      if (left < bound) fn(d);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      d[v] = x;
      rec(v + 1, left - x);
    }
    d[v] = 0;
  };
  rec(0, bound);
}

bool relations_vanish(const AlgebraPtr& alg, const std::vector<Matrix>& act) {
  for (const auto& r : alg->relations()) {
    Matrix m = act[r.arrows.front()];
    for (std::size_t i = 1; i < r.arrows.size() && !m.is_zero(); ++i) m = act[r.arrows[i]] * m;
    if (!m.is_zero()) return false;
  }
  return true;
}

}  // namespace

Universe brute_force_universe(const AlgebraPtr& alg, std::size_t dim_bound, const UniverseOptions& opts,
                              bool allow_partial) {
  const Field& f = alg->field();
  auto order = f.order();
  if (!order) throw Error("brute-force enumeration needs a finite field");
  const Quiver& q = alg->quiver();
  Universe u{ObjectClass(alg, {}, opts.decomp.iso), dim_bound, true, "brute-force"};
  std::uint64_t spent = 0;

  for_each_dim_vector(q.vertex_count(), dim_bound, [&](const std::vector<std::size_t>& dims) {
    if (!u.exhaustive || !connected_support(q, dims)) return;
    // Free entries: every arrow between supported vertices.
    std::size_t entries = 0;
    for (const auto& a : q.arrows()) entries += dims[a.source] * dims[a.target];
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < entries; ++i) {
      count *= *order;
      if (spent + count > opts.candidate_budget) {
        if (!allow_partial)
          throw BudgetExceeded("brute-force census exceeds the candidate budget at dimension vector of total " +
                               std::to_string(std::accumulate(dims.begin(), dims.end(), std::size_t{0})));
        u.exhaustive = false;
        return;
      }
    }
    spent += count;
    Vec vals(entries, f.zero());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < entries; ++i) {
        vals[i] = f.element(x % *order);
        x /= *order;
      }
      std::vector<Matrix> act;
      std::size_t pos = 0;
      for (const auto& a : q.arrows()) {
        Matrix m(f, dims[a.target], dims[a.source]);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vals[pos++];
        act.push_back(std::move(m));
      }
      if (!relations_vanish(alg, act)) continue;
      Rep cand(alg, dims, std::move(act));
      if (u.indecomposables.contains(cand)) continue;
      if (is_indecomposable(cand, opts.decomp)) u.indecomposables.insert(cand);
    }
  });
  return u;
}

// ---------------------------------------------------------------- strings

namespace {

struct Letter {
  std::size_t arrow;
  bool inverse;
  auto operator<=>(const Letter&) const = default;
};

struct Walk {
  std::size_t start;
  std::vector<Letter> letters;
};

std::size_t letter_from(const Quiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).target : q.arrow(l.arrow).source;
}
std::size_t letter_to(const Quiver& q, const Letter& l) {
  return l.inverse ? q.arrow(l.arrow).source : q.arrow(l.arrow).target;
}

// Whether appending l keeps the walk a string.
bool can_append(const AlgebraPtr& alg, const std::vector<Letter>& w, const Letter& l) {
  if (!w.empty()) {
    const Letter& k = w.back();
    if (k.arrow == l.arrow && k.inverse != l.inverse) return false;
  }
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> run{l.arrow};
  for (auto it = w.rbegin(); it != w.rend() && it->inverse == l.inverse; ++it) run.push_back(it->arrow);
  if (run.size() < 2) return true;
  // run lists the trailing letters newest first.
  Path p;
  if (l.inverse) {
    p.arrows = run;
  } else {
    p.arrows.assign(run.rbegin(), run.rend());
  }
  p.start = q.arrow(p.arrows.front()).source;
  return alg->is_nonzero(p);
}

Walk inverse_walk(const Quiver& q, const Walk& w) {
  Walk out;
  out.start = w.letters.empty() ? w.start : letter_to(q, w.letters.back());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->arrow, !it->inverse});
  return out;
}

std::string word(const Quiver& q, const Walk& w) {
  if (w.letters.empty()) return "e" + q.vertex_id(w.start);
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += q.arrow(l.arrow).id;
    if (l.inverse) s += "^-1";
  }
  return s;
}

Rep string_module(const AlgebraPtr& alg, const Walk& w) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  std::vector<std::size_t> verts{w.start};
  for (const auto& l : w.letters) verts.push_back(letter_to(q, l));
  std::vector<std::size_t> dims(q.vertex_count(), 0), slot(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) slot[i] = dims[verts[i]]++;
  std::vector<Matrix> act;
  for (const auto& a : q.arrows()) act.emplace_back(f, dims[a.target], dims[a.source]);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    if (l.inverse)
      act[l.arrow](slot[i], slot[i + 1]) = f.one();
    else
      act[l.arrow](slot[i + 1], slot[i]) = f.one();
  }
  return Rep(alg, std::move(dims), std::move(act));
}

}  // namespace

StringCensus string_universe(const AlgebraPtr& alg, std::size_t dim_bound) {
  if (!alg->is_string_algebra()) throw HypothesisFailed("string enumeration needs a string algebra");
  const Quiver& q = alg->quiver();
  std::vector<std::pair<std::string, Walk>> kept;
  bool bands = false;

  std::function<void(Walk&)> extend = [&](Walk& w) {
    if (!w.letters.empty()) {
      Walk inv = inverse_walk(q, w);
      if (std::tie(w.start, w.letters) <= std::tie(inv.start, inv.letters)) kept.emplace_back(word(q, w), w);
      // A closed walk whose square is a string.
      if (!bands && letter_to(q, w.letters.back()) == w.start) {
        std::vector<Letter> sq = w.letters;
        bool ok = true;
        for (const auto& l : w.letters) {
          if (!can_append(alg, sq, l)) {
            ok = false;
            break;
          }
          sq.push_back(l);
        }
        bands = ok;
      }
    }
    if (w.letters.size() + 1 >= dim_bound) return;
    const std::size_t here = w.letters.empty() ? w.start : letter_to(q, w.letters.back());
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      for (bool inv : {false, true}) {
        Letter l{a, inv};
        if (letter_from(q, l) != here || !can_append(alg, w.letters, l)) continue;
        w.letters.push_back(l);
        extend(w);
        w.letters.pop_back();
      }
  };

  std::vector<Rep> mods;
  StringCensus out{Universe{ObjectClass(alg), dim_bound, true, "strings"}, {}, false};
  if (dim_bound == 0) return out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Walk w{v, {}};
    mods.push_back(string_module(alg, w));
    out.words.push_back(word(q, w));
    extend(w);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second.letters.size() != b.second.letters.size()) return a.second.letters.size() < b.second.letters.size();
    return a.first < b.first;
  });
  for (const auto& [name, w] : kept) {
    mods.push_back(string_module(alg, w));
    out.words.push_back(name);
  }
  out.universe.indecomposables = ObjectClass::from_distinct(alg, mods);
  out.bands_found = bands;
  return out;
}

Universe enumerate_universe(const AlgebraPtr& alg, std::size_t dim_bound, const UniverseOptions& opts) {
  if (alg->field().order()) {
    try {
      return brute_force_universe(alg, dim_bound, opts);
    } catch (const BudgetExceeded&) {
      if (!alg->is_string_algebra()) throw;
    }
  }
  if (alg->is_string_algebra()) {
    auto census = string_universe(alg, dim_bound);
    if (census.bands_found) census.universe.exhaustive = false;
    return census.universe;
  }
  throw BudgetExceeded("no enumeration strategy applies (infinite field and not a string algebra)");
}

}  // namespace commahom
