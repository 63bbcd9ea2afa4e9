#include "commahom/rep.hpp"

#include <sstream>

#include "commahom/errors.hpp"

namespace commahom {

// ---------------------------------------------------------------- Rep

Rep::Rep(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> action)
    : alg_(std::move(alg)), dims_(std::move(dims)), action_(std::move(action)) {
  const Quiver& q = alg_->quiver();
  if (dims_.size() != q.vertex_count()) throw InvalidRep("dimension vector has wrong length");
  if (action_.size() != q.arrow_count()) throw InvalidRep("one matrix per arrow required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (action_[a].rows() != dims_[arr.target] || action_[a].cols() != dims_[arr.source])
      throw InvalidRep("matrix for arrow " + arr.id + " has shape " + std::to_string(action_[a].rows()) +
                       "x" + std::to_string(action_[a].cols()) + ", expected " +
                       std::to_string(dims_[arr.target]) + "x" + std::to_string(dims_[arr.source]));
    if (!(action_[a].field() == alg_->field())) throw InvalidRep("matrix over the wrong field");
  }
  for (const auto& r : alg_->relations())
    if (!path_action(r).is_zero())
      throw InvalidRep("relation " + r.to_string(q) + " does not act as zero");
}

Rep Rep::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) act.emplace_back(alg->field(), 0, 0);
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  return Rep(std::move(alg), std::move(dims), std::move(act));
}

std::size_t Rep::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

Matrix Rep::path_action(const Path& p) const {
  Matrix m = Matrix::identity(field(), dims_.at(p.start));
  for (auto a : p.arrows) m = action_.at(a) * m;
  return m;
}

std::string Rep::dim_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims_[i]);
  }
  return s + ")";
}

std::string Rep::describe() const {
  std::ostringstream os;
  os << "dims " << dim_string();
  const Quiver& q = alg_->quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!action_[a].empty() && !action_[a].is_zero()) os << " " << q.arrow(a).id << "=" << action_[a].to_string();
  return os.str();
}

bool Rep::operator==(const Rep& o) const {
  return same_algebra(alg_, o.alg_) && dims_ == o.dims_ && action_ == o.action_;
}

// ---------------------------------------------------------------- RepMor

RepMor::RepMor(Unchecked, Rep source, Rep target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {}

RepMor::RepMor(Rep source, Rep target, std::vector<Matrix> blocks)
    : RepMor(Unchecked{}, std::move(source), std::move(target), std::move(blocks)) {
  if (!same_algebra(source_.algebra(), target_.algebra())) throw AlgebraMismatch("morphism between different algebras");
  const Quiver& q = source_.algebra()->quiver();
  if (blocks_.size() != q.vertex_count()) throw InvalidRep("one block per vertex required");
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
      throw InvalidRep("morphism block has wrong shape at vertex " + q.vertex_id(v));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (target_.action(a) * blocks_[arr.source] != blocks_[arr.target] * source_.action(a))
      throw InvalidRep("morphism does not commute with arrow " + arr.id);
  }
}

RepMor RepMor::zero(const Rep& source, const Rep& target) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.dims().size(); ++v)
    blocks.emplace_back(source.field(), target.dim(v), source.dim(v));
  return RepMor(Unchecked{}, source, target, std::move(blocks));
}

RepMor RepMor::identity(const Rep& m) {
  std::vector<Matrix> blocks;
  for (auto d : m.dims()) blocks.push_back(Matrix::identity(m.field(), d));
  return RepMor(Unchecked{}, m, m, std::move(blocks));
}

RepMor RepMor::from_coordinates(const Rep& source, const Rep& target, const Vec& coords) {
  std::vector<Matrix> blocks;
  std::size_t off = 0;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    Matrix b(source.field(), target.dim(v), source.dim(v));
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = coords.at(off++);
    blocks.push_back(std::move(b));
  }
  if (off != coords.size()) throw DimensionMismatch("coordinate vector length");
  return RepMor(source, target, std::move(blocks));
}

Vec RepMor::coordinates() const {
  Vec out;
  for (const auto& b : blocks_) out.insert(out.end(), b.entries().begin(), b.entries().end());
  return out;
}

bool RepMor::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

std::size_t RepMor::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks_) r += commahom::rank(b);
  return r;
}

bool RepMor::is_mono() const {
  for (const auto& b : blocks_)
    if (commahom::rank(b) != b.cols()) return false;
  return true;
}

bool RepMor::is_epi() const {
  for (const auto& b : blocks_)
    if (commahom::rank(b) != b.rows()) return false;
  return true;
}

bool RepMor::is_iso() const {
  for (const auto& b : blocks_)
    if (!is_invertible(b)) return false;
  return true;
}

RepMor RepMor::operator+(const RepMor& o) const {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + o.blocks_.at(v));
  return RepMor(Unchecked{}, source_, target_, std::move(blocks));
}

RepMor RepMor::operator-(const RepMor& o) const {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] - o.blocks_.at(v));
  return RepMor(Unchecked{}, source_, target_, std::move(blocks));
}

RepMor RepMor::scaled(const Scalar& s) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(s));
  return RepMor(Unchecked{}, source_, target_, std::move(blocks));
}

RepMor RepMor::operator*(const RepMor& f) const {
  if (f.target_.dims() != source_.dims()) throw DimensionMismatch("composition of incompatible morphisms");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] * f.blocks_[v]);
  return RepMor(Unchecked{}, f.source_, target_, std::move(blocks));
}

// ---------------------------------------------------------------- Hom

namespace {

Matrix intertwining_system(const Rep& m, const Rep& n) {
  const Quiver& q = m.algebra()->quiver();
  const Field& f = m.field();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += n.dim(a.target) * m.dim(a.source);
  Matrix sys(f, eqs, offset.back());
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    const Matrix& na = n.action(ai);
    const Matrix& ma = m.action(ai);
    const std::size_t ms = m.dim(a.source), ns = n.dim(a.source), mt = m.dim(a.target);
    for (std::size_t r = 0; r < n.dim(a.target); ++r)
      for (std::size_t c = 0; c < ms; ++c, ++row) {
        // (N_a X_s)(r, c) - (X_t M_a)(r, c)
        for (std::size_t k = 0; k < ns; ++k)
          if (!na(r, k).is_zero()) sys(row, offset[a.source] + k * ms + c) += na(r, k);
        for (std::size_t k = 0; k < mt; ++k)
          if (!ma(k, c).is_zero()) sys(row, offset[a.target] + r * mt + k) -= ma(k, c);
      }
  }
  return sys;
}

}  // namespace

std::vector<RepMor> hom_basis(const Rep& m, const Rep& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw AlgebraMismatch("hom between modules over different algebras");
  auto kb = kernel_basis(intertwining_system(m, n));
  std::vector<RepMor> out;
  out.reserve(kb.size());
  for (const auto& v : kb) out.push_back(RepMor::from_coordinates(m, n, v));
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw AlgebraMismatch("hom between modules over different algebras");
  auto sys = intertwining_system(m, n);
  return sys.cols() - rank(sys);
}

HomSpace::HomSpace(const Rep& source, const Rep& target)
    : source_(source), target_(target), basis_(hom_basis(source, target)),
      basis_columns_(source.field(), 0, 0) {
  std::vector<Vec> cols;
  for (const auto& b : basis_) cols.push_back(b.coordinates());
  std::size_t len = 0;
  for (std::size_t v = 0; v < source.dims().size(); ++v) len += source.dim(v) * target.dim(v);
  basis_columns_ = Matrix::from_columns(source.field(), len, cols);
}

RepMor HomSpace::element(const Vec& coords) const {
  if (coords.size() != basis_.size()) throw DimensionMismatch("hom coordinates length");
  RepMor f = RepMor::zero(source_, target_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!coords[i].is_zero()) f = f + basis_[i].scaled(coords[i]);
  return f;
}

Vec HomSpace::coordinates_of(const RepMor& f) const {
  auto x = solve(basis_columns_, f.coordinates());
  if (!x) throw InvalidRep("map is not in the hom space");
  return *x;
}

// ---------------------------------------------------------------- sub/quotients

SubRep subrep(const Rep& m, const std::vector<Matrix>& bases) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<Matrix> act;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    auto y = solve_matrix(bases[a.target], m.action(ai) * bases[a.source]);
    if (!y) throw InvalidRep("subspace is not invariant under arrow " + a.id);
    act.push_back(std::move(*y));
  }
  Rep sub(m.algebra(), std::move(dims), std::move(act));
  RepMor inc(sub, m, bases);
  return {std::move(sub), std::move(inc)};
}

SubRep kernel(const RepMor& f) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < f.blocks().size(); ++v)
    bases.push_back(Matrix::from_columns(f.source().field(), f.source().dim(v), kernel_basis(f.block(v))));
  return subrep(f.source(), bases);
}

SubRep image(const RepMor& f) {
  std::vector<Matrix> bases;
  for (const auto& b : f.blocks()) bases.push_back(column_space(b));
  return subrep(f.target(), bases);
}

QuotientRep cokernel(const RepMor& f) {
  const Rep& n = f.target();
  const Quiver& q = n.algebra()->quiver();
  const Field& fld = n.field();
  std::vector<Matrix> proj, right_inv;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) {
    Matrix p = cokernel_projection(f.block(v));
    auto r = solve_matrix(p, Matrix::identity(fld, p.rows()));
    right_inv.push_back(std::move(*r));
    dims.push_back(p.rows());
    proj.push_back(std::move(p));
  }
  std::vector<Matrix> act;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    act.push_back(proj[a.target] * n.action(ai) * right_inv[a.source]);
  }
  Rep quo(n.algebra(), std::move(dims), std::move(act));
  RepMor pr(n, quo, std::move(proj));
  return {std::move(quo), std::move(pr)};
}

RepMor factor_through_epi(const RepMor& p, const RepMor& g) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < p.blocks().size(); ++v) {
    // h_v p_v = g_v  <=>  p_v^T h_v^T = g_v^T
    auto ht = solve_matrix(p.block(v).transpose(), g.block(v).transpose());
    if (!ht) throw InvalidRep("map does not factor through the epimorphism");
    blocks.push_back(ht->transpose());
  }
  return RepMor(p.target(), g.target(), std::move(blocks));
}

RepMor factor_through_mono(const RepMor& i, const RepMor& g) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < i.blocks().size(); ++v) {
    auto h = solve_matrix(i.block(v), g.block(v));
    if (!h) throw InvalidRep("map does not factor through the monomorphism");
    blocks.push_back(std::move(*h));
  }
  return RepMor(g.source(), i.source(), std::move(blocks));
}

// ---------------------------------------------------------------- sums

DirectSum direct_sum(const AlgebraPtr& alg, std::span<const Rep> parts) {
  const Quiver& q = alg->quiver();
  const Field& f = alg->field();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), alg)) throw AlgebraMismatch("direct sum over different algebras");
    for (std::size_t v = 0; v < n; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> act;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const Arrow& a = q.arrow(ai);
    Matrix m(f, dims[a.target], dims[a.source]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.action(ai));
      r += p.dim(a.target);
      c += p.dim(a.source);
    }
    act.push_back(std::move(m));
  }
  Rep sum(alg, dims, std::move(act));
  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> off(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, pr;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix i(f, dims[v], p.dim(v));
      i.set_block(off[v], 0, Matrix::identity(f, p.dim(v)));
      pr.push_back(i.transpose());
      inj.push_back(std::move(i));
      off[v] += p.dim(v);
    }
    out.injections.emplace_back(p, sum, std::move(inj));
    out.projections.emplace_back(sum, p, std::move(pr));
  }
  return out;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  std::vector<Rep> parts{a, b};
  return direct_sum(a.algebra(), parts).sum;
}

RepMor block_morphism(const DirectSum& source, const DirectSum& target,
                      const std::vector<std::vector<std::optional<RepMor>>>& entries) {
  RepMor total = RepMor::zero(source.sum, target.sum);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      if (entries[i][j]) total = total + target.injections.at(i) * (*entries[i][j]) * source.projections.at(j);
  return RepMor(total.source(), total.target(), total.blocks());
}

// ---------------------------------------------------------------- duality

Rep dual(const Rep& m) {
  auto op = opposite(m.algebra());
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(a.transpose());
  return Rep(op, m.dims(), std::move(act));
}

RepMor dual(const RepMor& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(b.transpose());
  return RepMor(dual(f.target()), dual(f.source()), std::move(blocks));
}

// ---------------------------------------------------------------- isomorphism

std::optional<RepMor> find_iso(const Rep& m, const Rep& n, const IsoSearch& opts, std::span<const Rep> probes) {
  if (!same_algebra(m.algebra(), n.algebra())) throw AlgebraMismatch("is_iso over different algebras");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return RepMor::identity(m);

  HomSpace hom(m, n);
  const std::size_t d = hom.dim();
  if (d == 0) return std::nullopt;
  if (hom_dim(m, m) != d || hom_dim(n, n) != d || hom_dim(n, m) != d) return std::nullopt;
  for (const auto& x : probes)
    if (hom_dim(x, m) != hom_dim(x, n) || hom_dim(m, x) != hom_dim(n, x)) return std::nullopt;

  const Field& f = m.field();
  std::mt19937_64 rng(opts.seed);
  const std::size_t quick = std::min<std::size_t>(opts.random_trials, 32);
  for (std::size_t t = 0; t < quick; ++t) {
    Vec c(d, f.zero());
    for (auto& x : c) x = f.random(rng);
    RepMor g = hom.element(c);
    if (g.is_iso()) return g;
  }

  if (auto order = f.order()) {
    std::uint64_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < d && small; ++i) {
      count *= *order;
      if (count > opts.exhaustive_limit) small = false;
    }
    if (small) {
      Vec c(d, f.zero());
      for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t i = 0; i < d; ++i) {
          c[i] = f.element(x % *order);
          x /= *order;
        }
        RepMor g = hom.element(c);
        if (g.is_iso()) return g;
      }
      return std::nullopt;
    }
  }

  for (std::size_t t = quick; t < opts.random_trials; ++t) {
    Vec c(d, f.zero());
    for (auto& x : c) x = f.random(rng);
    RepMor g = hom.element(c);
    if (g.is_iso()) return g;
  }
  throw Undecided("isomorphism test undecided within budget (hom dimension " + std::to_string(d) + ")");
}

bool is_iso(const Rep& m, const Rep& n, const IsoSearch& opts, std::span<const Rep> probes) {
  return find_iso(m, n, opts, probes).has_value();
}

}  // namespace commahom
