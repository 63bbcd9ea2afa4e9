#include "commahom/exactla.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "commahom/errors.hpp"

namespace commahom {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

// ---------------------------------------------------------------- Scalar

bool Scalar::is_zero() const {
  if (auto m = std::get_if<Mod>(&rep_)) return m->value == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (auto m = std::get_if<Mod>(&rep_)) return m->value == 1 % m->p;
  return std::get<mpq_class>(rep_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (auto a = std::get_if<Mod>(&rep_)) {
    const auto& b = std::get<Mod>(o.rep_);
    std::uint64_t s = static_cast<std::uint64_t>(a->value) + b.value;
    return Scalar(Mod{static_cast<std::uint32_t>(s % a->p), a->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) + std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (auto a = std::get_if<Mod>(&rep_)) {
    const auto& b = std::get<Mod>(o.rep_);
    std::uint64_t s = static_cast<std::uint64_t>(a->value) + a->p - b.value;
    return Scalar(Mod{static_cast<std::uint32_t>(s % a->p), a->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) - std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (auto a = std::get_if<Mod>(&rep_)) {
    const auto& b = std::get<Mod>(o.rep_);
    std::uint64_t s = static_cast<std::uint64_t>(a->value) * b.value;
    return Scalar(Mod{static_cast<std::uint32_t>(s % a->p), a->p});
  }
  return Scalar(mpq_class(std::get<mpq_class>(rep_) * std::get<mpq_class>(o.rep_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto a = std::get_if<Mod>(&rep_)) return Scalar(Mod{mod_pow(a->value, a->p - 2, a->p), a->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (auto a = std::get_if<Mod>(&rep_)) return Scalar(Mod{(a->p - a->value) % a->p, a->p});
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

bool Scalar::operator==(const Scalar& o) const {
  if (auto a = std::get_if<Mod>(&rep_)) {
    auto b = std::get_if<Mod>(&o.rep_);
    return b && a->value == b->value;
  }
  auto b = std::get_if<mpq_class>(&o.rep_);
  return b && std::get<mpq_class>(rep_) == *b;
}

bool Scalar::operator<(const Scalar& o) const {
  if (auto a = std::get_if<Mod>(&rep_)) return a->value < std::get<Mod>(o.rep_).value;
  return std::get<mpq_class>(rep_) < std::get<mpq_class>(o.rep_);
}

std::string Scalar::to_string() const {
  if (auto a = std::get_if<Mod>(&rep_)) return std::to_string(a->value);
  return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
  return Field(p);
}

std::optional<std::uint64_t> Field::order() const {
  if (p_ == 0) return std::nullopt;
  return p_;
}

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(Scalar::Mod{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw Error("zero denominator");
  if (p_ == 0) {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return Scalar(std::move(q));
  }
  return from_int(num) / from_int(den);
}

Scalar Field::element(std::uint64_t index) const {
  if (p_ == 0) throw Error("cannot enumerate the rationals");
  return from_int(static_cast<long long>(index % p_));
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (p_ == 0) {
    std::uniform_int_distribution<int> d(-3, 3);
    return from_int(d(rng));
  }
  std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
  return from_int(d(rng));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& entries) {
  if (entries.size() != rows * cols) throw DimensionMismatch("from_ints: entry count");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = f.from_int(entries[i]);
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(f, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("from_columns: column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::random(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (auto& x : m.data_) x = f.random(rng);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  Vec out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::operator<(const Matrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return std::lexicographical_compare(data_.begin(), data_.end(), o.data_.begin(), o.data_.end());
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row counts");
  Matrix r(a.field(), a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column counts");
  Matrix r(a.field(), a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Scalar f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, m.cols()) = b[i];
  auto r = rref(aug);
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw DimensionMismatch("solve_matrix: rhs rows");
  Matrix aug = hstack(m, b);
  auto r = rref(aug);
  for (auto c : r.pivot_cols)
    if (c >= m.cols()) return std::nullopt;
  Matrix x(m.field(), m.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivot_cols[i], j) = r.reduced(i, m.cols() + j);
  return x;
}

Matrix column_space(const Matrix& m) {
  auto r = rref(m);
  Matrix out(m.field(), m.rows(), r.rank);
  for (std::size_t k = 0; k < r.rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, r.pivot_cols[k]);
  return out;
}

Matrix cokernel_projection(const Matrix& m) {
  auto rows = kernel_basis(m.transpose());
  return Matrix::from_rows(m.field(), m.rows(), rows);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  return solve_matrix(m, Matrix::identity(m.field(), m.rows()));
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace commahom
