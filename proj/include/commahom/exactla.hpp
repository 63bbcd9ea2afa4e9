#pragma once

// Exact dense linear algebra over a prime field GF(p) or the rationals.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace commahom {

class Field;

/// A field element. Prime-field values are kept canonical in [0, p);
/// rationals are kept reduced by GMP.
class Scalar {
 public:
  struct Mod {
    std::uint32_t value;
    std::uint32_t p;
  };

  Scalar() : rep_(Mod{0, 2}) {}
  explicit Scalar(Mod m) : rep_(m) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Total order used only for canonical sorting.
  bool operator<(const Scalar& o) const;

  std::string to_string() const;

 private:
  std::variant<Mod, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  /// Number of elements; nullopt for the rationals.
  std::optional<std::uint64_t> order() const;

  Scalar zero() const { return from_int(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  /// The index-th element in a fixed enumeration of a finite field.
  Scalar element(std::uint64_t index) const;
  Scalar random(std::mt19937_64& rng) const;

  std::string name() const;
  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

using Vec = std::vector<Scalar>;

class Matrix;

struct RrefResult;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, std::size_t rows, std::size_t cols,
                          const std::vector<long long>& entries);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix random(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  /// Row-major flattening.
  const Vec& entries() const { return data_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool operator<(const Matrix& o) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space; size = cols - rank.
std::vector<Vec> kernel_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Solves m X = b column by column; nullopt if any column is unsolvable.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);
/// Basis of the column space taken from the pivot columns of m.
Matrix column_space(const Matrix& m);
/// Rows spanning the left null space: a full-row-rank q with q m = 0 and
/// ker q = col(m).
Matrix cokernel_projection(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix power(const Matrix& m, std::size_t e);

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero(const Vec& v);

}  // namespace commahom
