#pragma once

// Dense exact linear algebra over the rationals.
//
// Row reduction always pivots on the first nonzero entry (top to bottom) of
// the leftmost column that still has one, so every echelon form, nullspace
// basis and particular solution produced here is deterministic.
//
// Two reduction kernels share that pivot rule: rref_serial() is the
// reference implementation and rref_parallel() distributes the row updates
// of each pivot step over OpenMP threads. Both produce bit-identical output.

#include "qtrefftz/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qtrefftz {

using RationalVector = std::vector<Rational>;

class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Columns given as equally sized vectors.
  static Matrix from_columns(std::span<const RationalVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RationalVector column(std::size_t c) const;

  void set_column(std::size_t c, std::span<const Rational> values);

  /// Row-major entries.
  std::span<const Rational> data() const { return data_; }

  bool is_zero() const;
  Matrix transposed() const;
  /// [this | rhs]
  Matrix hstack(const Matrix& rhs) const;
  /// Rows `first`..`first+count-1`.
  Matrix row_block(std::size_t first, std::size_t count) const;

  RationalVector operator*(std::span<const Rational> x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  /// Entrywise; throws std::invalid_argument on a shape mismatch.
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with unit pivots.
struct RowEchelon
{
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
};

RowEchelon rref_serial(Matrix m);
RowEchelon rref_parallel(Matrix m);
/// Picks the parallel kernel for matrices large enough to benefit.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of ker(m): one vector per free column, with that column set to 1
/// and the other free columns set to 0.
std::vector<RationalVector> nullspace(const Matrix& m);

/// Particular solution of m x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const Matrix& m, std::span<const Rational> b);

/// Whether span(columns of a) == span(columns of b).
bool same_column_space(const Matrix& a, const Matrix& b);
/// Whether span(columns of a) is contained in span(columns of b).
bool column_space_contains(const Matrix& outer, const Matrix& inner);

/// Reusable solver for m x = b. Reduces [m | I] once, so that each solve
/// is a matrix-vector product. Solutions coincide with solve(m, b).
class LinearSolver
{
public:
  explicit LinearSolver(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivot_cols_.size(); }
  std::span<const std::size_t> pivot_cols() const { return pivot_cols_; }

  std::optional<RationalVector> solve(std::span<const Rational> b) const;
  /// Whether b lies in the column space.
  bool consistent(std::span<const Rational> b) const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::size_t> pivot_cols_;
  Matrix transform_; // E with E m = rref(m)
};

/// Incrementally built subspace, kept in reduced echelon form. Used for
/// greedy basis extension and membership tests.
class SpanBuilder
{
public:
  explicit SpanBuilder(std::size_t ambient_dim) : dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Adds v if it is independent of the current span. Returns whether it was added.
  bool try_add(std::span<const Rational> v);
  bool contains(std::span<const Rational> v) const;

private:
  RationalVector reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace qtrefftz
