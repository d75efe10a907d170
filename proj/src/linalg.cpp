#include "qtrefftz/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace qtrefftz {

Matrix Matrix::identity(std::size_t n)
{
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    out(i, i) = 1;
  return out;
}

Matrix Matrix::from_columns(std::span<const RationalVector> columns, std::size_t rows)
{
  Matrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    out.set_column(c, columns[c]);
  return out;
}

RationalVector Matrix::column(std::size_t c) const
{
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Rational> values)
{
  if (values.size() != rows_)
    throw std::invalid_argument("Matrix::set_column: expected " + std::to_string(rows_) + " entries, got " +
                                std::to_string(values.size()));
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, c) = values[r];
}

bool Matrix::is_zero() const
{
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix Matrix::transposed() const
{
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::hstack(const Matrix& rhs) const
{
  if (rhs.rows_ != rows_)
    throw std::invalid_argument("Matrix::hstack: row count mismatch");
  Matrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c)
      out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const
{
  if (first + count > rows_)
    throw std::out_of_range("Matrix::row_block: rows out of range");
  Matrix out(count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
  return out;
}

RationalVector Matrix::operator*(std::span<const Rational> x) const
{
  if (x.size() != cols_)
    throw std::invalid_argument("Matrix * vector: size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(x[c]) != 0 && sgn((*this)(r, c)) != 0)
        out[r] += (*this)(r, c) * x[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("Matrix * Matrix: size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& s = a(r, k);
      if (sgn(s) == 0)
        continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (sgn(b(k, c)) != 0)
          out(r, c) += s * b(k, c);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix + Matrix: size mismatch");
  Matrix out = a;
  for (std::size_t n = 0; n < out.data_.size(); ++n)
    out.data_[n] += b.data_[n];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix - Matrix: size mismatch");
  Matrix out = a;
  for (std::size_t n = 0; n < out.data_.size(); ++n)
    out.data_[n] -= b.data_[n];
  return out;
}

// ---------------------------------------------------------------------------
// row reduction

namespace {

// row[c] -= factor * pivot_row[c] for c >= from.
void eliminate_row(std::span<Rational> row, std::span<const Rational> pivot_row, std::size_t from)
{
  const Rational factor = row[from];
  if (sgn(factor) == 0)
    return;
  Rational tmp;
  for (std::size_t c = from; c < row.size(); ++c) {
    if (sgn(pivot_row[c]) == 0)
      continue;
    tmp = factor * pivot_row[c];
    row[c] -= tmp;
  }
}

// Shared driver; `parallel` only changes how the independent row updates of
// one pivot step are scheduled.
RowEchelon reduce(Matrix m, bool parallel)
{
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t found = lead;
    while (found < rows && sgn(m(found, c)) == 0)
      ++found;
    if (found == rows)
      continue;
    if (found != lead)
      for (std::size_t j = c; j < cols; ++j)
        swap(m(found, j), m(lead, j));
    const Rational inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j)
      m(lead, j) *= inv;

    const auto pivot_row = m.row(lead);
    const auto n = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::ptrdiff_t r = 0; r < n; ++r)
      if (static_cast<std::size_t>(r) != lead)
        eliminate_row(m.row(static_cast<std::size_t>(r)), pivot_row, c);

    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace

RowEchelon rref_serial(Matrix m)
{
  return reduce(std::move(m), false);
}

RowEchelon rref_parallel(Matrix m)
{
  return reduce(std::move(m), true);
}

RowEchelon rref(Matrix m)
{
  // Thread start-up dominates on small systems.
  constexpr std::size_t parallel_threshold = 48;
  const bool parallel = omp_get_max_threads() > 1 && m.rows() >= parallel_threshold &&
                        m.cols() >= parallel_threshold && !omp_in_parallel();
  return reduce(std::move(m), parallel);
}

std::size_t rank(const Matrix& m)
{
  return rref(m).rank();
}

std::vector<RationalVector> nullspace(const Matrix& m)
{
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols)
    is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
      v[ech.pivot_cols[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const Matrix& m, std::span<const Rational> b)
{
  if (b.size() != m.rows())
    throw std::invalid_argument("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), 1);
  aug.set_column(0, b);
  const auto ech = rref(m.hstack(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols())
    return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
    x[ech.pivot_cols[i]] = ech.reduced(i, m.cols());
  return x;
}

bool column_space_contains(const Matrix& outer, const Matrix& inner)
{
  if (outer.rows() != inner.rows())
    throw std::invalid_argument("column_space_contains: row count mismatch");
  return rank(outer.hstack(inner)) == rank(outer);
}

bool same_column_space(const Matrix& a, const Matrix& b)
{
  if (a.rows() != b.rows())
    throw std::invalid_argument("same_column_space: row count mismatch");
  const auto joint = rank(a.hstack(b));
  return joint == rank(a) && joint == rank(b);
}

// ---------------------------------------------------------------------------
// LinearSolver

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols())
{
  auto ech = rref(m.hstack(Matrix::identity(rows_)));
  for (auto c : ech.pivot_cols) {
    if (c >= cols_)
      break;
    pivot_cols_.push_back(c);
  }
  transform_ = Matrix(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rows_; ++c)
      transform_(r, c) = ech.reduced(r, cols_ + c);
}

bool LinearSolver::consistent(std::span<const Rational> b) const
{
  if (b.size() != rows_)
    throw std::invalid_argument("LinearSolver: right-hand side has wrong length");
  // Rows of E below the rank annihilate the column space.
  for (std::size_t r = rank(); r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < rows_; ++c)
      if (sgn(b[c]) != 0)
        acc += transform_(r, c) * b[c];
    if (sgn(acc) != 0)
      return false;
  }
  return true;
}

std::optional<RationalVector> LinearSolver::solve(std::span<const Rational> b) const
{
  if (!consistent(b))
    return std::nullopt;
  RationalVector x(cols_);
  for (std::size_t i = 0; i < rank(); ++i) {
    Rational acc;
    for (std::size_t c = 0; c < rows_; ++c)
      if (sgn(b[c]) != 0)
        acc += transform_(i, c) * b[c];
    x[pivot_cols_[i]] = acc;
  }
  return x;
}

// ---------------------------------------------------------------------------
// SpanBuilder

RationalVector SpanBuilder::reduce(std::span<const Rational> v) const
{
  if (v.size() != dim_)
    throw std::invalid_argument("SpanBuilder: vector has wrong length");
  RationalVector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = w[pivots_[i]];
    if (sgn(factor) == 0)
      continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn(rows_[i][c]) != 0)
        w[c] -= factor * rows_[i][c];
  }
  return w;
}

bool SpanBuilder::contains(std::span<const Rational> v) const
{
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool SpanBuilder::try_add(std::span<const Rational> v)
{
  auto w = reduce(v);
  const auto it = std::find_if(w.begin(), w.end(), [](const Rational& q) { return sgn(q) != 0; });
  if (it == w.end())
    return false;
  const auto pivot = static_cast<std::size_t>(it - w.begin());
  const Rational inv = 1 / w[pivot];
  for (auto& q : w)
    q *= inv;
  // keep existing rows reduced at the new pivot
  for (auto& row : rows_) {
    const Rational factor = row[pivot];
    if (sgn(factor) == 0)
      continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (sgn(w[c]) != 0)
        row[c] -= factor * w[c];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

} // namespace qtrefftz
