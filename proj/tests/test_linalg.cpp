#include "support.hpp"

#include "qtrefftz/linalg.hpp"
#include "qtrefftz/random.hpp"

#include <omp.h>

#include <random>

using namespace qtrefftz;

namespace {

// Random matrix of the given rank (at most), built as a product of two
// random factors so that rank deficiency is common.
Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner)
{
  Matrix a(rows, inner), b(inner, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < inner; ++c)
      a(r, c) = random_rational(rng, 4);
  for (std::size_t r = 0; r < inner; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      b(r, c) = rng() % 3 == 0 ? Rational(0) : random_rational(rng, 4);
  return a * b;
}

bool is_reduced(const RowEchelon& e)
{
  const auto& m = e.reduced;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const auto pc = e.pivot_cols[r];
    if (m(r, pc) != 1)
      return false;
    for (std::size_t c = 0; c < pc; ++c)
      if (sgn(m(r, c)) != 0)
        return false;
    for (std::size_t other = 0; other < m.rows(); ++other)
      if (other != r && sgn(m(other, pc)) != 0)
        return false;
    if (r > 0 && e.pivot_cols[r - 1] >= pc)
      return false;
  }
  for (std::size_t r = e.rank(); r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0)
        return false;
  return true;
}

} // namespace

TEST_CASE("small rank and nullspace cases")
{
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(nullspace(Matrix(2, 3)).size() == 3);
  CHECK(rank(Matrix::identity(5)) == 5);
  CHECK(nullspace(Matrix::identity(5)).empty());
  CHECK(rank(Matrix(0, 0)) == 0);

  Matrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 1;
  const auto e = rref_serial(m);
  CHECK(e.pivot_cols == std::vector<std::size_t>{0, 2});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  // free column 1 set to 1: x = (-2, 1, 0)
  CHECK(ns[0] == RationalVector{-2, 1, 0});
}

TEST_CASE("serial and parallel reduction agree exactly")
{
  std::mt19937_64 rng(42);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (int trial = 0; trial < 12; ++trial) {
      const auto rows = 1 + rng() % 60, cols = 1 + rng() % 60, inner = 1 + rng() % 40;
      const auto m = random_matrix(rng, rows, cols, inner);
      const auto s = rref_serial(m);
      const auto p = rref_parallel(m);
      CHECK(s.reduced == p.reduced);
      CHECK(s.pivot_cols == p.pivot_cols);
      CHECK(is_reduced(s));
      CHECK(rref(m).reduced == s.reduced);
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("nullspace vectors are annihilated and independent")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, 1 + rng() % 8);
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == m.cols());
    for (const auto& v : ns)
      for (const auto& x : m * v)
        CHECK(sgn(x) == 0);
    if (!ns.empty())
      CHECK(rank(Matrix::from_columns(ns, m.cols())) == ns.size());
  }
}

TEST_CASE("solve and LinearSolver agree")
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 10, 1 + rng() % 10, 1 + rng() % 6);
    const LinearSolver solver(m);
    CHECK(solver.rank() == rank(m));

    RationalVector x(m.cols());
    for (auto& v : x)
      v = random_rational(rng);
    const auto b = m * x;
    const auto direct = solve(m, b);
    REQUIRE(direct);
    CHECK(m * *direct == b);
    CHECK(solver.solve(b) == direct);
    CHECK(solver.consistent(b));

    // Perturb b out of the column space when possible.
    if (rank(m) < m.rows()) {
      bool found = false;
      for (std::size_t r = 0; r < m.rows() && !found; ++r) {
        auto bad = b;
        bad[r] += 1;
        if (!solve(m, bad)) {
          found = true;
          CHECK_FALSE(solver.consistent(bad));
          CHECK_FALSE(solver.solve(bad));
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("solve rejects wrong right-hand side sizes")
{
  const auto m = Matrix::identity(3);
  CHECK_THROWS_AS(solve(m, RationalVector(2)), std::invalid_argument);
  CHECK_THROWS_AS(LinearSolver(m).solve(RationalVector(4)), std::invalid_argument);
  CHECK_THROWS_AS(m * RationalVector(2), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(2, 3) - Matrix(3, 2), std::invalid_argument);
}

TEST_CASE("column space comparisons")
{
  std::mt19937_64 rng(5);
  const auto a = random_matrix(rng, 8, 5, 3);
  Matrix mix(5, 4);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      mix(r, c) = random_rational(rng);
  const auto b = a * mix;
  CHECK(column_space_contains(a, b));
  CHECK(same_column_space(a, a.hstack(b)));
  const auto id = Matrix::identity(8);
  CHECK(column_space_contains(id, a));
  CHECK_FALSE(column_space_contains(a, id));
  CHECK_FALSE(same_column_space(a, id));
}

TEST_CASE("SpanBuilder")
{
  SpanBuilder span(3);
  CHECK(span.try_add(RationalVector{1, 2, 0}));
  CHECK_FALSE(span.try_add(RationalVector{2, 4, 0}));
  CHECK_FALSE(span.try_add(RationalVector{0, 0, 0}));
  CHECK(span.contains(RationalVector{-1, -2, 0}));
  CHECK_FALSE(span.contains(RationalVector{0, 0, 1}));
  CHECK(span.try_add(RationalVector{0, 1, 1}));
  CHECK(span.dimension() == 2);
  CHECK(span.try_add(RationalVector{0, 0, 5}));
  CHECK(span.contains(RationalVector{7, -3, 2}));
  CHECK_THROWS_AS(span.try_add(RationalVector{1, 2}), std::invalid_argument);
}

TEST_CASE("matrix helpers")
{
  Matrix m(2, 3);
  m(0, 1) = 5;
  m(1, 2) = -1;
  CHECK(m.transposed().transposed() == m);
  CHECK(m.transposed()(1, 0) == 5);
  CHECK(m.row_block(1, 1)(0, 2) == -1);
  CHECK(m.column(1) == RationalVector{5, 0});
  CHECK((m - m).is_zero());
  CHECK((m + m)(0, 1) == 10);
  CHECK(m.hstack(Matrix::identity(2)).cols() == 5);
}
