#include "support.hpp"

#include "qtrefftz/bases.hpp"
#include "qtrefftz/diffops.hpp"
#include "qtrefftz/random.hpp"

#include <cstdlib>
#include <filesystem>
#include <random>

using namespace qtrefftz;
using namespace qtrefftz::test;

namespace {

HomScalarPoly x(int axis)
{
  MultiIndex i;
  i[axis] = 1;
  return HomScalarPoly::monomial(i);
}

RationalVector as_vector(const HomScalarPoly& f)
{
  return {f.coeffs().begin(), f.coeffs().end()};
}

} // namespace

TEST_CASE("operator names round trip")
{
  for (auto kind : {OpKind::Grad, OpKind::Div, OpKind::Curl, OpKind::ScalarLap, OpKind::VecLap})
    CHECK(parse_op_kind(op_name(kind)) == kind);
  CHECK_FALSE(parse_op_kind("laplace"));
  CHECK(op_order(OpKind::Curl) == 1);
  CHECK(op_order(OpKind::VecLap) == 2);
}

TEST_CASE("gradient")
{
  CHECK(grad(poly(0, {{{0, 0, 0}, 7}})) == HomVecPoly(0));
  const auto xyz = poly(3, {{{1, 1, 1}, 1}});
  CHECK(grad(xyz) == vec(poly(2, {{{0, 1, 1}, 1}}), poly(2, {{{1, 0, 1}, 1}}), poly(2, {{{1, 1, 0}, 1}})));
  for (const auto& i : monomials(3)) {
    const auto g = grad(HomScalarPoly::monomial(i));
    for (int a = 0; a < 3; ++a) {
      HomScalarPoly expected(2);
      if (i[a] > 0)
        expected.coeff(i.shifted(a, -1)) = i[a];
      CHECK(g[a] == expected);
    }
  }
}

TEST_CASE("divergence")
{
  for (const auto& i : monomials(2)) {
    HomVecPoly v(3);
    v[0].coeff(i.shifted(0, 1)) = make_rational(1, i.i1 + 1);
    CHECK(div(v) == HomScalarPoly::monomial(i));
  }
  CHECK(div(vec(poly(0, {{{0, 0, 0}, 3}}), zero(0), zero(0))) == HomScalarPoly(0));
  // family-4 kernel generator with i = (1,2,0)
  const auto k4 = vec(poly(3, {{{1, 2, 0}, 1}}), zero(3), poly(3, {{{0, 2, 1}, -1}}));
  CHECK(div(k4).is_zero());
}

TEST_CASE("curl")
{
  std::mt19937_64 rng(2);
  for (int k = 0; k <= 5; ++k)
    CHECK(curl(grad(random_hom_scalar(rng, k))).is_zero());
  // (0, 0, X^(i+e2)/(i2+1)) with i1 = 0 has curl (X^i, 0, 0)
  for (const auto& i : monomials(2)) {
    if (i.i1 != 0)
      continue;
    HomVecPoly v(3);
    v[2].coeff(i.shifted(1, 1)) = make_rational(1, i.i2 + 1);
    CHECK(curl(v) == vec(HomScalarPoly::monomial(i), zero(2), zero(2)));
  }
  CHECK(curl(vec(zero(1), x(2), zero(1))) == vec(poly(0, {{{0, 0, 0}, -1}}), zero(0), zero(0)));
  CHECK(curl(HomVecPoly(0)) == HomVecPoly(0));
}

TEST_CASE("scalar laplacian")
{
  CHECK(laplacian(poly(2, {{{2, 0, 0}, 1}})) == poly(0, {{{0, 0, 0}, 2}}));
  CHECK(laplacian(poly(2, {{{2, 0, 0}, 1}, {{0, 2, 0}, -1}})).is_zero());
  CHECK(laplacian(poly(3, {{{2, 1, 0}, 1}})) == poly(1, {{{0, 1, 0}, 2}}));
  CHECK(laplacian(x(0)) == HomScalarPoly(0));
  CHECK(laplacian(HomScalarPoly(0)) == HomScalarPoly(0));
}

TEST_CASE("vector laplacian")
{
  // (x3^3, 0, 0) -> 6 (x3, 0, 0)
  CHECK(vector_laplacian(vec(poly(3, {{{0, 0, 3}, 1}}), zero(3), zero(3))) ==
        vec(poly(1, {{{0, 0, 1}, 6}}), zero(1), zero(1)));
  CHECK(vector_laplacian(grad(poly(3, {{{1, 1, 1}, 1}}))).is_zero());
  // (x2^2, 0, 0) -> (2, 0, 0): twice the constant field
  CHECK(vector_laplacian(vec(poly(2, {{{0, 2, 0}, 1}}), zero(2), zero(2))) ==
        vec(poly(0, {{{0, 0, 0}, 2}}), zero(0), zero(0)));
}

TEST_CASE("curl curl identity")
{
  std::mt19937_64 rng(17);
  for (int k = 0; k <= 6; ++k)
    for (int trial = 0; trial < 100; ++trial)
      CHECK(curl_curl_identity_check(random_hom_vec(rng, k)));
  CHECK(curl_curl_identity_check(vec(poly(2, {{{0, 2, 0}, 1}}), zero(2), zero(2))));
  CHECK(curl_curl_identity_check(grad(random_hom_scalar(rng, 4))));
}

TEST_CASE("assembled matrix shapes and ranks")
{
  const auto g0 = assemble_matrix(OpKind::Grad, 0);
  CHECK(g0.rows() == 3);
  CHECK(g0.cols() == 3);
  CHECK(rank(g0) == 3);
  const auto d0 = assemble_matrix(OpKind::Div, 0);
  CHECK(d0.rows() == 1);
  CHECK(d0.cols() == 9);
  CHECK(rank(d0) == 1);
  const auto c2 = assemble_matrix(OpKind::Curl, 2);
  CHECK(c2.rows() == 3 * mono_count(2));
  CHECK(c2.cols() == 3 * mono_count(3));
  CHECK(rank(c2) == 15);
  CHECK(c2.domain_degree == 3);
  CHECK(c2.codomain_degree == 2);
  const auto vl = assemble_matrix(OpKind::VecLap, 1);
  CHECK(vl.rows() == 9);
  CHECK(vl.cols() == 3 * mono_count(3));
}

TEST_CASE("matrix columns are images of canonical basis elements")
{
  std::mt19937_64 rng(23);
  for (int k = 0; k <= 3; ++k) {
    const auto f = random_hom_scalar(rng, k + 1);
    CHECK(operator_matrix(OpKind::Grad, k).entries * f.coeffs() == grad(f).coords());
    const auto f2 = random_hom_scalar(rng, k + 2);
    CHECK(operator_matrix(OpKind::ScalarLap, k).entries * f2.coeffs() == as_vector(laplacian(f2)));
    const auto v = random_hom_vec(rng, k + 1);
    CHECK(operator_matrix(OpKind::Div, k).entries * v.coords() == as_vector(div(v)));
    CHECK(operator_matrix(OpKind::Curl, k).entries * v.coords() == curl(v).coords());
    const auto v2 = random_hom_vec(rng, k + 2);
    CHECK(operator_matrix(OpKind::VecLap, k).entries * v2.coords() == vector_laplacian(v2).coords());
  }
}

TEST_CASE("exact sequence and rank formulas for k = 0..8")
{
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    const auto kk = static_cast<std::size_t>(k);
    const auto& g = operator_matrix(OpKind::Grad, k);
    const auto& c = operator_matrix(OpKind::Curl, k);
    const auto& d = operator_matrix(OpKind::Div, k);
    const auto& l = operator_matrix(OpKind::ScalarLap, k);
    CHECK(rank(g) == (kk + 2) * (kk + 3) / 2);
    CHECK(rank(d) == (kk + 1) * (kk + 2) / 2);
    CHECK(rank(c) == (kk + 1) * (kk + 3));
    CHECK(rank(l) == (kk + 1) * (kk + 2) / 2);
    CHECK(nullspace(d).size() == (kk + 2) * (kk + 4));
    CHECK(nullspace(c).size() == (kk + 3) * (kk + 4) / 2);
    CHECK(nullspace(operator_matrix(OpKind::Grad, k + 2)).empty());
    CHECK(rank(d) == d.rows());

    const auto& c1 = operator_matrix(OpKind::Curl, k + 1);
    CHECK((c.entries * operator_matrix(OpKind::Grad, k + 1).entries).is_zero());
    CHECK((d.entries * c1.entries).is_zero());
    const auto ker_c1 = Matrix::from_columns(nullspace(c1), c1.cols());
    const auto ker_d = Matrix::from_columns(nullspace(d), d.cols());
    CHECK(same_column_space(operator_matrix(OpKind::Grad, k + 2).entries, ker_c1));
    CHECK(same_column_space(c1.entries, ker_d));
  }
}

TEST_CASE("vector laplacian preserves solenoidal fields")
{
  // D_{k-1} veclap_k = L_{k-1} D_{k+1} as matrices
  for (int k = 1; k <= 6; ++k) {
    const auto lhs = operator_matrix(OpKind::Div, k - 1).entries * operator_matrix(OpKind::VecLap, k).entries;
    const auto rhs = operator_matrix(OpKind::ScalarLap, k - 1).entries * operator_matrix(OpKind::Div, k + 1).entries;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vector laplacian is block upper triangular on the Psi families")
{
  // A_j^k: span of the family-j generators of degree k.
  auto family = [](int k, int j) {
    std::vector<RationalVector> cols;
    for (const auto& label : psi_labels(k))
      if (label.family == j)
        cols.push_back(psi(label).coords());
    return cols;
  };
  auto span_of = [&](int k, std::initializer_list<int> families) {
    std::vector<RationalVector> cols;
    for (int j : families)
      for (auto& c : family(k, j))
        cols.push_back(std::move(c));
    return Matrix::from_columns(cols, HomVecPoly::coord_count(k));
  };
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    const auto& vl = operator_matrix(OpKind::VecLap, k).entries;
    auto image = [&](int j) { return vl * Matrix::from_columns(family(k + 2, j), HomVecPoly::coord_count(k + 2)); };
    CHECK(column_space_contains(span_of(k, {1}), image(1)));
    CHECK(column_space_contains(span_of(k, {2}), image(2)));
    CHECK(column_space_contains(span_of(k, {3}), image(3)));
    CHECK(column_space_contains(span_of(k, {4, 1, 3}), image(4)));
    CHECK(column_space_contains(span_of(k, {5, 2, 3}), image(5)));
  }
}

TEST_CASE("degenerate degrees map to the zero element")
{
  CHECK(derivative(poly(0, {{{0, 0, 0}, 5}}), 1) == HomScalarPoly(0));
  CHECK(div(HomVecPoly(0)) == HomScalarPoly(0));
  CHECK(vector_laplacian(vec(x(0), x(1), x(2))) == HomVecPoly(0));
  CHECK_THROWS_AS(assemble_matrix(OpKind::Grad, -1), std::invalid_argument);
}

TEST_CASE("operator matrices persist through the cache directory")
{
  const auto dir = std::filesystem::temp_directory_path() / "qtrefftz_cache_test";
  std::filesystem::remove_all(dir);
  ::setenv("QT_CACHE_DIR", dir.c_str(), 1);
  // k = 11 is not used elsewhere in this binary, so the memo misses.
  const auto& m = operator_matrix(OpKind::Curl, 11);
  ::unsetenv("QT_CACHE_DIR");
  CHECK(std::filesystem::exists(dir / "curl_k11.json"));
  CHECK(m.entries == assemble_matrix(OpKind::Curl, 11).entries);
  std::filesystem::remove_all(dir);
}
