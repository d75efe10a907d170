#include "support.hpp"

#include "qtrefftz/bases.hpp"
#include "qtrefftz/diffops.hpp"

using namespace qtrefftz;
using namespace qtrefftz::test;

TEST_CASE("psi examples")
{
  CHECK(psi({1, {0, 0, 0}}) == vec(poly(0, {{{0, 0, 0}, 1}}), zero(0), zero(0)));
  // family 4, i = (1,0,1): (2 x1 x3, 0, -x3^2)
  CHECK(psi({4, {1, 0, 1}}) == vec(poly(2, {{{1, 0, 1}, 2}}), zero(2), poly(2, {{{0, 0, 2}, -1}})));
  CHECK(div(psi({4, {1, 0, 1}})).is_zero());
  CHECK(psi({5, {0, 2, 0}}) == vec(zero(2), poly(2, {{{0, 2, 0}, 1}}), poly(2, {{{0, 1, 1}, -2}})));
}

TEST_CASE("psi admissibility errors name the constraint")
{
  CHECK_THROWS_WITH_AS(psi({4, {0, 1, 0}}), doctest::Contains("i1 > 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(psi({5, {1, 0, 0}}), doctest::Contains("i2 > 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(psi({1, {1, 0, 0}}), doctest::Contains("i1 = 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(psi({2, {0, 1, 0}}), doctest::Contains("i2 = 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(psi({3, {0, 0, 1}}), doctest::Contains("i3 = 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(psi({6, {0, 0, 0}}), doctest::Contains("1..5"), std::invalid_argument);
  CHECK_THROWS_AS(psi({1, {0, -1, 2}}), std::invalid_argument);
}

TEST_CASE("space names round trip")
{
  for (auto tag : {SpaceTag::Solenoidal, SpaceTag::Irrotational, SpaceTag::Harmonic, SpaceTag::SolenoidalStar,
                   SpaceTag::IrrotationalStar, SpaceTag::RangeGrad, SpaceTag::KerCurl})
    CHECK(parse_space_tag(space_name(tag)) == tag);
  CHECK_FALSE(parse_space_tag("solenoidal"));
}

TEST_CASE("basis sizes at small degrees")
{
  CHECK(solenoidal_basis(0).size() == 3);
  CHECK(solenoidal_basis(1).size() == 8);
  CHECK(solenoidal_basis(2).size() == 15);
  CHECK(irrotational_basis(0).size() == 3);
  CHECK(irrotational_basis(1).size() == 6);
  CHECK(irrotational_basis(3).size() == 15);
  CHECK(harmonic_basis(0).size() == 3);
  CHECK(harmonic_basis(1).size() == 5);
  const auto s0 = star_complements(0);
  CHECK(s0.solenoidal.size() == 0);
  CHECK(s0.irrotational.size() == 0);
  for (auto [k, ns, ni] : {std::tuple{1, 3u, 1u}, {2, 8u, 3u}, {4, 24u, 10u}}) {
    const auto s = star_complements(k);
    CHECK(s.solenoidal.size() == ns);
    CHECK(s.irrotational.size() == ni);
  }
}

TEST_CASE("dimension table and defining properties, k = 0..8")
{
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    const auto& sol = cached_basis(SpaceTag::Solenoidal, k);
    const auto& irr = cached_basis(SpaceTag::Irrotational, k);
    const auto& harm = cached_basis(SpaceTag::Harmonic, k);
    const auto& sol_star = cached_basis(SpaceTag::SolenoidalStar, k);
    const auto& irr_star = cached_basis(SpaceTag::IrrotationalStar, k);
    CHECK(sol.size() == solenoidal_dim(k));
    CHECK(irr.size() == irrotational_dim(k));
    CHECK(harm.size() == harmonic_dim(k));
    CHECK(sol_star.size() == solenoidal_star_dim(k));
    CHECK(irr_star.size() == irrotational_star_dim(k));
    for (const auto* b : {&sol, &irr, &harm, &sol_star, &irr_star})
      CHECK(rank(b->as_columns()) == b->size());

    for (const auto& v : sol.vectors)
      CHECK(div(v).is_zero());
    for (const auto& v : irr.vectors)
      CHECK(curl(v).is_zero());
    for (const auto& v : harm.vectors) {
      CHECK(div(v).is_zero());
      CHECK(curl(v).is_zero());
    }

    // S*_k + H_k = S_k and I*_k + H_k = I_k
    CHECK(same_column_space(sol_star.as_columns().hstack(harm.as_columns()), sol.as_columns()));
    CHECK(same_column_space(irr_star.as_columns().hstack(harm.as_columns()), irr.as_columns()));
    // the three-way sum has full rank 3 (k+1)(k+2)/2
    const auto all = sol_star.as_columns().hstack(irr_star.as_columns()).hstack(harm.as_columns());
    CHECK(all.cols() == HomVecPoly::coord_count(k));
    CHECK(rank(all) == HomVecPoly::coord_count(k));
  }
}

TEST_CASE("harmonic fields are exactly the intersection of S_k and I_k")
{
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const auto s = cached_basis(SpaceTag::Solenoidal, k).as_columns();
    const auto i = cached_basis(SpaceTag::Irrotational, k).as_columns();
    // s a = i b  <=>  [s | -i] (a, b) = 0
    const auto ns = nullspace(s.hstack(Matrix(i.rows(), i.cols()) - i));
    CHECK(ns.size() == harmonic_dim(k));
    std::vector<RationalVector> fields;
    for (const auto& c : ns)
      fields.push_back(s * std::span<const Rational>(c.data(), s.cols()));
    const auto h = cached_basis(SpaceTag::Harmonic, k).as_columns();
    CHECK(same_column_space(Matrix::from_columns(fields, s.rows()), h));
  }
}

TEST_CASE("Psi families have the expected sizes")
{
  for (int k = 0; k <= 8; ++k) {
    std::array<std::size_t, 6> count{};
    for (const auto& label : psi_labels(k)) {
      CHECK(label.degree() == k);
      ++count[static_cast<std::size_t>(label.family)];
    }
    const auto kk = static_cast<std::size_t>(k);
    CHECK(count[1] == kk + 1);
    CHECK(count[2] == kk + 1);
    CHECK(count[3] == kk + 1);
    CHECK(count[4] == kk * (kk + 1) / 2);
    CHECK(count[5] == kk * (kk + 1) / 2);
  }
}

TEST_CASE("range and kernel tags")
{
  CHECK(range_grad_basis(2).tag == SpaceTag::RangeGrad);
  CHECK(range_grad_basis(2).vectors == irrotational_basis(2).vectors);
  const auto kc = ker_curl_basis(1);
  CHECK(kc.degree == 2);
  for (const auto& v : kc.vectors)
    CHECK(curl(v).is_zero());
}

TEST_CASE("combine checks the coefficient count")
{
  const auto& b = cached_basis(SpaceTag::Harmonic, 1);
  CHECK_THROWS_AS(b.combine(RationalVector(4)), std::invalid_argument);
  RationalVector c(5);
  c[2] = 3;
  CHECK(b.combine(c) == Rational(3) * b.vectors[2]);
}
