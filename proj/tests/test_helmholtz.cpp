#include "support.hpp"

#include "qtrefftz/diffops.hpp"
#include "qtrefftz/helmholtz.hpp"
#include "qtrefftz/random.hpp"

#include <algorithm>
#include <random>

using namespace qtrefftz;
using namespace qtrefftz::test;

namespace {

bool in_span(const SpaceBasis& basis, const HomVecPoly& v)
{
  SpanBuilder span(HomVecPoly::coord_count(basis.degree));
  for (const auto& b : basis.vectors)
    span.try_add(b.coords());
  return span.contains(v.coords());
}

} // namespace

TEST_CASE("degree 0 fields are purely harmonic")
{
  const auto v = vec(poly(0, {{{0, 0, 0}, 1}}), poly(0, {{{0, 0, 0}, -2}}), zero(0));
  const auto t = decompose(v);
  CHECK(t.solenoidal.is_zero());
  CHECK(t.irrotational.is_zero());
  CHECK(t.harmonic == v);
}

TEST_CASE("harmonic input is returned unchanged in the harmonic slot")
{
  const auto v = grad(poly(3, {{{1, 1, 1}, 1}}));
  const auto t = decompose(v);
  CHECK(t.solenoidal.is_zero());
  CHECK(t.irrotational.is_zero());
  CHECK(t.harmonic == v);
}

TEST_CASE("(x1, 0, 0) has a nonzero irrotational part")
{
  const auto v = vec(poly(1, {{{1, 0, 0}, 1}}), zero(1), zero(1));
  const auto t = decompose(v);
  CHECK(t.sum() == v);
  CHECK_FALSE(t.irrotational.is_zero());
  CHECK(div(t.irrotational) == div(v));
}

TEST_CASE("solenoidal input has no irrotational part")
{
  std::mt19937_64 rng(4);
  for (int k = 1; k <= 5; ++k) {
    const auto v = curl(random_hom_vec(rng, k + 1));
    const auto t = decompose(v);
    CHECK(t.irrotational.is_zero());
    CHECK(t.sum() == v);
  }
}

TEST_CASE("round trip, membership and uniqueness on random fields")
{
  std::mt19937_64 rng(2024);
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const auto& sol = cached_basis(SpaceTag::SolenoidalStar, k);
    const auto& irr = cached_basis(SpaceTag::IrrotationalStar, k);
    const auto& harm = cached_basis(SpaceTag::Harmonic, k);

    // The same square system with its columns in reverse order: a different
    // elimination order must give the same triple.
    auto system = sol.as_columns().hstack(irr.as_columns()).hstack(harm.as_columns());
    Matrix reversed(system.rows(), system.cols());
    for (std::size_t c = 0; c < system.cols(); ++c)
      reversed.set_column(system.cols() - 1 - c, system.column(c));

    for (int trial = 0; trial < 50; ++trial) {
      const auto v = random_hom_vec(rng, k);
      const auto t = decompose(v);
      CHECK(t.sum() == v);
      CHECK(in_span(sol, t.solenoidal));
      CHECK(in_span(irr, t.irrotational));
      CHECK(in_span(harm, t.harmonic));

      auto x = solve(reversed, v.coords());
      REQUIRE(x);
      std::reverse(x->begin(), x->end());
      const auto ns = static_cast<std::ptrdiff_t>(sol.size());
      const auto ni = static_cast<std::ptrdiff_t>(irr.size());
      CHECK(sol.combine({x->data(), sol.size()}) == t.solenoidal);
      CHECK(irr.combine({x->data() + ns, irr.size()}) == t.irrotational);
      CHECK(harm.combine({x->data() + ns + ni, harm.size()}) == t.harmonic);
    }
  }
}

TEST_CASE("decompose is linear")
{
  std::mt19937_64 rng(8);
  for (int k = 1; k <= 6; ++k) {
    const auto u = random_hom_vec(rng, k);
    const auto v = random_hom_vec(rng, k);
    const auto a = random_rational(rng), b = random_rational(rng);
    const auto tu = decompose(u), tv = decompose(v), tw = decompose(a * u + b * v);
    CHECK(tw.solenoidal == a * tu.solenoidal + b * tv.solenoidal);
    CHECK(tw.irrotational == a * tu.irrotational + b * tv.irrotational);
    CHECK(tw.harmonic == a * tu.harmonic + b * tv.harmonic);
  }
}

TEST_CASE("coordinates have the expected block sizes")
{
  std::mt19937_64 rng(1);
  const auto c = helmholtz_coordinates(random_hom_vec(rng, 3));
  CHECK(c.solenoidal.size() == 15);
  CHECK(c.irrotational.size() == 6);
  CHECK(c.harmonic.size() == 9);
}

TEST_CASE("split_sol_irr")
{
  const auto x1 = vec(poly(1, {{{1, 0, 0}, 1}}), zero(1), zero(1));
  auto [f, g] = split_sol_irr(x1);
  CHECK(div(f).is_zero());
  CHECK(curl(g).is_zero());
  CHECK(f + g == x1);

  std::mt19937_64 rng(6);
  for (int k = 0; k <= 6; ++k) {
    const auto sol = curl(random_hom_vec(rng, k + 1));
    const auto [fs, gs] = split_sol_irr(sol);
    CHECK(fs == sol);
    CHECK(gs.is_zero());

    const auto v = random_hom_vec(rng, k);
    const auto [fv, gv] = split_sol_irr(v);
    CHECK(fv + gv == v);
    CHECK(div(fv).is_zero());
    CHECK(curl(gv).is_zero());
  }
  const auto [f2, g2] = split_sol_irr(grad(poly(2, {{{1, 1, 0}, 1}})));
  CHECK(div(f2).is_zero());
  CHECK(curl(g2).is_zero());
}
