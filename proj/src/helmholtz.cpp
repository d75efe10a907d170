#include "qtrefftz/helmholtz.hpp"

#include "qtrefftz/diffops.hpp"
#include "qtrefftz/memo.hpp"

#include <stdexcept>
#include <string>

namespace qtrefftz {

namespace {

// One factorization of the square system [S*_k | I*_k | H_k] per degree.
const LinearSolver& helmholtz_solver(int k)
{
  static Memo<int, LinearSolver> memo;
  return memo.get(k, [k] {
    const auto& sol = cached_basis(SpaceTag::SolenoidalStar, k);
    const auto& irr = cached_basis(SpaceTag::IrrotationalStar, k);
    const auto& harm = cached_basis(SpaceTag::Harmonic, k);
    const auto n = HomVecPoly::coord_count(k);
    Matrix system(n, sol.size() + irr.size() + harm.size());
    std::size_t col = 0;
    for (const auto* basis : {&sol, &irr, &harm})
      for (const auto& v : basis->vectors)
        system.set_column(col++, v.coords());
    LinearSolver solver(system);
    if (solver.rank() != n || system.cols() != n)
      throw std::logic_error("helmholtz: concatenated basis is not square and invertible at degree " +
                             std::to_string(k));
    return solver;
  });
}

} // namespace

HelmholtzCoordinates helmholtz_coordinates(const HomVecPoly& v)
{
  const int k = v.degree();
  const auto x = helmholtz_solver(k).solve(v.coords());
  if (!x)
    throw std::logic_error("helmholtz: inconsistent system");
  const auto ns = cached_basis(SpaceTag::SolenoidalStar, k).size();
  const auto ni = cached_basis(SpaceTag::IrrotationalStar, k).size();
  const auto first = x->begin();
  return {RationalVector(first, first + static_cast<std::ptrdiff_t>(ns)),
          RationalVector(first + static_cast<std::ptrdiff_t>(ns), first + static_cast<std::ptrdiff_t>(ns + ni)),
          RationalVector(first + static_cast<std::ptrdiff_t>(ns + ni), x->end())};
}

HelmholtzTriple decompose(const HomVecPoly& v)
{
  const int k = v.degree();
  if (k == 0)
    return {0, HomVecPoly(0), HomVecPoly(0), v};
  const auto c = helmholtz_coordinates(v);
  return {k, cached_basis(SpaceTag::SolenoidalStar, k).combine(c.solenoidal),
          cached_basis(SpaceTag::IrrotationalStar, k).combine(c.irrotational),
          cached_basis(SpaceTag::Harmonic, k).combine(c.harmonic)};
}

std::pair<HomVecPoly, HomVecPoly> split_sol_irr(const HomVecPoly& v)
{
  const int k = v.degree();
  if (k == 0)
    return {v, HomVecPoly(0)};
  static Memo<int, LinearSolver> memo;
  const auto& lap = memo.get(k, [k] { return LinearSolver(operator_matrix(OpKind::ScalarLap, k - 1).entries); });
  const auto rhs = div(v);
  const auto g = lap.solve(rhs.coeffs());
  if (!g)
    throw std::logic_error("split_sol_irr: scalar Laplacian is not surjective");
  auto irrotational = grad(HomScalarPoly(k + 1, *g));
  return {v - irrotational, irrotational};
}

} // namespace qtrefftz
