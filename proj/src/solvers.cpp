#include "qtrefftz/solvers.hpp"

#include "qtrefftz/diffops.hpp"
#include "qtrefftz/memo.hpp"

#include <string>

namespace qtrefftz {

Matrix restricted_veclap_matrix(const SpaceBasis& domain)
{
  if (domain.degree < 2)
    throw std::invalid_argument("restricted_veclap_matrix: domain degree must be at least 2");
  const int k = domain.degree - 2;
  Matrix out(HomVecPoly::coord_count(k), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j)
    out.set_column(j, vector_laplacian(domain.vectors[j]).coords());
  return out;
}

Matrix restricted_div_matrix(const SpaceBasis& domain)
{
  if (domain.degree < 1)
    throw std::invalid_argument("restricted_div_matrix: domain degree must be at least 1");
  const int k = domain.degree - 1;
  Matrix out(mono_count(k), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const auto d = div(domain.vectors[j]);
    out.set_column(j, d.coeffs());
  }
  return out;
}

namespace {

const LinearSolver& div_irrotational_solver(int k)
{
  static Memo<int, LinearSolver> memo;
  return memo.get(k, [k] {
    const auto m = restricted_div_matrix(cached_basis(SpaceTag::IrrotationalStar, k + 1));
    LinearSolver solver(m);
    if (m.rows() != m.cols() || solver.rank() != m.cols())
      throw std::logic_error("solve_div_irrotational: restricted divergence is not bijective at degree " +
                             std::to_string(k));
    return solver;
  });
}

const LinearSolver& veclap_solver(SpaceTag tag, int k)
{
  static Memo<std::pair<SpaceTag, int>, LinearSolver> memo;
  return memo.get({tag, k}, [tag, k] { return LinearSolver(restricted_veclap_matrix(cached_basis(tag, k + 2))); });
}

HomVecPoly solve_veclap_in(SpaceTag tag, const HomVecPoly& rhs)
{
  if (!div(rhs).is_zero())
    throw DivergenceObstruction("divergence obstruction: veclap right-hand side of degree " +
                                std::to_string(rhs.degree()) + " is not divergence free");
  const int k = rhs.degree();
  const auto x = veclap_solver(tag, k).solve(rhs.coords());
  if (!x)
    throw std::logic_error("solve_veclap: restricted vector Laplacian is not surjective at degree " +
                           std::to_string(k));
  return cached_basis(tag, k + 2).combine(*x);
}

SpaceBasis kernel_in(SpaceTag tag, int k, SpaceTag out_tag)
{
  const auto& domain = cached_basis(tag, k + 2);
  SpaceBasis out{out_tag, k + 2, {}};
  for (const auto& c : nullspace(restricted_veclap_matrix(domain)))
    out.vectors.push_back(domain.combine(c));
  return out;
}

} // namespace

HomVecPoly solve_div_irrotational(const HomScalarPoly& rhs)
{
  const int k = rhs.degree();
  const auto x = div_irrotational_solver(k).solve(rhs.coeffs());
  if (!x)
    throw std::logic_error("solve_div_irrotational: inconsistent system");
  return cached_basis(SpaceTag::IrrotationalStar, k + 1).combine(*x);
}

HomVecPoly solve_div_any(const HomScalarPoly& rhs)
{
  const int k = rhs.degree();
  HomVecPoly out(k + 1);
  const auto monos = monomials(k);
  for (std::size_t n = 0; n < monos.size(); ++n)
    if (sgn(rhs[n]) != 0)
      out[0].coeff(monos[n].shifted(0, 1)) = rhs[n] / (monos[n].i1 + 1);
  return out;
}

HomVecPoly solve_veclap_solenoidal(const HomVecPoly& rhs)
{
  return solve_veclap_in(SpaceTag::SolenoidalStar, rhs);
}

HomVecPoly solve_veclap_full(const HomVecPoly& rhs)
{
  return solve_veclap_in(SpaceTag::Solenoidal, rhs);
}

const SpaceBasis& veclap_restricted_kernel(int k)
{
  static Memo<int, SpaceBasis> memo;
  return memo.get(k, [k] { return kernel_in(SpaceTag::SolenoidalStar, k, SpaceTag::SolenoidalStar); });
}

SpaceBasis veclap_solenoidal_kernel(int k)
{
  return kernel_in(SpaceTag::Solenoidal, k, SpaceTag::Solenoidal);
}

} // namespace qtrefftz
