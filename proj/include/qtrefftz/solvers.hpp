#pragma once

// Right inverses of the restricted operators used to build quasi-Trefftz
// functions:
//
//   div    : I*_{k+1} -> P_k        bijective
//   veclap : S*_{k+2} -> S_k        surjective, kernel of dimension 2k+5
//
// plus the closed-form and full-space variants used as a cross-check route.

#include "qtrefftz/bases.hpp"
#include "qtrefftz/polyalg.hpp"

#include <stdexcept>

namespace qtrefftz {

/// Thrown when a vector Laplacian right-hand side is not divergence free.
class DivergenceObstruction : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// The unique G in I*_{k+1} with div G = rhs (rhs of degree k).
HomVecPoly solve_div_irrotational(const HomScalarPoly& rhs);

/// (sum_i rhs_i X^(i+e1) / (i1+1), 0, 0): a preimage of rhs under div.
HomVecPoly solve_div_any(const HomScalarPoly& rhs);

/// Some F in S*_{k+2} with veclap F = rhs; free kernel coordinates are zero.
/// Throws DivergenceObstruction when div rhs != 0.
HomVecPoly solve_veclap_solenoidal(const HomVecPoly& rhs);

/// Some F in S_{k+2} (full solenoidal space, Psi basis) with veclap F = rhs.
/// Throws DivergenceObstruction when div rhs != 0.
HomVecPoly solve_veclap_full(const HomVecPoly& rhs);

/// Basis of ker(veclap_k) inside S*_{k+2}: 2k+5 vectors.
const SpaceBasis& veclap_restricted_kernel(int k);

/// Basis of ker(veclap_k) inside S_{k+2}: 4(k+3) vectors.
SpaceBasis veclap_solenoidal_kernel(int k);

/// Matrix of veclap_k restricted to the given basis of degree k+2 fields,
/// in canonical coordinates of (P_k)^3.
Matrix restricted_veclap_matrix(const SpaceBasis& domain);

/// Matrix of div restricted to the given basis of degree k+1 fields.
Matrix restricted_div_matrix(const SpaceBasis& domain);

} // namespace qtrefftz
