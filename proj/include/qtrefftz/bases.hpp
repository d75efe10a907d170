#pragma once

// Closed-form and computed bases of the subspaces of (P_k)^3 used by the
// Helmholtz decomposition:
//
//   solenoidal   S_k = ker div        (k+1)(k+3) vectors
//   irrotational I_k = ker curl       (k+2)(k+3)/2 vectors, gradients of degree-(k+1) monomials
//   harmonic     H_k = S_k ∩ I_k      2k+3 vectors, gradients of harmonic degree-(k+1) polynomials
//   S*_k, I*_k   complements of H_k in S_k and I_k
//
// At k = 0 every constant field is harmonic and both complements are empty.

#include "qtrefftz/linalg.hpp"
#include "qtrefftz/polyalg.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace qtrefftz {

/// Label of a divergence-free generator. Families:
///   1: (X^i, 0, 0)                               needs i1 == 0
///   2: (0, X^i, 0)                               needs i2 == 0
///   3: (0, 0, X^i)                               needs i3 == 0
///   4: ((i3+1) X^i, 0, -i1 X^(i-e1+e3))          needs i1 > 0
///   5: (0, (i3+1) X^i, -i2 X^(i-e2+e3))          needs i2 > 0
struct PsiLabel
{
  int family;
  MultiIndex index;

  int degree() const { return index.degree(); }
};

/// Throws std::invalid_argument naming the violated constraint.
HomVecPoly psi(const PsiLabel& label);

/// Admissible labels of degree k, grouped by family 1..5, canonical
/// monomial order inside each family.
std::vector<PsiLabel> psi_labels(int k);

enum class SpaceTag
{
  Solenoidal,
  Irrotational,
  Harmonic,
  SolenoidalStar,
  IrrotationalStar,
  RangeGrad,
  KerCurl,
};

std::string_view space_name(SpaceTag tag);
/// CLI spellings sol|irr|harm|sol-star|irr-star|range-grad|ker-curl.
std::optional<SpaceTag> parse_space_tag(std::string_view name);

struct SpaceBasis
{
  SpaceTag tag;
  int degree;
  std::vector<HomVecPoly> vectors;

  std::size_t size() const { return vectors.size(); }
  /// Coordinates of the vectors as matrix columns.
  Matrix as_columns() const;
  /// sum_j coeffs[j] * vectors[j]
  HomVecPoly combine(std::span<const Rational> coeffs) const;
};

/// Union of the five Psi families.
SpaceBasis solenoidal_basis(int k);
/// {grad X^i : |i| = k+1}.
SpaceBasis irrotational_basis(int k);
/// Same vectors as irrotational_basis(k), tagged as the range of G_k.
SpaceBasis range_grad_basis(int k);
/// ker C_k in (P_{k+1})^3: gradients of degree-(k+2) monomials.
SpaceBasis ker_curl_basis(int k);
/// grad h for h in nullspace(L_{k-1}); all of grad P_1 at k = 0.
SpaceBasis harmonic_basis(int k);

struct StarComplements
{
  SpaceBasis solenoidal;
  SpaceBasis irrotational;
};

/// Greedy extension of harmonic_basis(k) by solenoidal_basis(k) (resp.
/// irrotational_basis(k)) vectors in enumeration order; the added vectors
/// form S*_k (resp. I*_k).
StarComplements star_complements(int k);

/// Memoized versions, safe for concurrent use.
const SpaceBasis& cached_basis(SpaceTag tag, int k);

/// Closed-form dimensions; valid for every k >= 0.
std::size_t solenoidal_dim(int k);
std::size_t irrotational_dim(int k);
std::size_t harmonic_dim(int k);
std::size_t solenoidal_star_dim(int k);
std::size_t irrotational_star_dim(int k);

} // namespace qtrefftz
