#pragma once

#include "qtrefftz/bases.hpp"
#include "qtrefftz/polyalg.hpp"

#include <utility>

namespace qtrefftz {

/// V = solenoidal + irrotational + harmonic with the three parts in
/// S*_k, I*_k and H_k respectively.
struct HelmholtzTriple
{
  int degree;
  HomVecPoly solenoidal;
  HomVecPoly irrotational;
  HomVecPoly harmonic;

  HomVecPoly sum() const { return solenoidal + irrotational + harmonic; }
};

/// Coordinates of V in the concatenated basis [S*_k | I*_k | H_k].
struct HelmholtzCoordinates
{
  RationalVector solenoidal;
  RationalVector irrotational;
  RationalVector harmonic;
};

HelmholtzCoordinates helmholtz_coordinates(const HomVecPoly& v);

/// The unique decomposition. Degree 0 fields are purely harmonic.
HelmholtzTriple decompose(const HomVecPoly& v);

/// A (non-unique) split V = F + G with div F = 0 and G = grad g, where g is
/// the particular solution of lap g = div V picked by row reduction.
std::pair<HomVecPoly, HomVecPoly> split_sol_irr(const HomVecPoly& v);

} // namespace qtrefftz
