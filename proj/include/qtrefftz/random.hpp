#pragma once

// Seeded random rational data for property checks. Numerators lie in
// [-bound, bound] and denominators in [1, bound].

#include "qtrefftz/polyalg.hpp"

#include <random>

namespace qtrefftz {

Rational random_rational(std::mt19937_64& rng, int bound = 9);
HomScalarPoly random_hom_scalar(std::mt19937_64& rng, int degree, int bound = 9);
HomVecPoly random_hom_vec(std::mt19937_64& rng, int degree, int bound = 9);
/// Random jet of length max_degree + 1 with the given constant term.
CoefficientJet random_jet(std::mt19937_64& rng, int max_degree, const Rational& eps0, int bound = 9);

/// 1 + x1 + x2 x3, zero-padded to max_degree (>= 2).
CoefficientJet sample_variable_jet(int max_degree);

} // namespace qtrefftz
