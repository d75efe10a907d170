#include "qtrefftz/random.hpp"

#include <stdexcept>

namespace qtrefftz {

Rational random_rational(std::mt19937_64& rng, int bound)
{
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return make_rational(num(rng), den(rng));
}

HomScalarPoly random_hom_scalar(std::mt19937_64& rng, int degree, int bound)
{
  HomScalarPoly out(degree);
  for (std::size_t n = 0; n < out.size(); ++n)
    out[n] = random_rational(rng, bound);
  return out;
}

HomVecPoly random_hom_vec(std::mt19937_64& rng, int degree, int bound)
{
  return {random_hom_scalar(rng, degree, bound), random_hom_scalar(rng, degree, bound),
          random_hom_scalar(rng, degree, bound)};
}

CoefficientJet random_jet(std::mt19937_64& rng, int max_degree, const Rational& eps0, int bound)
{
  std::vector<HomScalarPoly> parts{HomScalarPoly(0, {eps0})};
  for (int k = 1; k <= max_degree; ++k)
    parts.push_back(random_hom_scalar(rng, k, bound));
  return CoefficientJet(std::move(parts));
}

CoefficientJet sample_variable_jet(int max_degree)
{
  if (max_degree < 2)
    throw std::invalid_argument("sample_variable_jet: max_degree must be at least 2");
  std::vector<HomScalarPoly> parts;
  for (int k = 0; k <= max_degree; ++k)
    parts.emplace_back(k);
  parts[0][0] = 1;
  parts[1].coeff({1, 0, 0}) = 1;
  parts[2].coeff({0, 1, 1}) = 1;
  return CoefficientJet(std::move(parts));
}

} // namespace qtrefftz
