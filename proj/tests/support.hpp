#pragma once

#include "qtrefftz/polyalg.hpp"

#include <doctest.h>

#include <initializer_list>
#include <ostream>
#include <utility>

namespace qtrefftz::test {

struct Term
{
  MultiIndex index;
  Rational coef;
};

/// Homogeneous polynomial from (exponent, coefficient) terms.
inline HomScalarPoly poly(int degree, std::initializer_list<Term> terms)
{
  HomScalarPoly out(degree);
  for (const auto& t : terms)
    out.coeff(t.index) += t.coef;
  return out;
}

inline HomVecPoly vec(HomScalarPoly a, HomScalarPoly b, HomScalarPoly c)
{
  return {std::move(a), std::move(b), std::move(c)};
}

inline HomScalarPoly zero(int degree)
{
  return HomScalarPoly(degree);
}

} // namespace qtrefftz::test

namespace qtrefftz {

// Readable failure output for CHECK(a == b).
inline std::ostream& operator<<(std::ostream& os, const HomScalarPoly& f)
{
  os << "deg " << f.degree() << " [";
  for (std::size_t n = 0; n < f.size(); ++n)
    os << (n ? " " : "") << f[n].get_str();
  return os << "]";
}

inline std::ostream& operator<<(std::ostream& os, const HomVecPoly& v)
{
  return os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
}

} // namespace qtrefftz
