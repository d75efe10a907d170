#include "qtrefftz/polyalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qtrefftz {

MultiIndex mono_at(int k, std::size_t index)
{
  if (k < 0 || index >= mono_count(k))
    throw std::out_of_range("mono_at: index " + std::to_string(index) + " out of range for degree " +
                            std::to_string(k));
  std::size_t rest = 0;
  while ((rest + 1) * (rest + 2) / 2 <= index)
    ++rest;
  const auto i3 = static_cast<int>(index - rest * (rest + 1) / 2);
  const auto i2 = static_cast<int>(rest) - i3;
  return {k - static_cast<int>(rest), i2, i3};
}

std::vector<MultiIndex> monomials(int k)
{
  std::vector<MultiIndex> out;
  out.reserve(mono_count(k));
  for (int i1 = k; i1 >= 0; --i1)
    for (int i2 = k - i1; i2 >= 0; --i2)
      out.push_back({i1, i2, k - i1 - i2});
  return out;
}

// ---------------------------------------------------------------------------
// HomScalarPoly

HomScalarPoly::HomScalarPoly(int degree) : degree_(degree), coeffs_(mono_count(degree))
{
  if (degree < 0)
    throw std::invalid_argument("HomScalarPoly: negative degree");
}

HomScalarPoly::HomScalarPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs))
{
  if (degree < 0)
    throw std::invalid_argument("HomScalarPoly: negative degree");
  if (coeffs_.size() != mono_count(degree))
    throw std::invalid_argument("HomScalarPoly: degree " + std::to_string(degree) + " needs " +
                                std::to_string(mono_count(degree)) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
}

HomScalarPoly HomScalarPoly::monomial(const MultiIndex& index, const Rational& coef)
{
  HomScalarPoly out(index.degree());
  out.coeff(index) = coef;
  return out;
}

bool HomScalarPoly::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

HomScalarPoly& HomScalarPoly::operator+=(const HomScalarPoly& rhs)
{
  if (rhs.degree_ != degree_)
    throw std::invalid_argument("HomScalarPoly: adding degree " + std::to_string(rhs.degree_) + " to degree " +
                                std::to_string(degree_));
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

HomScalarPoly& HomScalarPoly::operator-=(const HomScalarPoly& rhs)
{
  if (rhs.degree_ != degree_)
    throw std::invalid_argument("HomScalarPoly: subtracting degree " + std::to_string(rhs.degree_) +
                                " from degree " + std::to_string(degree_));
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

HomScalarPoly& HomScalarPoly::operator*=(const Rational& s)
{
  for (auto& c : coeffs_)
    c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// HomVecPoly

HomVecPoly::HomVecPoly(int degree)
    : degree_(degree), comps_{HomScalarPoly(degree), HomScalarPoly(degree), HomScalarPoly(degree)}
{
}

HomVecPoly::HomVecPoly(HomScalarPoly c1, HomScalarPoly c2, HomScalarPoly c3)
    : degree_(c1.degree()), comps_{std::move(c1), std::move(c2), std::move(c3)}
{
  if (comps_[1].degree() != degree_ || comps_[2].degree() != degree_)
    throw std::invalid_argument("HomVecPoly: components have different degrees");
}

HomVecPoly HomVecPoly::from_coords(int degree, std::span<const Rational> coords)
{
  const auto m = mono_count(degree);
  if (coords.size() != 3 * m)
    throw std::invalid_argument("HomVecPoly::from_coords: expected " + std::to_string(3 * m) +
                                " coordinates, got " + std::to_string(coords.size()));
  HomVecPoly out(degree);
  for (int g = 0; g < 3; ++g)
    for (std::size_t n = 0; n < m; ++n)
      out[g][n] = coords[static_cast<std::size_t>(g) * m + n];
  return out;
}

std::vector<Rational> HomVecPoly::coords() const
{
  std::vector<Rational> out;
  out.reserve(coord_count(degree_));
  for (const auto& c : comps_)
    out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
  return out;
}

bool HomVecPoly::is_zero() const
{
  return comps_[0].is_zero() && comps_[1].is_zero() && comps_[2].is_zero();
}

HomVecPoly& HomVecPoly::operator+=(const HomVecPoly& rhs)
{
  for (int g = 0; g < 3; ++g)
    (*this)[g] += rhs[g];
  return *this;
}

HomVecPoly& HomVecPoly::operator-=(const HomVecPoly& rhs)
{
  for (int g = 0; g < 3; ++g)
    (*this)[g] -= rhs[g];
  return *this;
}

HomVecPoly& HomVecPoly::operator*=(const Rational& s)
{
  for (auto& c : comps_)
    c *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// GradedVecPoly

GradedVecPoly::GradedVecPoly(int max_degree)
{
  if (max_degree < 0)
    throw std::invalid_argument("GradedVecPoly: negative max degree");
  parts_.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k)
    parts_.emplace_back(k);
}

GradedVecPoly::GradedVecPoly(std::vector<HomVecPoly> parts) : parts_(std::move(parts))
{
  if (parts_.empty())
    throw std::invalid_argument("GradedVecPoly: no parts");
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (parts_[k].degree() != static_cast<int>(k))
      throw std::invalid_argument("GradedVecPoly: part " + std::to_string(k) + " has degree " +
                                  std::to_string(parts_[k].degree()));
}

GradedVecPoly GradedVecPoly::resized(int max_degree) const
{
  GradedVecPoly out(max_degree);
  for (int k = 0; k <= std::min(max_degree, this->max_degree()); ++k)
    out.part(k) = part(k);
  return out;
}

std::size_t GradedVecPoly::coord_count(int max_degree)
{
  std::size_t n = 0;
  for (int k = 0; k <= max_degree; ++k)
    n += HomVecPoly::coord_count(k);
  return n;
}

std::vector<Rational> GradedVecPoly::coords() const
{
  std::vector<Rational> out;
  out.reserve(coord_count(max_degree()));
  for (const auto& part : parts_) {
    auto c = part.coords();
    out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  return out;
}

GradedVecPoly GradedVecPoly::from_coords(int max_degree, std::span<const Rational> coords)
{
  if (coords.size() != coord_count(max_degree))
    throw std::invalid_argument("GradedVecPoly::from_coords: wrong coordinate count");
  std::vector<HomVecPoly> parts;
  std::size_t offset = 0;
  for (int k = 0; k <= max_degree; ++k) {
    const auto n = HomVecPoly::coord_count(k);
    parts.push_back(HomVecPoly::from_coords(k, coords.subspan(offset, n)));
    offset += n;
  }
  return GradedVecPoly(std::move(parts));
}

bool GradedVecPoly::is_zero() const
{
  return std::all_of(parts_.begin(), parts_.end(), [](const HomVecPoly& v) { return v.is_zero(); });
}

GradedVecPoly& GradedVecPoly::operator+=(const GradedVecPoly& rhs)
{
  if (rhs.max_degree() != max_degree())
    throw std::invalid_argument("GradedVecPoly: max degree mismatch");
  for (std::size_t k = 0; k < parts_.size(); ++k)
    parts_[k] += rhs.parts_[k];
  return *this;
}

GradedVecPoly& GradedVecPoly::operator-=(const GradedVecPoly& rhs)
{
  if (rhs.max_degree() != max_degree())
    throw std::invalid_argument("GradedVecPoly: max degree mismatch");
  for (std::size_t k = 0; k < parts_.size(); ++k)
    parts_[k] -= rhs.parts_[k];
  return *this;
}

GradedVecPoly& GradedVecPoly::operator*=(const Rational& s)
{
  for (auto& part : parts_)
    part *= s;
  return *this;
}

// ---------------------------------------------------------------------------
// CoefficientJet

CoefficientJet::CoefficientJet(std::vector<HomScalarPoly> parts) : parts_(std::move(parts))
{
  if (parts_.empty())
    throw std::invalid_argument("CoefficientJet: no parts");
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (parts_[k].degree() != static_cast<int>(k))
      throw std::invalid_argument("CoefficientJet: part " + std::to_string(k) + " has degree " +
                                  std::to_string(parts_[k].degree()));
  if (sgn(parts_[0][0]) == 0)
    throw std::domain_error("degenerate coefficient: eps_0 must be nonzero");
}

CoefficientJet CoefficientJet::constant(const Rational& c, int max_degree)
{
  std::vector<HomScalarPoly> parts;
  for (int k = 0; k <= max_degree; ++k)
    parts.emplace_back(k);
  parts[0][0] = c;
  return CoefficientJet(std::move(parts));
}

CoefficientJet CoefficientJet::resized(int max_degree) const
{
  if (max_degree < 0)
    throw std::invalid_argument("CoefficientJet::resized: negative degree");
  std::vector<HomScalarPoly> parts;
  for (int k = 0; k <= max_degree; ++k)
    parts.push_back(k <= this->max_degree() ? part(k) : HomScalarPoly(k));
  return CoefficientJet(std::move(parts));
}

// ---------------------------------------------------------------------------
// products

HomScalarPoly hom_mul(const HomScalarPoly& a, const HomScalarPoly& b)
{
  HomScalarPoly out(a.degree() + b.degree());
  const auto ma = monomials(a.degree());
  const auto mb = monomials(b.degree());
  for (std::size_t x = 0; x < ma.size(); ++x) {
    if (sgn(a[x]) == 0)
      continue;
    for (std::size_t y = 0; y < mb.size(); ++y) {
      if (sgn(b[y]) == 0)
        continue;
      const MultiIndex sum{ma[x].i1 + mb[y].i1, ma[x].i2 + mb[y].i2, ma[x].i3 + mb[y].i3};
      out.coeff(sum) += a[x] * b[y];
    }
  }
  return out;
}

HomVecPoly hom_mul(const HomScalarPoly& a, const HomVecPoly& b)
{
  return HomVecPoly(hom_mul(a, b[0]), hom_mul(a, b[1]), hom_mul(a, b[2]));
}

HomScalarPoly dot(const HomVecPoly& a, const HomVecPoly& b)
{
  auto out = hom_mul(a[0], b[0]);
  out += hom_mul(a[1], b[1]);
  out += hom_mul(a[2], b[2]);
  return out;
}

HomVecPoly graded_parts_of_product(const CoefficientJet& eps, const GradedVecPoly& pi, int k)
{
  if (k < 0 || k > eps.max_degree() || k > pi.max_degree())
    throw std::out_of_range("graded_parts_of_product: degree " + std::to_string(k) +
                            " exceeds the available jet or polynomial parts");
  HomVecPoly out(k);
  for (int kp = 0; kp <= k; ++kp)
    out += hom_mul(eps.part(k - kp), pi.part(kp));
  return out;
}

} // namespace qtrefftz
