#pragma once

// Homogeneous polynomial algebra in three variables with exact rational
// coefficients. Every polynomial lives in shifted coordinates X - x0, so the
// basepoint never appears explicitly.
//
// Monomials of a fixed degree k are stored densely in graded-lex order with
// x1 most significant: x1^k, x1^(k-1) x2, x1^(k-1) x3, x1^(k-2) x2^2, ...

#include "qtrefftz/rational.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace qtrefftz {

/// Exponent triple of a monomial X^i.
struct MultiIndex
{
  int i1 = 0;
  int i2 = 0;
  int i3 = 0;

  constexpr int degree() const { return i1 + i2 + i3; }
  constexpr int operator[](int axis) const { return axis == 0 ? i1 : axis == 1 ? i2 : i3; }
  constexpr int& operator[](int axis) { return axis == 0 ? i1 : axis == 1 ? i2 : i3; }

  /// Shifts exponent `axis` by `delta`; caller guarantees the result stays >= 0.
  constexpr MultiIndex shifted(int axis, int delta) const
  {
    MultiIndex out = *this;
    out[axis] += delta;
    return out;
  }

  constexpr auto operator<=>(const MultiIndex&) const = default;
};

/// Number of monomials of degree k in three variables: (k+1)(k+2)/2.
constexpr std::size_t mono_count(int k)
{
  return k < 0 ? 0 : static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 2) / 2;
}

/// Position of `i` among the degree-|i| monomials in canonical order.
constexpr std::size_t mono_index(const MultiIndex& i)
{
  const auto rest = static_cast<std::size_t>(i.i2 + i.i3);
  return rest * (rest + 1) / 2 + static_cast<std::size_t>(i.i3);
}

/// Inverse of mono_index for degree k.
MultiIndex mono_at(int k, std::size_t index);

/// All degree-k multi-indices in canonical order.
std::vector<MultiIndex> monomials(int k);

class HomScalarPoly
{
public:
  /// Zero polynomial of degree `degree`.
  explicit HomScalarPoly(int degree = 0);
  /// Throws std::invalid_argument when coeffs.size() != mono_count(degree).
  HomScalarPoly(int degree, std::vector<Rational> coeffs);

  static HomScalarPoly monomial(const MultiIndex& index, const Rational& coef = 1);

  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  const Rational& operator[](std::size_t pos) const { return coeffs_[pos]; }
  Rational& operator[](std::size_t pos) { return coeffs_[pos]; }
  const Rational& coeff(const MultiIndex& index) const { return coeffs_[mono_index(index)]; }
  Rational& coeff(const MultiIndex& index) { return coeffs_[mono_index(index)]; }

  bool is_zero() const;

  HomScalarPoly& operator+=(const HomScalarPoly& rhs);
  HomScalarPoly& operator-=(const HomScalarPoly& rhs);
  HomScalarPoly& operator*=(const Rational& s);

  friend HomScalarPoly operator+(HomScalarPoly a, const HomScalarPoly& b) { return a += b; }
  friend HomScalarPoly operator-(HomScalarPoly a, const HomScalarPoly& b) { return a -= b; }
  friend HomScalarPoly operator*(HomScalarPoly a, const Rational& s) { return a *= s; }
  friend HomScalarPoly operator*(const Rational& s, HomScalarPoly a) { return a *= s; }
  friend HomScalarPoly operator-(HomScalarPoly a) { return a *= Rational(-1); }
  friend bool operator==(const HomScalarPoly&, const HomScalarPoly&) = default;

private:
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Vector field (P_k)^3 with all three components of the same degree.
class HomVecPoly
{
public:
  explicit HomVecPoly(int degree = 0);
  /// Throws std::invalid_argument when the component degrees differ.
  HomVecPoly(HomScalarPoly c1, HomScalarPoly c2, HomScalarPoly c3);

  /// Coordinates are component-major: [c1 coeffs, c2 coeffs, c3 coeffs].
  static HomVecPoly from_coords(int degree, std::span<const Rational> coords);
  std::vector<Rational> coords() const;
  static std::size_t coord_count(int degree) { return 3 * mono_count(degree); }

  int degree() const { return degree_; }
  const HomScalarPoly& operator[](int axis) const { return comps_[static_cast<std::size_t>(axis)]; }
  HomScalarPoly& operator[](int axis) { return comps_[static_cast<std::size_t>(axis)]; }

  bool is_zero() const;

  HomVecPoly& operator+=(const HomVecPoly& rhs);
  HomVecPoly& operator-=(const HomVecPoly& rhs);
  HomVecPoly& operator*=(const Rational& s);

  friend HomVecPoly operator+(HomVecPoly a, const HomVecPoly& b) { return a += b; }
  friend HomVecPoly operator-(HomVecPoly a, const HomVecPoly& b) { return a -= b; }
  friend HomVecPoly operator*(HomVecPoly a, const Rational& s) { return a *= s; }
  friend HomVecPoly operator*(const Rational& s, HomVecPoly a) { return a *= s; }
  friend HomVecPoly operator-(HomVecPoly a) { return a *= Rational(-1); }
  friend bool operator==(const HomVecPoly&, const HomVecPoly&) = default;

private:
  int degree_;
  std::array<HomScalarPoly, 3> comps_;
};

/// A vector polynomial of degree <= p kept as its homogeneous parts.
class GradedVecPoly
{
public:
  explicit GradedVecPoly(int max_degree = 0);
  /// parts[k] must have degree k.
  explicit GradedVecPoly(std::vector<HomVecPoly> parts);

  int max_degree() const { return static_cast<int>(parts_.size()) - 1; }
  const HomVecPoly& part(int k) const { return parts_[static_cast<std::size_t>(k)]; }
  HomVecPoly& part(int k) { return parts_[static_cast<std::size_t>(k)]; }
  std::span<const HomVecPoly> parts() const { return parts_; }

  /// Copy with parts above `max_degree` dropped or zero parts appended.
  GradedVecPoly resized(int max_degree) const;

  /// Concatenated coordinates of parts 0..p.
  std::vector<Rational> coords() const;
  static GradedVecPoly from_coords(int max_degree, std::span<const Rational> coords);
  static std::size_t coord_count(int max_degree);

  bool is_zero() const;

  GradedVecPoly& operator+=(const GradedVecPoly& rhs);
  GradedVecPoly& operator-=(const GradedVecPoly& rhs);
  GradedVecPoly& operator*=(const Rational& s);

  friend GradedVecPoly operator+(GradedVecPoly a, const GradedVecPoly& b) { return a += b; }
  friend GradedVecPoly operator-(GradedVecPoly a, const GradedVecPoly& b) { return a -= b; }
  friend GradedVecPoly operator*(const Rational& s, GradedVecPoly a) { return a *= s; }
  friend bool operator==(const GradedVecPoly&, const GradedVecPoly&) = default;

private:
  std::vector<HomVecPoly> parts_;
};

/// Taylor data of the coefficient at the basepoint: homogeneous parts
/// eps_0..eps_p with eps_0 != 0.
class CoefficientJet
{
public:
  /// Throws std::invalid_argument on a grading mismatch and
  /// std::domain_error("degenerate coefficient") when eps_0 == 0.
  explicit CoefficientJet(std::vector<HomScalarPoly> parts);

  /// eps == c on a jet of the given length.
  static CoefficientJet constant(const Rational& c, int max_degree);
  /// Truncated, or zero-padded as for a polynomial coefficient.
  CoefficientJet resized(int max_degree) const;

  int max_degree() const { return static_cast<int>(parts_.size()) - 1; }
  const HomScalarPoly& part(int k) const { return parts_.at(static_cast<std::size_t>(k)); }
  std::span<const HomScalarPoly> parts() const { return parts_; }
  const Rational& constant_term() const { return parts_[0][0]; }

private:
  std::vector<HomScalarPoly> parts_;
};

HomScalarPoly hom_mul(const HomScalarPoly& a, const HomScalarPoly& b);
HomVecPoly hom_mul(const HomScalarPoly& a, const HomVecPoly& b);
/// a . b for fields of possibly different degrees.
HomScalarPoly dot(const HomVecPoly& a, const HomVecPoly& b);

/// Degree-k part of eps * Pi, i.e. sum_{k'=0..k} eps_{k-k'} Pi_{k'}.
/// Requires k <= min(eps.max_degree(), Pi.max_degree()).
HomVecPoly graded_parts_of_product(const CoefficientJet& eps, const GradedVecPoly& pi, int k);

} // namespace qtrefftz
