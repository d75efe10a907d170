#include "qtrefftz/bases.hpp"

#include "qtrefftz/diffops.hpp"
#include "qtrefftz/memo.hpp"

#include <stdexcept>
#include <string>

namespace qtrefftz {

HomVecPoly psi(const PsiLabel& label)
{
  const auto& i = label.index;
  const int k = i.degree();
  if (i.i1 < 0 || i.i2 < 0 || i.i3 < 0)
    throw std::invalid_argument("psi: negative exponent");
  HomVecPoly out(k);
  switch (label.family) {
  case 1:
    if (i.i1 != 0)
      throw std::invalid_argument("psi: family 1 requires i1 = 0");
    out[0].coeff(i) = 1;
    break;
  case 2:
    if (i.i2 != 0)
      throw std::invalid_argument("psi: family 2 requires i2 = 0");
    out[1].coeff(i) = 1;
    break;
  case 3:
    if (i.i3 != 0)
      throw std::invalid_argument("psi: family 3 requires i3 = 0");
    out[2].coeff(i) = 1;
    break;
  case 4:
    if (i.i1 <= 0)
      throw std::invalid_argument("psi: family 4 requires i1 > 0");
    out[0].coeff(i) = i.i3 + 1;
    out[2].coeff(i.shifted(0, -1).shifted(2, 1)) = -i.i1;
    break;
  case 5:
    if (i.i2 <= 0)
      throw std::invalid_argument("psi: family 5 requires i2 > 0");
    out[1].coeff(i) = i.i3 + 1;
    out[2].coeff(i.shifted(1, -1).shifted(2, 1)) = -i.i2;
    break;
  default:
    throw std::invalid_argument("psi: family must be in 1..5, got " + std::to_string(label.family));
  }
  return out;
}

std::vector<PsiLabel> psi_labels(int k)
{
  std::vector<PsiLabel> out;
  const auto monos = monomials(k);
  auto add_family = [&](int family, auto admissible) {
    for (const auto& i : monos)
      if (admissible(i))
        out.push_back({family, i});
  };
  add_family(1, [](const MultiIndex& i) { return i.i1 == 0; });
  add_family(2, [](const MultiIndex& i) { return i.i2 == 0; });
  add_family(3, [](const MultiIndex& i) { return i.i3 == 0; });
  add_family(4, [](const MultiIndex& i) { return i.i1 > 0; });
  add_family(5, [](const MultiIndex& i) { return i.i2 > 0; });
  return out;
}

std::string_view space_name(SpaceTag tag)
{
  switch (tag) {
  case SpaceTag::Solenoidal: return "sol";
  case SpaceTag::Irrotational: return "irr";
  case SpaceTag::Harmonic: return "harm";
  case SpaceTag::SolenoidalStar: return "sol-star";
  case SpaceTag::IrrotationalStar: return "irr-star";
  case SpaceTag::RangeGrad: return "range-grad";
  case SpaceTag::KerCurl: return "ker-curl";
  }
  return "?";
}

std::optional<SpaceTag> parse_space_tag(std::string_view name)
{
  for (auto tag : {SpaceTag::Solenoidal, SpaceTag::Irrotational, SpaceTag::Harmonic, SpaceTag::SolenoidalStar,
                   SpaceTag::IrrotationalStar, SpaceTag::RangeGrad, SpaceTag::KerCurl})
    if (space_name(tag) == name)
      return tag;
  return std::nullopt;
}

Matrix SpaceBasis::as_columns() const
{
  const auto rows = HomVecPoly::coord_count(degree);
  Matrix out(rows, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    out.set_column(j, vectors[j].coords());
  return out;
}

HomVecPoly SpaceBasis::combine(std::span<const Rational> coeffs) const
{
  if (coeffs.size() != vectors.size())
    throw std::invalid_argument("SpaceBasis::combine: expected " + std::to_string(vectors.size()) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  HomVecPoly out(degree);
  for (std::size_t j = 0; j < vectors.size(); ++j)
    if (sgn(coeffs[j]) != 0)
      out += vectors[j] * coeffs[j];
  return out;
}

SpaceBasis solenoidal_basis(int k)
{
  SpaceBasis out{SpaceTag::Solenoidal, k, {}};
  for (const auto& label : psi_labels(k))
    out.vectors.push_back(psi(label));
  return out;
}

SpaceBasis irrotational_basis(int k)
{
  SpaceBasis out{SpaceTag::Irrotational, k, {}};
  for (const auto& i : monomials(k + 1))
    out.vectors.push_back(grad(HomScalarPoly::monomial(i)));
  return out;
}

SpaceBasis range_grad_basis(int k)
{
  auto out = irrotational_basis(k);
  out.tag = SpaceTag::RangeGrad;
  return out;
}

SpaceBasis ker_curl_basis(int k)
{
  auto out = irrotational_basis(k + 1);
  out.tag = SpaceTag::KerCurl;
  return out;
}

SpaceBasis harmonic_basis(int k)
{
  SpaceBasis out{SpaceTag::Harmonic, k, {}};
  if (k == 0) {
    for (const auto& i : monomials(1))
      out.vectors.push_back(grad(HomScalarPoly::monomial(i)));
    return out;
  }
  for (const auto& h : nullspace(operator_matrix(OpKind::ScalarLap, k - 1)))
    out.vectors.push_back(grad(HomScalarPoly(k + 1, h)));
  return out;
}

namespace {

SpaceBasis greedy_complement(const SpaceBasis& start, const SpaceBasis& candidates, SpaceTag tag)
{
  SpanBuilder span(HomVecPoly::coord_count(start.degree));
  for (const auto& v : start.vectors)
    if (!span.try_add(v.coords()))
      throw std::logic_error("greedy_complement: starting vectors are dependent");
  SpaceBasis out{tag, start.degree, {}};
  for (const auto& v : candidates.vectors)
    if (span.try_add(v.coords()))
      out.vectors.push_back(v);
  return out;
}

} // namespace

StarComplements star_complements(int k)
{
  if (k == 0)
    return {{SpaceTag::SolenoidalStar, 0, {}}, {SpaceTag::IrrotationalStar, 0, {}}};
  const auto& harm = cached_basis(SpaceTag::Harmonic, k);
  return {greedy_complement(harm, cached_basis(SpaceTag::Solenoidal, k), SpaceTag::SolenoidalStar),
          greedy_complement(harm, cached_basis(SpaceTag::Irrotational, k), SpaceTag::IrrotationalStar)};
}

const SpaceBasis& cached_basis(SpaceTag tag, int k)
{
  static Memo<std::pair<SpaceTag, int>, SpaceBasis> memo;
  return memo.get({tag, k}, [&]() -> SpaceBasis {
    switch (tag) {
    case SpaceTag::Solenoidal: return solenoidal_basis(k);
    case SpaceTag::Irrotational: return irrotational_basis(k);
    case SpaceTag::Harmonic: return harmonic_basis(k);
    case SpaceTag::SolenoidalStar: return star_complements(k).solenoidal;
    case SpaceTag::IrrotationalStar: return star_complements(k).irrotational;
    case SpaceTag::RangeGrad: return range_grad_basis(k);
    case SpaceTag::KerCurl: return ker_curl_basis(k);
    }
    throw std::invalid_argument("cached_basis: unknown tag");
  });
}

std::size_t solenoidal_dim(int k)
{
  return static_cast<std::size_t>((k + 1) * (k + 3));
}

std::size_t irrotational_dim(int k)
{
  return static_cast<std::size_t>((k + 2) * (k + 3) / 2);
}

std::size_t harmonic_dim(int k)
{
  return static_cast<std::size_t>(2 * k + 3);
}

std::size_t solenoidal_star_dim(int k)
{
  return static_cast<std::size_t>(k * (k + 2));
}

std::size_t irrotational_star_dim(int k)
{
  return static_cast<std::size_t>(k * (k + 1) / 2);
}

} // namespace qtrefftz
