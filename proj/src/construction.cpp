#include "qtrefftz/qtrefftz.hpp"

#include "qtrefftz/diffops.hpp"
#include "qtrefftz/solvers.hpp"

#include <omp.h>

#include <exception>
#include <stdexcept>
#include <string>

namespace qtrefftz {

std::size_t dimension_formula(int p)
{
  if (p < 0)
    throw std::invalid_argument("dimension_formula: p must be non-negative");
  const auto q = static_cast<std::size_t>(p);
  return 2 * q * q + 6 * q + 3;
}

PwComparisonRow pw_comparison_row(int p)
{
  if (p < 1)
    throw std::invalid_argument("pw_comparison_row: p must be at least 1");
  const auto q = static_cast<std::size_t>(p);
  return {p, 2 * (q + 3) * (q + 1), dimension_formula(p)};
}

namespace {

void require_degree(int p)
{
  if (p < 3)
    throw std::invalid_argument("p must exceed 2");
}

std::size_t kernel_size(int k)
{
  return static_cast<std::size_t>(2 * k + 5);
}

std::size_t harmonic_size(int k)
{
  return static_cast<std::size_t>(2 * k + 7);
}

} // namespace

FreeParameters FreeParameters::zero(int p)
{
  require_degree(p);
  FreeParameters out;
  out.p = p;
  for (int k = 0; k <= p - 2; ++k) {
    out.kernel_coords.emplace_back(kernel_size(k));
    out.harmonic_coords.emplace_back(harmonic_size(k));
  }
  return out;
}

std::size_t FreeParameters::count(int p)
{
  require_degree(p);
  std::size_t n = 3 + 3 + 5;
  for (int k = 0; k <= p - 2; ++k)
    n += kernel_size(k) + harmonic_size(k);
  return n;
}

RationalVector FreeParameters::flatten() const
{
  RationalVector out(pi0.begin(), pi0.end());
  out.insert(out.end(), f1.begin(), f1.end());
  out.insert(out.end(), h1.begin(), h1.end());
  for (std::size_t k = 0; k < kernel_coords.size(); ++k) {
    out.insert(out.end(), kernel_coords[k].begin(), kernel_coords[k].end());
    out.insert(out.end(), harmonic_coords[k].begin(), harmonic_coords[k].end());
  }
  return out;
}

FreeParameters FreeParameters::from_flat(int p, std::span<const Rational> values)
{
  if (values.size() != count(p))
    throw std::invalid_argument("FreeParameters::from_flat: expected " + std::to_string(count(p)) +
                                " values, got " + std::to_string(values.size()));
  auto out = zero(p);
  auto it = values.begin();
  auto take = [&it](auto& dst) {
    for (auto& x : dst)
      x = *it++;
  };
  take(out.pi0);
  take(out.f1);
  take(out.h1);
  for (std::size_t k = 0; k < out.kernel_coords.size(); ++k) {
    take(out.kernel_coords[k]);
    take(out.harmonic_coords[k]);
  }
  return out;
}

FreeParameters FreeParameters::unit(int p, std::size_t slot)
{
  RationalVector values(count(p));
  if (slot >= values.size())
    throw std::out_of_range("FreeParameters::unit: slot " + std::to_string(slot) + " out of range");
  values[slot] = 1;
  return from_flat(p, values);
}

SlotName slot_name(int p, std::size_t slot)
{
  if (slot >= FreeParameters::count(p))
    throw std::out_of_range("slot_name: slot " + std::to_string(slot) + " out of range");
  if (slot < 3)
    return {"pi0", slot};
  if (slot < 6)
    return {"f1", slot - 3};
  if (slot < 11)
    return {"h1", slot - 6};
  slot -= 11;
  for (int k = 0;; ++k) {
    if (slot < kernel_size(k))
      return {"ker" + std::to_string(k), slot};
    slot -= kernel_size(k);
    if (slot < harmonic_size(k))
      return {"harm" + std::to_string(k), slot};
    slot -= harmonic_size(k);
  }
}

std::string element_name(int p, std::size_t slot)
{
  const auto s = slot_name(p, slot);
  return "qt_" + std::to_string(p) + "_" + s.group + "_" + std::to_string(s.index);
}

namespace {

// Degree-(k+1) component of div(eps Pi) without the eps_0 div(Pi_{k+2})
// term, scaled by -1/eps_0. The next irrotational part G_{k+2} must have
// exactly this divergence. Pi_0..Pi_{k+1} must already be filled in.
HomScalarPoly divergence_target(const CoefficientJet& eps, const GradedVecPoly& pi, int k)
{
  HomScalarPoly out(k + 1);
  for (int kp = 0; kp <= k + 1; ++kp)
    out += dot(grad(eps.part(k + 2 - kp)), pi.part(kp));
  for (int kp = 1; kp <= k + 1; ++kp)
    out += hom_mul(eps.part(k + 2 - kp), div(pi.part(kp)));
  return out * Rational(-1 / eps.constant_term());
}

} // namespace

GradedVecPoly construct(const FreeParameters& params, const CoefficientJet& eps, int p,
                        const ConstructOptions& options)
{
  require_degree(p);
  if (params.p != p)
    throw std::invalid_argument("construct: parameters were sized for p = " + std::to_string(params.p) +
                                ", not " + std::to_string(p));
  if (eps.max_degree() < p)
    throw std::invalid_argument("construct: coefficient jet reaches degree " + std::to_string(eps.max_degree()) +
                                ", need " + std::to_string(p));

  GradedVecPoly pi(p);
  pi.part(0) = HomVecPoly::from_coords(0, params.pi0);

  // Degree 0 of div(eps Pi) = 0 fixes div G_1; F_1 and H_1 are free.
  const auto g1_target = dot(grad(eps.part(1)), pi.part(0)) * Rational(-1 / eps.constant_term());
  pi.part(1) = solve_div_irrotational(g1_target) + cached_basis(SpaceTag::SolenoidalStar, 1).combine(params.f1) +
               cached_basis(SpaceTag::Harmonic, 1).combine(params.h1);

  for (int k = 0; k <= p - 2; ++k) {
    const auto tmp_d = divergence_target(eps, pi, k);
    const auto tmp_l = graded_parts_of_product(eps, pi, k);
    const auto lap_target = options.sign == LaplacianSign::IdentityConsistent ? -tmp_l : tmp_l;

    HomVecPoly g(k + 2);
    HomVecPoly f(k + 2);
    if (options.route == ConstructionRoute::Restricted) {
      g = solve_div_irrotational(tmp_d);
      f = solve_veclap_solenoidal(lap_target) +
          veclap_restricted_kernel(k).combine(params.kernel_coords[static_cast<std::size_t>(k)]);
    } else {
      // The closed-form G is not curl free, so its curl curl has to be
      // absorbed by F: veclap F = curl curl G - tmp_L.
      g = solve_div_any(tmp_d);
      f = solve_veclap_full(lap_target + curl(curl(g)));
    }
    const auto h = cached_basis(SpaceTag::Harmonic, k + 2).combine(params.harmonic_coords[static_cast<std::size_t>(k)]);
    pi.part(k + 2) = f + g + h;
  }

  if (options.verify && !verify(pi, eps, p).ok())
    throw std::runtime_error("construct: result failed verification");
  return pi;
}

Residuals verify(const GradedVecPoly& pi_in, const CoefficientJet& eps, int p)
{
  if (p < 0)
    throw std::invalid_argument("verify: p must be non-negative");
  if (eps.max_degree() < p)
    throw std::invalid_argument("verify: coefficient jet reaches degree " + std::to_string(eps.max_degree()) +
                                ", need " + std::to_string(p));
  const auto pi = pi_in.resized(p);
  Residuals out{true, true};
  for (int k = 0; k <= p - 2 && out.curlcurl_ok; ++k)
    out.curlcurl_ok = (curl(curl(pi.part(k + 2))) - graded_parts_of_product(eps, pi, k)).is_zero();
  for (int m = 0; m <= p - 1 && out.divergence_ok; ++m)
    out.divergence_ok = div(graded_parts_of_product(eps, pi, m + 1)).is_zero();
  return out;
}

namespace {

QTBasisElement make_element(const CoefficientJet& eps, int p, std::size_t slot)
{
  auto params = FreeParameters::unit(p, slot);
  auto poly = construct(params, eps, p);
  const bool certified = verify(poly, eps, p).ok();
  return {element_name(p, slot), std::move(poly), std::move(params), certified};
}

void check_enumeration_input(const CoefficientJet& eps, int p)
{
  require_degree(p);
  if (eps.max_degree() < p)
    throw std::invalid_argument("enumerate_basis: coefficient jet reaches degree " +
                                std::to_string(eps.max_degree()) + ", need " + std::to_string(p));
}

} // namespace

std::vector<QTBasisElement> enumerate_basis_serial(const CoefficientJet& eps, int p)
{
  check_enumeration_input(eps, p);
  std::vector<QTBasisElement> out;
  const auto n = FreeParameters::count(p);
  for (std::size_t slot = 0; slot < n; ++slot)
    out.push_back(make_element(eps, p, slot));
  return out;
}

std::vector<QTBasisElement> enumerate_basis(const CoefficientJet& eps, int p, int jobs)
{
  check_enumeration_input(eps, p);
  const auto n = static_cast<long>(FreeParameters::count(p));
  std::vector<QTBasisElement> out(static_cast<std::size_t>(n));
  std::exception_ptr failure;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long slot = 0; slot < n; ++slot) {
    try {
      out[static_cast<std::size_t>(slot)] = make_element(eps, p, static_cast<std::size_t>(slot));
    } catch (...) {
#pragma omp critical(qtrefftz_enumerate_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

std::size_t coefficient_rank(std::span<const QTBasisElement> elements)
{
  if (elements.empty())
    return 0;
  const int p = elements.front().poly.max_degree();
  Matrix m(elements.size(), GradedVecPoly::coord_count(p));
  for (std::size_t r = 0; r < elements.size(); ++r) {
    if (elements[r].poly.max_degree() != p)
      throw std::invalid_argument("coefficient_rank: elements have different degrees");
    const auto c = elements[r].poly.coords();
    std::copy(c.begin(), c.end(), m.row(r).begin());
  }
  return rank(m);
}

SignSelfTest sign_self_test(const CoefficientJet& eps, int p)
{
  const auto params = FreeParameters::from_flat(p, RationalVector(FreeParameters::count(p), Rational(1)));
  SignSelfTest out;
  out.identity_consistent = verify(construct(params, eps, p, {LaplacianSign::IdentityConsistent}), eps, p);
  out.flipped = verify(construct(params, eps, p, {LaplacianSign::Flipped}), eps, p);
  return out;
}

} // namespace qtrefftz
