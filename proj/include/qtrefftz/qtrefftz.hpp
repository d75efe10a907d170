#pragma once

// Quasi-Trefftz polynomial fields for curl curl E = eps E.
//
// A field Pi of degree <= p belongs to QT_p when the Taylor components of
//   curl curl Pi - eps Pi   vanish up to degree p-2, and
//   div(eps Pi)             vanishes up to degree p-1.
// construct() builds such fields degree by degree from free parameters;
// verify() checks the two conditions directly and is the final arbiter.

#include "qtrefftz/bases.hpp"
#include "qtrefftz/linalg.hpp"
#include "qtrefftz/polyalg.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qtrefftz {

/// 2p^2 + 6p + 3.
std::size_t dimension_formula(int p);

/// Documentation row comparing QT_p with a vector plane-wave space of the
/// same order.
struct PwComparisonRow
{
  int p;
  std::size_t plane_wave_dim; // 2(p+3)(p+1)
  std::size_t qt_dim;         // 2p^2+6p+3
};

PwComparisonRow pw_comparison_row(int p);

/// Every free choice made while constructing one QT_p field.
struct FreeParameters
{
  int p = 3;
  std::array<Rational, 3> pi0;                 // constant term
  std::array<Rational, 3> f1;                  // S*_1 coordinates
  std::array<Rational, 5> h1;                  // H_1 coordinates
  std::vector<RationalVector> kernel_coords;   // [k]: 2k+5 coordinates in ker(veclap_k | S*_{k+2})
  std::vector<RationalVector> harmonic_coords; // [k]: 2k+7 coordinates in H_{k+2}

  /// All-zero parameters for degree p (p >= 3).
  static FreeParameters zero(int p);
  /// Slot `slot` (in flatten() order) set to 1, everything else 0.
  static FreeParameters unit(int p, std::size_t slot);
  static FreeParameters from_flat(int p, std::span<const Rational> values);
  /// Total count: 2p^2 + 6p + 3.
  static std::size_t count(int p);

  /// pi0, f1, h1, then for k = 0..p-2: kernel_coords[k], harmonic_coords[k].
  RationalVector flatten() const;

  friend bool operator==(const FreeParameters&, const FreeParameters&) = default;
};

/// "pi0", "f1", "h1", "ker<k>" or "harm<k>" plus the position inside that group.
struct SlotName
{
  std::string group;
  std::size_t index;
};

SlotName slot_name(int p, std::size_t slot);
/// "qt_<p>_<group>_<index>", e.g. "qt_3_ker1_4".
std::string element_name(int p, std::size_t slot);

/// The veclap F = -tmp_L convention follows from curl curl F = -veclap F on
/// divergence-free F. The opposite sign is kept only so the self-test can
/// show that it fails verification.
enum class LaplacianSign { IdentityConsistent, Flipped };

/// Restricted: G in I*, F in S* plus explicit kernel coordinates.
/// FullSpace: G from the closed-form divergence preimage and F from a solve
/// in all of S_{k+2}; kernel coordinates are ignored. Both produce QT_p
/// fields, differing by free-parameter directions.
enum class ConstructionRoute { Restricted, FullSpace };

struct ConstructOptions
{
  LaplacianSign sign = LaplacianSign::IdentityConsistent;
  ConstructionRoute route = ConstructionRoute::Restricted;
  /// Run verify() and throw std::runtime_error on failure.
  bool verify = false;
};

/// Throws std::invalid_argument("p must exceed 2") for p < 3, and
/// std::invalid_argument when params.p != p or the jet is shorter than p.
/// A jet with eps_0 == 0 cannot exist (CoefficientJet rejects it).
GradedVecPoly construct(const FreeParameters& params, const CoefficientJet& eps, int p,
                        const ConstructOptions& options = {});

struct Residuals
{
  bool curlcurl_ok = false;
  bool divergence_ok = false;

  bool ok() const { return curlcurl_ok && divergence_ok; }
};

/// Checks both defining conditions. Pi is zero-padded or truncated to
/// degree p; eps must reach degree p. Never throws on nonzero residuals.
Residuals verify(const GradedVecPoly& pi, const CoefficientJet& eps, int p);

struct QTBasisElement
{
  std::string name;
  GradedVecPoly poly;
  FreeParameters params;
  bool certified = false;
};

/// One element per free parameter, in flatten() order, each certified by
/// verify(). `jobs` <= 0 uses the OpenMP default thread count; output is
/// identical for every thread count.
std::vector<QTBasisElement> enumerate_basis(const CoefficientJet& eps, int p, int jobs = 0);

/// Serial reference for enumerate_basis.
std::vector<QTBasisElement> enumerate_basis_serial(const CoefficientJet& eps, int p);

/// Rank of the (elements x coordinates) matrix.
std::size_t coefficient_rank(std::span<const QTBasisElement> elements);

/// Result of building one field with each Laplacian sign and verifying it.
struct SignSelfTest
{
  Residuals identity_consistent;
  Residuals flipped;

  /// Exactly one convention passes.
  bool ok() const { return identity_consistent.ok() != flipped.ok(); }
};

SignSelfTest sign_self_test(const CoefficientJet& eps, int p);

} // namespace qtrefftz
