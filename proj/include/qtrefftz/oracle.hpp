#pragma once

// Brute-force check of the QT_p dimension that shares no code with the
// construction: a sparse map-based polynomial type, direct differentiation
// and products, and one elimination on the full Taylor-constraint system.

#include "qtrefftz/linalg.hpp"
#include "qtrefftz/polyalg.hpp"

#include <cstddef>

namespace qtrefftz {

/// Which Taylor constraints the oracle imposes.
struct OracleConstraints
{
  /// curl curl Pi - eps Pi up to degree p-2.
  bool curlcurl = true;
  /// div(eps Pi) up to degree `divergence_degree` (p-1 for QT_p).
  bool divergence = true;
  /// -1 means p-1.
  int divergence_degree = -1;
};

/// Constraint matrix acting on GradedVecPoly::coords() of a degree-p field.
Matrix oracle_matrix(const CoefficientJet& eps, int p, const OracleConstraints& which = {});

/// Nullity of oracle_matrix(eps, p). Throws std::invalid_argument for p < 3.
std::size_t oracle_dimension(const CoefficientJet& eps, int p);

/// Whether a field satisfies the constraints, checked through the oracle matrix.
bool oracle_accepts(const GradedVecPoly& pi, const CoefficientJet& eps, const OracleConstraints& which = {});

} // namespace qtrefftz
