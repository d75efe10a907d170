#pragma once

// Graded differential operators between homogeneous blocks:
//
//   grad:   P_{k+1}     -> (P_k)^3      div:   (P_{k+1})^3 -> P_k
//   curl:   (P_{k+1})^3 -> (P_k)^3      lap:   P_{k+2}     -> P_k
//   veclap: (P_{k+2})^3 -> (P_k)^3
//
// An order-g operator applied to input of degree < g returns the zero
// element of degree 0 (the operator maps the low block to zero).

#include "qtrefftz/linalg.hpp"
#include "qtrefftz/polyalg.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qtrefftz {

enum class OpKind { Grad, Div, Curl, ScalarLap, VecLap };

std::string_view op_name(OpKind kind);
/// Accepts the CLI spellings grad|div|curl|lap|veclap.
std::optional<OpKind> parse_op_kind(std::string_view name);
/// 1 for grad/div/curl, 2 for the Laplacians.
int op_order(OpKind kind);

/// Partial derivative along axis 0, 1 or 2.
HomScalarPoly derivative(const HomScalarPoly& f, int axis);

HomVecPoly grad(const HomScalarPoly& f);
HomScalarPoly div(const HomVecPoly& v);
HomVecPoly curl(const HomVecPoly& v);
HomScalarPoly laplacian(const HomScalarPoly& f);
HomVecPoly vector_laplacian(const HomVecPoly& v);

/// Checks curl curl V + veclap V - grad div V == 0.
bool curl_curl_identity_check(const HomVecPoly& v);

/// Canonical-basis matrix of the degree-k block of an operator. Column j is
/// the image of the j-th canonical basis element of the domain block;
/// vector blocks use component-major coordinates.
struct OperatorMatrix
{
  OpKind kind;
  int domain_degree;
  int codomain_degree;
  Matrix entries;

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

OperatorMatrix assemble_matrix(OpKind kind, int k);

/// Memoized assemble_matrix. When the environment variable QT_CACHE_DIR is
/// set, matrices are also read from / written to
/// $QT_CACHE_DIR/<op>_k<k>.json; a file with the wrong shape is ignored and
/// rewritten.
const OperatorMatrix& operator_matrix(OpKind kind, int k);

std::size_t rank(const OperatorMatrix& m);
std::vector<RationalVector> nullspace(const OperatorMatrix& m);

} // namespace qtrefftz
