#pragma once

// JSON encoding shared by the library and the CLI.
//
//   Rational       "num/den"
//   MultiIndex     [i1, i2, i3]
//   HomScalarPoly  {"degree": k, "terms": [{"idx": [...], "coef": "..."}, ...]}  (zero terms omitted)
//   HomVecPoly     [HomScalarPoly, HomScalarPoly, HomScalarPoly]
//   GradedVecPoly  {"max_degree": p, "parts": [HomVecPoly, ...]}
//
// Parsers throw JsonFormatError with the path of the offending field, e.g.
// "parts[2][1].terms[0].coef: expected a rational string".

#include "qtrefftz/bases.hpp"
#include "qtrefftz/diffops.hpp"
#include "qtrefftz/helmholtz.hpp"
#include "qtrefftz/polyalg.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qtrefftz {

class JsonFormatError : public std::runtime_error
{
public:
  JsonFormatError(const std::string& path, const std::string& what)
      : std::runtime_error((path.empty() ? std::string("<root>") : path) + ": " + what)
  {
  }
};

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const MultiIndex& i);
json to_json(const HomScalarPoly& f);
json to_json(const HomVecPoly& v);
json to_json(const GradedVecPoly& v);
json to_json(const OperatorMatrix& m);
json to_json(const SpaceBasis& b);
json to_json(const HelmholtzTriple& t);
/// Coefficient file with the basepoint recorded as the origin.
json to_json(const CoefficientJet& eps);

// `path` prefixes error messages; callers parsing a sub-document pass its location.
Rational rational_from_json(const json& j, const std::string& path = "");
MultiIndex multi_index_from_json(const json& j, const std::string& path = "");
HomScalarPoly hom_scalar_from_json(const json& j, const std::string& path = "");
HomVecPoly hom_vec_from_json(const json& j, const std::string& path = "");
GradedVecPoly graded_vec_from_json(const json& j, const std::string& path = "");
OperatorMatrix operator_matrix_from_json(const json& j, const std::string& path = "");
SpaceBasis space_basis_from_json(const json& j, const std::string& path = "");
HelmholtzTriple helmholtz_triple_from_json(const json& j, const std::string& path = "");
/// Also enforces parts[k].degree == k and eps_0 != 0 (the latter as
/// std::domain_error from CoefficientJet).
CoefficientJet coefficient_jet_from_json(const json& j, const std::string& path = "");

/// Reads and parses a file; syntax errors become JsonFormatError naming the file.
json read_json_file(const std::string& filename);

} // namespace qtrefftz
