#include "qtrefftz/json_io.hpp"

#include <fstream>

namespace qtrefftz {

namespace {

std::string field(const std::string& path, const std::string& name)
{
  return path.empty() ? name : path + "." + name;
}

std::string item(const std::string& path, std::size_t n)
{
  return path + "[" + std::to_string(n) + "]";
}

const json& require(const json& j, const std::string& path, const char* name)
{
  if (!j.is_object())
    throw JsonFormatError(path, "expected an object");
  const auto it = j.find(name);
  if (it == j.end())
    throw JsonFormatError(field(path, name), "missing field");
  return *it;
}

int require_int(const json& j, const std::string& path, const char* name, int min_value)
{
  const auto& v = require(j, path, name);
  if (!v.is_number_integer())
    throw JsonFormatError(field(path, name), "expected an integer");
  const auto n = v.get<long long>();
  if (n < min_value || n > 1000000)
    throw JsonFormatError(field(path, name), "value " + std::to_string(n) + " out of range");
  return static_cast<int>(n);
}

const json& require_array(const json& j, const std::string& path, std::size_t expected_size = 0)
{
  if (!j.is_array())
    throw JsonFormatError(path, "expected an array");
  if (expected_size != 0 && j.size() != expected_size)
    throw JsonFormatError(path, "expected " + std::to_string(expected_size) + " entries, got " +
                                    std::to_string(j.size()));
  return j;
}

} // namespace

json to_json(const Rational& q)
{
  return to_string(q);
}

json to_json(const MultiIndex& i)
{
  return json::array({i.i1, i.i2, i.i3});
}

json to_json(const HomScalarPoly& f)
{
  json terms = json::array();
  const auto monos = monomials(f.degree());
  for (std::size_t n = 0; n < f.size(); ++n)
    if (sgn(f[n]) != 0)
      terms.push_back({{"idx", to_json(monos[n])}, {"coef", to_json(f[n])}});
  return {{"degree", f.degree()}, {"terms", std::move(terms)}};
}

json to_json(const HomVecPoly& v)
{
  return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])});
}

json to_json(const GradedVecPoly& v)
{
  json parts = json::array();
  for (const auto& part : v.parts())
    parts.push_back(to_json(part));
  return {{"max_degree", v.max_degree()}, {"parts", std::move(parts)}};
}

json to_json(const OperatorMatrix& m)
{
  json entries = json::array();
  for (const auto& q : m.entries.data())
    entries.push_back(to_json(q));
  return {{"op", std::string(op_name(m.kind))},
          {"domain_degree", m.domain_degree},
          {"codomain_degree", m.codomain_degree},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", std::move(entries)}};
}

json to_json(const SpaceBasis& b)
{
  json vectors = json::array();
  for (const auto& v : b.vectors)
    vectors.push_back(to_json(v));
  return {{"space", std::string(space_name(b.tag))}, {"degree", b.degree}, {"vectors", std::move(vectors)}};
}

json to_json(const HelmholtzTriple& t)
{
  return {{"degree", t.degree},
          {"solenoidal", to_json(t.solenoidal)},
          {"irrotational", to_json(t.irrotational)},
          {"harmonic", to_json(t.harmonic)}};
}

json to_json(const CoefficientJet& eps)
{
  json parts = json::array();
  for (const auto& part : eps.parts())
    parts.push_back(to_json(part));
  return {{"max_degree", eps.max_degree()}, {"basepoint", json::array({"0/1", "0/1", "0/1"})}, {"parts", parts}};
}

Rational rational_from_json(const json& j, const std::string& path)
{
  if (!j.is_string())
    throw JsonFormatError(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(path, e.what());
  }
}

MultiIndex multi_index_from_json(const json& j, const std::string& path)
{
  require_array(j, path, 3);
  MultiIndex out;
  for (int a = 0; a < 3; ++a) {
    const auto& e = j[static_cast<std::size_t>(a)];
    if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1000000)
      throw JsonFormatError(item(path, static_cast<std::size_t>(a)), "expected a non-negative integer");
    out[a] = e.get<int>();
  }
  return out;
}

HomScalarPoly hom_scalar_from_json(const json& j, const std::string& path)
{
  const int k = require_int(j, path, "degree", 0);
  const auto terms_path = field(path, "terms");
  const auto& terms = require_array(require(j, path, "terms"), terms_path);
  HomScalarPoly out(k);
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const auto term_path = item(terms_path, n);
    const auto idx = multi_index_from_json(require(terms[n], term_path, "idx"), field(term_path, "idx"));
    if (idx.degree() != k)
      throw JsonFormatError(field(term_path, "idx"),
                            "monomial degree " + std::to_string(idx.degree()) + " does not match degree " +
                                std::to_string(k));
    out.coeff(idx) += rational_from_json(require(terms[n], term_path, "coef"), field(term_path, "coef"));
  }
  return out;
}

HomVecPoly hom_vec_from_json(const json& j, const std::string& path)
{
  require_array(j, path, 3);
  auto c1 = hom_scalar_from_json(j[0], item(path, 0));
  auto c2 = hom_scalar_from_json(j[1], item(path, 1));
  auto c3 = hom_scalar_from_json(j[2], item(path, 2));
  if (c1.degree() != c2.degree() || c1.degree() != c3.degree())
    throw JsonFormatError(path, "component degrees differ");
  return {std::move(c1), std::move(c2), std::move(c3)};
}

GradedVecPoly graded_vec_from_json(const json& j, const std::string& path)
{
  const int p = require_int(j, path, "max_degree", 0);
  const auto parts_path = field(path, "parts");
  const auto& parts = require_array(require(j, path, "parts"), parts_path, static_cast<std::size_t>(p) + 1);
  std::vector<HomVecPoly> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto v = hom_vec_from_json(parts[k], item(parts_path, k));
    if (v.degree() != static_cast<int>(k))
      throw JsonFormatError(item(parts_path, k), "expected degree " + std::to_string(k));
    out.push_back(std::move(v));
  }
  return GradedVecPoly(std::move(out));
}

OperatorMatrix operator_matrix_from_json(const json& j, const std::string& path)
{
  const auto& op = require(j, path, "op");
  if (!op.is_string())
    throw JsonFormatError(field(path, "op"), "expected a string");
  const auto kind = parse_op_kind(op.get<std::string>());
  if (!kind)
    throw JsonFormatError(field(path, "op"), "unknown operator '" + op.get<std::string>() + "'");
  const int dom = require_int(j, path, "domain_degree", 0);
  const int cod = require_int(j, path, "codomain_degree", 0);
  if (dom != cod + op_order(*kind))
    throw JsonFormatError(field(path, "domain_degree"), "inconsistent with codomain_degree and operator order");
  const auto rows = static_cast<std::size_t>(require_int(j, path, "rows", 0));
  const auto cols = static_cast<std::size_t>(require_int(j, path, "cols", 0));
  const auto entries_path = field(path, "entries");
  const auto& entries = require_array(require(j, path, "entries"), entries_path);
  if (entries.size() != rows * cols)
    throw JsonFormatError(entries_path, "expected rows*cols = " + std::to_string(rows * cols) + " entries");
  Matrix m(rows, cols);
  for (std::size_t n = 0; n < entries.size(); ++n)
    m(n / cols, n % cols) = rational_from_json(entries[n], item(entries_path, n));
  return {*kind, dom, cod, std::move(m)};
}

SpaceBasis space_basis_from_json(const json& j, const std::string& path)
{
  const auto& space = require(j, path, "space");
  if (!space.is_string())
    throw JsonFormatError(field(path, "space"), "expected a string");
  const auto tag = parse_space_tag(space.get<std::string>());
  if (!tag)
    throw JsonFormatError(field(path, "space"), "unknown space '" + space.get<std::string>() + "'");
  const int k = require_int(j, path, "degree", 0);
  const auto vectors_path = field(path, "vectors");
  const auto& vectors = require_array(require(j, path, "vectors"), vectors_path);
  SpaceBasis out{*tag, k, {}};
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    auto v = hom_vec_from_json(vectors[n], item(vectors_path, n));
    if (v.degree() != k)
      throw JsonFormatError(item(vectors_path, n), "expected degree " + std::to_string(k));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

HelmholtzTriple helmholtz_triple_from_json(const json& j, const std::string& path)
{
  const int k = require_int(j, path, "degree", 0);
  auto part = [&](const char* name) {
    auto v = hom_vec_from_json(require(j, path, name), field(path, name));
    if (v.degree() != k)
      throw JsonFormatError(field(path, name), "expected degree " + std::to_string(k));
    return v;
  };
  return {k, part("solenoidal"), part("irrotational"), part("harmonic")};
}

CoefficientJet coefficient_jet_from_json(const json& j, const std::string& path)
{
  const int p = require_int(j, path, "max_degree", 0);
  if (j.contains("basepoint")) {
    const auto bp_path = field(path, "basepoint");
    const auto& bp = require_array(j["basepoint"], bp_path, 3);
    for (std::size_t a = 0; a < 3; ++a)
      rational_from_json(bp[a], item(bp_path, a));
  }
  const auto parts_path = field(path, "parts");
  const auto& parts = require_array(require(j, path, "parts"), parts_path, static_cast<std::size_t>(p) + 1);
  std::vector<HomScalarPoly> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto f = hom_scalar_from_json(parts[k], item(parts_path, k));
    if (f.degree() != static_cast<int>(k))
      throw JsonFormatError(item(parts_path, k), "expected degree " + std::to_string(k));
    out.push_back(std::move(f));
  }
  return CoefficientJet(std::move(out));
}

json read_json_file(const std::string& filename)
{
  std::ifstream in(filename);
  if (!in)
    throw JsonFormatError(filename, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonFormatError(filename, std::string("malformed JSON: ") + e.what());
  }
}

} // namespace qtrefftz
