#include "qtrefftz/diffops.hpp"

#include "qtrefftz/json_io.hpp"
#include "qtrefftz/memo.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace qtrefftz {

std::string_view op_name(OpKind kind)
{
  switch (kind) {
  case OpKind::Grad: return "grad";
  case OpKind::Div: return "div";
  case OpKind::Curl: return "curl";
  case OpKind::ScalarLap: return "lap";
  case OpKind::VecLap: return "veclap";
  }
  return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view name)
{
  for (auto kind : {OpKind::Grad, OpKind::Div, OpKind::Curl, OpKind::ScalarLap, OpKind::VecLap})
    if (op_name(kind) == name)
      return kind;
  return std::nullopt;
}

int op_order(OpKind kind)
{
  return kind == OpKind::ScalarLap || kind == OpKind::VecLap ? 2 : 1;
}

HomScalarPoly derivative(const HomScalarPoly& f, int axis)
{
  if (f.degree() == 0)
    return HomScalarPoly(0);
  HomScalarPoly out(f.degree() - 1);
  const auto monos = monomials(f.degree());
  for (std::size_t n = 0; n < monos.size(); ++n) {
    const auto e = monos[n][axis];
    if (e == 0 || sgn(f[n]) == 0)
      continue;
    out.coeff(monos[n].shifted(axis, -1)) += f[n] * e;
  }
  return out;
}

HomVecPoly grad(const HomScalarPoly& f)
{
  return HomVecPoly(derivative(f, 0), derivative(f, 1), derivative(f, 2));
}

HomScalarPoly div(const HomVecPoly& v)
{
  auto out = derivative(v[0], 0);
  out += derivative(v[1], 1);
  out += derivative(v[2], 2);
  return out;
}

HomVecPoly curl(const HomVecPoly& v)
{
  return HomVecPoly(derivative(v[2], 1) - derivative(v[1], 2),
                    derivative(v[0], 2) - derivative(v[2], 0),
                    derivative(v[1], 0) - derivative(v[0], 1));
}

HomScalarPoly laplacian(const HomScalarPoly& f)
{
  if (f.degree() < 2)
    return HomScalarPoly(0);
  auto out = derivative(derivative(f, 0), 0);
  out += derivative(derivative(f, 1), 1);
  out += derivative(derivative(f, 2), 2);
  return out;
}

HomVecPoly vector_laplacian(const HomVecPoly& v)
{
  return HomVecPoly(laplacian(v[0]), laplacian(v[1]), laplacian(v[2]));
}

bool curl_curl_identity_check(const HomVecPoly& v)
{
  auto residual = curl(curl(v));
  residual += vector_laplacian(v);
  residual -= grad(div(v));
  return residual.is_zero();
}

// ---------------------------------------------------------------------------
// matrices

namespace {

bool scalar_domain(OpKind kind)
{
  return kind == OpKind::Grad || kind == OpKind::ScalarLap;
}

bool scalar_codomain(OpKind kind)
{
  return kind == OpKind::Div || kind == OpKind::ScalarLap;
}

RationalVector apply_to_unit(OpKind kind, int domain_degree, std::size_t unit)
{
  const auto m = mono_count(domain_degree);
  if (scalar_domain(kind)) {
    const auto f = HomScalarPoly::monomial(mono_at(domain_degree, unit));
    if (kind == OpKind::Grad)
      return grad(f).coords();
    auto out = laplacian(f);
    return {out.coeffs().begin(), out.coeffs().end()};
  }
  HomVecPoly v(domain_degree);
  v[static_cast<int>(unit / m)][unit % m] = 1;
  switch (kind) {
  case OpKind::Div: {
    auto out = div(v);
    return {out.coeffs().begin(), out.coeffs().end()};
  }
  case OpKind::Curl: return curl(v).coords();
  default: return vector_laplacian(v).coords();
  }
}

} // namespace

OperatorMatrix assemble_matrix(OpKind kind, int k)
{
  if (k < 0)
    throw std::invalid_argument("assemble_matrix: negative degree");
  const int domain_degree = k + op_order(kind);
  const auto rows = (scalar_codomain(kind) ? 1 : 3) * mono_count(k);
  const auto cols = (scalar_domain(kind) ? 1 : 3) * mono_count(domain_degree);
  OperatorMatrix out{kind, domain_degree, k, Matrix(rows, cols)};
  for (std::size_t j = 0; j < cols; ++j)
    out.entries.set_column(j, apply_to_unit(kind, domain_degree, j));
  return out;
}

namespace {

std::optional<OperatorMatrix> load_cached(const std::filesystem::path& file, OpKind kind, int k)
{
  std::ifstream in(file);
  if (!in)
    return std::nullopt;
  try {
    auto m = operator_matrix_from_json(nlohmann::json::parse(in));
    const auto expected_rows = (scalar_codomain(kind) ? 1 : 3) * mono_count(k);
    const auto expected_cols = (scalar_domain(kind) ? 1 : 3) * mono_count(k + op_order(kind));
    if (m.kind != kind || m.codomain_degree != k || m.rows() != expected_rows || m.cols() != expected_cols)
      return std::nullopt;
    return m;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

} // namespace

const OperatorMatrix& operator_matrix(OpKind kind, int k)
{
  static Memo<std::pair<OpKind, int>, OperatorMatrix> memo;
  return memo.get({kind, k}, [&] {
    const char* dir = std::getenv("QT_CACHE_DIR");
    if (dir == nullptr || *dir == '\0')
      return assemble_matrix(kind, k);
    const auto file = std::filesystem::path(dir) / (std::string(op_name(kind)) + "_k" + std::to_string(k) + ".json");
    if (auto cached = load_cached(file, kind, k))
      return std::move(*cached);
    auto m = assemble_matrix(kind, k);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (std::ofstream out(file); out)
      out << to_json(m).dump();
    return m;
  });
}

std::size_t rank(const OperatorMatrix& m)
{
  return rank(m.entries);
}

std::vector<RationalVector> nullspace(const OperatorMatrix& m)
{
  return nullspace(m.entries);
}

} // namespace qtrefftz
