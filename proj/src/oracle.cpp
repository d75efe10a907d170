#include "qtrefftz/oracle.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace qtrefftz {

namespace {

// Deliberately independent representation: exponent triple -> coefficient,
// zero coefficients erased.
using Exponent = std::array<int, 3>;
using SparsePoly = std::map<Exponent, Rational>;
using SparseField = std::array<SparsePoly, 3>;

void accumulate(SparsePoly& into, const Exponent& e, const Rational& c)
{
  if (sgn(c) == 0)
    return;
  auto [it, inserted] = into.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0)
      into.erase(it);
  }
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b, int sign = 1)
{
  SparsePoly out = a;
  for (const auto& [e, c] : b)
    accumulate(out, e, sign > 0 ? c : Rational(-c));
  return out;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b)
{
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      accumulate(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

SparsePoly partial(const SparsePoly& f, int axis)
{
  SparsePoly out;
  for (const auto& [e, c] : f) {
    if (e[static_cast<std::size_t>(axis)] == 0)
      continue;
    auto d = e;
    d[static_cast<std::size_t>(axis)] -= 1;
    accumulate(out, d, c * e[static_cast<std::size_t>(axis)]);
  }
  return out;
}

SparseField curl_of(const SparseField& v)
{
  return {add(partial(v[2], 1), partial(v[1], 2), -1), add(partial(v[0], 2), partial(v[2], 0), -1),
          add(partial(v[1], 0), partial(v[0], 1), -1)};
}

SparsePoly to_sparse(const CoefficientJet& eps)
{
  SparsePoly out;
  for (const auto& part : eps.parts())
    for (std::size_t n = 0; n < part.size(); ++n) {
      const auto i = mono_at(part.degree(), n);
      accumulate(out, {i.i1, i.i2, i.i3}, part[n]);
    }
  return out;
}

int total_degree(const Exponent& e)
{
  return e[0] + e[1] + e[2];
}

// Row layout for a vector constraint truncated at degree `top`: the same
// degree-major, component-major layout as GradedVecPoly::coords().
std::size_t vector_row(const Exponent& e, int component)
{
  const int d = total_degree(e);
  std::size_t offset = 0;
  for (int lower = 0; lower < d; ++lower)
    offset += 3 * mono_count(lower);
  return offset + static_cast<std::size_t>(component) * mono_count(d) + mono_index({e[0], e[1], e[2]});
}

std::size_t scalar_row(const Exponent& e)
{
  std::size_t offset = 0;
  for (int d = 0; d < total_degree(e); ++d)
    offset += mono_count(d);
  return offset + mono_index({e[0], e[1], e[2]});
}

std::size_t scalar_rows(int top)
{
  std::size_t n = 0;
  for (int d = 0; d <= top; ++d)
    n += mono_count(d);
  return n;
}

} // namespace

Matrix oracle_matrix(const CoefficientJet& eps, int p, const OracleConstraints& which)
{
  if (p < 0)
    throw std::invalid_argument("oracle_matrix: p must be non-negative");
  if (eps.max_degree() < p)
    throw std::invalid_argument("oracle_matrix: coefficient jet is shorter than p");
  const int cc_top = p - 2;
  const int div_top = which.divergence_degree < 0 ? p - 1 : which.divergence_degree;
  const std::size_t cc_rows = which.curlcurl && cc_top >= 0 ? GradedVecPoly::coord_count(cc_top) : 0;
  const std::size_t div_rows = which.divergence ? scalar_rows(div_top) : 0;
  const std::size_t cols = GradedVecPoly::coord_count(p);
  Matrix out(cc_rows + div_rows, cols);

  const auto e = to_sparse(eps);
  std::size_t col = 0;
  for (int d = 0; d <= p; ++d)
    for (int comp = 0; comp < 3; ++comp)
      for (const auto& i : monomials(d)) {
        SparseField pi;
        pi[static_cast<std::size_t>(comp)][{i.i1, i.i2, i.i3}] = 1;
        SparseField eps_pi;
        for (std::size_t a = 0; a < 3; ++a)
          eps_pi[a] = mul(e, pi[a]);

        if (cc_rows > 0) {
          const auto cc = curl_of(curl_of(pi));
          for (int a = 0; a < 3; ++a) {
            const auto residual = add(cc[static_cast<std::size_t>(a)], eps_pi[static_cast<std::size_t>(a)], -1);
            for (const auto& [ex, c] : residual)
              if (total_degree(ex) <= cc_top)
                out(vector_row(ex, a), col) = c;
          }
        }
        if (div_rows > 0) {
          SparsePoly divergence;
          for (int a = 0; a < 3; ++a)
            divergence = add(divergence, partial(eps_pi[static_cast<std::size_t>(a)], a));
          for (const auto& [ex, c] : divergence)
            if (total_degree(ex) <= div_top)
              out(cc_rows + scalar_row(ex), col) = c;
        }
        ++col;
      }
  return out;
}

std::size_t oracle_dimension(const CoefficientJet& eps, int p)
{
  if (p < 3)
    throw std::invalid_argument("p must exceed 2");
  const auto m = oracle_matrix(eps, p);
  return m.cols() - rank(m);
}

bool oracle_accepts(const GradedVecPoly& pi, const CoefficientJet& eps, const OracleConstraints& which)
{
  const auto m = oracle_matrix(eps, pi.max_degree(), which);
  const auto x = pi.coords();
  for (const auto& r : m * x)
    if (sgn(r) != 0)
      return false;
  return true;
}

} // namespace qtrefftz
