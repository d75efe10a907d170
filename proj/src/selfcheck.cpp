#include "qtrefftz/selfcheck.hpp"

#include "qtrefftz/bases.hpp"
#include "qtrefftz/helmholtz.hpp"
#include "qtrefftz/oracle.hpp"
#include "qtrefftz/qtrefftz.hpp"
#include "qtrefftz/random.hpp"
#include "qtrefftz/solvers.hpp"

#include <sstream>

namespace qtrefftz {

namespace {

// Collects failure messages for one suite.
class Checker
{
public:
  void expect(bool ok, const std::string& what)
  {
    ++checks_;
    if (!ok && failures_.size() < 5)
      failures_.push_back(what);
    failed_ |= !ok;
  }

  SuiteResult result(std::string name) const
  {
    std::ostringstream detail;
    detail << checks_ << " checks";
    for (const auto& f : failures_)
      detail << "; FAILED " << f;
    return {std::move(name), !failed_, detail.str()};
  }

private:
  std::size_t checks_ = 0;
  bool failed_ = false;
  std::vector<std::string> failures_;
};

std::string at(const char* what, int k)
{
  return std::string(what) + " at k=" + std::to_string(k);
}

Matrix kernel_matrix(const Matrix& m)
{
  const auto basis = nullspace(m);
  return Matrix::from_columns(basis, m.cols());
}

SuiteResult operator_suite(const SelfCheckOptions& options)
{
  auto get = [&](OpKind kind, int k) {
    Matrix m = operator_matrix(kind, k).entries;
    if (options.corrupt_operator == kind)
      m(0, 0) += 1;
    return m;
  };
  Checker check;
  for (int k = 0; k <= options.max_k; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const auto g = get(OpKind::Grad, k);
    const auto c = get(OpKind::Curl, k);
    const auto d = get(OpKind::Div, k);
    check.expect(rank(g) == (kk + 2) * (kk + 3) / 2, at("rank grad", k));
    check.expect(rank(c) == (kk + 1) * (kk + 3), at("rank curl", k));
    check.expect(rank(d) == (kk + 1) * (kk + 2) / 2, at("rank div", k));
    check.expect(c.cols() - rank(c) == (kk + 3) * (kk + 4) / 2, at("dim ker curl", k));
    check.expect(d.cols() - rank(d) == (kk + 2) * (kk + 4), at("dim ker div", k));

    const auto g_next = get(OpKind::Grad, k + 1);
    const auto c_next = get(OpKind::Curl, k + 1);
    check.expect((c * g_next).is_zero(), at("curl grad = 0", k));
    check.expect((d * c_next).is_zero(), at("div curl = 0", k));
    check.expect(d * g_next == get(OpKind::ScalarLap, k), at("div grad = lap", k));
    check.expect(g * get(OpKind::Div, k + 1) - c * c_next == get(OpKind::VecLap, k),
                 at("grad div - curl curl = veclap", k));
    check.expect(same_column_space(get(OpKind::Grad, k + 2), kernel_matrix(c_next)), at("range grad = ker curl", k));
    check.expect(same_column_space(c_next, kernel_matrix(d)), at("range curl = ker div", k));
  }
  return check.result("exact-sequence");
}

SuiteResult dimension_suite(const SelfCheckOptions& options)
{
  Checker check;
  for (int k = 0; k <= options.max_k; ++k) {
    check.expect(cached_basis(SpaceTag::Solenoidal, k).size() == solenoidal_dim(k), at("dim S", k));
    check.expect(cached_basis(SpaceTag::Irrotational, k).size() == irrotational_dim(k), at("dim I", k));
    check.expect(cached_basis(SpaceTag::Harmonic, k).size() == harmonic_dim(k), at("dim H", k));
    check.expect(cached_basis(SpaceTag::SolenoidalStar, k).size() == solenoidal_star_dim(k), at("dim S*", k));
    check.expect(cached_basis(SpaceTag::IrrotationalStar, k).size() == irrotational_star_dim(k), at("dim I*", k));
    check.expect(rank(cached_basis(SpaceTag::Solenoidal, k).as_columns()) == solenoidal_dim(k),
                 at("Psi families independent", k));
  }
  return check.result("dimension-table");
}

SuiteResult helmholtz_suite(const SelfCheckOptions& options)
{
  Checker check;
  std::mt19937_64 rng(options.seed);
  for (int k = 1; k <= options.max_k; ++k)
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = random_hom_vec(rng, k);
      const auto t = decompose(v);
      check.expect(t.sum() == v, at("decompose round trip", k));
      check.expect(div(t.solenoidal).is_zero() && div(t.harmonic).is_zero(), at("solenoidal parts", k));
      check.expect(curl(t.irrotational).is_zero() && curl(t.harmonic).is_zero(), at("irrotational parts", k));
    }
  return check.result("helmholtz-uniqueness");
}

SuiteResult restricted_suite(const SelfCheckOptions& options)
{
  Checker check;
  std::mt19937_64 rng(options.seed + 1);
  for (int k = 0; k + 2 <= options.max_k; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    check.expect(veclap_solenoidal_kernel(k).size() == 4 * (kk + 3), at("dim ker veclap|S", k));
    check.expect(veclap_restricted_kernel(k).size() == 2 * kk + 5, at("dim ker veclap|S*", k));
    const auto f = random_hom_scalar(rng, k);
    check.expect(div(solve_div_irrotational(f)) == f, at("div right inverse", k));
  }
  return check.result("restricted-operators");
}

SuiteResult construction_suite(const SelfCheckOptions& options)
{
  Checker check;
  check.expect(sign_self_test(CoefficientJet::constant(1, 3), 3).ok(), "sign self-test");
  for (int p = 3; p <= options.max_p; ++p) {
    const auto eps = sample_variable_jet(p);
    const auto elements = enumerate_basis(eps, p);
    bool certified = true;
    for (const auto& e : elements)
      certified &= e.certified;
    check.expect(elements.size() == dimension_formula(p), "element count at p=" + std::to_string(p));
    check.expect(certified, "all elements certified at p=" + std::to_string(p));
    check.expect(coefficient_rank(elements) == dimension_formula(p), "independence at p=" + std::to_string(p));
    check.expect(oracle_dimension(eps, p) == dimension_formula(p), "oracle dimension at p=" + std::to_string(p));
  }
  return check.result("enumerate-vs-oracle");
}

} // namespace

std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& options)
{
  return {operator_suite(options), dimension_suite(options), helmholtz_suite(options), restricted_suite(options),
          construction_suite(options)};
}

} // namespace qtrefftz
