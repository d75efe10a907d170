// Command-line front end.
//
// Exit codes: 0 success, 1 a verification or self-check failed, 2 usage or
// input error (bad flags, malformed JSON, inadmissible parameters).

#include "qtrefftz/bases.hpp"
#include "qtrefftz/diffops.hpp"
#include "qtrefftz/helmholtz.hpp"
#include "qtrefftz/json_io.hpp"
#include "qtrefftz/oracle.hpp"
#include "qtrefftz/qtrefftz.hpp"
#include "qtrefftz/selfcheck.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace qtrefftz;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

// Signals an input problem that should end the run with exit code 2.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string text(const HomScalarPoly& f)
{
  std::ostringstream out;
  bool first = true;
  const auto monos = monomials(f.degree());
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (sgn(f[n]) == 0)
      continue;
    Rational c = f[n];
    if (!first)
      out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0)
      out << "-";
    c = abs(c);
    std::string mono;
    for (int a = 0; a < 3; ++a) {
      if (monos[n][a] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += "x" + std::to_string(a + 1);
      if (monos[n][a] > 1)
        mono += "^" + std::to_string(monos[n][a]);
    }
    if (mono.empty())
      out << c.get_str();
    else if (c == 1)
      out << mono;
    else
      out << c.get_str() << "*" << mono;
    first = false;
  }
  return first ? "0" : out.str();
}

std::string text(const HomVecPoly& v)
{
  return "(" + text(v[0]) + ", " + text(v[1]) + ", " + text(v[2]) + ")";
}

void require_file(const std::string& path)
{
  if (!std::filesystem::is_regular_file(path))
    throw UsageError("input file not found: " + path);
}

void require_qt_degree(int p)
{
  if (p < 3)
    throw UsageError("p must exceed 2");
}

CoefficientJet load_jet(const std::string& path, int p)
{
  const auto eps = coefficient_jet_from_json(read_json_file(path));
  return eps.resized(std::max(p, eps.max_degree()));
}

void write_output(const json& j, const std::string& path)
{
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int ops_dump(const std::string& op, int k, const std::string& format)
{
  const auto kind = parse_op_kind(op);
  if (!kind)
    throw UsageError("unknown operator '" + op + "'");
  const auto& m = operator_matrix(*kind, k);
  if (format == "json") {
    std::cout << to_json(m).dump() << "\n";
    return exit_ok;
  }
  std::cout << op << " block " << m.domain_degree << " -> " << m.codomain_degree << ": " << m.rows() << " x "
            << m.cols() << ", rank " << rank(m) << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      std::cout << std::setw(6) << m.entries(r, c).get_str();
    std::cout << "\n";
  }
  return exit_ok;
}

int bases_dump(const std::string& space, int k, const std::string& format)
{
  const auto tag = parse_space_tag(space);
  if (!tag)
    throw UsageError("unknown space '" + space + "'");
  const auto& basis = cached_basis(*tag, k);
  if (format == "json") {
    std::cout << to_json(basis).dump() << "\n";
    return exit_ok;
  }
  std::cout << space << " degree " << k << ": " << basis.size() << " vectors\n";
  for (std::size_t j = 0; j < basis.size(); ++j)
    std::cout << "  [" << j << "] " << text(basis.vectors[j]) << "\n";
  return exit_ok;
}

int helmholtz_cmd(const std::string& in, const std::string& format)
{
  require_file(in);
  const auto v = hom_vec_from_json(read_json_file(in));
  const auto t = decompose(v);
  if (format == "json") {
    std::cout << to_json(t).dump() << "\n";
    return exit_ok;
  }
  std::cout << "solenoidal   " << text(t.solenoidal) << "\n"
            << "irrotational " << text(t.irrotational) << "\n"
            << "harmonic     " << text(t.harmonic) << "\n";
  return exit_ok;
}

int qt_dims(int p, const std::string& format)
{
  require_qt_degree(p);
  const auto row = pw_comparison_row(p);
  if (format == "json") {
    std::cout << json{{"p", p}, {"qt_dim", row.qt_dim}, {"plane_wave_dim", row.plane_wave_dim}}.dump() << "\n";
    return exit_ok;
  }
  std::cout << "dim QT_" << p << " = " << row.qt_dim << "\n"
            << std::setw(4) << "p" << std::setw(22) << "PW 2(p+3)(p+1)" << std::setw(22) << "QT 2p^2+6p+3" << "\n"
            << std::setw(4) << row.p << std::setw(22) << row.plane_wave_dim << std::setw(22) << row.qt_dim << "\n";
  return exit_ok;
}

int qt_build(int p, const std::string& eps_path, const std::string& out_path, bool strict, int jobs)
{
  require_qt_degree(p);
  require_file(eps_path);
  const auto eps = load_jet(eps_path, p);
  const auto elements = enumerate_basis(eps, p, jobs);
  json list = json::array();
  std::size_t certified = 0;
  for (const auto& e : elements) {
    list.push_back({{"name", e.name}, {"poly", to_json(e.poly)}, {"certified", e.certified}});
    certified += e.certified ? 1 : 0;
  }
  write_output({{"p", p}, {"dimension", elements.size()}, {"elements", std::move(list)}}, out_path);
  std::cerr << "built " << elements.size() << " elements, " << certified << " certified\n";
  if (certified != elements.size())
    return exit_failed;
  if (strict) {
    const auto r = coefficient_rank(elements);
    std::cerr << "coefficient rank " << r << " (expected " << dimension_formula(p) << ")\n";
    if (r != dimension_formula(p))
      return exit_failed;
  }
  return exit_ok;
}

int qt_verify(const std::string& basis_path, const std::string& eps_path)
{
  require_file(basis_path);
  require_file(eps_path);
  const auto doc = read_json_file(basis_path);
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_number_integer())
    throw JsonFormatError("p", "missing or not an integer");
  const int p = doc["p"].get<int>();
  require_qt_degree(p);
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw JsonFormatError("elements", "missing or not an array");
  const auto eps = load_jet(eps_path, p);

  std::vector<QTBasisElement> elements;
  std::size_t failures = 0;
  for (std::size_t n = 0; n < doc["elements"].size(); ++n) {
    const auto path = "elements[" + std::to_string(n) + "]";
    const auto& e = doc["elements"][n];
    if (!e.is_object() || !e.contains("poly"))
      throw JsonFormatError(path + ".poly", "missing field");
    QTBasisElement el;
    el.name = e.value("name", path);
    el.poly = graded_vec_from_json(e["poly"], path + ".poly");
    if (el.poly.max_degree() != p)
      throw JsonFormatError(path + ".poly.max_degree", "expected " + std::to_string(p));
    const auto r = verify(el.poly, eps, p);
    el.certified = r.ok();
    if (!r.ok()) {
      ++failures;
      std::cout << "FAIL " << el.name << " curlcurl=" << r.curlcurl_ok << " divergence=" << r.divergence_ok << "\n";
    }
    elements.push_back(std::move(el));
  }
  const auto r = coefficient_rank(elements);
  const bool complete = elements.size() == dimension_formula(p) && r == dimension_formula(p);
  std::cout << "elements=" << elements.size() << " verified=" << elements.size() - failures << " rank=" << r
            << " formula=" << dimension_formula(p) << (failures == 0 && complete ? " PASS" : " FAIL") << "\n";
  return failures == 0 && complete ? exit_ok : exit_failed;
}

int qt_oracle(int p, const std::string& eps_path)
{
  require_qt_degree(p);
  require_file(eps_path);
  const auto eps = load_jet(eps_path, p);
  const auto oracle = oracle_dimension(eps, p);
  const auto formula = dimension_formula(p);
  std::cout << "oracle=" << oracle << " formula=" << formula << (oracle == formula ? " MATCH" : " MISMATCH") << "\n";
  return oracle == formula ? exit_ok : exit_failed;
}

int selfcheck_cmd(const SelfCheckOptions& options)
{
  bool all = true;
  for (const auto& suite : run_selfcheck(options)) {
    std::cout << (suite.passed ? "PASS " : "FAIL ") << std::left << std::setw(22) << suite.name << std::right
              << suite.detail << "\n";
    all &= suite.passed;
  }
  return all ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact quasi-Trefftz polynomial spaces for curl curl E = eps E"};
  app.require_subcommand(1);
  std::string format = "table";
  const auto formats = CLI::IsMember({"json", "table"});

  auto* ops = app.add_subcommand("ops", "Operator matrices");
  auto* ops_dump_cmd = ops->add_subcommand("dump", "Print the matrix of one operator block");
  ops->require_subcommand(1);
  std::string op;
  int k = 0;
  ops_dump_cmd->add_option("--op", op, "grad|div|curl|lap|veclap")->required();
  ops_dump_cmd->add_option("--k", k, "codomain degree")->required()->check(CLI::Range(0, 64));
  ops_dump_cmd->add_option("--format", format)->check(formats);

  auto* bases = app.add_subcommand("bases", "Subspace bases");
  auto* bases_dump_cmd = bases->add_subcommand("dump", "Print a basis");
  bases->require_subcommand(1);
  std::string space;
  bases_dump_cmd->add_option("--space", space, "sol|irr|harm|sol-star|irr-star|range-grad|ker-curl")->required();
  bases_dump_cmd->add_option("--k", k, "degree")->required()->check(CLI::Range(0, 64));
  bases_dump_cmd->add_option("--format", format)->check(formats);

  auto* helm = app.add_subcommand("helmholtz", "Decompose a homogeneous field");
  std::string in_path;
  helm->add_option("--in", in_path, "HomVecPoly JSON file")->required();
  helm->add_option("--format", format)->check(formats);

  auto* qt = app.add_subcommand("qt", "Quasi-Trefftz spaces");
  qt->require_subcommand(1);
  int p = 0;
  std::string eps_path, out_path, basis_path;
  bool strict = false;
  int jobs = 0;
  auto* dims = qt->add_subcommand("dims", "Dimension and plane-wave comparison row");
  dims->add_option("--p", p)->required();
  dims->add_option("--format", format)->check(formats);
  auto* build = qt->add_subcommand("build", "Enumerate a certified basis");
  build->add_option("--p", p)->required();
  build->add_option("--eps", eps_path, "coefficient jet JSON")->required();
  build->add_option("--out", out_path, "output basis JSON ('-' for stdout)")->required();
  build->add_flag("--verify", strict, "also check linear independence");
  build->add_option("--jobs", jobs, "worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  auto* verify_cmd = qt->add_subcommand("verify", "Re-verify a basis file");
  verify_cmd->add_option("--basis", basis_path)->required();
  verify_cmd->add_option("--eps", eps_path)->required();
  auto* oracle = qt->add_subcommand("oracle", "Brute-force dimension");
  oracle->add_option("--p", p)->required();
  oracle->add_option("--eps", eps_path)->required();

  auto* self = app.add_subcommand("selfcheck", "Run the invariant suites");
  SelfCheckOptions sc;
  std::string fault;
  self->add_option("--max-k", sc.max_k)->check(CLI::Range(0, 12));
  self->add_option("--max-p", sc.max_p)->check(CLI::Range(3, 7));
  self->add_option("--seed", sc.seed);
  self->add_option("--inject-fault", fault, "perturb one operator matrix (test hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (ops_dump_cmd->parsed())
      return ops_dump(op, k, format);
    if (bases_dump_cmd->parsed())
      return bases_dump(space, k, format);
    if (helm->parsed())
      return helmholtz_cmd(in_path, format);
    if (dims->parsed())
      return qt_dims(p, format);
    if (build->parsed())
      return qt_build(p, eps_path, out_path, strict, jobs);
    if (verify_cmd->parsed())
      return qt_verify(basis_path, eps_path);
    if (oracle->parsed())
      return qt_oracle(p, eps_path);
    if (self->parsed()) {
      if (!fault.empty()) {
        sc.corrupt_operator = parse_op_kind(fault);
        if (!sc.corrupt_operator)
          throw UsageError("unknown operator '" + fault + "'");
      }
      return selfcheck_cmd(sc);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}
