#pragma once

// Library-wide invariant suites, run by `qtrefftz selfcheck`.

#include "qtrefftz/diffops.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qtrefftz {

struct SelfCheckOptions
{
  int max_k = 6;
  int max_p = 4;
  std::uint64_t seed = 20260101;
  /// Test hook: the operator suite works on a copy of this operator's
  /// matrices with one entry perturbed, and must then report a failure.
  std::optional<OpKind> corrupt_operator;
};

struct SuiteResult
{
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& options = {});

} // namespace qtrefftz
