#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isotropy/chern_oracle.hpp"
#include "isotropy/isotropy_engine.hpp"

namespace isotropy {

struct SweepOptions {
  int max_size = 5;
  int max_k = 5;
  int max_n = 9;
  bool with_oracle = false;
  // The oracle only runs where the bundle rank and k stay this small.
  long max_oracle_dim = 40;
  int max_oracle_k = 6;
  OracleLimits oracle;
};

enum class Agreement { kAgree, kDisagree, kNotChecked, kFallback };

std::string_view agreement_name(Agreement a);

struct SweepRow {
  Partition lambda;
  int k = 0;
  int n = 0;
  ExactInt dim;  // dim S_lambda C^k
  std::optional<Verdict> verdict;
  std::string error;  // set when decide() threw
  std::optional<bool> oracle_nonzero;
  Agreement agreement = Agreement::kNotChecked;
};

/// Every lambda with 1 <= |lambda| <= max_size, length(lambda) <= k <= max_k,
/// k < n <= max_n, in lexicographic (lambda, k, n) order. Besides the oracle
/// comparison it checks threshold tightness, the Tevelev inequalities on
/// isotropic main-theorem instances, and monotonicity in n.
struct SweepReport {
  std::vector<SweepRow> rows;
  std::size_t oracle_checked = 0;
  std::vector<std::string> disagreements;
  std::vector<std::string> tightness_failures;
  std::vector<std::string> inequality_failures;
  std::vector<std::string> monotonicity_failures;
  std::vector<std::string> errors;
  std::size_t main_theorem_instances = 0;
  std::size_t tightness_checked = 0;

  bool clean() const {
    return disagreements.empty() && tightness_failures.empty() && inequality_failures.empty() &&
           monotonicity_failures.empty() && errors.empty();
  }
};

SweepReport run_sweep(const SweepOptions& options);

}  // namespace isotropy
