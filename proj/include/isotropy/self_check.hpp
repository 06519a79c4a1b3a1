#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace isotropy {

/// Result of one exhaustive verification suite.
struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// hook-content == horizontal-strip recurrence == column-transfer SSYT count,
/// for 1 <= |lambda| <= max_size (plus the empty partition) and 0 <= n <= max_n.
SuiteResult check_dimension_agreement(int max_size = 6, int max_n = 6);

/// Hook (d,1) and two-row rectangle (d,d) closed forms against hook-content.
SuiteResult check_closed_forms();

/// s(1^k)/k >= s(1^(k-1))/(k-1) for nonempty lambda, |lambda| <= max_size.
SuiteResult check_weak_inequality(int max_size = 6, int k_min = 2, int k_max = 7);

/// s(1^k)/k >= s(1^(k-1))/(k-1) + 1/k whenever 2 <= length <= k-1.
SuiteResult check_weak_inequality_plus(int max_size = 6, int k_min = 2, int k_max = 7);

/// s(1^k)/k >= s(1^(k-1))/(k-1) + 1 whenever 1 <= length <= k-2 and lambda is
/// not (1), (2) or (1,1).
SuiteResult check_strong_inequality(int max_size = 6, int k_min = 3, int k_max = 7);

/// C(d+a-1,d)/a >= C(d+a-2,d)/(a-1) + 1 for 3 <= d <= d_max, 2 <= a <= a_max.
SuiteResult check_symmetric_binomial_inequality(int d_max = 8, int a_max = 8);

/// Every suite above with its default bounds.
std::vector<SuiteResult> run_self_check();

}  // namespace isotropy
