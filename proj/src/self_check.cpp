#include "isotropy/self_check.hpp"

#include "isotropy/exact.hpp"
#include "isotropy/partition.hpp"
#include "isotropy/schur_eval.hpp"
#include "isotropy/tableau.hpp"

namespace isotropy {

namespace {

std::string at(const Partition& lambda, int k) {
  return "lambda=" + lambda.to_string() + " k=" + std::to_string(k);
}

// s(1^k)/k - s(1^(k-1))/(k-1)
ExactRatio slope_gap(const Partition& lambda, int k) {
  ExactRatio gap = fraction(schur_ones_hook_content(lambda, k), k) -
                   fraction(schur_ones_hook_content(lambda, k - 1), k - 1);
  gap.canonicalize();
  return gap;
}

}  // namespace

SuiteResult check_dimension_agreement(int max_size, int max_n) {
  SuiteResult r{"dimension triple agreement", 0, {}};
  std::vector<Partition> shapes{Partition()};
  for (const auto& p : partitions_up_to(max_size)) shapes.push_back(p);
  for (const auto& lambda : shapes) {
    for (int n = 0; n <= max_n; ++n) {
      ++r.cases;
      const ExactInt a = schur_ones_hook_content(lambda, n);
      const ExactInt b = schur_ones_recurrence(lambda, n);
      const ExactInt c = count_ssyt(lambda, n);
      if (a != b || b != c) {
        r.violations.push_back(at(lambda, n) + ": hook-content " + to_decimal(a) +
                               ", recurrence " + to_decimal(b) + ", tableaux " + to_decimal(c));
      }
    }
  }
  return r;
}

SuiteResult check_closed_forms() {
  SuiteResult r{"hook and two-row rectangle closed forms", 0, {}};
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 8; ++n) {
      ++r.cases;
      const ExactRatio expected = hook_shape_closed_form(d, n);
      const ExactInt actual = schur_ones_hook_content(Partition{d, 1}, n);
      if (expected != ExactRatio(actual)) {
        r.violations.push_back(at(Partition{d, 1}, n) + ": closed form " + to_decimal(expected) +
                               " vs " + to_decimal(actual));
      }
    }
  }
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 8; ++n) {
      ++r.cases;
      const ExactRatio expected = two_row_rectangle_closed_form(d, n);
      const ExactInt actual = schur_ones_hook_content(Partition{d, d}, n);
      if (expected != ExactRatio(actual)) {
        r.violations.push_back(at(Partition{d, d}, n) + ": closed form " + to_decimal(expected) +
                               " vs " + to_decimal(actual));
      }
    }
  }
  return r;
}

SuiteResult check_weak_inequality(int max_size, int k_min, int k_max) {
  SuiteResult r{"weak slope inequality", 0, {}};
  for (const auto& lambda : partitions_up_to(max_size)) {
    for (int k = k_min; k <= k_max; ++k) {
      ++r.cases;
      const ExactRatio gap = slope_gap(lambda, k);
      if (gap < 0) r.violations.push_back(at(lambda, k) + ": gap " + to_decimal(gap));
    }
  }
  return r;
}

SuiteResult check_weak_inequality_plus(int max_size, int k_min, int k_max) {
  SuiteResult r{"weak slope inequality with 1/k margin", 0, {}};
  for (const auto& lambda : partitions_up_to(max_size)) {
    for (int k = k_min; k <= k_max; ++k) {
      if (lambda.length() < 2 || lambda.length() > k - 1) continue;
      ++r.cases;
      const ExactRatio gap = slope_gap(lambda, k);
      if (gap < fraction(1, k)) r.violations.push_back(at(lambda, k) + ": gap " + to_decimal(gap));
    }
  }
  return r;
}

SuiteResult check_strong_inequality(int max_size, int k_min, int k_max) {
  SuiteResult r{"strong slope inequality", 0, {}};
  for (const auto& lambda : partitions_up_to(max_size)) {
    if (lambda == Partition{1} || lambda == Partition{2} || lambda == Partition{1, 1}) continue;
    for (int k = k_min; k <= k_max; ++k) {
      if (lambda.length() < 1 || lambda.length() > k - 2) continue;
      ++r.cases;
      const ExactRatio gap = slope_gap(lambda, k);
      if (gap < 1) r.violations.push_back(at(lambda, k) + ": gap " + to_decimal(gap));
    }
  }
  return r;
}

SuiteResult check_symmetric_binomial_inequality(int d_max, int a_max) {
  SuiteResult r{"symmetric binomial inequality", 0, {}};
  for (int d = 3; d <= d_max; ++d) {
    for (int a = 2; a <= a_max; ++a) {
      ++r.cases;
      ExactRatio gap = fraction(binomial(d + a - 1, d), a) - fraction(binomial(d + a - 2, d), a - 1);
      gap.canonicalize();
      if (gap < 1) {
        r.violations.push_back("d=" + std::to_string(d) + " alpha=" + std::to_string(a) +
                               ": gap " + to_decimal(gap));
      }
    }
  }
  return r;
}

std::vector<SuiteResult> run_self_check() {
  return {check_dimension_agreement(),  check_closed_forms(),
          check_weak_inequality(),      check_weak_inequality_plus(),
          check_strong_inequality(),    check_symmetric_binomial_inequality()};
}

}  // namespace isotropy
