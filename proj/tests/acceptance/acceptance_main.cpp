// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isotropy/chern_oracle.hpp"
#include "isotropy/errors.hpp"
#include "isotropy/isotropy_engine.hpp"
#include "isotropy/schur_eval.hpp"
#include "isotropy/self_check.hpp"
#include "isotropy/sweep.hpp"
#include "isotropy/tableau.hpp"

using namespace isotropy;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string str(long v) { return std::to_string(v); }

Outcome skew_three_form_on_seven_space() {
  Outcome o;
  const ChernVerdict c = top_chern_nonzero(Partition{1, 1, 1}, 5, 7);
  o.expect(!c.nonzero, "oracle (1,1,1) k=5 n=7 should be zero");
  o.expect(c.degree == 10, "bundle rank should be 10, got " + to_decimal(c.degree));
  const Verdict v = decide(Partition{1, 1, 1}, 5, 7);
  o.expect(!v.isotropic, "decide should be non-isotropic");
  o.expect(v.rule == Rule::kExceptionSkew3N7, "rule should be exception-skew-3-n7, got " +
                                                  std::string(rule_name(v.rule)));
  o.summary = "oracle nonzero=false, decide " + std::string(rule_name(v.rule));
  return o;
}

Outcome two_one_on_six_space() {
  Outcome o;
  const ChernVerdict c = top_chern_nonzero(Partition{2, 1}, 3, 6);
  o.expect(c.nonzero, "oracle (2,1) k=3 n=6 should be nonzero");
  const Verdict v = decide(Partition{2, 1}, 3, 6);
  o.expect(v.isotropic, "decide should be isotropic");
  o.expect(v.threshold_n && *v.threshold_n == 6, "threshold_n should be 6");
  const ExactInt dim = dim_schur_module(Partition{2, 1}, 3).value;
  o.expect(dim == 8, "dim should be 8, got " + to_decimal(dim));
  o.summary = "oracle nonzero=true, threshold_n=6, dim=8";
  return o;
}

Outcome dimension_agreement() {
  Outcome o;
  std::vector<Partition> shapes{Partition()};
  for (const auto& p : partitions_up_to(6)) shapes.push_back(p);
  long cases = 0;
  for (const auto& lambda : shapes) {
    for (int n = 0; n <= 6; ++n) {
      const ExactInt a = schur_ones_hook_content(lambda, n);
      const ExactInt b = schur_ones_recurrence(lambda, n);
      const ExactInt c = count_ssyt(lambda, n);
      o.expect(a == b && b == c, lambda.to_string() + " n=" + str(n) + ": " + to_decimal(a) + " " +
                                     to_decimal(b) + " " + to_decimal(c));
      ++cases;
    }
  }
  o.summary = str(cases) + " cases";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  long cases = 0;
  for (int d = 2; d <= 6; ++d) {
    for (int n = 2; n <= 8; ++n, ++cases) {
      o.expect(hook_shape_closed_form(d, n) == ExactRatio(schur_ones_hook_content(Partition{d, 1}, n)),
               "hook d=" + str(d) + " n=" + str(n));
    }
  }
  for (int d = 2; d <= 5; ++d) {
    for (int n = 2; n <= 8; ++n, ++cases) {
      o.expect(two_row_rectangle_closed_form(d, n) ==
                   ExactRatio(schur_ones_hook_content(Partition::rectangle(2, d), n)),
               "two-row d=" + str(d) + " n=" + str(n));
    }
  }
  o.summary = str(cases) + " cases";
  return o;
}

Outcome inequality_suites() {
  Outcome o;
  const std::vector<SuiteResult> suites{
      check_weak_inequality(6, 2, 7), check_weak_inequality_plus(6, 2, 7),
      check_strong_inequality(6, 3, 7), check_symmetric_binomial_inequality(8, 8)};
  std::ostringstream s;
  for (const auto& r : suites) {
    if (&r != &suites.front()) s << ", ";
    s << r.name << " " << r.cases;
    for (const auto& v : r.violations) o.failures.push_back(r.name + ": " + v);
    o.expect(r.cases > 0, r.name + " checked nothing");
  }
  o.summary = s.str();
  return o;
}

SweepReport full_sweep() {
  SweepOptions opts;
  opts.max_size = 5;
  opts.max_k = 5;
  opts.max_n = 9;
  opts.with_oracle = true;
  opts.max_oracle_dim = 40;
  return run_sweep(opts);
}

Outcome oracle_agreement(const SweepReport& r) {
  Outcome o;
  for (const auto& d : r.disagreements) o.failures.push_back(d);
  for (const auto& e : r.errors) o.failures.push_back(e);
  o.expect(r.oracle_checked > 0, "no oracle comparisons ran");
  o.summary = str(static_cast<long>(r.rows.size())) + " instances, " +
              str(static_cast<long>(r.oracle_checked)) + " oracle comparisons";
  return o;
}

Outcome threshold_tightness(const SweepReport& r) {
  Outcome o;
  for (const auto& f : r.tightness_failures) o.failures.push_back(f);
  for (const auto& f : r.inequality_failures) o.failures.push_back(f);
  o.expect(r.tightness_checked > 0, "no main-theorem instances");
  o.summary = str(static_cast<long>(r.tightness_checked)) + " (lambda,k) thresholds, " +
              str(static_cast<long>(r.main_theorem_instances)) + " main-theorem instances";
  return o;
}

bool oracle_allowed(const Partition& lambda, int k) {
  return k <= 6 && dim_schur_module(lambda, k).value <= 40;
}

// decide and, where caps allow, the oracle must both give `expected`.
void check_instance(Outcome& o, const Partition& lambda, int k, int n, bool expected, long& oracle_runs) {
  const std::string tag = lambda.to_string() + " k=" + str(k) + " n=" + str(n);
  const bool got = decide(lambda, k, n).isotropic;
  o.expect(got == expected, "decide " + tag + " gave " + (got ? "isotropic" : "non-isotropic"));
  if (oracle_allowed(lambda, k)) {
    ++oracle_runs;
    const bool c = top_chern_nonzero(lambda, k, n).nonzero;
    o.expect(c == expected, "oracle " + tag + " gave " + (c ? "nonzero" : "zero"));
  }
}

Outcome exception_coverage() {
  Outcome o;
  long oracle_runs = 0;
  for (const Partition& lambda : {Partition{2}, Partition{1, 1}}) {
    for (int k = 2; k <= 8; ++k) {
      check_instance(o, lambda, k, 2 * k - 1, false, oracle_runs);
      check_instance(o, lambda, k, 2 * k, true, oracle_runs);
    }
  }
  check_instance(o, Partition{1, 1, 1}, 4, 7, true, oracle_runs);
  check_instance(o, Partition{1, 1, 1}, 5, 7, false, oracle_runs);
  for (int n : {6, 8}) {
    for (int k = n - 2; k <= n; ++k) check_instance(o, Partition::column(n - 2), k, n, k <= n - 2, oracle_runs);
  }
  o.summary = str(oracle_runs) + " oracle cross-checks";
  return o;
}

int report(int index, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = o.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title << " (" << o.summary
            << "; " << secs << " s)\n";
  const std::size_t shown = std::min<std::size_t>(o.failures.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << o.failures[i] << "\n";
  if (o.failures.size() > shown) std::cout << "    ... " << o.failures.size() - shown << " more\n";
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "skew 3-form on C^7 has no isotropic 5-plane", skew_three_form_on_seven_space);
  failed += report(2, "(2,1) with k=3, n=6 is isotropic at the threshold", two_one_on_six_space);
  failed += report(3, "hook-content, recurrence and tableau count agree", dimension_agreement);
  failed += report(4, "hook and two-row rectangle closed forms", closed_forms);
  failed += report(5, "dimension-ratio inequality suites", inequality_suites);
  SweepReport sweep;
  failed += report(6, "decide agrees with the Chern oracle on the sweep", [&] {
    sweep = full_sweep();
    return oracle_agreement(sweep);
  });
  failed += report(7, "thresholds are tight and Tevelev rows hold", [&] { return threshold_tightness(sweep); });
  failed += report(8, "degree-2 and skew exception coverage", exception_coverage);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
