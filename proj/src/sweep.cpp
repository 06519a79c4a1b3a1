#include "isotropy/sweep.hpp"

#include "isotropy/errors.hpp"
#include "isotropy/schur_eval.hpp"

namespace isotropy {

std::string_view agreement_name(Agreement a) {
  switch (a) {
    case Agreement::kAgree: return "agree";
    case Agreement::kDisagree: return "disagree";
    case Agreement::kNotChecked: return "not-checked";
    case Agreement::kFallback: return "fallback";
  }
  return "?";
}

namespace {

std::string tag(const Partition& lambda, int k, int n) {
  return "lambda=" + lambda.to_string() + " k=" + std::to_string(k) + " n=" + std::to_string(n);
}

void check_tightness(const Partition& lambda, int k, SweepReport& report) {
  const ExactInt t = threshold_n(lambda, k);
  if (!t.fits_sint_p()) return;
  const int at = static_cast<int>(t.get_si());
  ++report.tightness_checked;
  const bool below = decide(lambda, k, at - 1).isotropic;
  const bool on = decide(lambda, k, at).isotropic;
  if (below || !on) {
    report.tightness_failures.push_back(
        "lambda=" + lambda.to_string() + " k=" + std::to_string(k) + " threshold " +
        std::to_string(at) + ": isotropic(n-1)=" + (below ? "true" : "false") +
        " isotropic(n)=" + (on ? "true" : "false"));
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
  SweepReport report;
  for (const Partition& lambda : partitions_up_to(options.max_size)) {
    for (int k = lambda.length(); k <= options.max_k; ++k) {
      const ExactInt dim = dim_schur_module(lambda, k).value;
      const bool oracle_ok = options.with_oracle && k <= options.max_oracle_k &&
                             dim <= ExactInt(options.max_oracle_dim);
      bool tightness_done = false;
      std::optional<SweepRow> previous;
      for (int n = k + 1; n <= options.max_n; ++n) {
        SweepRow row;
        row.lambda = lambda;
        row.k = k;
        row.n = n;
        row.dim = dim;
        try {
          row.verdict = decide(lambda, k, n, DecideOptions{options.oracle});
        } catch (const Error& e) {
          row.error = e.what();
          report.errors.push_back(tag(lambda, k, n) + ": " + e.what());
        }

        if (row.verdict && row.verdict->rule == Rule::kOracleFallback) {
          row.agreement = Agreement::kFallback;
        } else if (row.verdict && oracle_ok) {
          const ChernVerdict oracle = top_chern_nonzero(lambda, k, n, options.oracle);
          row.oracle_nonzero = oracle.nonzero;
          ++report.oracle_checked;
          if (oracle.nonzero == row.verdict->isotropic) {
            row.agreement = Agreement::kAgree;
          } else {
            row.agreement = Agreement::kDisagree;
            report.disagreements.push_back(
                tag(lambda, k, n) + ": decide says " +
                (row.verdict->isotropic ? "isotropic" : "not isotropic") + " via " +
                std::string(rule_name(row.verdict->rule)) + ", top Chern class is " +
                (oracle.nonzero ? "nonzero" : "zero"));
          }
        }

        if (row.verdict && row.verdict->rule == Rule::kMainTheorem) {
          ++report.main_theorem_instances;
          if (!tightness_done) {
            check_tightness(lambda, k, report);
            tightness_done = true;
          }
          if (row.verdict->isotropic && !tevelev_inequalities(lambda, k, n).all_hold) {
            report.inequality_failures.push_back(tag(lambda, k, n));
          }
        }

        if (previous && previous->verdict && row.verdict && previous->verdict->isotropic &&
            !row.verdict->isotropic &&
            previous->verdict->rule != Rule::kExceptionSkewNMinus2 &&
            row.verdict->rule != Rule::kExceptionSkewNMinus2) {
          report.monotonicity_failures.push_back(tag(lambda, k, n) +
                                                 ": isotropic at n-1 but not at n");
        }
        previous = row;
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace isotropy
