#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isotropy/chern_oracle.hpp"
#include "isotropy/exact.hpp"
#include "isotropy/partition.hpp"

namespace isotropy {

enum class Rule {
  kMainTheorem,
  kTevelevSymmetric,
  kTevelevSkew,
  kExceptionDegree2,
  kExceptionSkewNMinus2,
  kExceptionSkew3N7,
  kDegree1,
  kTrivialZeroModule,
  kOracleFallback,
};

std::string_view rule_name(Rule rule);

/// Outcome of the isotropy decision for a generic s in (S_lambda V)^*.
struct Verdict {
  bool isotropic = false;
  Rule rule = Rule::kMainTheorem;
  /// Least n giving isotropy under the applied rule; absent for the
  /// exception rules phrased in k, the trivial rule, and oracle fallback.
  std::optional<ExactInt> threshold_n;
  std::string detail;
};

struct DecideOptions {
  OracleLimits oracle;
};

/// Least n with n >= dim(S_lambda C^k)/k + k for the rule that covers
/// (lambda, k) independently of n. Throws EmptyPartition, ZeroModule
/// (length > k), or OutOfTheoremScope (k = 2 with a two-row, non-column,
/// non-row shape).
ExactInt threshold_n(const Partition& lambda, int k);

/// Routes (lambda, k, n) through the triviality check, the degree-1 and
/// degree-2 cases, the symmetric/skew binomial criteria with their
/// exceptions, and the general criterion for lambda_1 >= 2, 2 <= length <= k,
/// k >= 3. Anything left over is sent to the Chern oracle.
Verdict decide(const Partition& lambda, int k, int n, const DecideOptions& options = {});

struct InequalityRow {
  int i = 0;
  ExactInt lhs;  // dim S_lambda C^(k-i)
  ExactInt rhs;  // (k-i)(n-k-i)
  bool holds = false;
};

struct InequalityReport {
  std::vector<InequalityRow> rows;
  bool all_hold = true;
};

/// dim S_lambda C^(k-i) <= (k-i)(n-k-i) for i = 0..min(k, n-k); when every
/// row holds, a generic form has a k-dimensional isotropic subspace.
InequalityReport tevelev_inequalities(const Partition& lambda, int k, int n);

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

std::string_view relation_symbol(Relation relation);

struct ProofStep {
  std::string label;
  ExactRatio lhs;
  Relation relation = Relation::kLessEqual;
  ExactRatio rhs;
  bool holds = false;
};

struct ProofChainReport {
  std::string terminal_case;  // rectangle, stripped-single-box, ...
  std::vector<ProofStep> steps;
};

/// Replays, with exact arithmetic, the argument that n >= threshold implies
/// every Tevelev inequality: the descent through the strong inequality down
/// to alphabet length+1, then the terminal case for alphabet = length.
/// Requires a main-theorem instance with n >= threshold_n. Throws
/// ChainStepFailed naming the first inequality that fails.
ProofChainReport verify_proof_chain(const Partition& lambda, int k, int n);

}  // namespace isotropy
