#include "isotropy/isotropy_engine.hpp"

#include <algorithm>

#include "isotropy/errors.hpp"
#include "isotropy/schur_eval.hpp"

namespace isotropy {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kMainTheorem: return "main-theorem";
    case Rule::kTevelevSymmetric: return "tevelev-symmetric";
    case Rule::kTevelevSkew: return "tevelev-skew";
    case Rule::kExceptionDegree2: return "exception-degree-2";
    case Rule::kExceptionSkewNMinus2: return "exception-skew-n-minus-2";
    case Rule::kExceptionSkew3N7: return "exception-skew-3-n7";
    case Rule::kDegree1: return "degree-1";
    case Rule::kTrivialZeroModule: return "trivial-zero-module";
    case Rule::kOracleFallback: return "oracle-fallback";
  }
  return "unknown";
}

std::string_view relation_symbol(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual: return "<=";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kEqual: return "==";
  }
  return "?";
}

namespace {

std::string str(int v) { return std::to_string(v); }

bool in_main_case(const Partition& lambda, int k) {
  return lambda.first() >= 2 && lambda.length() >= 2 && lambda.length() <= k && k >= 3;
}

// k + ceil(rank / k): the least n with n >= rank/k + k.
ExactInt binomial_threshold(const ExactInt& rank, int k) {
  return k + ceil_of(fraction(rank, k));
}

struct Threshold {
  Rule rule;
  ExactInt value;
  ExactInt rank;  // the numerator of rank/k + k, where meaningful
};

// The n-independent rule for (lambda, k); exceptions that depend on n are
// applied by decide() on top of this.
Threshold base_threshold(const Partition& lambda, int k) {
  if (lambda.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "the empty partition has no isotropy question");
  }
  if (lambda.length() > k) {
    throw Error(ErrorCode::kZeroModule, "S_" + lambda.to_string() + " C^" + str(k) + " = 0");
  }
  if (lambda == Partition{1}) return {Rule::kDegree1, ExactInt(k + 1), ExactInt(k)};
  if (lambda == Partition{2}) return {Rule::kExceptionDegree2, ExactInt(2 * k), binomial(k + 1, 2)};
  // Skew forms: a generic one on C^n has a 1-dim kernel when n is odd, so
  // the isotropic k-planes appear already at n = 2k - 1.
  if (lambda == Partition{1, 1}) {
    return {Rule::kExceptionDegree2, ExactInt(2 * k - 1), binomial(k, 2)};
  }
  if (lambda.is_column()) {
    const ExactInt rank = binomial(k, lambda.length());
    return {Rule::kTevelevSkew, binomial_threshold(rank, k), rank};
  }
  if (lambda.is_row()) {
    const int d = lambda.first();
    const ExactInt rank = binomial(d + k - 1, d);
    return {Rule::kTevelevSymmetric, binomial_threshold(rank, k), rank};
  }
  if (in_main_case(lambda, k)) {
    const ExactInt rank = dim_schur_module(lambda, k).value;
    return {Rule::kMainTheorem, binomial_threshold(rank, k), rank};
  }
  throw Error(ErrorCode::kOutOfTheoremScope,
              "no closed-form criterion for " + lambda.to_string() + " with k=" + str(k));
}

void check_range(int k, int n) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidRange,
                "need 1 <= k <= n, got k=" + str(k) + ", n=" + str(n));
  }
}

Verdict threshold_verdict(const Threshold& t, int k, int n, const std::string& what) {
  Verdict v;
  v.rule = t.rule;
  v.isotropic = ExactInt(n) >= t.value;
  v.threshold_n = t.value;
  v.detail = what + ": isotropic iff n >= " + to_decimal(t.value) + " (rank " +
             to_decimal(t.rank) + ", k=" + str(k) + ")";
  return v;
}

}  // namespace

ExactInt threshold_n(const Partition& lambda, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidRange, "need k >= 1, got k=" + str(k));
  return base_threshold(lambda, k).value;
}

Verdict decide(const Partition& lambda, int k, int n, const DecideOptions& options) {
  check_range(k, n);
  if (lambda.empty()) {
    throw Error(ErrorCode::kEmptyPartition, "the empty partition has no isotropy question");
  }

  if (lambda.length() > k) {
    return Verdict{true, Rule::kTrivialZeroModule, std::nullopt,
                   "S_" + lambda.to_string() + " W = 0 for dim W = " + str(k) +
                       ", so every form restricts to zero"};
  }

  if (lambda.is_column() && lambda.length() >= 3) {
    const int d = lambda.length();
    if (d == n - 2 && n % 2 == 0) {
      return Verdict{k <= n - 2, Rule::kExceptionSkewNMinus2, std::nullopt,
                     "skew (n-2)-form with n even: isotropic iff k <= " + str(n - 2)};
    }
    if (d == 3 && n == 7) {
      return Verdict{k <= 4, Rule::kExceptionSkew3N7, std::nullopt,
                     "skew 3-form on C^7: isotropic iff k <= 4"};
    }
  }

  if (!in_main_case(lambda, k) && !lambda.is_row() && !lambda.is_column()) {
    try {
      const ChernVerdict oracle = top_chern_nonzero(lambda, k, n, options.oracle);
      return Verdict{oracle.nonzero, Rule::kOracleFallback, std::nullopt,
                     "outside the closed-form criteria; top Chern class is " +
                         std::string(oracle.nonzero ? "nonzero" : "zero")};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDegreeGuard || e.code() == ErrorCode::kSizeGuard) {
        throw Error(ErrorCode::kOutOfTheoremScope,
                    "no closed-form criterion for " + lambda.to_string() + " with k=" + str(k) +
                        " and the oracle is over its caps (" + e.what() + ")");
      }
      throw;
    }
  }

  const Threshold t = base_threshold(lambda, k);
  switch (t.rule) {
    case Rule::kDegree1: return threshold_verdict(t, k, n, "linear form");
    case Rule::kExceptionDegree2:
      return threshold_verdict(t, k, n, lambda.is_row() ? "quadratic form" : "skew bilinear form");
    case Rule::kTevelevSkew: return threshold_verdict(t, k, n, "skew form C(k,d)/k + k");
    case Rule::kTevelevSymmetric: return threshold_verdict(t, k, n, "symmetric form C(d+k-1,d)/k + k");
    default: return threshold_verdict(t, k, n, "dim S_lambda C^k / k + k");
  }
}

InequalityReport tevelev_inequalities(const Partition& lambda, int k, int n) {
  check_range(k, n);
  InequalityReport report;
  const int last = std::min(k, n - k);
  for (int i = 0; i <= last; ++i) {
    InequalityRow row;
    row.i = i;
    row.lhs = dim_schur_module(lambda, k - i).value;
    row.rhs = ExactInt(k - i) * (n - k - i);
    row.holds = row.lhs <= row.rhs;
    report.all_hold = report.all_hold && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

class ChainBuilder {
 public:
  void check(std::string label, ExactRatio lhs, Relation rel, ExactRatio rhs) {
    // mpq comparisons assume canonical form; ExactRatio(10, 2) is not.
    lhs.canonicalize();
    rhs.canonicalize();
    bool holds = false;
    switch (rel) {
      case Relation::kLessEqual: holds = lhs <= rhs; break;
      case Relation::kGreaterEqual: holds = lhs >= rhs; break;
      case Relation::kEqual: holds = lhs == rhs; break;
    }
    if (!holds) {
      throw Error(ErrorCode::kChainStepFailed,
                  label + ": " + to_decimal(lhs) + " " + std::string(relation_symbol(rel)) + " " +
                      to_decimal(rhs) + " is false");
    }
    report_.steps.push_back({std::move(label), lhs, rel, rhs, true});
  }

  ProofChainReport take(std::string terminal_case) {
    report_.terminal_case = std::move(terminal_case);
    return std::move(report_);
  }

 private:
  ProofChainReport report_;
};

ExactRatio ratio(const ExactInt& num, int den) { return fraction(num, den); }

}  // namespace

ProofChainReport verify_proof_chain(const Partition& lambda, int k, int n) {
  check_range(k, n);
  if (!in_main_case(lambda, k)) {
    throw Error(ErrorCode::kOutOfTheoremScope,
                "proof chain needs lambda_1 >= 2, 2 <= length <= k and k >= 3");
  }
  const ExactInt threshold = threshold_n(lambda, k);
  if (ExactInt(n) < threshold) {
    throw Error(ErrorCode::kInvalidRange,
                "proof chain needs n >= " + to_decimal(threshold) + ", got n=" + str(n));
  }

  const int len = lambda.length();
  auto s = [&](const Partition& shape, int alphabet) { return dim_schur_module(shape, alphabet).value; };
  ChainBuilder chain;

  chain.check("hypothesis n >= s(1^k)/k + k", ExactRatio(n), Relation::kGreaterEqual,
              ratio(s(lambda, k), k) + k);

  // Descent: each step trades one letter of the alphabet for +1 on the bound.
  for (int j = k; j >= len + 2; --j) {
    chain.check("strong inequality s(1^" + str(j) + ")/" + str(j) + " >= s(1^" + str(j - 1) +
                    ")/" + str(j - 1) + " + 1",
                ratio(s(lambda, j), j), Relation::kGreaterEqual,
                ratio(s(lambda, j - 1), j - 1) + 1);
    chain.check("descended bound n >= s(1^" + str(j - 1) + ")/" + str(j - 1) + " + " +
                    str(k + (k - j + 1)),
                ExactRatio(n), Relation::kGreaterEqual,
                ratio(s(lambda, j - 1), j - 1) + (k + (k - j + 1)));
  }

  auto tevelev_row = [&](int i) {
    chain.check("Tevelev row i=" + str(i) + ": s(1^" + str(k - i) + ") <= " + str(k - i) + "*(" +
                    str(n - k - i) + ")",
                ExactRatio(s(lambda, k - i)), Relation::kLessEqual,
                ExactRatio(ExactInt(k - i) * (n - k - i)));
  };
  for (int i = 0; i <= k - len - 1; ++i) tevelev_row(i);

  if (len == k) {
    return chain.take("length-equals-k");
  }

  std::string terminal;
  const ExactInt s_len = s(lambda, len);
  if (lambda.is_rectangle()) {
    terminal = "rectangle";
    chain.check("rectangle: s(1^length) = 1", ExactRatio(s_len), Relation::kEqual, ExactRatio(1));
    chain.check("rectangle: 1 <= length*(n - length)", ExactRatio(1), Relation::kLessEqual,
                ExactRatio(ExactInt(len) * (n - len)));
  } else {
    const Partition mu = strip_full_height_columns(lambda);
    chain.check("stripping full-height columns keeps s(1^length)", ExactRatio(s_len),
                Relation::kEqual, ExactRatio(s(mu, len)));
    if (mu == Partition{1}) {
      terminal = "stripped-single-box";
      chain.check("stripped (1): s(1^length) = length", ExactRatio(s_len), Relation::kEqual,
                  ExactRatio(len));
      chain.check("stripped (1): length <= length*(n - length)", ExactRatio(len),
                  Relation::kLessEqual, ExactRatio(ExactInt(len) * (n - len)));
    } else if (mu == Partition{2} || mu == Partition{1, 1}) {
      const int sign = mu == Partition{2} ? 1 : -1;
      terminal = sign > 0 ? "stripped-row-2" : "stripped-column-2";
      const std::string tag = sign > 0 ? "(3k+1)/2" : "(3k-1)/2";
      chain.check("stripped " + mu.to_string() + ": n >= " + tag, ExactRatio(n),
                  Relation::kGreaterEqual, fraction(3 * k + sign, 2));
      chain.check("stripped " + mu.to_string() + ": " + tag + " >= (3 length " +
                      (sign > 0 ? "+" : "-") + " 1)/2",
                  fraction(3 * k + sign, 2), Relation::kGreaterEqual,
                  fraction(3 * len + sign, 2));
      chain.check("stripped " + mu.to_string() + ": (3 length " + (sign > 0 ? "+" : "-") +
                      " 1)/2 = s(1^length)/length + length",
                  fraction(3 * len + sign, 2), Relation::kEqual, ratio(s_len, len) + len);
    } else {
      terminal = "stripped-general";
      chain.check("s_lambda(1^(length+1)) >= s_mu(1^(length+1))", ratio(s(lambda, len + 1), len + 1),
                  Relation::kGreaterEqual, ratio(s(mu, len + 1), len + 1));
      chain.check("strong inequality for mu at alphabet length+1", ratio(s(mu, len + 1), len + 1),
                  Relation::kGreaterEqual, ratio(s(mu, len), len) + 1);
      chain.check("s_mu(1^length) = s_lambda(1^length)", ratio(s(mu, len), len), Relation::kEqual,
                  ratio(s_len, len));
    }
  }
  tevelev_row(k - len);
  return chain.take(terminal);
}

}  // namespace isotropy
