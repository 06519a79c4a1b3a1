#include "isotropy/isotropy_engine.hpp"

#include <gtest/gtest.h>

#include "isotropy/cross_validate.hpp"
#include "isotropy/errors.hpp"
#include "isotropy/schur_eval.hpp"
#include "isotropy/sweep.hpp"

namespace isotropy {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an isotropy::Error";
  return ErrorCode::kMalformedInput;
}

TEST(Decide, MainTheoremExample) {
  const Verdict v = decide(Partition{2, 1}, 3, 6);
  EXPECT_TRUE(v.isotropic);
  EXPECT_EQ(v.rule, Rule::kMainTheorem);
  ASSERT_TRUE(v.threshold_n.has_value());
  EXPECT_EQ(*v.threshold_n, 6);
  EXPECT_FALSE(decide(Partition{2, 1}, 3, 5).isotropic);
}

TEST(Decide, SkewThreeFormOnSevenSpace) {
  for (int k = 1; k <= 7; ++k) {
    const Verdict v = decide(Partition{1, 1, 1}, k, 7);
    if (k < 3) continue;
    EXPECT_EQ(v.rule, Rule::kExceptionSkew3N7);
    EXPECT_EQ(v.isotropic, k <= 4) << k;
    EXPECT_FALSE(v.threshold_n.has_value());
  }
}

TEST(Decide, Routing) {
  EXPECT_EQ(decide(Partition{1, 1, 1}, 2, 5).rule, Rule::kTrivialZeroModule);
  EXPECT_TRUE(decide(Partition{1, 1, 1}, 2, 5).isotropic);
  EXPECT_EQ(decide(Partition{1}, 3, 4).rule, Rule::kDegree1);
  EXPECT_EQ(decide(Partition{2}, 3, 6).rule, Rule::kExceptionDegree2);
  EXPECT_EQ(decide(Partition{1, 1}, 3, 6).rule, Rule::kExceptionDegree2);
  EXPECT_EQ(decide(Partition{3}, 2, 6).rule, Rule::kTevelevSymmetric);
  EXPECT_EQ(decide(Partition{1, 1, 1}, 3, 9).rule, Rule::kTevelevSkew);
  EXPECT_EQ(decide(Partition{1, 1, 1, 1}, 5, 6).rule, Rule::kExceptionSkewNMinus2);
  EXPECT_EQ(decide(Partition{2, 1}, 2, 5).rule, Rule::kOracleFallback);
  EXPECT_EQ(decide(Partition{2, 2}, 4, 9).rule, Rule::kMainTheorem);
  EXPECT_EQ(rule_name(Rule::kTevelevSkew), "tevelev-skew");
}

TEST(Decide, BinomialThresholds) {
  // (3), k=2: C(4,3)=4, 2 + ceil(4/2) = 4.
  EXPECT_EQ(threshold_n(Partition{3}, 2), 4);
  EXPECT_TRUE(decide(Partition{3}, 2, 4).isotropic);
  EXPECT_FALSE(decide(Partition{3}, 2, 3).isotropic);
  // (1,1,1), k=4: C(4,3)=4, 4 + 1 = 5.
  EXPECT_EQ(threshold_n(Partition{1, 1, 1}, 4), 5);
  EXPECT_EQ(threshold_n(Partition{1}, 4), 5);
  EXPECT_EQ(threshold_n(Partition{2}, 4), 8);
  EXPECT_EQ(threshold_n(Partition{1, 1}, 4), 7);
  EXPECT_EQ(threshold_n(Partition{2, 2}, 4), 9);
}

TEST(Decide, SkewNMinusTwoException) {
  for (int n : {6, 8}) {
    for (int k = n - 2; k <= n; ++k) {
      const Verdict v = decide(Partition::column(n - 2), k, n);
      EXPECT_EQ(v.rule, Rule::kExceptionSkewNMinus2);
      EXPECT_EQ(v.isotropic, k <= n - 2) << n << " " << k;
    }
  }
  // Odd n falls back to the binomial criterion.
  EXPECT_EQ(decide(Partition::column(3), 4, 5).rule, Rule::kTevelevSkew);
  EXPECT_TRUE(decide(Partition::column(3), 4, 5).isotropic);
}

TEST(Decide, Errors) {
  EXPECT_EQ(code_of([] { decide(Partition(), 3, 4); }), ErrorCode::kEmptyPartition);
  EXPECT_EQ(code_of([] { decide(Partition{1}, 5, 4); }), ErrorCode::kInvalidRange);
  EXPECT_EQ(code_of([] { decide(Partition{1}, 0, 4); }), ErrorCode::kInvalidRange);
  EXPECT_EQ(code_of([] { threshold_n(Partition{1, 1, 1}, 2); }), ErrorCode::kZeroModule);
  EXPECT_EQ(code_of([] { threshold_n(Partition{2, 1}, 2); }), ErrorCode::kOutOfTheoremScope);
  DecideOptions tight;
  tight.oracle.max_tableaux = 1;
  EXPECT_EQ(code_of([&] { decide(Partition{3, 2}, 2, 9, tight); }), ErrorCode::kOutOfTheoremScope);
}

TEST(Decide, MonotoneInN) {
  for (const auto& lambda : partitions_up_to(5)) {
    for (int k = std::max(1, lambda.length()); k <= 5; ++k) {
      bool seen = false;
      for (int n = k; n <= 14; ++n) {
        if (lambda.is_column() && lambda.length() == n - 2) continue;
        if (!(lambda.is_column() || lambda.is_row() || k >= 3)) continue;
        const bool now = decide(lambda, k, n).isotropic;
        EXPECT_FALSE(seen && !now) << lambda << " k=" << k << " n=" << n;
        seen = seen || now;
      }
    }
  }
}

TEST(Threshold, RearrangedForm) {
  // n >= rank/k + k is the same as k(n-k) >= rank.
  for (const auto& lambda : partitions_up_to(5)) {
    for (int k = std::max(3, lambda.length()); k <= 6; ++k) {
      if (lambda.first() < 2 || lambda.length() < 2) continue;
      const ExactInt rank = dim_schur_module(lambda, k).value;
      const ExactInt t = threshold_n(lambda, k);
      EXPECT_GE(ExactInt(k) * (t - k), rank);
      EXPECT_LT(ExactInt(k) * (t - 1 - k), rank);
    }
  }
}

TEST(TevelevInequalities, ExampleRows) {
  const InequalityReport r = tevelev_inequalities(Partition{2, 1}, 3, 6);
  ASSERT_EQ(r.rows.size(), 4u);
  const std::vector<std::pair<int, int>> expected{{8, 9}, {2, 4}, {0, 1}, {0, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(r.rows[i].i, static_cast<int>(i));
    EXPECT_EQ(r.rows[i].lhs, expected[i].first);
    EXPECT_EQ(r.rows[i].rhs, expected[i].second);
    EXPECT_TRUE(r.rows[i].holds);
  }
  EXPECT_TRUE(r.all_hold);

  const InequalityReport fail = tevelev_inequalities(Partition{2, 1}, 3, 5);
  EXPECT_FALSE(fail.all_hold);
  EXPECT_FALSE(fail.rows[0].holds);  // 8 > 6
}

TEST(ProofChain, TwoOne) {
  const ProofChainReport r = verify_proof_chain(Partition{2, 1}, 3, 6);
  EXPECT_FALSE(r.steps.empty());
  for (const auto& s : r.steps) EXPECT_TRUE(s.holds) << s.label;
}

TEST(ProofChain, RectangleTerminal) {
  EXPECT_EQ(verify_proof_chain(Partition{2, 2}, 4, 9).terminal_case, "rectangle");
  EXPECT_EQ(code_of([] { verify_proof_chain(Partition{2, 2}, 4, 6); }), ErrorCode::kInvalidRange);
}

TEST(ProofChain, StrippedRowTwoTerminal) {
  const int n = static_cast<int>(threshold_n(Partition{3, 1}, 4).get_si());
  EXPECT_EQ(verify_proof_chain(Partition{3, 1}, 4, n).terminal_case, "stripped-row-2");
}

TEST(ProofChain, LengthEqualsK) {
  EXPECT_EQ(threshold_n(Partition{2, 1, 1}, 3), 4);  // dim 3
  EXPECT_EQ(verify_proof_chain(Partition{2, 1, 1}, 3, 4).terminal_case, "length-equals-k");
}

TEST(ProofChain, HoldsOnEveryMainTheoremInstance) {
  for (const auto& lambda : partitions_up_to(6)) {
    if (lambda.first() < 2 || lambda.length() < 2) continue;
    for (int k = std::max(3, lambda.length()); k <= 6; ++k) {
      const int t = static_cast<int>(threshold_n(lambda, k).get_si());
      for (int n = t; n <= t + 2; ++n) {
        EXPECT_NO_THROW(verify_proof_chain(lambda, k, n)) << lambda << " k=" << k << " n=" << n;
      }
    }
  }
}

TEST(ProofChain, Errors) {
  EXPECT_EQ(code_of([] { verify_proof_chain(Partition{2}, 3, 6); }), ErrorCode::kOutOfTheoremScope);
  EXPECT_EQ(code_of([] { verify_proof_chain(Partition{2, 1}, 3, 5); }), ErrorCode::kInvalidRange);
}

TEST(CrossValidate, AgreesOnExamples) {
  EXPECT_TRUE(cross_validate(Partition{2, 1}, 3, 6).agree);
  EXPECT_TRUE(cross_validate(Partition{2, 1}, 3, 5).agree);
  EXPECT_TRUE(cross_validate(Partition{1, 1, 1}, 5, 7).agree);
  EXPECT_TRUE(cross_validate(Partition{1, 1}, 4, 7).agree);
  const CrossValidation c = cross_validate(Partition{2, 2}, 3, 7);
  EXPECT_TRUE(c.agree);
  EXPECT_TRUE(c.decision.isotropic);
  EXPECT_EQ(*c.decision.threshold_n, 5);
}

TEST(Sweep, SmallGridIsClean) {
  SweepOptions opts;
  opts.max_size = 4;
  opts.max_k = 4;
  opts.max_n = 8;
  opts.with_oracle = true;
  const SweepReport r = run_sweep(opts);
  EXPECT_TRUE(r.clean());
  EXPECT_GT(r.oracle_checked, 0u);
  EXPECT_GT(r.tightness_checked, 0u);
}

}  // namespace
}  // namespace isotropy
