#include "isotropy/chern_oracle.hpp"

#include "isotropy/errors.hpp"
#include "isotropy/schur_eval.hpp"

namespace isotropy {

std::string_view shortcut_name(ChernShortcut shortcut) {
  switch (shortcut) {
    case ChernShortcut::kNone: return "none";
    case ChernShortcut::kDegreeExceedsTop: return "degree-exceeds-top";
    case ChernShortcut::kEmptyWeights: return "empty-weights";
  }
  return "none";
}

namespace {

void check_bundle(const Partition& lambda, int k) {
  if (lambda.length() > k) {
    throw Error(ErrorCode::kZeroBundle, "S_" + lambda.to_string() + " of a rank-" +
                                            std::to_string(k) + " bundle is zero");
  }
}

ExactInt cap_of(std::size_t value) { return ExactInt(std::to_string(value)); }

}  // namespace

ChernVerdict top_chern_nonzero(const Partition& lambda, int k, int n,
                               const OracleLimits& limits) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidRange, "need 1 <= k <= n, got k=" + std::to_string(k) +
                                              ", n=" + std::to_string(n));
  }
  check_bundle(lambda, k);

  ChernVerdict verdict;
  verdict.degree = dim_schur_module(lambda, k).value;
  verdict.surviving.num_vars = k;

  if (verdict.degree > ExactInt(k) * (n - k)) {
    verdict.shortcut = ChernShortcut::kDegreeExceedsTop;
    return verdict;
  }
  if (lambda.empty()) {
    verdict.shortcut = ChernShortcut::kEmptyWeights;
    return verdict;
  }

  // Monomials of the running product stay in [0, n-1]^k.
  ExactInt worst = monomial_count(verdict.degree.get_si() + k * (k - 1) / 2, k);
  ExactInt box_size;
  mpz_ui_pow_ui(box_size.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(k));
  if (box_size < worst) worst = box_size;
  if (worst > cap_of(limits.max_terms)) {
    throw Error(ErrorCode::kDegreeGuard,
                "top Chern class of degree " + to_decimal(verdict.degree) + " in " +
                    std::to_string(k) + " roots may hold " + to_decimal(worst) +
                    " terms, over the cap of " + std::to_string(limits.max_terms));
  }

  const auto weights = weight_vectors(lambda, k, EnumerationLimits{limits.max_tableaux});
  SymPoly running = vandermonde(k);
  for (const auto& w : weights) {
    running = running.times_linear_form(w.counts, n - 1);
    if (running.is_zero()) break;
  }
  verdict.surviving = read_alternant(running);
  verdict.nonzero = !verdict.surviving.is_zero();
  return verdict;
}

SchurExpansion top_chern_class_expansion(const Partition& lambda, int k,
                                         const OracleLimits& limits) {
  if (k < 1) throw Error(ErrorCode::kInvalidRange, "need k >= 1");
  check_bundle(lambda, k);
  const auto weights = weight_vectors(lambda, k, EnumerationLimits{limits.max_tableaux});
  return schur_expand(product_of_linear_forms(weights, k, ProductLimits{limits.max_terms}));
}

}  // namespace isotropy
