#pragma once

#include <cstddef>
#include <string_view>

#include "isotropy/exact.hpp"
#include "isotropy/partition.hpp"
#include "isotropy/sympoly.hpp"
#include "isotropy/tableau.hpp"

namespace isotropy {

enum class ChernShortcut {
  kNone,
  kDegreeExceedsTop,  // rank of S_lambda R* is larger than dim Gr(k,n)
  kEmptyWeights,      // lambda is empty: trivial line bundle, zero weight
};

std::string_view shortcut_name(ChernShortcut shortcut);

/// Whether c_top(S_lambda R*) survives in H*(Gr(k,n)).
struct ChernVerdict {
  bool nonzero = false;
  ExactInt degree;              // rank of the bundle, dim S_lambda C^k
  SchurExpansion surviving;     // Schur classes with mu inside the k x (n-k) box
  ChernShortcut shortcut = ChernShortcut::kNone;
};

struct OracleLimits {
  std::size_t max_tableaux = 1'000'000;
  std::size_t max_terms = 5'000'000;
};

/// Expands prod_T (sum_i T(i) x_i) over the SSYT T of shape lambda with
/// labels <= k, with x_i the Chern roots of R*, and keeps the Schur classes
/// s_mu with mu_1 <= n - k (the rest vanish on Gr(k,n)).
///
/// The Vandermonde factor is applied first so that every monomial whose
/// exponent exceeds n - 1 can be discarded as soon as it appears: later
/// factors only raise exponents, and a surviving x^(mu + delta) has all
/// exponents <= n - 1.
///
/// Throws InvalidRange (k < 1 or k > n), ZeroBundle (length > k), or
/// DegreeGuard / SizeGuard when the limits are exceeded.
ChernVerdict top_chern_nonzero(const Partition& lambda, int k, int n,
                               const OracleLimits& limits = {});

/// The unreduced Schur expansion of the top Chern class of S_lambda R* on
/// Gr(k, infinity); used to cross-check the truncated computation.
SchurExpansion top_chern_class_expansion(const Partition& lambda, int k,
                                         const OracleLimits& limits = {});

}  // namespace isotropy
