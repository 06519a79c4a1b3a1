#pragma once

#include "isotropy/exact.hpp"
#include "isotropy/partition.hpp"

namespace isotropy {

/// dim S_lambda C^n together with the arguments that produced it.
struct DimensionValue {
  ExactInt value;
  Partition lambda;
  int n = 0;
};

/// s_lambda(1^n) by the hook-content product, in exact rationals.
ExactInt schur_ones_hook_content(const Partition& lambda, int n);

/// s_lambda(1^n) by the horizontal-strip branching rule
///   s_lambda(1^n) = sum over strips lambda/mu of s_mu(1^(n-1)),
/// memoized on (mu, n) in a process-wide cache.
ExactInt schur_ones_recurrence(const Partition& lambda, int n);

/// Largest |lambda| and n for which dim_schur_module also runs the recurrence
/// and insists on agreement.
inline constexpr int kCrossCheckBound = 8;

/// Hook-content value, cross-checked against the recurrence for small inputs.
/// Throws InternalMismatch if the two ever disagree.
DimensionValue dim_schur_module(const Partition& lambda, int n);

/// s_(d,1)(1^n) = d(n-1)/(d+1) * C(n+d-1, d), for d >= 1.
ExactRatio hook_shape_closed_form(int d, int n);

/// s_(d,d)(1^n) = (n+d-1)/((n-1)(d+1)) * C(n+d-2, d)^2, for n >= 2.
ExactRatio two_row_rectangle_closed_form(int d, int n);

}  // namespace isotropy
