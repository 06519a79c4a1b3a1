#include "isotropy/cross_validate.hpp"

namespace isotropy {

CrossValidation cross_validate(const Partition& lambda, int k, int n, const OracleLimits& limits) {
  CrossValidation out;
  out.decision = decide(lambda, k, n, DecideOptions{limits});
  out.oracle = top_chern_nonzero(lambda, k, n, limits);
  out.agree = out.decision.isotropic == out.oracle.nonzero;
  return out;
}

}  // namespace isotropy
