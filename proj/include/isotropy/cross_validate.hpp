#pragma once

#include "isotropy/chern_oracle.hpp"
#include "isotropy/isotropy_engine.hpp"

namespace isotropy {

struct CrossValidation {
  Verdict decision;
  ChernVerdict oracle;
  bool agree = false;
};

/// Runs decide() and the Chern oracle on the same instance. Errors from
/// either side propagate.
CrossValidation cross_validate(const Partition& lambda, int k, int n,
                               const OracleLimits& limits = {});

}  // namespace isotropy
