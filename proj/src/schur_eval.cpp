#include "isotropy/schur_eval.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "isotropy/errors.hpp"

namespace isotropy {

namespace {

void check_n(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidRange, "n must be >= 0, got " + std::to_string(n));
}

class RecurrenceCache {
 public:
  ExactInt evaluate(const Partition& lambda, int n) {
    if (lambda.empty()) return 1;
    if (n == 0 || lambda.length() > n) return 0;
    const Key key{lambda, n};
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    ExactInt total = 0;
    for (const auto& mu : horizontal_strip_predecessors(lambda)) total += evaluate(mu, n - 1);
    std::unique_lock lock(mutex_);
    memo_.emplace(key, total);
    return total;
  }

 private:
  using Key = std::pair<Partition, int>;
  std::shared_mutex mutex_;
  std::map<Key, ExactInt> memo_;
};

RecurrenceCache& recurrence_cache() {
  static RecurrenceCache cache;
  return cache;
}

}  // namespace

ExactInt schur_ones_hook_content(const Partition& lambda, int n) {
  check_n(n);
  ExactRatio product = 1;
  for (const Box& b : boxes_of(lambda)) {
    product *= fraction(n + content(lambda, b), hook_length(lambda, b));
  }
  product.canonicalize();
  if (product.get_den() != 1) {
    throw Error(ErrorCode::kInternalNonIntegral,
                "hook-content product for " + lambda.to_string() + " at n=" +
                    std::to_string(n) + " is " + to_decimal(product));
  }
  return product.get_num();
}

ExactInt schur_ones_recurrence(const Partition& lambda, int n) {
  check_n(n);
  return recurrence_cache().evaluate(lambda, n);
}

DimensionValue dim_schur_module(const Partition& lambda, int n) {
  DimensionValue result{schur_ones_hook_content(lambda, n), lambda, n};
  if (lambda.size() <= kCrossCheckBound && n <= kCrossCheckBound) {
    const ExactInt check = schur_ones_recurrence(lambda, n);
    if (check != result.value) {
      throw Error(ErrorCode::kInternalMismatch,
                  "dim S_" + lambda.to_string() + " C^" + std::to_string(n) +
                      ": hook-content " + to_decimal(result.value) + " vs recurrence " +
                      to_decimal(check));
    }
  }
  return result;
}

ExactRatio hook_shape_closed_form(int d, int n) {
  ExactRatio value = fraction(ExactInt(d) * (n - 1), d + 1);
  value *= ExactRatio(binomial(n + d - 1, d));
  value.canonicalize();
  return value;
}

ExactRatio two_row_rectangle_closed_form(int d, int n) {
  const ExactInt b = binomial(n + d - 2, d);
  ExactRatio value = fraction(n + d - 1, ExactInt(n - 1) * (d + 1));
  value *= ExactRatio(b * b);
  value.canonicalize();
  return value;
}

}  // namespace isotropy
