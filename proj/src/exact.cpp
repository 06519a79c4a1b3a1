#include "isotropy/exact.hpp"

namespace isotropy {

ExactInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  ExactInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

ExactInt ceil_of(const ExactRatio& value) {
  ExactInt result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

}  // namespace isotropy
