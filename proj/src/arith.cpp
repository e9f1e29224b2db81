#include "xns/arith.hpp"

#include <algorithm>

namespace xns {

std::int64_t binomial(std::int64_t a, std::int64_t k) {
  if (k < 0 || a < k) return 0;
  k = std::min(k, a - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (a - k + i) is divisible by i at every step, so the division
    // below is exact and intermediate values never exceed the final binomial
    // by more than a factor of (a - k + i).
    result = checked_mul(result, a - k + i) / i;
  }
  return result;
}

}  // namespace xns
