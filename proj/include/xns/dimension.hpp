#pragma once

#include <cstdint>
#include <vector>

#include "xns/divisor.hpp"

namespace xns {

// One stratum of the expected-dimension count on X_{n,s} with s <= n+3: the
// cone over the t-secant variety of the rational normal curve through the
// n+3 points, with vertex spanned by the points indexed by I. It has
// dimension r = |I| + 2t - 1 and is contained in the base locus of D with
// multiplicity k = t*(sum of all m_i) + sum_{i in I} m_i
// - ((n+1)t + |I| - 1)*d.
struct ConeStratum {
  std::vector<int> I;  // 1-based subset of {1..n+3}, possibly empty
  int t = 0;
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t term = 0;  // binomial(n + k - r - 1, n)
  int sign = 1;           // (-1)^|I|
};

// Invariants of a single stratum. Multiplicities are zero-padded to length
// n+3; requires s <= n+3, 0 <= t with |I| <= n - 2t.
ConeStratum stratum_data(const DivisorClass& d, const std::vector<int>& I,
                         int t);

// Conjectural dimension of H^0: the signed sum of stratum terms over all
// I subset {1..n+3} and 0 <= t <= l + eps (n = 2l + eps) with
// 0 <= |I| <= n - 2t. Requires s <= n+3 and m_i >= 0.
std::int64_t rnc_expected_dim(const DivisorClass& d);

// Every admissible stratum, in (t, subset) enumeration order.
std::vector<ConeStratum> rnc_strata(const DivisorClass& d);

// Conjectural planar count chi(D) + sum binom(k_C, 2) over (-1) curves C
// with k_C = -<D,C> > 0, enumerated up to max_degree. Requires n = 2 and
// m_i >= 0.
std::int64_t ghh_expected_dim(const DivisorClass& d, std::int64_t max_degree);

}  // namespace xns
