#include "xns/dimension.hpp"

#include <algorithm>

#include "xns/orbit.hpp"

namespace xns {

namespace {

std::vector<std::int64_t> padded_mults(const DivisorClass& d) {
  if (d.points() > std::size_t(d.dim()) + 3)
    throw std::invalid_argument("expected-dimension count needs s <= n+3");
  std::vector<std::int64_t> m = d.mults();
  m.resize(std::size_t(d.dim()) + 3, 0);
  return m;
}

ConeStratum make_stratum(const DivisorClass& d,
                         const std::vector<std::int64_t>& m,
                         std::vector<int> I, int t) {
  std::int64_t n = d.dim();
  std::int64_t size = std::int64_t(I.size());
  ConeStratum stratum;
  stratum.t = t;
  stratum.r = size + 2 * t - 1;
  std::int64_t total = 0;
  for (std::int64_t mi : m) total = checked_add(total, mi);
  std::int64_t k = checked_mul(t, total);
  for (int i : I) k = checked_add(k, m[std::size_t(i) - 1]);
  std::int64_t weight = checked_add(checked_mul(n + 1, t), size - 1);
  k = checked_sub(k, checked_mul(weight, d.degree()));
  stratum.k = k;
  stratum.term = binomial(checked_sub(checked_add(n, k), stratum.r + 1), n);
  stratum.sign = (size % 2 == 0) ? 1 : -1;
  stratum.I = std::move(I);
  return stratum;
}

}  // namespace

ConeStratum stratum_data(const DivisorClass& d, const std::vector<int>& I,
                         int t) {
  std::vector<std::int64_t> m = padded_mults(d);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  if (std::int64_t(I.size()) > d.dim() - 2 * t)
    throw std::invalid_argument("stratum needs |I| <= n - 2t");
  std::vector<int> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("stratum index set has a repeated index");
  if (!sorted.empty() &&
      (sorted.front() < 1 || sorted.back() > d.dim() + 3))
    throw std::invalid_argument("stratum indices must lie in 1..n+3");
  return make_stratum(d, m, std::move(sorted), t);
}

std::vector<ConeStratum> rnc_strata(const DivisorClass& d) {
  std::vector<std::int64_t> m = padded_mults(d);
  for (std::int64_t mi : d.mults())
    if (mi < 0)
      throw std::invalid_argument(
          "expected-dimension count needs nonnegative multiplicities");
  int n = d.dim();
  int l = n / 2;
  int eps = n % 2;
  int slots = n + 3;

  std::vector<ConeStratum> strata;
  for (int t = 0; t <= l + eps; ++t) {
    int max_size = n - 2 * t;
    if (max_size < 0) continue;
    // Subsets of {1..n+3} by bitmask; k depends on which indices are chosen,
    // not only on |I|.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots); ++mask) {
      int size = __builtin_popcountll(mask);
      if (size > max_size) continue;
      std::vector<int> I;
      I.reserve(std::size_t(size));
      for (int bit = 0; bit < slots; ++bit)
        if (mask & (std::uint64_t(1) << bit)) I.push_back(bit + 1);
      strata.push_back(make_stratum(d, m, std::move(I), t));
    }
  }
  return strata;
}

std::int64_t rnc_expected_dim(const DivisorClass& d) {
  std::int64_t sum = 0;
  for (const ConeStratum& stratum : rnc_strata(d))
    sum = checked_add(sum, stratum.sign > 0 ? stratum.term
                                            : checked_sub(0, stratum.term));
  return sum;
}

std::int64_t ghh_expected_dim(const DivisorClass& d, std::int64_t max_degree) {
  if (d.dim() != 2)
    throw std::invalid_argument("the planar count requires n = 2");
  for (std::int64_t m : d.mults())
    if (m < 0)
      throw std::invalid_argument(
          "the planar count needs nonnegative multiplicities");
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");

  std::int64_t sum = chi(d);
  if (d.points() == 0) return sum;

  OrbitTable table = enumerate_orbit(2, int(d.points()), max_degree);
  for (const OrbitEntry& entry : table.entries) {
    // Walk every distinct ordering of the curve's multiplicities; each one
    // is a different (-1) curve through a different subset of the points.
    std::vector<std::int64_t> perm = entry.form.m;
    std::sort(perm.begin(), perm.end());
    do {
      DivisorClass curve(2, entry.form.d, perm);
      std::int64_t pairing = mukai_pairing(d, curve);
      if (pairing < 0) sum = checked_add(sum, binomial(-pairing, 2));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return sum;
}

}  // namespace xns
