#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xns/cremona.hpp"
#include "xns/divisor.hpp"

namespace xns::test {

// Deterministic helpers for hand-rolled property tests. mt19937_64 output is
// pinned by the standard, so every run sees the same cases.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  DivisorClass divisor(int n, std::size_t s, std::int64_t d_lo,
                       std::int64_t d_hi, std::int64_t m_lo,
                       std::int64_t m_hi) {
    std::vector<std::int64_t> m(s);
    for (auto& mi : m) mi = range(m_lo, m_hi);
    return DivisorClass(n, range(d_lo, d_hi), std::move(m));
  }

  // Uniform (n+1)-subset of {1..s}.
  IndexSet index_set(int n, std::size_t s) {
    std::vector<int> pool(s);
    for (std::size_t i = 0; i < s; ++i) pool[i] = int(i) + 1;
    for (std::size_t i = 0; i < std::size_t(n) + 1; ++i) {
      std::size_t j = std::size_t(range(std::int64_t(i), std::int64_t(s) - 1));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(std::size_t(n) + 1);
    return IndexSet(std::move(pool));
  }

  WeylWord word(int n, std::size_t s, int max_len) {
    WeylWord w;
    int len = int(range(0, max_len));
    for (int i = 0; i < len; ++i) w.steps.push_back(index_set(n, s));
    return w;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace xns::test
