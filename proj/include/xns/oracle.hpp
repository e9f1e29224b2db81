#pragma once

#include <cstdint>
#include <vector>

#include "xns/cremona.hpp"
#include "xns/divisor.hpp"

namespace xns {

inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

struct OracleOptions {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  int trials = 3;
  int threads = 1;
};

// The exact linear system expressing "degree d, multiplicity m_i at p_i"
// over F_prime: one column per monomial of degree <= d in n affine
// variables, binom(m_i+n-1, n) derivative-vanishing rows per point.
struct InterpolationSystem {
  int n = 2;
  std::int64_t d = 0;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::vector<std::uint32_t>> points;  // affine, one per m_i > 0
  std::vector<std::int64_t> mults;                 // positive entries only

  std::size_t columns() const;
  std::size_t rows() const;
};

// Samples the points of the system uniformly at random away from the
// coordinate hyperplanes, deterministically from the seed.
InterpolationSystem sample_system(const DivisorClass& d, std::uint32_t prime,
                                  std::uint64_t seed);

// Rank of the condition matrix by exact Gaussian elimination mod prime.
std::size_t system_rank(const InterpolationSystem& system);

struct OracleResult {
  std::int64_t h0 = 0;
  int trials = 0;
  // True when every trial produced the same rank. Any sample can only
  // understate the rank, so h0 = columns - max(rank) is exact with
  // probability exponentially close to 1 in the trial count.
  bool confident = true;
};

// dim H^0 of the linear system of D, computed as columns - max rank over
// independently sampled trials (trial i uses seed + i). Requires d >= 0,
// m_i >= 0 and prime > d * max(m_i) so no derivative factor vanishes mod p.
OracleResult h0_dimension(const DivisorClass& d, const OracleOptions& options = {});

// Checks that a Cremona transformation preserves dim H^0. Both sides must
// have nonnegative degree and multiplicities.
bool cremona_h0_check(const DivisorClass& d, const IndexSet& I,
                      const OracleOptions& options = {});

}  // namespace xns
