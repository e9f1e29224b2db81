#include "xns/oracle.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace xns {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;  // p < 2^32, so the product fits in 64 bits
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  // Deterministic Miller-Rabin; this witness set is exact below 3.3 * 10^24.
  std::uint32_t d = p - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool witness = true;
    for (int i = 0; i < r - 1 && witness; ++i) {
      x = mulmod(x, x, p);
      if (x == p - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// Exponent vectors of all monomials of degree <= d in n variables, in a
// fixed recursive order.
std::vector<std::vector<int>> monomials(int n, std::int64_t d) {
  std::vector<std::vector<int>> result;
  std::vector<int> current(std::size_t(n), 0);
  auto rec = [&](auto&& self, int var, std::int64_t remaining) -> void {
    if (var == n) {
      result.push_back(current);
      return;
    }
    for (std::int64_t e = 0; e <= remaining; ++e) {
      current[std::size_t(var)] = int(e);
      self(self, var + 1, remaining - e);
    }
    current[std::size_t(var)] = 0;
  };
  rec(rec, 0, d);
  return result;
}

// Derivative orders beta with |beta| < m in n variables.
std::vector<std::vector<int>> derivative_orders(int n, std::int64_t m) {
  return monomials(n, m - 1);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>>& rows,
                       std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint64_t inv = powmod(rows[rank][col], p - 2, p);
    for (std::size_t j = col; j < cols; ++j)
      rows[rank][j] = mulmod(rows[rank][j], inv, p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      std::uint64_t factor = rows[i][col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        std::uint64_t sub = mulmod(factor, rows[rank][j], p);
        rows[i][j] = (rows[i][j] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

void check_preconditions(const DivisorClass& d, std::uint32_t prime) {
  if (d.degree() < 0)
    throw std::invalid_argument("oracle requires a nonnegative degree");
  std::int64_t max_mult = 1;
  for (std::int64_t m : d.mults()) {
    if (m < 0)
      throw std::invalid_argument("oracle requires nonnegative multiplicities");
    max_mult = std::max(max_mult, m);
  }
  if (!is_prime(prime))
    throw std::invalid_argument("field modulus must be prime");
  if (std::int64_t(prime) <= checked_mul(d.degree(), max_mult))
    throw std::invalid_argument("prime must exceed d * max(m_i)");
}

}  // namespace

std::size_t InterpolationSystem::columns() const {
  return std::size_t(binomial(d + n, n));
}

std::size_t InterpolationSystem::rows() const {
  std::size_t total = 0;
  for (std::int64_t m : mults)
    total += std::size_t(binomial(m + n - 1, n));
  return total;
}

InterpolationSystem sample_system(const DivisorClass& d, std::uint32_t prime,
                                  std::uint64_t seed) {
  check_preconditions(d, prime);
  InterpolationSystem system;
  system.n = d.dim();
  system.d = d.degree();
  system.prime = prime;
  system.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(1, prime - 1);
  for (std::int64_t m : d.mults()) {
    if (m == 0) continue;
    std::vector<std::uint32_t> point(std::size_t(d.dim()));
    for (auto& c : point) c = coord(rng);
    system.points.push_back(std::move(point));
    system.mults.push_back(m);
  }
  return system;
}

std::size_t system_rank(const InterpolationSystem& system) {
  const std::uint64_t p = system.prime;
  const auto basis = monomials(system.n, system.d);
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(system.rows());

  for (std::size_t pt = 0; pt < system.points.size(); ++pt) {
    const auto& point = system.points[pt];
    // Powers of each coordinate up to the degree.
    std::vector<std::vector<std::uint64_t>> powers(point.size());
    for (std::size_t v = 0; v < point.size(); ++v) {
      powers[v].resize(std::size_t(system.d) + 1);
      powers[v][0] = 1;
      for (std::size_t e = 1; e <= std::size_t(system.d); ++e)
        powers[v][e] = mulmod(powers[v][e - 1], point[v], p);
    }
    for (const auto& beta : derivative_orders(system.n, system.mults[pt])) {
      std::vector<std::uint64_t> row(basis.size(), 0);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& alpha = basis[col];
        std::uint64_t coeff = 1;
        bool zero = false;
        for (std::size_t v = 0; v < alpha.size() && !zero; ++v) {
          if (beta[v] > alpha[v]) {
            zero = true;
            break;
          }
          // falling factorial alpha_v * (alpha_v-1) * ... from the
          // derivative; every factor is <= d < p, hence nonzero mod p
          for (int f = alpha[v]; f > alpha[v] - beta[v]; --f)
            coeff = mulmod(coeff, std::uint64_t(f), p);
          coeff = mulmod(coeff, powers[v][std::size_t(alpha[v] - beta[v])], p);
        }
        row[col] = zero ? 0 : coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return rank_mod_p(rows, basis.size(), p);
}

OracleResult h0_dimension(const DivisorClass& d, const OracleOptions& options) {
  check_preconditions(d, options.prime);
  if (options.trials < 1)
    throw std::invalid_argument("need at least one trial");

  std::vector<std::size_t> ranks(std::size_t(options.trials), 0);
  auto run_trial = [&](int trial) {
    InterpolationSystem system =
        sample_system(d, options.prime, options.seed + std::uint64_t(trial));
    ranks[std::size_t(trial)] = system_rank(system);
  };

  int workers = std::min(std::max(options.threads, 1), options.trials);
  if (workers <= 1) {
    for (int t = 0; t < options.trials; ++t) run_trial(t);
  } else {
    // Trials are independent; results land in preassigned slots and are
    // merged by max, so scheduling cannot change the outcome.
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int t = w; t < options.trials; t += workers) run_trial(t);
      });
    for (auto& worker : pool) worker.join();
  }

  std::size_t best = *std::max_element(ranks.begin(), ranks.end());
  OracleResult result;
  result.h0 = std::int64_t(binomial(d.degree() + d.dim(), d.dim())) -
              std::int64_t(best);
  result.trials = options.trials;
  result.confident =
      std::all_of(ranks.begin(), ranks.end(),
                  [&](std::size_t r) { return r == best; });
  return result;
}

bool cremona_h0_check(const DivisorClass& d, const IndexSet& I,
                      const OracleOptions& options) {
  DivisorClass image = cremona_apply(d, I);
  if (image.degree() < 0)
    throw std::invalid_argument("transformed class has negative degree");
  for (std::int64_t m : image.mults())
    if (m < 0)
      throw std::invalid_argument(
          "transformed class has a negative multiplicity");
  return h0_dimension(d, options).h0 == h0_dimension(image, options).h0;
}

}  // namespace xns
