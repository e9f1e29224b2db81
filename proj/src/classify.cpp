#include "xns/classify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "xns/orbit.hpp"

namespace xns {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::MinusOneClass: return "MinusOneClass";
    case Verdict::NotNumerical: return "NotNumerical";
    case Verdict::NegativeMultiplicity: return "NegativeMultiplicity";
    case Verdict::MultiplicityExceedsDegree: return "MultiplicityExceedsDegree";
    case Verdict::StuckNoNoetherSet: return "StuckNoNoetherSet";
    case Verdict::DegenerateDegree: return "DegenerateDegree";
  }
  return "?";
}

bool numeric_minus_one(const DivisorClass& d) {
  return mukai_pairing(d, d) == -1 && adeg(d) == 1;
}

namespace {

bool is_exceptional_pattern(const DivisorClass& d) {
  if (d.degree() != 0) return false;
  int negative_ones = 0;
  for (std::int64_t m : d.mults()) {
    if (m == -1)
      ++negative_ones;
    else if (m != 0)
      return false;
  }
  return negative_ones == 1;
}

bool is_hyperplane_pattern(const DivisorClass& d) {
  if (d.degree() != 1) return false;
  std::int64_t units = 0;
  for (std::int64_t m : d.mults()) {
    if (m == 1)
      ++units;
    else if (m != 0)
      return false;
  }
  return units == d.dim();
}

}  // namespace

ClassificationResult classify_minus_one(const DivisorClass& input) {
  if (input.points() < 1)
    throw std::invalid_argument("classification needs at least one point");

  ClassificationResult result;
  WeylWord witness;
  DivisorClass current = input;
  bool can_step = current.points() >= std::size_t(current.dim()) + 1;

  while (true) {
    // Terminal patterns first: the exceptional pattern carries the only
    // admissible negative entry, and the hyperplane pattern is the base
    // case when no Cremona step exists. With s >= n+1 the hyperplane is
    // still one step away from an exceptional class, so reduction continues.
    if (is_exceptional_pattern(current) ||
        (!can_step && is_hyperplane_pattern(current))) {
      result.verdict = Verdict::MinusOneClass;
      result.witness = std::move(witness);
      result.terminal = std::move(current);
      return result;
    }
    if (!numeric_minus_one(current)) {
      result.verdict = Verdict::NotNumerical;
      return result;
    }
    if (std::any_of(current.mults().begin(), current.mults().end(),
                    [](std::int64_t m) { return m < 0; })) {
      result.verdict = Verdict::NegativeMultiplicity;
      return result;
    }
    if (std::any_of(current.mults().begin(), current.mults().end(),
                    [&](std::int64_t m) { return m > current.degree(); })) {
      // Non-effectivity signal: no effective class keeps a multiplicity
      // above its degree, and Cremona preserves effectivity.
      result.verdict = Verdict::MultiplicityExceedsDegree;
      return result;
    }
    if (current.degree() <= 0) {
      result.verdict = Verdict::DegenerateDegree;
      return result;
    }
    if (!can_step)
      throw std::invalid_argument(
          "reduction requires a Cremona step but s < n+1");
    std::optional<IndexSet> I = noether_indices(current);
    if (!I) {
      result.verdict = Verdict::StuckNoNoetherSet;
      return result;
    }
    current = cremona_apply(current, *I);
    witness.steps.push_back(std::move(*I));
    ++result.steps;
  }
}

namespace {

// Minimal pairing of D against any permutation of the canonical form: by the
// rearrangement inequality, put the largest multiplicities of the form on
// the largest multiplicities of D. Returns that assignment as a divisor.
DivisorClass minimizing_assignment(const DivisorClass& d,
                                   const CanonicalForm& form) {
  std::vector<int> order(d.points());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return d.mults()[a] > d.mults()[b];
  });
  std::vector<std::int64_t> assigned(d.points(), 0);
  for (std::size_t rank = 0; rank < form.m.size(); ++rank)
    assigned[order[rank]] = form.m[rank];
  return DivisorClass(d.dim(), form.d, std::move(assigned));
}

}  // namespace

namespace {

// The obstruction scan is often called for many classes on the same
// X_{n,s}; memoize the censuses it enumerates. Tables are immutable once
// built, so sharing them is safe.
std::shared_ptr<const OrbitTable> cached_orbit(int n, int s,
                                               std::int64_t bound) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::int64_t>,
                  std::shared_ptr<const OrbitTable>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(n, s, bound);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const OrbitTable>(enumerate_orbit(n, s, bound));
  cache.emplace(key, table);
  return table;
}

}  // namespace

std::optional<Obstruction> pairing_obstruction(const DivisorClass& d,
                                               std::int64_t max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  std::int64_t bound = std::min(d.degree() - 1, max_degree);
  if (bound < 0 || d.points() == 0) return std::nullopt;
  std::shared_ptr<const OrbitTable> table =
      cached_orbit(d.dim(), int(d.points()), bound);
  for (const OrbitEntry& entry : table->entries) {
    DivisorClass candidate = minimizing_assignment(d, entry.form);
    std::int64_t pairing = mukai_pairing(d, candidate);
    if (pairing < 0)
      return Obstruction{std::move(candidate), pairing, -pairing};
  }
  return std::nullopt;
}

PeelResult base_locus_peel(const DivisorClass& d, std::int64_t max_degree,
                           int max_iterations) {
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be >= 1");
  PeelResult result{{}, d, false};
  while (true) {
    std::optional<Obstruction> obs =
        pairing_obstruction(result.residual, max_degree);
    if (!obs) return result;
    if (int(result.components.size()) >= max_iterations) {
      result.budget_exhausted = true;
      return result;
    }
    result.residual = result.residual - obs->k * obs->obstructor;
    result.components.emplace_back(std::move(obs->obstructor), obs->k);
  }
}

namespace {

std::optional<IndexSet> max_multiplicity_set(const DivisorClass& d) {
  if (d.points() < std::size_t(d.dim()) + 1) return std::nullopt;
  std::vector<int> order(d.points());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return d.mults()[a - 1] > d.mults()[b - 1];
  });
  order.resize(std::size_t(d.dim()) + 1);
  return IndexSet(std::move(order));
}

}  // namespace

ReduceResult cremona_reduce(const DivisorClass& d) {
  ReduceResult result{d, {}, true};
  while (true) {
    std::optional<IndexSet> I = max_multiplicity_set(result.reduced);
    if (!I) return result;
    std::int64_t k = excess(result.reduced, *I);
    if (k <= 0) return result;
    if (result.reduced.degree() - k < 0) {
      // The next step would push the degree negative; only non-effective
      // inputs reach this state, so report a partial reduction.
      result.complete = false;
      return result;
    }
    result.reduced = cremona_apply(result.reduced, *I);
    result.word.steps.insert(result.word.steps.begin(), std::move(*I));
  }
}

bool dolgachev_shape_check(const DivisorClass& d) {
  std::int64_t r = mukai_pairing(d, d);
  if (r < -4 || r > -2)
    throw std::invalid_argument("self-pairing must be -4, -3 or -2");
  if (adeg(d) != -2 - r)
    throw std::invalid_argument("anticanonical degree must equal -2 - <D,D>");
  for (std::int64_t m : d.mults())
    if (m < 0 || m > d.degree())
      throw std::invalid_argument("requires 0 <= m_i <= d");

  // The certifying shape may appear before the reduction terminates (its
  // maximal excess is always positive), so test it ahead of every step.
  DivisorClass current = d;
  while (true) {
    if (current.degree() == 1) {
      std::int64_t units = 0;
      for (std::int64_t m : current.mults()) units += (m == 1);
      if (units >= current.dim() + 1) return true;
    }
    std::optional<IndexSet> I = max_multiplicity_set(current);
    if (!I) return false;
    std::int64_t k = excess(current, *I);
    if (k <= 0) return false;
    if (current.degree() - k < 0) return false;
    current = cremona_apply(current, *I);
  }
}

}  // namespace xns
