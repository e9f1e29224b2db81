#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "xns/divisor.hpp"

namespace xns {

// Permutation-invariant key for a divisor class: degree plus the
// multiplicity vector sorted descending. Two classes share a canonical form
// exactly when they differ by a permutation of the points, and permutations
// are Weyl group elements, so orbits are unions of canonical forms.
struct CanonicalForm {
  std::int64_t d = 0;
  std::vector<std::int64_t> m;  // descending; exceptional -1 entries sort last

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const DivisorClass& d);
DivisorClass representative(int dim, const CanonicalForm& form);

// Number of distinct orderings of the multiplicity vector: the multinomial
// coefficient of its value groups over s.
std::int64_t permutation_count(const std::vector<std::int64_t>& m);

struct OrbitEntry {
  CanonicalForm form;
  std::int64_t perms = 0;

  bool operator==(const OrbitEntry&) const = default;
};

// Census of the Weyl orbit of an exceptional divisor on X_{n,s}, restricted
// to degrees 0..max_degree. Entries are sorted by (d, lexicographic m) so
// the table is byte-stable across runs.
struct OrbitTable {
  int n = 2;
  int s = 0;
  std::int64_t max_degree = 0;
  bool complete = true;
  std::vector<OrbitEntry> entries;

  bool contains(const CanonicalForm& form) const;
  std::int64_t total() const;
};

// Breadth-first closure under Cremona transformations at every (n+1)-subset,
// starting from the exceptional class (and the hyperplane through n points
// when s >= n), deduplicated by canonical form. Images with d < 0 or
// d > max_degree are pruned; every (-1) class of degree <= max_degree admits
// a degree-monotone reduction path, so the bounded table is exact, not
// approximate. A table that hits form_budget is returned with
// complete = false.
OrbitTable enumerate_orbit(int n, int s, std::int64_t max_degree,
                           std::size_t form_budget = 1'000'000);

// Class counts (with permutations) per degree.
std::map<std::int64_t, std::int64_t> degree_histogram(const OrbitTable& t);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks that every entry is a genuine (-1) class: self-pairing -1, adeg 1,
// accepted by classify_minus_one, with a correct permutation count.
VerifyReport verify_table_report(const OrbitTable& t);
bool verify_table(const OrbitTable& t);

// JSON Lines census: header line {"n":..,"s":..,"max_degree":..,"complete":..}
// followed by one {"d":..,"m":[..],"perms":..} line per entry in table order.
void write_census(const OrbitTable& t, std::ostream& out);
OrbitTable read_census(std::istream& in);

}  // namespace xns
