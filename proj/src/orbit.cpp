#include "xns/orbit.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>

#include "xns/classify.hpp"
#include "xns/cremona.hpp"

namespace xns {

CanonicalForm canonical_form(const DivisorClass& d) {
  CanonicalForm form{d.degree(), d.mults()};
  std::sort(form.m.begin(), form.m.end(), std::greater<>());
  return form;
}

DivisorClass representative(int dim, const CanonicalForm& form) {
  return DivisorClass(dim, form.d, form.m);
}

std::int64_t permutation_count(const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> sorted = m;
  std::sort(sorted.begin(), sorted.end());
  std::int64_t result = 1;
  std::int64_t remaining = std::int64_t(sorted.size());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    result = checked_mul(result, binomial(remaining, std::int64_t(j - i)));
    remaining -= std::int64_t(j - i);
    i = j;
  }
  return result;
}

bool OrbitTable::contains(const CanonicalForm& form) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), form,
      [](const OrbitEntry& e, const CanonicalForm& f) { return e.form < f; });
  return it != entries.end() && it->form == form;
}

std::int64_t OrbitTable::total() const {
  std::int64_t sum = 0;
  for (const OrbitEntry& e : entries) sum = checked_add(sum, e.perms);
  return sum;
}

namespace {

// Expands one canonical form: Cremona at every (n+1)-subset of the sorted
// representative. Subsets of the representative suffice because the
// deduplication already quotients by permutations.
void expand(int n, const CanonicalForm& form, std::int64_t max_degree,
            std::set<CanonicalForm>& seen, std::deque<CanonicalForm>& frontier,
            std::size_t form_budget, bool& complete) {
  int s = int(form.m.size());
  int k = n + 1;
  if (s < k) return;
  DivisorClass rep = representative(n, form);
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  while (true) {
    CanonicalForm image = canonical_form(cremona_apply(rep, IndexSet(pick)));
    if (image.d >= 0 && image.d <= max_degree && !seen.count(image)) {
      if (seen.size() >= form_budget) {
        complete = false;
        return;
      }
      seen.insert(image);
      frontier.push_back(image);
    }
    // next (n+1)-combination of {1..s}
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == s - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
}

}  // namespace

OrbitTable enumerate_orbit(int n, int s, std::int64_t max_degree,
                           std::size_t form_budget) {
  if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
  if (s < 1) throw std::invalid_argument("need at least one point");
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");

  OrbitTable table;
  table.n = n;
  table.s = s;
  table.max_degree = max_degree;

  std::set<CanonicalForm> seen;
  std::deque<CanonicalForm> frontier;
  auto seed = [&](CanonicalForm form) {
    if (form.d <= max_degree && seen.insert(form).second)
      frontier.push_back(std::move(form));
  };
  seed(canonical_form(DivisorClass::exceptional(n, s, 1)));
  if (s >= n) {
    // The hyperplane through n points: for s = n it is not reachable from
    // E_i (no Cremona step exists), so it has to be seeded explicitly.
    std::vector<std::int64_t> m(s, 0);
    std::fill(m.begin(), m.begin() + n, 1);
    seed(canonical_form(DivisorClass(n, 1, std::move(m))));
  }

  while (!frontier.empty() && table.complete) {
    CanonicalForm form = frontier.front();
    frontier.pop_front();
    expand(n, form, max_degree, seen, frontier, form_budget, table.complete);
  }

  table.entries.reserve(seen.size());
  for (const CanonicalForm& form : seen)
    table.entries.push_back({form, permutation_count(form.m)});
  // std::set iterates in (d, lex m) order already; keep the sort explicit so
  // the output contract does not depend on the container choice.
  std::sort(table.entries.begin(), table.entries.end(),
            [](const OrbitEntry& a, const OrbitEntry& b) {
              return a.form < b.form;
            });
  return table;
}

std::map<std::int64_t, std::int64_t> degree_histogram(const OrbitTable& t) {
  std::map<std::int64_t, std::int64_t> hist;
  for (const OrbitEntry& e : t.entries)
    hist[e.form.d] = checked_add(hist[e.form.d], e.perms);
  return hist;
}

VerifyReport verify_table_report(const OrbitTable& t) {
  VerifyReport report;
  auto fail = [&](const OrbitEntry& e, const std::string& why) {
    report.ok = false;
    report.failures.push_back(representative(t.n, e.form).pretty() + ": " + why);
  };
  for (const OrbitEntry& e : t.entries) {
    DivisorClass rep = representative(t.n, e.form);
    if (mukai_pairing(rep, rep) != -1) {
      fail(e, "self-pairing is not -1");
      continue;
    }
    if (adeg(rep) != 1) {
      fail(e, "anticanonical degree is not 1");
      continue;
    }
    ClassificationResult res = classify_minus_one(rep);
    if (res.verdict != Verdict::MinusOneClass) {
      fail(e, std::string("rejected by classification: ") +
                  std::string(to_string(res.verdict)));
      continue;
    }
    if (e.perms != permutation_count(e.form.m))
      fail(e, "stored permutation count is wrong");
  }
  return report;
}

bool verify_table(const OrbitTable& t) { return verify_table_report(t).ok; }

void write_census(const OrbitTable& t, std::ostream& out) {
  out << "{\"n\":" << t.n << ",\"s\":" << t.s << ",\"max_degree\":"
      << t.max_degree << ",\"complete\":" << (t.complete ? "true" : "false")
      << "}\n";
  for (const OrbitEntry& e : t.entries) {
    out << "{\"d\":" << e.form.d << ",\"m\":[";
    for (std::size_t i = 0; i < e.form.m.size(); ++i) {
      if (i) out << ",";
      out << e.form.m[i];
    }
    out << "],\"perms\":" << e.perms << "}\n";
  }
}

OrbitTable read_census(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("census file is empty");
  nlohmann::json header = nlohmann::json::parse(line);
  if (!header.contains("n") || !header.contains("s") ||
      !header.contains("max_degree") || !header.contains("complete"))
    throw std::invalid_argument("census header is missing required keys");

  OrbitTable table;
  table.n = header["n"].get<int>();
  table.s = header["s"].get<int>();
  table.max_degree = header["max_degree"].get<std::int64_t>();
  table.complete = header["complete"].get<bool>();

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    if (!j.contains("d") || !j.contains("m") || !j.contains("perms"))
      throw std::invalid_argument("census entry is missing required keys");
    OrbitEntry e;
    e.form.d = j["d"].get<std::int64_t>();
    e.form.m = j["m"].get<std::vector<std::int64_t>>();
    if (std::int64_t(e.form.m.size()) != table.s)
      throw std::invalid_argument("census entry has wrong vector length");
    if (!std::is_sorted(e.form.m.rbegin(), e.form.m.rend()))
      throw std::invalid_argument("census multiplicities must be descending");
    e.perms = j["perms"].get<std::int64_t>();
    table.entries.push_back(std::move(e));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const OrbitEntry& a, const OrbitEntry& b) {
              return a.form < b.form;
            });
  return table;
}

}  // namespace xns
