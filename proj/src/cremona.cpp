#include "xns/cremona.hpp"

#include <algorithm>
#include <numeric>

namespace xns {

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("index set is empty");
  std::sort(indices_.begin(), indices_.end());
  if (indices_.front() < 1)
    throw std::invalid_argument("point indices are 1-based");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw std::invalid_argument("index set has a repeated index");
}

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(std::vector<int>(indices)) {}

namespace {

void require_valid(const DivisorClass& d, const IndexSet& I) {
  if (I.size() != std::size_t(d.dim()) + 1)
    throw std::invalid_argument("index set must have exactly n+1 indices");
  if (std::size_t(I.max_index()) > d.points())
    throw std::invalid_argument("index set exceeds the number of points");
}

}  // namespace

nlohmann::json word_to_json(const WeylWord& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const IndexSet& step : w.steps) out.push_back(step.indices());
  return out;
}

WeylWord word_from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("word must be a JSON array of index arrays");
  WeylWord w;
  for (const auto& step : j) {
    if (!step.is_array())
      throw std::invalid_argument("word steps must be arrays of indices");
    w.steps.push_back(IndexSet(step.get<std::vector<int>>()));
  }
  return w;
}

std::int64_t excess(const DivisorClass& d, const IndexSet& I) {
  require_valid(d, I);
  std::int64_t sum = 0;
  for (int i : I.indices()) sum = checked_add(sum, d.mults()[i - 1]);
  return checked_sub(sum, checked_mul(d.dim() - 1, d.degree()));
}

DivisorClass cremona_apply(const DivisorClass& d, const IndexSet& I) {
  if (d.points() < std::size_t(d.dim()) + 1)
    throw std::invalid_argument(
        "Cremona transformation needs at least n+1 points");
  std::int64_t k = excess(d, I);
  std::vector<std::int64_t> m = d.mults();
  for (int i : I.indices()) m[i - 1] = checked_sub(m[i - 1], k);
  return DivisorClass(d.dim(), checked_sub(d.degree(), k), std::move(m));
}

DivisorClass simple_reflection(const DivisorClass& d, int i) {
  int s = int(d.points());
  if (i < 1 || i > s)
    throw std::invalid_argument("reflection index out of range");
  if (i < s) {
    std::vector<std::int64_t> m = d.mults();
    std::swap(m[i - 1], m[i]);
    return DivisorClass(d.dim(), d.degree(), std::move(m));
  }
  if (s < d.dim() + 1)
    throw std::invalid_argument(
        "the Cremona reflection needs at least n+1 points");
  std::vector<int> first(std::size_t(d.dim()) + 1);
  std::iota(first.begin(), first.end(), 1);
  return cremona_apply(d, IndexSet(std::move(first)));
}

DivisorClass apply_word(const DivisorClass& d, const WeylWord& w) {
  DivisorClass current = d;
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    current = cremona_apply(current, *it);
  return current;
}

WeylWord invert_word(WeylWord w) {
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

std::optional<IndexSet> noether_indices(const DivisorClass& d) {
  std::size_t count = std::size_t(d.dim()) + 1;
  if (d.points() < count)
    throw std::invalid_argument("need at least n+1 points");
  std::vector<int> order(d.points());
  std::iota(order.begin(), order.end(), 1);
  // Largest multiplicities first; equal multiplicities keep index order, so
  // the reported witness is deterministic.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return d.mults()[a - 1] > d.mults()[b - 1];
  });
  order.resize(count);
  IndexSet I(std::move(order));
  if (excess(d, I) > 0) return I;
  return std::nullopt;
}

}  // namespace xns
