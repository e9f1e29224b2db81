#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "xns/divisor.hpp"

namespace xns {

// A set of n+1 distinct point indices (1-based) naming the base points of a
// standard Cremona transformation. Stored strictly increasing.
class IndexSet {
 public:
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  int max_index() const { return indices_.back(); }

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> indices_;
};

// A Weyl group element written as a composition of standard Cremona
// transformations. Steps compose right to left: apply_word applies the last
// step first, so steps = [I1, I2, I3] acts as Cr_I1 . Cr_I2 . Cr_I3.
struct WeylWord {
  std::vector<IndexSet> steps;

  bool operator==(const WeylWord&) const = default;
};

nlohmann::json word_to_json(const WeylWord& w);
WeylWord word_from_json(const nlohmann::json& j);

// k = sum_{i in I} m_i - (n-1)d, the amount a Cremona step based at I
// subtracts from the degree.
std::int64_t excess(const DivisorClass& d, const IndexSet& I);

// Standard Cremona transformation based at the points indexed by I:
// (d-k)H - sum_{i in I}(m_i-k)E_i - sum_{i not in I} m_i E_i. An involution
// on Pic X_{n,s} that fixes K and preserves the Mukai pairing and adeg.
DivisorClass cremona_apply(const DivisorClass& d, const IndexSet& I);

// Simple reflection T_i: for i < s swaps m_i and m_{i+1}; T_s is the
// Cremona transformation based at the first n+1 points.
DivisorClass simple_reflection(const DivisorClass& d, int i);

// Applies the rightmost step first, matching composition order.
DivisorClass apply_word(const DivisorClass& d, const WeylWord& w);

// Cr_I is an involution, so inverting a word just reverses it.
WeylWord invert_word(WeylWord w);

// The index set of the n+1 largest multiplicities (ties resolved toward the
// smallest index) when their sum exceeds (n-1)d, i.e. when a degree-reducing
// Cremona step exists. Empty when the maximal sum does not exceed (n-1)d.
// Requires s >= n+1.
std::optional<IndexSet> noether_indices(const DivisorClass& d);

}  // namespace xns
