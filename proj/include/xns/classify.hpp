#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "xns/cremona.hpp"
#include "xns/divisor.hpp"

namespace xns {

enum class Verdict {
  MinusOneClass,
  NotNumerical,
  NegativeMultiplicity,
  MultiplicityExceedsDegree,
  StuckNoNoetherSet,
  DegenerateDegree,
};

std::string_view to_string(Verdict v);

// Outcome of the (-1) class decision procedure. On acceptance, witness and
// terminal are set and satisfy apply_word(*terminal, *witness) == input: the
// witness is the Weyl word carrying the terminal exceptional (or hyperplane)
// class back to the input.
struct ClassificationResult {
  Verdict verdict = Verdict::NotNumerical;
  std::optional<WeylWord> witness;
  std::optional<DivisorClass> terminal;
  int steps = 0;
};

// The two numeric (-1) conditions: (n-1)d^2 - sum m_i^2 = -1 and
// (n+1)d - sum m_i = 1.
bool numeric_minus_one(const DivisorClass& d);

// Degree-descending Cremona reduction. Each pass accepts the exceptional
// pattern (d = 0, one m_i = -1, rest 0) outright, and the hyperplane pattern
// (d = 1, exactly n unit multiplicities, rest 0) when no Cremona step exists
// (s <= n); with s >= n+1 the hyperplane reduces to an exceptional class in
// one more step. Otherwise the numeric conditions and the effectivity
// guards m_i >= 0, m_i <= d are checked, and one Cremona step is applied at
// the Noether index set. The step has positive excess, so the degree
// strictly decreases and the loop runs at most degree(D) times.
ClassificationResult classify_minus_one(const DivisorClass& d);

// A (-1) class pairing negatively with the input; by the base-locus lemma it
// is a fixed component of multiplicity k = -pairing.
struct Obstruction {
  DivisorClass obstructor;
  std::int64_t pairing = 0;
  std::int64_t k = 0;
};

// Scans (-1) classes F with degree(F) < min(degree(D), max_degree + 1),
// exceptional classes included, for <D,F> < 0. Candidates are visited in
// census order (ascending degree, then lexicographic canonical form); for
// each canonical form the multiplicity assignment minimizing the pairing is
// used (largest multiplicities of F on the largest multiplicities of D, ties
// toward smaller indices), so the reported obstructor is deterministic.
std::optional<Obstruction> pairing_obstruction(const DivisorClass& d,
                                               std::int64_t max_degree);

struct PeelResult {
  std::vector<std::pair<DivisorClass, std::int64_t>> components;
  DivisorClass residual;
  bool budget_exhausted = false;
};

// Repeatedly subtracts k_F copies of the first obstruction F with
// <current, F> = -k_F < 0. The input always equals
// residual + sum multiplicity * obstructor. Iteration is budget-bounded;
// hitting the budget is flagged, not an error.
PeelResult base_locus_peel(const DivisorClass& d, std::int64_t max_degree,
                           int max_iterations = 64);

struct ReduceResult {
  DivisorClass reduced;
  // apply_word(input, word) == reduced; invert_word(word) carries it back.
  WeylWord word;
  bool complete = true;
};

// Applies Cremona at the maximal-multiplicity index set while its excess is
// positive. Stops early (complete = false) if the next step would make the
// degree negative, which signals a non-effective input.
ReduceResult cremona_reduce(const DivisorClass& d);

// For classes with d >= m_i >= 0, <D,D> = r in {-4,-3,-2} and
// adeg = -2 - r: greedily Cremona-reduces, testing before every step whether
// the current class has degree 1 with at least n+1 unit multiplicities. That
// shape is a hyperplane through n+1 or more general points, impossible for
// points in general position, so reaching it certifies that no irreducible
// divisor has these invariants.
bool dolgachev_shape_check(const DivisorClass& d);

}  // namespace xns
