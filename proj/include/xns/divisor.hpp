#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "xns/arith.hpp"

namespace xns {

// A divisor class D = dH - sum_i m_i E_i on the blow-up X_{n,s} of P^n at s
// points in general position. H is the hyperplane class and E_1..E_s the
// exceptional divisors; the sign convention stores the multiplicities m_i,
// so the exceptional divisor E_i itself has d = 0 and m_i = -1.
//
// Immutable value type; every operation on it is a pure function, so
// instances can be shared freely between threads.
class DivisorClass {
 public:
  DivisorClass(int dim, std::int64_t degree, std::vector<std::int64_t> mults);

  static DivisorClass zero(int dim, std::size_t points);
  static DivisorClass hyperplane(int dim, std::size_t points);
  static DivisorClass exceptional(int dim, std::size_t points, std::size_t index);
  // K = -(n+1)H + (n-1)(E_1 + ... + E_s).
  static DivisorClass canonical(int dim, std::size_t points);

  int dim() const { return dim_; }                       // n
  std::int64_t degree() const { return degree_; }        // d
  std::size_t points() const { return mults_.size(); }   // s
  const std::vector<std::int64_t>& mults() const { return mults_; }
  std::int64_t mult(std::size_t index) const;            // 1-based

  bool operator==(const DivisorClass&) const = default;

  // Lattice arithmetic; operands must live on the same X_{n,s}.
  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(std::int64_t scalar, const DivisorClass& d);

  // "10H - 7E1 - 6E2 + E9" style, for human-readable output.
  std::string pretty() const;
  // Compact literal "n:d:m1,m2,...,ms".
  std::string compact() const;
  nlohmann::json to_json() const;

  // parse() accepts either the compact literal or the JSON object form.
  static DivisorClass parse(std::string_view text);
  static DivisorClass parse_compact(std::string_view text);
  static DivisorClass from_json(const nlohmann::json& j);

 private:
  int dim_;
  std::int64_t degree_;
  std::vector<std::int64_t> mults_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

// Dolgachev-Mukai pairing: <H,H> = n-1, <H,E_i> = 0, <E_i,E_j> = -delta_ij,
// i.e. (n-1) d_a d_b - sum_i m_i p_i. Multiplicity vectors of different
// lengths are zero-padded to the longer one; the ambient dimension must
// match.
std::int64_t mukai_pairing(const DivisorClass& a, const DivisorClass& b);

// Anticanonical degree <D,-K>/(n-1) = (n+1)d - sum m_i, always an integer.
std::int64_t adeg(const DivisorClass& d);

// Cone over D with vertex at a new blown-up point: dH - dE_0 - sum m_i E_i
// on X_{n+1,s+1}. The vertex multiplicity d is prepended as the new first
// entry.
DivisorClass cone(const DivisorClass& d);

// Euler characteristic binom(d+n, n) - sum_i binom(m_i+n-1, n), the virtual
// dimension of the linear system of degree-d hypersurfaces with an
// m_i-fold point at each p_i. Uses binomial(a, k) = 0 for a < k.
std::int64_t chi(const DivisorClass& d);

// Arithmetic genus (d-1)(d-2)/2 - sum m_i(m_i-1)/2 of a plane curve class.
// Only defined for n = 2; the value is always an integer because both terms
// are products of consecutive integers.
std::int64_t planar_genus(const DivisorClass& d);

// The four equivalent numerical characterizations of a planar (-1) curve.
// Any two of them holding forces the other two.
struct PlanarConditions {
  bool self_pairing_minus_one = false;  // <D,D> = -1
  bool rational = false;                // p_a(D) = 0
  bool adeg_one = false;                // <D,-K> = 1
  bool chi_one = false;                 // chi(D) = 1

  bool all() const {
    return self_pairing_minus_one && rational && adeg_one && chi_one;
  }
  int count() const {
    return int(self_pairing_minus_one) + int(rational) + int(adeg_one) +
           int(chi_one);
  }
  bool operator==(const PlanarConditions&) const = default;
};

PlanarConditions planar_conditions(const DivisorClass& d);

}  // namespace xns
