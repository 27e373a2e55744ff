#pragma once

#include <cstdint>
#include <vector>

#include "h2u/rational.hpp"

namespace h2u {

// The 2-bridge link S(p,q), stored in normal form: p >= 1, 0 <= q < p,
// gcd(p,q) = 1.  The unknot is (1,0).
struct TwoBridgeLink {
  std::int64_t p = 1;
  std::int64_t q = 0;

  bool is_knot() const { return p % 2 != 0; }
  bool is_unknot() const { return p == 1; }

  friend bool operator==(const TwoBridgeLink&, const TwoBridgeLink&) = default;
};

// Reduce x into [0, p).
std::int64_t mod_reduce(std::int64_t x, std::int64_t p);

// Validate and normalize (p,q).  Throws InvalidParameterError for p < 1 and
// NonCoprimeError when gcd(p, q mod p) != 1.
TwoBridgeLink normalize(std::int64_t p, std::int64_t q);

// Inverse of q modulo p (result in [0,p)); p = 1 gives 0.
std::int64_t mod_inverse(std::int64_t q, std::int64_t p);

// Multiplicative units of Z/p in ascending order; empty for p = 1.
std::vector<std::int64_t> units_of(std::int64_t p);

// All-positive continued fraction [a1, ..., an], a_i >= 1, a_n >= 2 unless
// n = 1.  The unknot expands to [1].
struct ContinuedFraction {
  std::vector<std::int64_t> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

ContinuedFraction cf_expand(std::int64_t p, std::int64_t q);
ContinuedFraction cf_expand(const TwoBridgeLink& link);

// Evaluate a1 + 1/(a2 + 1/(... + 1/an)).  Throws DegenerateFractionError if
// an intermediate tail is zero, InvalidParameterError on an empty term list.
Rational cf_eval(const ContinuedFraction& cf);

// Unoriented equivalence: same p and q' in {q, q^{-1} mod p}; with
// up_to_mirror also -q and -q^{-1} mod p.
bool equivalent(const TwoBridgeLink& a, const TwoBridgeLink& b, bool up_to_mirror = false);

std::int64_t determinant(const TwoBridgeLink& link);

}  // namespace h2u
