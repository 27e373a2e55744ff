#pragma once

#include <cstdint>
#include <vector>

#include "h2u/rational.hpp"
#include "h2u/two_bridge.hpp"

namespace h2u {

// Table of d-invariants of L(p,q), indexed by spin-c structure.  When
// `labeled` is true, index i is the c1-based labeling (odd p only, with
// d[i] = d[p-i]); otherwise indices follow the defining recursion.
struct CorrectionTable {
  std::int64_t p = 1;
  std::int64_t q = 0;
  bool labeled = true;
  std::vector<Rational> d;
};

// d-invariants of L(p,q) in recursion order, via
//   d(p, q, j) = ((2j + 1 - p - q)^2 - pq) / (4pq) - d(q, p mod q, j mod q),
// with d(1, 0, 0) = 0.  Requires 0 < q < p coprime (or p = 1, q = 0).
std::vector<Rational> d_lens_raw(std::int64_t p, std::int64_t q);

// Shift a raw table to the c1-based labeling.  The offset j0 is the unique
// solution of 2j = p + q - 1 (mod p); requires odd p (EvenOrderError).
// Verifies d[i] = d[p-i] afterwards and throws SymmetryFailureError if the
// computed table breaks that identity.
CorrectionTable to_c1_labeling(const std::vector<Rational>& raw, std::int64_t p, std::int64_t q);

// Labeled table for odd p, raw table (labeled = false) for even p.
CorrectionTable d_lens(const TwoBridgeLink& link);

// The comparison term
//   f(i) = ((p-i)^2/p - 1)/4  for even i,   (i^2/p - 1)/4  for odd i,
// defined for 0 <= i < p.
Rational f_term(std::int64_t p, std::int64_t i);

}  // namespace h2u
