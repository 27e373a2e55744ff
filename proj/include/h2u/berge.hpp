#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "h2u/two_bridge.hpp"

namespace h2u {

enum class BergeFamily : int { I = 1, II, III, IV, V, VI, VII };

std::string to_string(BergeFamily f);

// alpha = i*k + sign (mod k^2) with gcd(i,k) in {1,2}.
struct FamilyIParams {
  std::int64_t i = 0;
  int sign = 1;
  std::int64_t gcd_value = 1;

  friend bool operator==(const FamilyIParams&, const FamilyIParams&) = default;
};

// Families II, III, IV share the shape
//   alpha = outer_sign * (base + epsilon) * d  (mod k^2)
// with base = 2k (II) or k (III, IV) and a divisibility constraint on d.
struct FamilyEpsDParams {
  int epsilon = 1;
  std::int64_t d = 1;
  int outer_sign = 1;

  friend bool operator==(const FamilyEpsDParams&, const FamilyEpsDParams&) = default;
};

// k^2 + sign1*k + sign2 = 0 (mod alpha).
struct FamilyVParams {
  int sign1 = 1;
  int sign2 = 1;

  friend bool operator==(const FamilyVParams&, const FamilyVParams&) = default;
};

// Sporadic quadratic families: alpha = 22j^2+9j+1, k = 11j+2 (VI) and
// alpha = 22j^2+13j+2, k = 11j+3 (VII).
struct FamilyQuadraticParams {
  std::int64_t j = 0;

  friend bool operator==(const FamilyQuadraticParams&, const FamilyQuadraticParams&) = default;
};

using BergeParams =
    std::variant<FamilyIParams, FamilyEpsDParams, FamilyVParams, FamilyQuadraticParams>;

struct BergeWitness {
  BergeFamily family = BergeFamily::I;
  std::int64_t k = 1;
  int ksq_sign = 1;  // beta = ksq_sign * k^2 (mod alpha)
  BergeParams params;

  friend bool operator==(const BergeWitness&, const BergeWitness&) = default;
};

// All witnesses with 1 <= k <= k_max (default alpha), sorted by (k, family),
// at most one per (k, ksq_sign, family) with canonically chosen parameters.
std::vector<BergeWitness> find_berge_witnesses(std::int64_t alpha, std::int64_t beta,
                                               std::optional<std::int64_t> k_max = std::nullopt);

// Family I condition for a single (alpha, k) pair, independent of the
// beta = +-k^2 preamble: does some i in [0, k^2) satisfy
// alpha = i*k + sign (mod k^2) with gcd(i, k) in {1, 2}?  Implemented via
// the residue-class shortcut; must match the exhaustive i-sweep.
std::optional<FamilyIParams> family_I_condition(std::int64_t alpha, std::int64_t k);

// Recheck a witness from its stored parameters alone.
bool verify_witness(const BergeWitness& w, std::int64_t alpha, std::int64_t beta);

struct BergeAnswer {
  bool u2_is_one = false;
  std::vector<BergeWitness> witnesses;
};

// Decide whether S(p,q) has H(2)-unknotting number one.  Requires p >= 2.
BergeAnswer u2_is_one_2bridge(const TwoBridgeLink& link,
                              std::optional<std::int64_t> k_max = std::nullopt);

}  // namespace h2u
