#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h2u/two_bridge.hpp"

namespace h2u {

enum class CompositeCase { CaseA, CaseB, None };

std::string to_string(CompositeCase c);

// swapped = true means the roles of the two summands were exchanged to make
// the pattern fit.
struct CaseAWitness {
  bool swapped = false;

  friend bool operator==(const CaseAWitness&, const CaseAWitness&) = default;
};

struct CaseBWitness {
  bool swapped = false;
  std::int64_t v = 0;
  int epsilon = 1;
  std::int64_t a = 1;
  std::int64_t b = 1;

  friend bool operator==(const CaseBWitness&, const CaseBWitness&) = default;
};

struct CompositeVerdict {
  bool u2_is_one = false;
  CompositeCase kind = CompositeCase::None;  // CaseA preferred when both hold
  std::optional<CaseAWitness> case_a;
  std::optional<CaseBWitness> case_b;
};

// Decide whether the connected sum S(p,q) # S(r,s) has H(2)-unknotting
// number one.  Case A: r = q and s = p^{+-1} (mod q).  Case B: q = eps
// (mod p) and r = p*a*b + eps with gcd(a,b) = 1, s = (p*a^2)^{+-1} (mod r).
// With up_to_mirror, the fits are tested up to mirroring both summands.
// Both orderings of the summands are tried; both witnesses are recorded
// when both cases hold.  Unknot summands are rejected (TrivialSummandError).
CompositeVerdict composite_u2_one(const TwoBridgeLink& first, const TwoBridgeLink& second,
                                  bool up_to_mirror = false);

// Upper bound for u2 of S(p,q) from the continued-fraction suffix ladder:
// each step either realizes the remaining tail in one move (when the tail is
// Berge-realizable, or a final term of absolute value at most 1) or spends
// one move and recurses on the next suffix.
std::int64_t u2_upper_bound(const TwoBridgeLink& link);

struct U2Classification {
  TwoBridgeLink link;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;
  std::vector<std::string> provenance;
};

// Combine the realization test (exact value 1, or lower bound 2) with the
// suffix upper bound.
U2Classification u2_classify(const TwoBridgeLink& link);

}  // namespace h2u
