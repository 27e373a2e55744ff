#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h2u/lens_dinv.hpp"
#include "h2u/two_bridge.hpp"

namespace h2u {

// Classification of the first failing entry of a candidate sequence, scanned
// in two phases: parity problems anywhere beat a negative entry.
enum class FailureKind { NonInteger, OddInteger, Negative, None };

std::string to_string(FailureKind k);

// I_{eps,u}(i) = eps * d((u*i) mod p) + f(i), for a labeled table, a sign
// eps in {+1,-1} and a unit u mod p.
std::vector<Rational> i_sequence(const CorrectionTable& table, int epsilon, std::int64_t u);

struct MatchingDiagnostic {
  int epsilon = 1;
  std::int64_t u = 1;
  std::vector<Rational> I;
  FailureKind first_failure = FailureKind::None;
  std::optional<std::int64_t> failure_index;
};

struct MatchingReport {
  std::int64_t p = 1;
  std::int64_t q = 0;
  bool feasible = false;
  std::vector<std::pair<int, std::int64_t>> feasible_pairs;
  std::vector<MatchingDiagnostic> diagnostics;  // every (epsilon, u), eps +1 first
};

// Scan all (epsilon, u): feasible iff some I_{eps,u} is entrywise an even
// nonnegative integer.  The order-1 table is vacuously feasible.
MatchingReport matching_exists(const CorrectionTable& table);

// Early-exit feasibility only, for large sweeps.
bool matching_feasible(const CorrectionTable& table);

enum class DominanceFailure { NonIntegerDifference, OddDifference, NegativeDifference };

std::string to_string(DominanceFailure f);

struct DominanceResult {
  enum class Kind { Equal, DominatesEven, Fails } kind = Kind::Equal;
  std::optional<std::int64_t> index;            // first offending label
  std::optional<DominanceFailure> reason;
};

// Entrywise comparison of labeled tables with equal p: upper - lower must be
// an even nonnegative integer everywhere.
DominanceResult dominance_compare(const CorrectionTable& lower, const CorrectionTable& upper);

enum class TransferAssumption { NegToPos, Amphicheiral };
enum class TransferConclusion { U2AtLeastTwo, Inconclusive };
enum class PersistentFailure { ParityFailure, NegativeEntry, NotPersistent };

std::string to_string(TransferAssumption a);
std::string to_string(TransferConclusion c);
std::string to_string(PersistentFailure s);

struct TransferEntry {
  int epsilon = 1;
  std::int64_t u = 1;
  PersistentFailure status = PersistentFailure::NotPersistent;
};

struct TransferReport {
  std::int64_t p = 1;
  std::int64_t q = 0;
  TransferAssumption assumption = TransferAssumption::NegToPos;
  TransferConclusion conclusion = TransferConclusion::Inconclusive;
  std::vector<TransferEntry> certificate;
};

// Decide whether every matching failure survives the given symmetry
// assumption.  Parity failures always survive; a negative entry survives
// NegToPos only when epsilon = -1, and always survives Amphicheiral.  If all
// (epsilon, u) carry a surviving failure the conclusion is U2AtLeastTwo.
TransferReport transfer_obstruction(const TwoBridgeLink& link, TransferAssumption assumption);

}  // namespace h2u
