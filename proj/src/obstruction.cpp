#include "h2u/obstruction.hpp"

#include <numeric>
#include <string>

#include "h2u/errors.hpp"

namespace h2u {

namespace {

std::pair<FailureKind, std::optional<std::int64_t>> classify_sequence(
    const std::vector<Rational>& I) {
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (!is_integer(I[i])) return {FailureKind::NonInteger, static_cast<std::int64_t>(i)};
    if (is_odd_integer(I[i])) return {FailureKind::OddInteger, static_cast<std::int64_t>(i)};
  }
  for (std::size_t i = 0; i < I.size(); ++i)
    if (I[i] < 0) return {FailureKind::Negative, static_cast<std::int64_t>(i)};
  return {FailureKind::None, std::nullopt};
}

void require_labeled(const CorrectionTable& t) {
  if (!t.labeled) throw EvenOrderError("operation needs a c1-labeled table");
  if (static_cast<std::int64_t>(t.d.size()) != t.p)
    throw InvalidParameterError("table size does not match its order");
}

}  // namespace

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::NonInteger: return "NonInteger";
    case FailureKind::OddInteger: return "OddInteger";
    case FailureKind::Negative: return "Negative";
    case FailureKind::None: return "None";
  }
  throw InvalidParameterError("unknown failure kind");
}

std::vector<Rational> i_sequence(const CorrectionTable& table, int epsilon, std::int64_t u) {
  require_labeled(table);
  if (epsilon != 1 && epsilon != -1)
    throw InvalidParameterError("epsilon must be +1 or -1");
  if (u < 1 || u >= table.p || std::gcd(u, table.p) != 1)
    throw NonUnitError(std::to_string(u) + " is not a unit mod " + std::to_string(table.p));
  std::vector<Rational> I(table.d.size());
  for (std::int64_t i = 0; i < table.p; ++i) {
    auto idx = static_cast<std::size_t>(static_cast<__int128>(u) * i % table.p);
    const Rational& d = table.d[idx];
    I[static_cast<std::size_t>(i)] = (epsilon == 1 ? d : -d) + f_term(table.p, i);
  }
  return I;
}

MatchingReport matching_exists(const CorrectionTable& table) {
  require_labeled(table);
  MatchingReport r;
  r.p = table.p;
  r.q = table.q;
  if (table.p == 1) {
    r.feasible = true;
    return r;
  }
  for (int eps : {+1, -1}) {
    for (std::int64_t u : units_of(table.p)) {
      MatchingDiagnostic diag;
      diag.epsilon = eps;
      diag.u = u;
      diag.I = i_sequence(table, eps, u);
      auto [kind, idx] = classify_sequence(diag.I);
      diag.first_failure = kind;
      diag.failure_index = idx;
      if (kind == FailureKind::None) {
        r.feasible = true;
        r.feasible_pairs.emplace_back(eps, u);
      }
      r.diagnostics.push_back(std::move(diag));
    }
  }
  return r;
}

bool matching_feasible(const CorrectionTable& table) {
  require_labeled(table);
  if (table.p == 1) return true;
  std::vector<Rational> f(table.d.size());
  for (std::int64_t i = 0; i < table.p; ++i)
    f[static_cast<std::size_t>(i)] = f_term(table.p, i);
  for (int eps : {+1, -1}) {
    for (std::int64_t u : units_of(table.p)) {
      bool ok = true;
      std::size_t idx = 0;  // (u*i) mod p, updated incrementally
      for (std::int64_t i = 0; i < table.p && ok; ++i) {
        const Rational& d = table.d[idx];
        Rational v = (eps == 1 ? d : -d) + f[static_cast<std::size_t>(i)];
        ok = is_integer(v) && numerator(v) % 2 == 0 && v >= 0;
        idx += static_cast<std::size_t>(u);
        if (idx >= static_cast<std::size_t>(table.p)) idx -= static_cast<std::size_t>(table.p);
      }
      if (ok) return true;
    }
  }
  return false;
}

std::string to_string(DominanceFailure f) {
  switch (f) {
    case DominanceFailure::NonIntegerDifference: return "NonIntegerDifference";
    case DominanceFailure::OddDifference: return "OddDifference";
    case DominanceFailure::NegativeDifference: return "NegativeDifference";
  }
  throw InvalidParameterError("unknown dominance failure");
}

DominanceResult dominance_compare(const CorrectionTable& lower, const CorrectionTable& upper) {
  if (lower.p != upper.p)
    throw MismatchedOrderError("tables have different orders");
  require_labeled(lower);
  require_labeled(upper);
  bool equal = true;
  for (std::int64_t i = 0; i < lower.p; ++i) {
    auto k = static_cast<std::size_t>(i);
    Rational diff = upper.d[k] - lower.d[k];
    if (!is_integer(diff))
      return {DominanceResult::Kind::Fails, i, DominanceFailure::NonIntegerDifference};
    if (numerator(diff) % 2 != 0)
      return {DominanceResult::Kind::Fails, i, DominanceFailure::OddDifference};
    if (diff < 0)
      return {DominanceResult::Kind::Fails, i, DominanceFailure::NegativeDifference};
    if (diff != 0) equal = false;
  }
  return {equal ? DominanceResult::Kind::Equal : DominanceResult::Kind::DominatesEven,
          std::nullopt, std::nullopt};
}

std::string to_string(TransferAssumption a) {
  return a == TransferAssumption::NegToPos ? "neg-to-pos" : "amphicheiral";
}

std::string to_string(TransferConclusion c) {
  return c == TransferConclusion::U2AtLeastTwo ? "u2 >= 2" : "inconclusive";
}

std::string to_string(PersistentFailure s) {
  switch (s) {
    case PersistentFailure::ParityFailure: return "ParityFailure";
    case PersistentFailure::NegativeEntry: return "NegativeEntry";
    case PersistentFailure::NotPersistent: return "NotPersistent";
  }
  throw InvalidParameterError("unknown persistence status");
}

TransferReport transfer_obstruction(const TwoBridgeLink& link, TransferAssumption assumption) {
  if (link.p % 2 == 0)
    throw EvenOrderError("transfer arguments need odd determinant");
  TransferReport out;
  out.p = link.p;
  out.q = link.q;
  out.assumption = assumption;
  auto report = matching_exists(d_lens(link));
  bool all_persist = true;
  for (const auto& diag : report.diagnostics) {
    PersistentFailure st = PersistentFailure::NotPersistent;
    if (diag.first_failure == FailureKind::NonInteger ||
        diag.first_failure == FailureKind::OddInteger) {
      st = PersistentFailure::ParityFailure;
    } else if (diag.first_failure == FailureKind::Negative &&
               (assumption == TransferAssumption::Amphicheiral || diag.epsilon == -1)) {
      st = PersistentFailure::NegativeEntry;
    }
    if (st == PersistentFailure::NotPersistent) all_persist = false;
    out.certificate.push_back({diag.epsilon, diag.u, st});
  }
  out.conclusion = (!report.feasible && all_persist) ? TransferConclusion::U2AtLeastTwo
                                                     : TransferConclusion::Inconclusive;
  return out;
}

}  // namespace h2u
