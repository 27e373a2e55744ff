#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "h2u/berge.hpp"
#include "h2u/composite.hpp"
#include "h2u/lens_dinv.hpp"
#include "h2u/obstruction.hpp"

namespace h2u {

using Json = nlohmann::json;

// Rationals serialize as [numerator, denominator]; cells wider than 64 bits
// fall back to decimal strings.
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json table_json(const CorrectionTable& t);
Json witness_json(const BergeWitness& w);
Json berge_report_json(std::int64_t alpha, std::int64_t beta,
                       const std::vector<BergeWitness>& witnesses);
Json matching_json(const MatchingReport& r);
Json transfer_json(const TransferReport& r, std::int64_t tangle_upper,
                   const std::optional<std::int64_t>& exact);
Json composite_json(const CompositeVerdict& v);
Json classification_json(const U2Classification& c);
U2Classification classification_from_json(const Json& j);

// Compact single-line form (cache lines) and pretty form (stdout).  Both are
// canonical: keys are emitted in sorted order, so parse + dump is the
// identity on emitted output.
std::string dump_line(const Json& j);
std::string dump_pretty(const Json& j);

}  // namespace h2u
