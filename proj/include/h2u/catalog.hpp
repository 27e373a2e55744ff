#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h2u/berge.hpp"
#include "h2u/two_bridge.hpp"

namespace h2u {

struct CatalogEntry {
  std::string name;
  std::int64_t raw_p = 1;
  std::int64_t raw_q = 0;  // as tabulated, before normalization
  TwoBridgeLink link;
  std::int64_t expected_u2 = 0;

  struct ExpectedWitness {
    BergeFamily family = BergeFamily::I;
    std::int64_t k = 1;
    std::int64_t d = 1;
  };
  std::optional<ExpectedWitness> expected_witness;
};

// The embedded fixtures: the four 9-crossing knots with u2 = 1 and their
// realization witnesses, plus S(23,3) with u2 = 2.
const std::vector<CatalogEntry>& knot_catalog();

}  // namespace h2u
