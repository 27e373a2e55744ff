#include "h2u/catalog.hpp"

namespace h2u {

const std::vector<CatalogEntry>& knot_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"9_21", 43, 25, normalize(43, 25), 1,
                 CatalogEntry::ExpectedWitness{BergeFamily::II, 5, 2}});
    v.push_back({"9_23", 45, 64, normalize(45, 64), 1,
                 CatalogEntry::ExpectedWitness{BergeFamily::II, 8, 3}});
    v.push_back({"9_26", 47, 81, normalize(47, 81), 1,
                 CatalogEntry::ExpectedWitness{BergeFamily::II, 9, 2}});
    v.push_back({"9_31", 55, 144, normalize(55, 144), 1,
                 CatalogEntry::ExpectedWitness{BergeFamily::III, 12, 5}});
    v.push_back({"S(23,3)", 23, 3, normalize(23, 3), 2, std::nullopt});
    return v;
  }();
  return entries;
}

}  // namespace h2u
