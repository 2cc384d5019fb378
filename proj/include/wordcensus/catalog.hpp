#pragma once

#include <string>
#include <vector>

#include "wordcensus/group.hpp"

namespace wordcensus {

struct CatalogEntry {
  std::string name;
  Group group;
};

// The fixed sweep targets: cyclic groups through order 16, the non-cyclic
// abelian groups of order ≤ 16, and the small nonabelian groups
// S3, D4, Q8, D5, A4, D6, D7, S4. Built once, immutable afterwards.
const std::vector<CatalogEntry>& catalog();

}  // namespace wordcensus
