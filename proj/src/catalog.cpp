#include "wordcensus/catalog.hpp"

namespace wordcensus {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const char* names[] = {
        "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13",
        "C14", "C15", "C16",
        "C2*C2", "C2*C4", "C2*C2*C2", "C3*C3", "C2*C6", "C2*C8", "C4*C4", "C2*C2*C4",
        "C2*C2*C2*C2",
        "S3", "D4", "Q8", "D5", "A4", "D6", "D7", "S4",
    };
    std::vector<CatalogEntry> out;
    for (const char* name : names) out.push_back({name, parse_group_spec(name)});
    return out;
  }();
  return entries;
}

}  // namespace wordcensus
