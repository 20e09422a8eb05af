#pragma once

#include <vector>

#include "logkit/log_graph.hpp"

namespace logkit {

// Exhaustive sweep over labeled oriented intervals on a fixed path,
// quotiented by the path-reversal symmetry.
struct SearchRow {
  int vertices = 0;
  long canonical = 0;             // labelings kept after the reversal quotient
  long compressed_injective = 0;  // instances analysed further
  long npc = 0;
  long theorem2 = 0;
  long oracle_checked = 0;        // link-girth cross-checks run
  long oracle_disagreements = 0;  // pattern verdict vs girth >= 4 mismatches
};

struct SearchResult {
  std::vector<SearchRow> rows;

  bool consistent() const {
    for (const SearchRow& r : rows)
      if (r.oracle_disagreements != 0) return false;
    return true;
  }
};

// Every LOI on k <= max_vertices vertices (2 <= max_vertices <= 7): path
// fixed, all label assignments and orientations, one representative per
// reversal orbit.  Each compressed injective instance is checked against
// the independent girth oracle.
SearchResult search_small_lois(int max_vertices);

}  // namespace logkit
