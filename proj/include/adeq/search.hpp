#pragma once

#include <vector>

#include "adeq/transversal.hpp"

namespace adeq {

struct FoundTransversal {
  ElementSubset subset;
  TransversalAnalysis analysis;
};

// Enumerates candidate subsets (closures of all generator sets of size up
// to max_generators; additionally the full power set when the order is at
// most 12), deduplicates them as subsets, and returns every candidate on
// which analyze_transversal succeeds, ordered by size then members.
// With dedup_isomorphic, candidates whose restricted table is isomorphic
// to an earlier result are dropped.
std::vector<FoundTransversal> search_transversals(const FiniteSemigroup& s,
                                                  int max_generators = 2,
                                                  bool dedup_isomorphic = false);

}  // namespace adeq
