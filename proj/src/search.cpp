#include "adeq/search.hpp"

#include <algorithm>
#include <set>

namespace adeq {

namespace {

void add_generator_sets(const FiniteSemigroup& s, int max_generators,
                        std::set<std::vector<int>>& candidates,
                        std::vector<int>& gens, int from) {
  if (!gens.empty()) {
    candidates.insert(
        subsemigroup_closure(s, ElementSubset::of(s.order(), gens)).members());
  }
  if (static_cast<int>(gens.size()) == max_generators) return;
  for (int g = from; g < s.order(); ++g) {
    gens.push_back(g);
    add_generator_sets(s, max_generators, candidates, gens, g + 1);
    gens.pop_back();
  }
}

}  // namespace

std::vector<FoundTransversal> search_transversals(const FiniteSemigroup& s,
                                                  int max_generators,
                                                  bool dedup_isomorphic) {
  const int n = s.order();
  std::set<std::vector<int>> candidates;
  std::vector<int> gens;
  add_generator_sets(s, max_generators, candidates, gens, 0);
  if (n <= 12) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> members;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) members.push_back(i);
      candidates.insert(
          subsemigroup_closure(s, ElementSubset::of(n, members)).members());
    }
  }

  std::vector<std::vector<int>> ordered(candidates.begin(), candidates.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<FoundTransversal> out;
  for (const auto& members : ordered) {
    const ElementSubset subset = ElementSubset::of(n, members);
    TransversalAnalysis analysis;
    try {
      analysis = analyze_transversal(s, subset);
    } catch (const InternalInconsistencyError&) {
      throw;
    } catch (const Error&) {
      continue;
    }
    if (dedup_isomorphic) {
      bool dup = false;
      for (const auto& prev : out)
        if (find_isomorphism(prev.analysis.s0.sg, analysis.s0.sg)) {
          dup = true;
          break;
        }
      if (dup) continue;
    }
    out.push_back({subset, std::move(analysis)});
  }
  return out;
}

}  // namespace adeq
