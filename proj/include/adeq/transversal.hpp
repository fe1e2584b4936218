#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "adeq/semigroup.hpp"

namespace adeq {

// Full analysis of an adequate transversal S0 of S: the per-element
// factorisation x = e_x * xbar * f_x together with the derived sets and
// classification flags.  All element values are parent indices.
struct TransversalAnalysis {
  FiniteSemigroup parent;
  ElementSubset transversal;
  Subsemigroup s0;

  std::vector<int> e_of;
  std::vector<int> bar_of;
  std::vector<int> f_of;

  // plus/star of transversal elements, in parent indices (-1 off S0).
  std::vector<int> plus_of;
  std::vector<int> star_of;

  ElementSubset set_I;
  ElementSubset set_Lambda;
  ElementSubset set_E0;
  ElementSubset set_L;
  ElementSubset set_R;

  bool quasi_ideal = false;
  bool multiplicative = false;
  bool weakly_multiplicative = false;

  // Cached relations of the parent.
  EquivRelation rstar, lstar, greenr, greenl;
};

// All triples (e, m, f) with e, f in E(S), m in S0, x = e*m*f, e L m+ and
// f R m*.  Throws PreconditionFailedError unless S0 is an adequate
// *-subsemigroup of S.
std::vector<std::tuple<int, int, int>> find_decompositions(
    const FiniteSemigroup& s, const ElementSubset& s0, int x);

// Succeeds iff S0 is closed, adequate, a *-subsemigroup, and every x has a
// decomposition with a unique middle factor.  On success every derived
// identity is re-verified; a failure there raises
// InternalInconsistencyError.
TransversalAnalysis analyze_transversal(const FiniteSemigroup& s,
                                        const ElementSubset& s0);

// The three quasi-ideal criteria (S0 S S0, Lambda I, R L all inside S0)
// evaluated independently; disagreement raises InternalInconsistencyError.
bool is_quasi_ideal(const TransversalAnalysis& a);

bool is_multiplicative(const TransversalAnalysis& a);
bool is_weakly_multiplicative(const TransversalAnalysis& a);

// The five equivalent left-adequacy conditions, evaluated independently.
struct LeftAdequateReport {
  bool value = false;
  // left adequate; Lambda = E0; R = S0; L = S; I = E(S)
  std::array<bool, 5> conditions{};
  static constexpr std::array<const char*, 5> names = {
      "left-adequate", "Lambda=E0", "R=S0", "L=S", "I=E"};
};
LeftAdequateReport left_adequate_equivalences(const FiniteSemigroup& s,
                                              const TransversalAnalysis& a);

struct FormulaReport {
  struct Failure {
    std::string identity;
    std::vector<int> witness;
  };
  int checked = 0;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
  void require(bool pass, const std::string& identity,
               std::vector<int> witness);
};

// Exhaustive check of the product formulas: the e/f/bar identities for
// triples over R x S x L, the two-sided product rule for pairs whose
// middle products land in S0, and the L*R = S factorisation.
FormulaReport verify_product_formulas(const TransversalAnalysis& a);

// For quasi-ideal analyses: L and R are closed, left (resp. right)
// adequate, and S0 is a common quasi-ideal adequate transversal of both.
// Returns the two restricted analyses.
struct RestrictedParts {
  Subsemigroup left;   // restriction to set_L
  Subsemigroup right;  // restriction to set_R
  TransversalAnalysis left_analysis;
  TransversalAnalysis right_analysis;
};
RestrictedParts split_quasi_ideal(const TransversalAnalysis& a);

}  // namespace adeq
