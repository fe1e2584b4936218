#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adeq/semigroup.hpp"
#include "adeq/transversal.hpp"

namespace adeq {

// A star map R x L -> S0 between a left adequate semigroup L and a right
// adequate semigroup R sharing a quasi-ideal adequate transversal.  The
// shared copy of S0 is identified by explicit index maps in both
// directions, validated to be an isomorphism respecting products and the
// e/f/bar/plus/star structure.
struct StarMap {
  FiniteSemigroup left;   // L
  FiniteSemigroup right;  // R
  TransversalAnalysis left_analysis;
  TransversalAnalysis right_analysis;

  FiniteSemigroup s0;             // standalone copy
  std::vector<int> s0_in_left;    // s0 index -> element of L
  std::vector<int> s0_in_right;   // s0 index -> element of R
  std::vector<int> s0_from_left;  // element of L -> s0 index or -1
  std::vector<int> s0_from_right;

  // values[a][x] for a in R, x in L, as s0 indices.
  std::vector<std::vector<int>> values;

  int s0_order() const { return s0.order(); }
  // Middle factor of an element, as an s0 index.
  int bar_left(int x) const { return s0_from_left[left_analysis.bar_of[x]]; }
  int bar_right(int a) const {
    return s0_from_right[right_analysis.bar_of[a]];
  }
};

// Assembles and validates a StarMap from independently given parts.
// Throws DataInvalidError when the shared-transversal correspondence is
// not a structure-matching isomorphism, or when either analysis fails the
// quasi-ideal / one-sided adequacy requirements.
StarMap make_star_map(const FiniteSemigroup& left,
                      const ElementSubset& s0_in_left,
                      const FiniteSemigroup& right,
                      const ElementSubset& s0_in_right,
                      const std::vector<std::pair<int, int>>& correspondence,
                      const std::vector<std::vector<int>>& values);

// Restriction of a quasi-ideal instance to its L and R parts with
// a * x := ax (guaranteed to land in S0).  Throws NotQuasiIdealError.
StarMap extract_star(const FiniteSemigroup& s, const TransversalAnalysis& a);

struct AxiomWitness {
  std::string condition;
  std::vector<int> tuple;
};
struct AxiomReport {
  bool associativity_axiom = true;   // condition (1)
  bool extension_axiom = true;       // condition (2)
  bool idempotent_axiom = true;      // condition (3), when requested
  bool idempotent_checked = false;
  std::vector<AxiomWitness> witnesses;
  bool pass(bool require_multiplicative) const {
    return associativity_axiom && extension_axiom &&
           (!require_multiplicative || idempotent_axiom);
  }
};
AxiomReport check_star_axioms(const StarMap& sm, bool require_multiplicative);

// Internal identities every axiom-satisfying star map must obey,
// checked exhaustively (cancellation transfer, the e/f sandwiches, and
// the starred-class placements inside L).
FormulaReport check_internal_identities(const StarMap& sm);

struct SpinedProduct {
  StarMap star;
  std::vector<std::pair<int, int>> pairs;  // (x in L, a in R), lexicographic
  FiniteSemigroup sg;                      // validated product table
  ElementSubset embedded_t0;
  TransversalAnalysis t0_analysis;
  // Present when built by decomposition of a source semigroup.
  std::optional<std::vector<int>> source_iso;  // source element -> pair index

  int pair_index(int x, int a) const;
};

// The pair semigroup over {(x, a) : xbar = abar} with
// (x,a)(y,b) = (e_x(a*y), (a*y)f_b).  Checks closure, associativity,
// abundance, the idempotent characterisation, the starred-class
// placements, and that the diagonal copy of S0 is a quasi-ideal adequate
// transversal isomorphic to S0.
SpinedProduct build_spined_product(const StarMap& sm);

struct IsoReport {
  bool bijective = false;
  bool homomorphism = false;
  bool idempotents_match = false;  // E(T) against the image of E(S)
  bool r_part_matches = false;     // R(T) against {(abar, a)}
  bool i_part_matches = false;     // I(T) against {(x, xbar)}
  bool lemma_xfa = false;          // x f_a = e_x a over all pairs
  bool ok() const {
    return bijective && homomorphism && idempotents_match && r_part_matches &&
           i_part_matches && lemma_xfa;
  }
};

// Round trip: extract the star map of a quasi-ideal instance, rebuild the
// spined product, and verify x -> (e_x xbar, xbar f_x) is an isomorphism.
// Throws IsoFailedError when the verification fails.
std::pair<SpinedProduct, IsoReport> decompose_and_rebuild(
    const FiniteSemigroup& s, const TransversalAnalysis& a);

// Data for the one-sided construction: a right act of the semilattice E0
// on a carrier I = E0 u A, a retraction onto E0, and a star map
// E0 x I -> S0.
struct ChenData {
  FiniteSemigroup s0;  // adequate
  int carrier_size = 0;
  // s0 element -> carrier index for idempotents, -1 otherwise.
  std::vector<int> e0_to_carrier;
  // act[x][e] defined when e is idempotent in s0; -1 elsewhere.
  std::vector<std::vector<int>> act;
  std::vector<int> proj;  // carrier -> idempotent s0 element
  // star[e][x] for idempotent e, carrier x; -1 rows for non-idempotents.
  std::vector<std::vector<int>> star;
};

struct ChenResult {
  std::vector<std::pair<int, int>> elements;  // (carrier, s0 element)
  FiniteSemigroup sg;
  ElementSubset t0;
  TransversalAnalysis t0_analysis;
  std::vector<int> t0_from_s0;  // s0 element -> element index of sg
  int element_index(int carrier, int s0_elem) const;
};

// Builds T = {(e, x) : e proj = x+} with (e,x)(g,w) = (e act a+, a),
// a = x (x* star g) w.  Validates the ChenData laws first
// (DataInvalidError with a witness), then checks the outcome is left
// adequate with the diagonal quasi-ideal transversal isomorphic to S0
// (ConstructionFailedError otherwise).
ChenResult chen_construct(const ChenData& data);

// Regular specialisation: x0 maps and the V(x) uniqueness statement.
struct InverseTransversalReport {
  TransversalAnalysis analysis;
  std::vector<int> inv_of;  // x -> x0, the unique member of V(x) in S0
  FormulaReport identities;
};
InverseTransversalReport inverse_transversal_analysis(const FiniteSemigroup& s,
                                                      const ElementSubset& s0);

// build_spined_product for inverse parts: additionally verifies
// e_x = x x0 / f_b = b0 b and the regularity witness
// (x,a)(a0,x0)(x,a) = (x,a) on every pair.
SpinedProduct build_regular_spined_product(const StarMap& sm);

// Chen specialisation for a left normal band carrier over an inverse S0.
// e0_embed maps each idempotent of s0 to its copy inside the band.
struct LeftInverseChenResult {
  ChenResult chen;
  FormulaReport regularity;  // the (e,x)(x^-1 x, x^-1)(e,x) witnesses
};
LeftInverseChenResult left_inverse_chen(const FiniteSemigroup& s0,
                                        const FiniteSemigroup& band,
                                        const std::vector<int>& e0_embed);

// Degenerate ChenData with A empty: carrier = E0, act and star by
// multiplication, proj the identity.
ChenData degenerate_chen_data(const FiniteSemigroup& s0);

}  // namespace adeq
