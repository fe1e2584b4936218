#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adeq/construction.hpp"
#include "adeq/semigroup.hpp"

namespace adeq {

// Extra sections of a document describing ChenData relative to the
// document's semigroup (taken as S0).  Rows are indexed by the ascending
// list of idempotents of S0.
struct ChenSection {
  int carrier = 0;
  std::vector<int> embed;                 // idempotent position -> carrier
  std::vector<int> proj;                  // carrier -> s0 element
  std::map<int, std::vector<int>> act;    // carrier -> per-idempotent value
  std::map<int, std::vector<int>> star;   // s0 idempotent -> per-carrier value
};

// A parsed table file: the semigroup plus optional named subsets, named
// element maps, and a Chen section.
struct SemigroupDocument {
  FiniteSemigroup sg;
  std::map<std::string, ElementSubset> subsets;
  std::map<std::string, std::vector<int>> maps;
  std::optional<ChenSection> chen;
};

// Format, one item per line, with `#` starting a comment anywhere:
//   n
//   n rows of n space-separated entries
//   labels: l0 l1 ... (optional)
//   subset NAME: i,j,k
//   map NAME: v0,v1,...,v{n-1}
//   chen carrier: m
//   chen embed: c0,...        (one per idempotent, ascending)
//   chen proj: p0,...,p{m-1}
//   chen act X: v0,...        (one line per carrier element X)
//   chen star E: v0,...,v{m-1} (one line per idempotent E)
// Throws SyntaxError with line/column; table errors propagate from
// validate().
SemigroupDocument parse_document(const std::string& text);

// Canonical form: table, labels, subsets (sorted by name), maps (sorted
// by name), then the Chen section.  parse and serialize round-trip
// exactly on canonical text.
std::string serialize_document(const SemigroupDocument& doc);

// Lifts the Chen section onto ChenData over the document's semigroup.
// Throws DataInvalidError when the section is absent or inconsistent in
// shape; value-level law checking happens in chen_construct.
ChenData chen_data_from_document(const SemigroupDocument& doc);

}  // namespace adeq
