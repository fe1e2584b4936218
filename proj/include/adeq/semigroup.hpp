#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adeq/errors.hpp"

namespace adeq {

// A subset of {0, ..., parent_order - 1}.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(int parent_order) : bits_(parent_order, false) {}

  static ElementSubset full(int parent_order);
  static ElementSubset of(int parent_order, const std::vector<int>& members);

  int parent_order() const { return static_cast<int>(bits_.size()); }
  bool contains(int x) const {
    return x >= 0 && x < parent_order() && bits_[x];
  }
  void add(int x);
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::vector<int> members() const;  // ascending
  bool subset_of(const ElementSubset& other) const;

  friend bool operator==(const ElementSubset&, const ElementSubset&) = default;

 private:
  std::vector<bool> bits_;
  int count_ = 0;
};

// A partition of {0, ..., parent_order - 1}.  Class ids are dense and
// normalised by first occurrence, so two EquivRelations describe the same
// partition iff they compare equal.
struct EquivRelation {
  int parent_order = 0;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // each ascending

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
  const std::vector<int>& class_members(int x) const {
    return classes[class_of[x]];
  }

  static EquivRelation from_class_ids(const std::vector<int>& raw);

  friend bool operator==(const EquivRelation&, const EquivRelation&) = default;
};

// A finite semigroup given by its multiplication table.  Immutable once
// validated; all operations in this toolkit are pure functions over it.
class FiniteSemigroup {
 public:
  // Empty placeholder; real instances come from validate().
  FiniteSemigroup() = default;

  // Checks entries and associativity over all n^3 triples.
  static FiniteSemigroup validate(
      const std::vector<std::vector<int>>& table,
      std::optional<std::vector<std::string>> labels = std::nullopt,
      bool has_adjoined_identity = false);

  int order() const { return order_; }
  int product(int a, int b) const { return table_[a * order_ + b]; }
  int product(int a, int b, int c) const { return product(product(a, b), c); }
  bool has_adjoined_identity() const { return adjoined_; }
  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }
  std::string label_of(int x) const;

  // The two-sided identity, if one exists.
  std::optional<int> identity() const;

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const FiniteSemigroup&,
                         const FiniteSemigroup&) = default;

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::optional<std::vector<std::string>> labels_;
  bool adjoined_ = false;
};

// The restriction of a semigroup to a closed subset, with index maps kept
// for reporting in parent coordinates.
struct Subsemigroup {
  FiniteSemigroup sg;
  std::vector<int> to_parent;    // sub index -> parent index
  std::vector<int> from_parent;  // parent index -> sub index, or -1
};

// Throws NotClosedError if U is not closed under the table.
Subsemigroup restrict_to(const FiniteSemigroup& s, const ElementSubset& u);

// Returns s unchanged when a two-sided identity exists, otherwise the
// order n+1 monoid with a formal identity appended (flag set).  Idempotent
// as an operation.
FiniteSemigroup adjoin_identity(const FiniteSemigroup& s);

ElementSubset idempotents(const FiniteSemigroup& s);
ElementSubset regular_elements(const FiniteSemigroup& s);
// V(x) = {y : xyx = x and yxy = y}
ElementSubset inverses_of(const FiniteSemigroup& s, int x);

// Green's relations, computed on the identity-adjoined semigroup and
// restricted to the original elements.
EquivRelation green_r(const FiniteSemigroup& s);
EquivRelation green_l(const FiniteSemigroup& s);

// Starred Green's relations.  The production path groups elements by the
// kernel of the translation map x -> xa over the identity-adjoined
// semigroup; the *_definitional variants evaluate the defining quantifier
// pairwise and exist as the independent reference route.
EquivRelation r_star(const FiniteSemigroup& s);
EquivRelation l_star(const FiniteSemigroup& s);
EquivRelation r_star_definitional(const FiniteSemigroup& s);
EquivRelation l_star_definitional(const FiniteSemigroup& s);

// (ea = a) and (xa = ya implies xe = ye for all x, y over S^1).
// Throws NotIdempotentError unless e is idempotent.
bool check_e_rstar(const FiniteSemigroup& s, int e, int a);

bool is_abundant(const FiniteSemigroup& s);
// Checked through two independent characterisations (abundant with
// commuting idempotents; unique idempotent per starred class with <E(S)>
// regular).  Disagreement raises InternalInconsistencyError.
bool is_adequate(const FiniteSemigroup& s);
bool is_left_adequate(const FiniteSemigroup& s);
bool is_right_adequate(const FiniteSemigroup& s);

// Unique idempotents a+ (in the R*-class) and a* (in the L*-class) of an
// adequate semigroup.
struct AdequateTables {
  std::vector<int> plus;
  std::vector<int> star;
};
AdequateTables adequate_tables(const FiniteSemigroup& s);  // NotAdequateError
int plus_of(const FiniteSemigroup& s, int a);
int star_of(const FiniteSemigroup& s, int a);

// Smallest closed subset containing the generators; breadth-first in
// ascending index order.
ElementSubset subsemigroup_closure(const FiniteSemigroup& s,
                                   const ElementSubset& generators);

// True iff every a in U has idempotents of U inside its ambient L*- and
// R*-classes.  Cross-checked against the relation-restriction definition;
// disagreement raises InternalInconsistencyError.
bool is_star_subsemigroup(const FiniteSemigroup& s, const ElementSubset& u);

// Backtracking search for a structure-respecting bijection; nullopt when
// the semigroups are not isomorphic.
std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& b);

}  // namespace adeq
