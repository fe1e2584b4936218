#include "adeq/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace adeq {

ElementSubset ElementSubset::full(int parent_order) {
  ElementSubset s(parent_order);
  for (int i = 0; i < parent_order; ++i) s.add(i);
  return s;
}

ElementSubset ElementSubset::of(int parent_order,
                                const std::vector<int>& members) {
  ElementSubset s(parent_order);
  for (int x : members) s.add(x);
  return s;
}

void ElementSubset::add(int x) {
  if (x < 0 || x >= parent_order()) {
    throw OutOfRangeError("subset member " + std::to_string(x) +
                          " outside [0, " + std::to_string(parent_order()) +
                          ")");
  }
  if (!bits_[x]) {
    bits_[x] = true;
    ++count_;
  }
}

std::vector<int> ElementSubset::members() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int i = 0; i < parent_order(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool ElementSubset::subset_of(const ElementSubset& other) const {
  if (parent_order() != other.parent_order()) return false;
  for (int i = 0; i < parent_order(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

EquivRelation EquivRelation::from_class_ids(const std::vector<int>& raw) {
  EquivRelation r;
  r.parent_order = static_cast<int>(raw.size());
  r.class_of.assign(raw.size(), -1);
  std::map<int, int> remap;
  for (int i = 0; i < r.parent_order; ++i) {
    auto [it, inserted] =
        remap.try_emplace(raw[i], static_cast<int>(r.classes.size()));
    if (inserted) r.classes.emplace_back();
    r.class_of[i] = it->second;
    r.classes[it->second].push_back(i);
  }
  return r;
}

FiniteSemigroup FiniteSemigroup::validate(
    const std::vector<std::vector<int>>& table,
    std::optional<std::vector<std::string>> labels,
    bool has_adjoined_identity) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw OutOfRangeError("order must be at least 1");
  FiniteSemigroup s;
  s.order_ = n;
  s.table_.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw OutOfRangeError("row " + std::to_string(a) + " has " +
                            std::to_string(table[a].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n) {
        throw OutOfRangeError("entry (" + std::to_string(a) + "," +
                              std::to_string(b) + ") = " + std::to_string(v) +
                              " outside [0, " + std::to_string(n) + ")");
      }
      s.table_.push_back(v);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.product(s.product(a, b), c) != s.product(a, s.product(b, c))) {
          throw NonAssociativeError(
              "associativity fails at (" + std::to_string(a) + "," +
              std::to_string(b) + "," + std::to_string(c) + ")");
        }
  if (labels && static_cast<int>(labels->size()) != n) {
    throw OutOfRangeError("label list length does not match order");
  }
  s.labels_ = std::move(labels);
  s.adjoined_ = has_adjoined_identity;
  if (s.adjoined_) {
    const int e = n - 1;
    for (int a = 0; a < n; ++a)
      if (s.product(e, a) != a || s.product(a, e) != a) {
        throw OutOfRangeError(
            "adjoined-identity flag set but last element is not an identity");
      }
  }
  return s;
}

std::string FiniteSemigroup::label_of(int x) const {
  if (labels_) return (*labels_)[x];
  return std::to_string(x);
}

std::optional<int> FiniteSemigroup::identity() const {
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int a = 0; a < order_ && ok; ++a)
      ok = product(e, a) == a && product(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

std::vector<std::vector<int>> FiniteSemigroup::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[a][b] = product(a, b);
  return out;
}

Subsemigroup restrict_to(const FiniteSemigroup& s, const ElementSubset& u) {
  if (u.empty()) throw NotClosedError("cannot restrict to the empty set");
  if (u.parent_order() != s.order()) {
    throw OutOfRangeError("subset parent order does not match semigroup");
  }
  Subsemigroup sub;
  sub.to_parent = u.members();
  sub.from_parent.assign(s.order(), -1);
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i)
    sub.from_parent[sub.to_parent[i]] = i;
  const int m = static_cast<int>(sub.to_parent.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int p = s.product(sub.to_parent[i], sub.to_parent[j]);
      if (sub.from_parent[p] < 0) {
        throw NotClosedError("product " + std::to_string(sub.to_parent[i]) +
                             "*" + std::to_string(sub.to_parent[j]) + " = " +
                             std::to_string(p) + " escapes the subset");
      }
      table[i][j] = sub.from_parent[p];
    }
  std::optional<std::vector<std::string>> labels;
  if (s.labels()) {
    labels.emplace();
    for (int p : sub.to_parent) labels->push_back((*s.labels())[p]);
  }
  sub.sg = FiniteSemigroup::validate(table, std::move(labels));
  return sub;
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.identity()) return s;
  const int n = s.order();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = s.product(a, b);
  for (int a = 0; a <= n; ++a) {
    table[a][n] = a;
    table[n][a] = a;
  }
  std::optional<std::vector<std::string>> labels;
  if (s.labels()) {
    labels = *s.labels();
    labels->push_back("1");
  }
  return FiniteSemigroup::validate(table, std::move(labels), true);
}

ElementSubset idempotents(const FiniteSemigroup& s) {
  ElementSubset e(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (s.product(x, x) == x) e.add(x);
  return e;
}

ElementSubset regular_elements(const FiniteSemigroup& s) {
  ElementSubset r(s.order());
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (s.product(x, y, x) == x) {
        r.add(x);
        break;
      }
  return r;
}

ElementSubset inverses_of(const FiniteSemigroup& s, int x) {
  if (x < 0 || x >= s.order()) throw OutOfRangeError("element out of range");
  ElementSubset v(s.order());
  for (int y = 0; y < s.order(); ++y)
    if (s.product(x, y, x) == x && s.product(y, x, y) == y) v.add(y);
  return v;
}

namespace {

// Green's R via right ideals a S^1 = b S^1, computed on the adjoined copy.
EquivRelation green_from_ideals(const FiniteSemigroup& s, bool right) {
  const FiniteSemigroup s1 = adjoin_identity(s);
  const int n = s.order();
  const int n1 = s1.order();
  std::map<std::vector<bool>, int> ids;
  std::vector<int> raw(n);
  for (int a = 0; a < n; ++a) {
    std::vector<bool> ideal(n1, false);
    for (int x = 0; x < n1; ++x)
      ideal[right ? s1.product(a, x) : s1.product(x, a)] = true;
    raw[a] = ids.try_emplace(ideal, static_cast<int>(ids.size())).first->second;
  }
  return EquivRelation::from_class_ids(raw);
}

// Kernel of the translation x -> xa (or ax), as a canonical id vector.
std::vector<int> translation_kernel(const FiniteSemigroup& s1, int a,
                                    bool left_multipliers) {
  const int n1 = s1.order();
  std::vector<int> ker(n1);
  std::map<int, int> first;
  for (int x = 0; x < n1; ++x) {
    const int v = left_multipliers ? s1.product(x, a) : s1.product(a, x);
    ker[x] = first.try_emplace(v, static_cast<int>(first.size())).first->second;
  }
  return ker;
}

EquivRelation star_by_kernels(const FiniteSemigroup& s, bool left_multipliers) {
  const FiniteSemigroup s1 = adjoin_identity(s);
  std::map<std::vector<int>, int> ids;
  std::vector<int> raw(s.order());
  for (int a = 0; a < s.order(); ++a) {
    auto ker = translation_kernel(s1, a, left_multipliers);
    raw[a] = ids.try_emplace(std::move(ker), static_cast<int>(ids.size()))
                 .first->second;
  }
  return EquivRelation::from_class_ids(raw);
}

EquivRelation star_by_quantifier(const FiniteSemigroup& s,
                                 bool left_multipliers) {
  const FiniteSemigroup s1 = adjoin_identity(s);
  const int n = s.order();
  const int n1 = s1.order();
  auto related = [&](int a, int b) {
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n1; ++y) {
        const bool pa = left_multipliers ? s1.product(x, a) == s1.product(y, a)
                                         : s1.product(a, x) == s1.product(a, y);
        const bool pb = left_multipliers ? s1.product(x, b) == s1.product(y, b)
                                         : s1.product(b, x) == s1.product(b, y);
        if (pa != pb) return false;
      }
    return true;
  };
  // The relation is transitive by definition, so linking each element to
  // the first related representative is enough.
  std::vector<int> raw(n);
  for (int a = 0; a < n; ++a) {
    raw[a] = a;
    for (int b = 0; b < a; ++b)
      if (raw[b] == b && related(a, b)) {
        raw[a] = b;
        break;
      }
  }
  return EquivRelation::from_class_ids(raw);
}

}  // namespace

EquivRelation green_r(const FiniteSemigroup& s) {
  return green_from_ideals(s, true);
}
EquivRelation green_l(const FiniteSemigroup& s) {
  return green_from_ideals(s, false);
}
EquivRelation r_star(const FiniteSemigroup& s) {
  return star_by_kernels(s, true);
}
EquivRelation l_star(const FiniteSemigroup& s) {
  return star_by_kernels(s, false);
}
EquivRelation r_star_definitional(const FiniteSemigroup& s) {
  return star_by_quantifier(s, true);
}
EquivRelation l_star_definitional(const FiniteSemigroup& s) {
  return star_by_quantifier(s, false);
}

bool check_e_rstar(const FiniteSemigroup& s, int e, int a) {
  if (s.product(e, e) != e) {
    throw NotIdempotentError("element " + std::to_string(e) +
                             " is not idempotent");
  }
  if (s.product(e, a) != a) return false;
  const FiniteSemigroup s1 = adjoin_identity(s);
  const int n1 = s1.order();
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n1; ++y)
      if (s1.product(x, a) == s1.product(y, a) &&
          s1.product(x, e) != s1.product(y, e))
        return false;
  return true;
}

namespace {

bool every_class_has_idempotent(const EquivRelation& rel,
                                const ElementSubset& e) {
  for (const auto& cls : rel.classes) {
    if (std::none_of(cls.begin(), cls.end(),
                     [&](int x) { return e.contains(x); }))
      return false;
  }
  return true;
}

bool every_class_has_unique_idempotent(const EquivRelation& rel,
                                       const ElementSubset& e) {
  for (const auto& cls : rel.classes) {
    int count = 0;
    for (int x : cls)
      if (e.contains(x)) ++count;
    if (count != 1) return false;
  }
  return true;
}

}  // namespace

bool is_abundant(const FiniteSemigroup& s) {
  const ElementSubset e = idempotents(s);
  return every_class_has_idempotent(r_star(s), e) &&
         every_class_has_idempotent(l_star(s), e);
}

bool is_adequate(const FiniteSemigroup& s) {
  const ElementSubset e = idempotents(s);
  bool commuting = true;
  const auto idem = e.members();
  for (size_t i = 0; i < idem.size() && commuting; ++i)
    for (size_t j = i + 1; j < idem.size() && commuting; ++j)
      commuting = s.product(idem[i], idem[j]) == s.product(idem[j], idem[i]);
  const bool definitional = is_abundant(s) && commuting;

  // Second route: unique idempotent per starred class and <E(S)> regular.
  bool unique = every_class_has_unique_idempotent(r_star(s), e) &&
                every_class_has_unique_idempotent(l_star(s), e);
  bool second = false;
  if (unique) {
    const auto gen = restrict_to(s, subsemigroup_closure(s, e));
    second = regular_elements(gen.sg).size() == gen.sg.order();
  }
  if (definitional != second) {
    throw InternalInconsistencyError(
        "adequacy characterisations disagree: definitional=" +
        std::to_string(definitional) + " unique+regular=" +
        std::to_string(second));
  }
  return definitional;
}

bool is_left_adequate(const FiniteSemigroup& s) {
  return is_abundant(s) &&
         every_class_has_unique_idempotent(r_star(s), idempotents(s));
}

bool is_right_adequate(const FiniteSemigroup& s) {
  return is_abundant(s) &&
         every_class_has_unique_idempotent(l_star(s), idempotents(s));
}

AdequateTables adequate_tables(const FiniteSemigroup& s) {
  if (!is_adequate(s)) throw NotAdequateError("semigroup is not adequate");
  const ElementSubset e = idempotents(s);
  const EquivRelation rs = r_star(s);
  const EquivRelation ls = l_star(s);
  AdequateTables t;
  t.plus.assign(s.order(), -1);
  t.star.assign(s.order(), -1);
  for (int a = 0; a < s.order(); ++a) {
    for (int x : rs.class_members(a))
      if (e.contains(x)) t.plus[a] = x;
    for (int x : ls.class_members(a))
      if (e.contains(x)) t.star[a] = x;
  }
  return t;
}

int plus_of(const FiniteSemigroup& s, int a) {
  return adequate_tables(s).plus.at(a);
}
int star_of(const FiniteSemigroup& s, int a) {
  return adequate_tables(s).star.at(a);
}

ElementSubset subsemigroup_closure(const FiniteSemigroup& s,
                                   const ElementSubset& generators) {
  if (generators.empty()) {
    throw PreconditionFailedError("generator set must be nonempty");
  }
  if (generators.parent_order() != s.order()) {
    throw OutOfRangeError("generator parent order does not match semigroup");
  }
  ElementSubset closure = generators;
  std::vector<int> frontier = generators.members();
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : closure.members()) {
      for (int b : frontier) {
        for (int p : {s.product(a, b), s.product(b, a)}) {
          if (!closure.contains(p)) {
            closure.add(p);
            next.push_back(p);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return closure;
}

bool is_star_subsemigroup(const FiniteSemigroup& s, const ElementSubset& u) {
  const Subsemigroup sub = restrict_to(s, u);  // throws NotClosedError
  const ElementSubset e_parent = idempotents(s);
  const EquivRelation rs = r_star(s);
  const EquivRelation ls = l_star(s);

  bool criterion = true;
  for (int a : u.members()) {
    bool has_r = false, has_l = false;
    for (int e : u.members()) {
      if (!e_parent.contains(e)) continue;
      has_r = has_r || rs.same(e, a);
      has_l = has_l || ls.same(e, a);
    }
    if (!has_r || !has_l) {
      criterion = false;
      break;
    }
  }

  // Independent route: U abundant with both starred relations equal to the
  // restriction of the ambient ones.
  bool restriction = is_abundant(sub.sg);
  if (restriction) {
    const EquivRelation rs_u = r_star(sub.sg);
    const EquivRelation ls_u = l_star(sub.sg);
    const int m = sub.sg.order();
    for (int i = 0; i < m && restriction; ++i)
      for (int j = 0; j < m && restriction; ++j) {
        restriction =
            rs_u.same(i, j) == rs.same(sub.to_parent[i], sub.to_parent[j]) &&
            ls_u.same(i, j) == ls.same(sub.to_parent[i], sub.to_parent[j]);
      }
  }
  if (criterion != restriction) {
    throw InternalInconsistencyError(
        "*-subsemigroup routes disagree: idempotent-witness=" +
        std::to_string(criterion) +
        " relation-restriction=" + std::to_string(restriction));
  }
  return criterion;
}

namespace {

// Iso-invariant colouring refined by product structure.
std::vector<int> iso_colours(const FiniteSemigroup& s) {
  const int n = s.order();
  const ElementSubset reg = regular_elements(s);
  std::vector<long> sig(n);
  for (int x = 0; x < n; ++x) {
    long fact = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s.product(a, b) == x) ++fact;
    sig[x] = fact * 4 + (s.product(x, x) == x ? 2 : 0) +
             (reg.contains(x) ? 1 : 0);
  }
  // Colour ids are ranks of the sorted keys so that they are comparable
  // across different semigroups.
  std::vector<int> colour(n);
  {
    std::map<long, int> ids;
    for (int x = 0; x < n; ++x) ids.emplace(sig[x], 0);
    int rank = 0;
    for (auto& [key, id] : ids) id = rank++;
    for (int x = 0; x < n; ++x) colour[x] = ids[sig[x]];
  }
  // A few refinement rounds over the multiplication.
  for (int round = 0; round < 3; ++round) {
    std::vector<std::vector<int>> keys(n);
    for (int x = 0; x < n; ++x) {
      std::vector<int> key;
      key.push_back(colour[x]);
      std::vector<int> prof;
      for (int y = 0; y < n; ++y) {
        prof.push_back(colour[s.product(x, y)] * n + colour[s.product(y, x)]);
      }
      std::sort(prof.begin(), prof.end());
      key.insert(key.end(), prof.begin(), prof.end());
      keys[x] = std::move(key);
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& key : keys) ids.emplace(key, 0);
    int rank = 0;
    for (auto& [key, id] : ids) id = rank++;
    for (int x = 0; x < n; ++x) colour[x] = ids[keys[x]];
  }
  return colour;
}

bool iso_extend(const FiniteSemigroup& a, const FiniteSemigroup& b,
                const std::vector<int>& ca, const std::vector<int>& cb,
                std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = a.order();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || cb[cand] != ca[next]) continue;
    map[next] = cand;
    used[cand] = true;
    // Check every product constraint that became fully mapped by this
    // assignment: pairs touching `next`, plus earlier pairs whose product
    // is `next`.
    bool ok = true;
    for (int i = 0; i <= next && ok; ++i)
      for (int j = 0; j <= next && ok; ++j) {
        const int p = a.product(i, j);
        if (p > next) continue;
        if (i != next && j != next && p != next) continue;
        ok = b.product(map[i], map[j]) == map[p];
      }
    if (ok && iso_extend(a, b, ca, cb, map, used, next + 1)) return true;
    map[next] = -1;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const std::vector<int> ca = iso_colours(a);
  const std::vector<int> cb = iso_colours(b);
  {
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  std::vector<int> map(a.order(), -1);
  std::vector<bool> used(a.order(), false);
  if (iso_extend(a, b, ca, cb, map, used, 0)) return map;
  return std::nullopt;
}

}  // namespace adeq
