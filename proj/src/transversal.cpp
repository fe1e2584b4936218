#include "adeq/transversal.hpp"

#include <algorithm>
#include <set>

namespace adeq {

void FormulaReport::require(bool pass, const std::string& identity,
                            std::vector<int> witness) {
  ++checked;
  if (!pass) failures.push_back({identity, std::move(witness)});
}

namespace {

struct S0Tables {
  Subsemigroup sub;
  std::vector<int> plus_parent;  // parent index -> parent index, -1 off S0
  std::vector<int> star_parent;
};

S0Tables s0_tables(const FiniteSemigroup& s, const ElementSubset& s0) {
  S0Tables t;
  t.sub = restrict_to(s, s0);
  const AdequateTables at = adequate_tables(t.sub.sg);
  t.plus_parent.assign(s.order(), -1);
  t.star_parent.assign(s.order(), -1);
  for (int i = 0; i < t.sub.sg.order(); ++i) {
    t.plus_parent[t.sub.to_parent[i]] = t.sub.to_parent[at.plus[i]];
    t.star_parent[t.sub.to_parent[i]] = t.sub.to_parent[at.star[i]];
  }
  return t;
}

std::vector<std::tuple<int, int, int>> raw_decompositions(
    const FiniteSemigroup& s, const std::vector<int>& idem,
    const std::vector<int>& s0_members, const S0Tables& t,
    const EquivRelation& gr, const EquivRelation& gl, int x) {
  std::vector<std::tuple<int, int, int>> out;
  for (int m : s0_members) {
    const int mp = t.plus_parent[m];
    const int ms = t.star_parent[m];
    for (int e : idem) {
      if (!gl.same(e, mp)) continue;
      const int em = s.product(e, m);
      for (int f : idem) {
        if (!gr.same(f, ms)) continue;
        if (s.product(em, f) == x) out.emplace_back(e, m, f);
      }
    }
  }
  return out;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistencyError(what);
}

ElementSubset image_of(const std::vector<int>& map, int order) {
  ElementSubset out(order);
  for (int v : map) out.add(v);
  return out;
}

// Properties 1-9 of the factorisation maps.
void verify_properties(const TransversalAnalysis& a) {
  const FiniteSemigroup& s = a.parent;
  for (int x = 0; x < s.order(); ++x) {
    const int e = a.e_of[x], m = a.bar_of[x], f = a.f_of[x];
    const int eb = a.e_of[m], fb = a.f_of[m];
    check(a.rstar.same(e, x) && a.lstar.same(f, x),
          "property 1 fails at " + std::to_string(x));
    if (a.transversal.contains(x)) {
      check(e == a.plus_of[x] && a.set_E0.contains(e) && m == x &&
                f == a.star_of[x] && a.set_E0.contains(f),
            "property 2 fails at " + std::to_string(x));
    }
    check(a.greenl.same(eb, e) && s.product(eb, e) == eb &&
              s.product(e, eb) == e,
          "property 3 fails at " + std::to_string(x));
    check(a.greenr.same(fb, f) && s.product(fb, f) == f &&
              s.product(f, fb) == fb,
          "property 4 fails at " + std::to_string(x));
    if (a.set_I.contains(x)) {
      check(e == x && m == f && f == eb,
            "property 5 fails at " + std::to_string(x));
    }
    if (a.set_Lambda.contains(x)) {
      check(e == m && m == fb && f == x,
            "property 6 fails at " + std::to_string(x));
    }
    check(a.bar_of[e] == eb && eb == a.plus_of[m] && eb == a.f_of[e],
          "property 7 fails at " + std::to_string(x));
    check(a.bar_of[f] == fb && fb == a.star_of[m] && fb == a.e_of[f],
          "property 8 fails at " + std::to_string(x));
    check(m == s.product(s.product(eb, x), fb),
          "property 9 fails at " + std::to_string(x));
  }
}

// The six descriptions of R (and dually of L) must coincide.
void verify_r_l_characterisations(const TransversalAnalysis& a) {
  const FiniteSemigroup& s = a.parent;
  const int n = s.order();
  auto build = [&](auto pred) {
    ElementSubset out(n);
    for (int x = 0; x < n; ++x)
      if (pred(x)) out.add(x);
    return out;
  };
  const std::vector<ElementSubset> r_sets = {
      a.set_R,
      build([&](int x) { return a.set_E0.contains(a.e_of[x]); }),
      build([&](int x) { return x == s.product(a.bar_of[x], a.f_of[x]); }),
      build([&](int x) {
        return x == s.product(a.e_of[a.bar_of[x]], x);
      }),
      build([&](int x) { return a.rstar.same(x, a.bar_of[x]); }),
      build([&](int x) {
        return a.bar_of[x] == s.product(a.e_of[x], a.bar_of[x]);
      })};
  const std::vector<ElementSubset> l_sets = {
      a.set_L,
      build([&](int x) { return a.set_E0.contains(a.f_of[x]); }),
      build([&](int x) { return x == s.product(a.e_of[x], a.bar_of[x]); }),
      build([&](int x) {
        return x == s.product(x, a.f_of[a.bar_of[x]]);
      }),
      build([&](int x) { return a.lstar.same(x, a.bar_of[x]); }),
      build([&](int x) {
        return a.bar_of[x] == s.product(a.bar_of[x], a.f_of[x]);
      })};
  for (size_t i = 1; i < r_sets.size(); ++i)
    check(r_sets[i] == r_sets[0],
          "R characterisation " + std::to_string(i) + " disagrees");
  for (size_t i = 1; i < l_sets.size(); ++i)
    check(l_sets[i] == l_sets[0],
          "L characterisation " + std::to_string(i) + " disagrees");
}

bool quasi_ideal_flag(const TransversalAnalysis& a) {
  const FiniteSemigroup& s = a.parent;
  const auto s0m = a.transversal.members();
  bool sandwich = true;
  for (int u : s0m)
    for (int x = 0; x < s.order() && sandwich; ++x)
      for (int v : s0m)
        if (!a.transversal.contains(s.product(s.product(u, x), v))) {
          sandwich = false;
          break;
        }
  bool lambda_i = true;
  for (int l : a.set_Lambda.members())
    for (int i : a.set_I.members())
      lambda_i = lambda_i && a.transversal.contains(s.product(l, i));
  bool rl = true;
  for (int r : a.set_R.members())
    for (int l : a.set_L.members())
      rl = rl && a.transversal.contains(s.product(r, l));
  check(sandwich == lambda_i && lambda_i == rl,
        "quasi-ideal criteria disagree: S0SS0=" + std::to_string(sandwich) +
            " LambdaI=" + std::to_string(lambda_i) +
            " RL=" + std::to_string(rl));
  return sandwich;
}

}  // namespace

std::vector<std::tuple<int, int, int>> find_decompositions(
    const FiniteSemigroup& s, const ElementSubset& s0, int x) {
  if (x < 0 || x >= s.order()) throw OutOfRangeError("element out of range");
  S0Tables t;
  try {
    t = s0_tables(s, s0);
  } catch (const NotClosedError& e) {
    throw PreconditionFailedError(std::string("S0 is not closed: ") +
                                  e.what());
  } catch (const NotAdequateError& e) {
    throw PreconditionFailedError(std::string("S0 is not adequate: ") +
                                  e.what());
  }
  if (!is_star_subsemigroup(s, s0)) {
    throw PreconditionFailedError("S0 is not a *-subsemigroup");
  }
  return raw_decompositions(s, idempotents(s).members(), s0.members(), t,
                            green_r(s), green_l(s), x);
}

TransversalAnalysis analyze_transversal(const FiniteSemigroup& s,
                                        const ElementSubset& s0) {
  if (s0.empty()) throw NotClosedError("transversal candidate is empty");
  if (s0.parent_order() != s.order()) {
    throw OutOfRangeError("subset parent order does not match semigroup");
  }
  TransversalAnalysis a;
  a.parent = s;
  a.transversal = s0;

  S0Tables t;
  try {
    t = s0_tables(s, s0);
  } catch (const NotAdequateError& e) {
    throw NotAdequateSubError(e.what());
  }
  a.s0 = t.sub;
  a.plus_of = t.plus_parent;
  a.star_of = t.star_parent;
  if (!is_star_subsemigroup(s, s0)) {
    throw NotStarSubError("S0 is not a *-subsemigroup");
  }

  a.greenr = green_r(s);
  a.greenl = green_l(s);
  a.rstar = r_star(s);
  a.lstar = l_star(s);

  const int n = s.order();
  const auto idem = idempotents(s).members();
  const auto s0m = s0.members();
  a.e_of.assign(n, -1);
  a.bar_of.assign(n, -1);
  a.f_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    const auto triples =
        raw_decompositions(s, idem, s0m, t, a.greenr, a.greenl, x);
    if (triples.empty()) {
      throw NoDecompositionError("no factorisation for element " +
                                 std::to_string(x));
    }
    std::set<int> mids;
    std::set<std::pair<int, int>> outers;
    for (const auto& [e, m, f] : triples) {
      mids.insert(m);
      outers.insert({e, f});
    }
    if (mids.size() > 1) {
      throw NotUniqueDecompositionError(
          "element " + std::to_string(x) + " has " +
          std::to_string(mids.size()) + " distinct middle factors");
    }
    // The middle factor determines the outer pair; multiple (e, f) for a
    // single middle would contradict that consequence.
    check(outers.size() == 1, "element " + std::to_string(x) +
                                  " has one middle factor but " +
                                  std::to_string(outers.size()) +
                                  " outer pairs");
    std::tie(a.e_of[x], a.bar_of[x], a.f_of[x]) = triples.front();
  }

  a.set_E0 = ElementSubset(n);
  for (int m : s0m)
    if (s.product(m, m) == m) a.set_E0.add(m);
  a.set_I = ElementSubset(n);
  a.set_Lambda = ElementSubset(n);
  a.set_L = ElementSubset(n);
  a.set_R = ElementSubset(n);
  for (int x = 0; x < n; ++x) {
    if (a.e_of[x] == x) a.set_I.add(x);
    if (a.f_of[x] == x) a.set_Lambda.add(x);
    if (a.e_of[x] == a.e_of[a.bar_of[x]]) a.set_R.add(x);
    if (a.f_of[x] == a.f_of[a.bar_of[x]]) a.set_L.add(x);
  }
  check(a.set_I == image_of(a.e_of, n),
        "I as fixed points differs from the image of e");
  check(a.set_Lambda == image_of(a.f_of, n),
        "Lambda as fixed points differs from the image of f");

  verify_properties(a);
  verify_r_l_characterisations(a);

  a.quasi_ideal = quasi_ideal_flag(a);
  // Multiplicativity looks at the products themselves, the weak variant
  // only at their middle factors.
  bool weak = true, mult = true;
  for (int l : a.set_Lambda.members())
    for (int i : a.set_I.members()) {
      const int p = s.product(l, i);
      mult = mult && a.set_E0.contains(p);
      weak = weak && a.set_E0.contains(a.bar_of[p]);
    }
  check(mult == (weak && a.quasi_ideal),
        "multiplicative hierarchy violated: mult=" + std::to_string(mult) +
            " weak=" + std::to_string(weak) +
            " quasi=" + std::to_string(a.quasi_ideal));
  a.multiplicative = mult;
  a.weakly_multiplicative = weak;
  return a;
}

bool is_quasi_ideal(const TransversalAnalysis& a) { return quasi_ideal_flag(a); }

bool is_multiplicative(const TransversalAnalysis& a) {
  bool mult = true;
  for (int l : a.set_Lambda.members())
    for (int i : a.set_I.members())
      mult = mult && a.set_E0.contains(a.parent.product(l, i));
  check(mult == (is_weakly_multiplicative(a) && quasi_ideal_flag(a)),
        "multiplicative hierarchy violated");
  return mult;
}

bool is_weakly_multiplicative(const TransversalAnalysis& a) {
  bool weak = true;
  for (int l : a.set_Lambda.members())
    for (int i : a.set_I.members())
      weak = weak && a.set_E0.contains(a.bar_of[a.parent.product(l, i)]);
  return weak;
}

LeftAdequateReport left_adequate_equivalences(const FiniteSemigroup& s,
                                              const TransversalAnalysis& a) {
  LeftAdequateReport r;
  r.conditions[0] = is_left_adequate(s);
  r.conditions[1] = a.set_Lambda == a.set_E0;
  r.conditions[2] = a.set_R == a.transversal;
  r.conditions[3] = a.set_L == ElementSubset::full(s.order());
  r.conditions[4] = a.set_I == idempotents(s);
  for (bool c : r.conditions)
    check(c == r.conditions[0], "left-adequacy equivalences disagree");
  r.value = r.conditions[0];
  return r;
}

FormulaReport verify_product_formulas(const TransversalAnalysis& a) {
  const FiniteSemigroup& s = a.parent;
  FormulaReport rep;
  const int n = s.order();
  // Triples over x in R, y in S, z in L.
  for (int y = 0; y < n; ++y) {
    const int ey = a.e_of[y], fy = a.f_of[y];
    const int eyb = a.e_of[a.bar_of[y]], fyb = a.f_of[a.bar_of[y]];
    for (int x : a.set_R.members()) {
      const int p = s.product(ey, x);
      rep.require(a.e_of[p] == s.product(ey, a.e_of[x]), "e(e_y x) = e_y e_x",
                  {y, x});
      rep.require(a.bar_of[p] == s.product(eyb, a.bar_of[x]),
                  "bar(e_y x) = e_ybar xbar", {y, x});
      const int mid = s.product(eyb, a.bar_of[x]);
      rep.require(a.transversal.contains(mid) &&
                      a.f_of[p] ==
                          s.product(a.star_of[mid], a.f_of[x]),
                  "f(e_y x) = (e_ybar xbar)* f_x", {y, x});
    }
    for (int z : a.set_L.members()) {
      const int p = s.product(z, fy);
      rep.require(a.f_of[p] == s.product(a.f_of[z], fy), "f(z f_y) = f_z f_y",
                  {z, y});
      rep.require(a.bar_of[p] == s.product(a.bar_of[z], fyb),
                  "bar(z f_y) = zbar f_ybar", {z, y});
      const int mid = s.product(a.bar_of[z], fyb);
      rep.require(a.transversal.contains(mid) &&
                      a.e_of[p] == s.product(a.e_of[z], a.plus_of[mid]),
                  "e(z f_y) = e_z (zbar f_ybar)+", {z, y});
    }
  }
  // Pairs whose sandwich products land in S0.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int fe = s.product(a.f_of[x], a.e_of[y]);
      const int u = s.product(a.bar_of[x], fe);
      const int v = s.product(fe, a.bar_of[y]);
      if (!a.transversal.contains(u) || !a.transversal.contains(v)) continue;
      const int p = s.product(x, y);
      rep.require(a.bar_of[p] == s.product(u, a.bar_of[y]),
                  "bar(xy) = xbar f_x e_y ybar", {x, y});
      rep.require(a.e_of[p] == s.product(a.e_of[x], a.plus_of[u]),
                  "e(xy) = e_x (xbar f_x e_y)+", {x, y});
      rep.require(a.f_of[p] == s.product(a.star_of[v], a.f_of[y]),
                  "f(xy) = (f_x e_y ybar)* f_y", {x, y});
    }
  // Every element factors through L * R.
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int l : a.set_L.members()) {
      for (int r : a.set_R.members())
        if (s.product(l, r) == x) {
          found = true;
          break;
        }
      if (found) break;
    }
    rep.require(found, "LR = S", {x});
  }
  return rep;
}

RestrictedParts split_quasi_ideal(const TransversalAnalysis& a) {
  if (!a.quasi_ideal) {
    throw NotQuasiIdealError("transversal is not a quasi-ideal");
  }
  RestrictedParts parts;
  try {
    parts.left = restrict_to(a.parent, a.set_L);
    parts.right = restrict_to(a.parent, a.set_R);
  } catch (const NotClosedError& e) {
    throw InternalInconsistencyError(
        std::string("L or R not closed under a quasi-ideal transversal: ") +
        e.what());
  }
  auto embed = [](const Subsemigroup& sub, const ElementSubset& parent_set) {
    ElementSubset out(sub.sg.order());
    for (int p : parent_set.members()) out.add(sub.from_parent[p]);
    return out;
  };
  parts.left_analysis =
      analyze_transversal(parts.left.sg, embed(parts.left, a.transversal));
  parts.right_analysis =
      analyze_transversal(parts.right.sg, embed(parts.right, a.transversal));
  check(is_left_adequate(parts.left.sg), "L is not left adequate");
  check(is_right_adequate(parts.right.sg), "R is not right adequate");
  check(parts.left_analysis.quasi_ideal && parts.right_analysis.quasi_ideal,
        "S0 is not a quasi-ideal transversal of both parts");
  return parts;
}

}  // namespace adeq
