#include "adeq/construction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adeq {

namespace {

void fail_iso(bool ok, const std::string& what) {
  if (!ok) throw IsoFailedError(what);
}

void fail_data(bool ok, const std::string& what) {
  if (!ok) throw DataInvalidError(what);
}

void fail_construction(bool ok, const std::string& what) {
  if (!ok) throw ConstructionFailedError(what);
}

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistencyError(what);
}

std::string tuple_str(const std::vector<int>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

// The shared copy of S0 must be one structure: same products and the same
// e/f/plus/star skeleton on both sides.
void validate_correspondence(const StarMap& sm) {
  const int k = sm.s0_order();
  fail_data(static_cast<int>(sm.s0_in_left.size()) == k &&
                static_cast<int>(sm.s0_in_right.size()) == k,
            "correspondence size does not match S0");
  fail_data(sm.left_analysis.transversal ==
                ElementSubset::of(sm.left.order(), sm.s0_in_left),
            "left transversal does not match the correspondence");
  fail_data(sm.right_analysis.transversal ==
                ElementSubset::of(sm.right.order(), sm.s0_in_right),
            "right transversal does not match the correspondence");
  const AdequateTables t0 = adequate_tables(sm.s0);
  for (int s = 0; s < k; ++s) {
    const int ls = sm.s0_in_left[s], rs = sm.s0_in_right[s];
    for (int t = 0; t < k; ++t) {
      const int p = sm.s0.product(s, t);
      fail_data(sm.left.product(ls, sm.s0_in_left[t]) == sm.s0_in_left[p],
                "left embedding is not a homomorphism at (" +
                    std::to_string(s) + "," + std::to_string(t) + ")");
      fail_data(sm.right.product(rs, sm.s0_in_right[t]) == sm.s0_in_right[p],
                "right embedding is not a homomorphism at (" +
                    std::to_string(s) + "," + std::to_string(t) + ")");
    }
    // e/f of transversal elements are plus/star, on both sides.
    fail_data(sm.left_analysis.e_of[ls] == sm.s0_in_left[t0.plus[s]] &&
                  sm.left_analysis.f_of[ls] == sm.s0_in_left[t0.star[s]] &&
                  sm.right_analysis.e_of[rs] == sm.s0_in_right[t0.plus[s]] &&
                  sm.right_analysis.f_of[rs] == sm.s0_in_right[t0.star[s]],
              "e/f structure of the shared transversal differs at " +
                  std::to_string(s));
  }
}

void validate_star_map(const StarMap& sm) {
  fail_data(sm.left_analysis.quasi_ideal && sm.right_analysis.quasi_ideal,
            "S0 must be a quasi-ideal transversal of both parts");
  fail_data(is_left_adequate(sm.left), "left part is not left adequate");
  fail_data(is_right_adequate(sm.right), "right part is not right adequate");
  validate_correspondence(sm);
  fail_data(static_cast<int>(sm.values.size()) == sm.right.order(),
            "star table must have one row per element of R");
  for (int a = 0; a < sm.right.order(); ++a) {
    fail_data(static_cast<int>(sm.values[a].size()) == sm.left.order(),
              "star table row " + std::to_string(a) + " has the wrong size");
    for (int x = 0; x < sm.left.order(); ++x)
      fail_data(sm.values[a][x] >= 0 && sm.values[a][x] < sm.s0_order(),
                "star value out of range at (" + std::to_string(a) + "," +
                    std::to_string(x) + ")");
  }
}

}  // namespace

int SpinedProduct::pair_index(int x, int a) const {
  const auto it = std::lower_bound(pairs.begin(), pairs.end(),
                                   std::pair<int, int>{x, a});
  if (it == pairs.end() || *it != std::pair<int, int>{x, a}) return -1;
  return static_cast<int>(it - pairs.begin());
}

StarMap make_star_map(const FiniteSemigroup& left,
                      const ElementSubset& s0_in_left,
                      const FiniteSemigroup& right,
                      const ElementSubset& s0_in_right,
                      const std::vector<std::pair<int, int>>& correspondence,
                      const std::vector<std::vector<int>>& values) {
  StarMap sm;
  sm.left = left;
  sm.right = right;
  sm.left_analysis = analyze_transversal(left, s0_in_left);
  sm.right_analysis = analyze_transversal(right, s0_in_right);
  auto corr = correspondence;
  std::sort(corr.begin(), corr.end());
  sm.s0_from_left.assign(left.order(), -1);
  sm.s0_from_right.assign(right.order(), -1);
  for (const auto& [l, r] : corr) {
    sm.s0_from_left[l] = static_cast<int>(sm.s0_in_left.size());
    sm.s0_from_right[r] = static_cast<int>(sm.s0_in_right.size());
    sm.s0_in_left.push_back(l);
    sm.s0_in_right.push_back(r);
  }
  fail_data(ElementSubset::of(left.order(), sm.s0_in_left) == s0_in_left &&
                ElementSubset::of(right.order(), sm.s0_in_right) ==
                    s0_in_right,
            "correspondence does not enumerate both transversal copies");
  sm.s0 = restrict_to(left, s0_in_left).sg;
  sm.values = values;
  validate_star_map(sm);
  return sm;
}

StarMap extract_star(const FiniteSemigroup& s, const TransversalAnalysis& a) {
  if (!a.quasi_ideal) {
    throw NotQuasiIdealError("star extraction needs a quasi-ideal transversal");
  }
  RestrictedParts parts = split_quasi_ideal(a);
  StarMap sm;
  sm.left = parts.left.sg;
  sm.right = parts.right.sg;
  sm.left_analysis = std::move(parts.left_analysis);
  sm.right_analysis = std::move(parts.right_analysis);
  sm.s0 = a.s0.sg;
  sm.s0_from_left.assign(sm.left.order(), -1);
  sm.s0_from_right.assign(sm.right.order(), -1);
  for (int i = 0; i < sm.s0.order(); ++i) {
    const int p = a.s0.to_parent[i];
    const int l = parts.left.from_parent[p];
    const int r = parts.right.from_parent[p];
    check(l >= 0 && r >= 0, "S0 escapes L or R");
    sm.s0_in_left.push_back(l);
    sm.s0_in_right.push_back(r);
    sm.s0_from_left[l] = i;
    sm.s0_from_right[r] = i;
  }
  sm.values.assign(sm.right.order(),
                   std::vector<int>(sm.left.order(), -1));
  for (int r = 0; r < sm.right.order(); ++r)
    for (int l = 0; l < sm.left.order(); ++l) {
      const int p =
          s.product(parts.right.to_parent[r], parts.left.to_parent[l]);
      check(a.s0.from_parent[p] >= 0,
            "product R*L escapes S0 at (" + std::to_string(r) + "," +
                std::to_string(l) + ")");
      sm.values[r][l] = a.s0.from_parent[p];
    }
  validate_star_map(sm);
  const AxiomReport rep = check_star_axioms(sm, false);
  check(rep.pass(false), "extracted star map fails its own axioms");
  return sm;
}

AxiomReport check_star_axioms(const StarMap& sm, bool require_multiplicative) {
  AxiomReport rep;
  const FiniteSemigroup& l = sm.left;
  const FiniteSemigroup& r = sm.right;
  auto witness = [&](bool& flag, const std::string& cond,
                     std::vector<int> tuple) {
    flag = false;
    if (rep.witnesses.size() < 8)
      rep.witnesses.push_back({cond, std::move(tuple)});
  };

  // Condition (2): the map extends multiplication whenever one argument
  // lies in S0.
  for (int s = 0; s < sm.s0_order(); ++s) {
    for (int x = 0; x < l.order(); ++x) {
      const int p = sm.s0_from_left[l.product(sm.s0_in_left[s], x)];
      if (p < 0 || sm.values[sm.s0_in_right[s]][x] != p)
        witness(rep.extension_axiom, "(2) a in S0", {s, x});
    }
    for (int a = 0; a < r.order(); ++a) {
      const int p = sm.s0_from_right[r.product(a, sm.s0_in_right[s])];
      if (p < 0 || sm.values[a][sm.s0_in_left[s]] != p)
        witness(rep.extension_axiom, "(2) x in S0", {a, s});
    }
  }

  // Condition (1): (a*y)f_b * z = a * e_y(b*z) whenever ybar = bbar.
  for (int y = 0; y < l.order(); ++y)
    for (int b = 0; b < r.order(); ++b) {
      if (sm.bar_left(y) != sm.bar_right(b)) continue;
      for (int a = 0; a < r.order(); ++a)
        for (int z = 0; z < l.order(); ++z) {
          const int s1 = sm.values[a][y];
          const int rb = r.product(sm.s0_in_right[s1],
                                   sm.right_analysis.f_of[b]);
          const int lhs = sm.values[rb][z];
          const int s2 = sm.values[b][z];
          const int le =
              l.product(sm.left_analysis.e_of[y], sm.s0_in_left[s2]);
          const int rhs = sm.values[a][le];
          if (lhs != rhs)
            witness(rep.associativity_axiom, "(1)", {a, y, b, z});
        }
    }

  if (require_multiplicative) {
    rep.idempotent_checked = true;
    for (int e : idempotents(r).members())
      for (int f : idempotents(l).members()) {
        const int s = sm.values[e][f];
        if (sm.s0.product(s, s) != s)
          witness(rep.idempotent_axiom, "(3)", {e, f});
      }
  }
  return rep;
}

FormulaReport check_internal_identities(const StarMap& sm) {
  FormulaReport rep;
  const FiniteSemigroup& l = sm.left;
  const FiniteSemigroup& r = sm.right;
  const AdequateTables t0 = adequate_tables(sm.s0);
  const auto& la = sm.left_analysis;
  const auto& ra = sm.right_analysis;

  // Cancellation transfer to the idempotent coordinates.
  for (int x = 0; x < l.order(); ++x)
    for (int a = 0; a < r.order(); ++a)
      for (int b = 0; b < r.order(); ++b)
        if (sm.values[a][x] == sm.values[b][x])
          rep.require(sm.values[a][la.e_of[x]] == sm.values[b][la.e_of[x]],
                      "a*x = b*x implies a*e_x = b*e_x", {a, b, x});
  for (int a = 0; a < r.order(); ++a)
    for (int x = 0; x < l.order(); ++x)
      for (int y = 0; y < l.order(); ++y)
        if (sm.values[a][x] == sm.values[a][y])
          rep.require(sm.values[ra.f_of[a]][x] == sm.values[ra.f_of[a]][y],
                      "a*x = a*y implies f_a*x = f_a*y", {a, x, y});

  // a*x = e_a (a*x) f_x inside S0.
  for (int a = 0; a < r.order(); ++a)
    for (int x = 0; x < l.order(); ++x) {
      const int ide = sm.s0_from_right[ra.e_of[a]];
      const int idf = sm.s0_from_left[la.f_of[x]];
      const int s = sm.values[a][x];
      rep.require(ide >= 0 && idf >= 0 &&
                      sm.s0.product(sm.s0.product(ide, s), idf) == s,
                  "a*x = e_a(a*x)f_x", {a, x});
    }

  // e of a*y is stable under the f_b sandwich; dual for f.
  for (int y = 0; y < l.order(); ++y)
    for (int b = 0; b < r.order(); ++b) {
      if (sm.bar_left(y) != sm.bar_right(b)) continue;
      for (int a = 0; a < r.order(); ++a) {
        const int s = sm.values[a][y];
        const int rb = r.product(sm.s0_in_right[s], ra.f_of[b]);
        rep.require(sm.s0_from_right[ra.e_of[rb]] == t0.plus[s],
                    "e(a*y) = e((a*y)f_b)", {a, y, b});
      }
      for (int z = 0; z < l.order(); ++z) {
        const int s = sm.values[b][z];
        const int le = l.product(la.e_of[y], sm.s0_in_left[s]);
        rep.require(sm.s0_from_left[la.f_of[le]] == t0.star[s],
                    "f(e_y(b*z)) = f(b*z)", {y, b, z});
      }
    }

  // Starred-class placements inside L.
  for (int a = 0; a < r.order(); ++a)
    for (int x = 0; x < l.order(); ++x) {
      const int u = sm.s0_in_left[sm.values[a][la.e_of[x]]];
      const int v = sm.s0_in_left[sm.values[a][x]];
      const int w = sm.s0_in_left[sm.values[ra.f_of[a]][x]];
      rep.require(la.rstar.same(u, v), "(a*e_x) R*_L (a*x)", {a, x});
      rep.require(la.lstar.same(v, w), "(a*x) L*_L (f_a*x)", {a, x});
    }
  return rep;
}

SpinedProduct build_spined_product(const StarMap& sm) {
  validate_star_map(sm);
  const AxiomReport axioms = check_star_axioms(sm, false);
  if (!axioms.pass(false)) {
    std::string what = "star-map axioms fail";
    if (!axioms.witnesses.empty())
      what += ": " + axioms.witnesses.front().condition + " at " +
              tuple_str(axioms.witnesses.front().tuple);
    throw AxiomsFailedError(what);
  }

  SpinedProduct sp;
  sp.star = sm;
  const FiniteSemigroup& l = sm.left;
  const FiniteSemigroup& r = sm.right;
  for (int x = 0; x < l.order(); ++x)
    for (int a = 0; a < r.order(); ++a)
      if (sm.bar_left(x) == sm.bar_right(a)) sp.pairs.emplace_back(x, a);

  const int n = static_cast<int>(sp.pairs.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [x, a] = sp.pairs[i];
      const auto [y, b] = sp.pairs[j];
      const int s = sm.values[a][y];
      const int px = l.product(sm.left_analysis.e_of[x], sm.s0_in_left[s]);
      const int pa = r.product(sm.s0_in_right[s], sm.right_analysis.f_of[b]);
      const int k = sp.pair_index(px, pa);
      if (k < 0) {
        throw ClosureFailedError("product of pairs " + std::to_string(i) +
                                 " and " + std::to_string(j) +
                                 " leaves the pair set: (" +
                                 std::to_string(px) + "," +
                                 std::to_string(pa) + ")");
      }
      table[i][j] = k;
    }
  try {
    sp.sg = FiniteSemigroup::validate(table);
  } catch (const NonAssociativeError& e) {
    throw ConstructionFailedError(std::string("pair product table: ") +
                                  e.what());
  }

  fail_construction(is_abundant(sp.sg), "pair semigroup is not abundant");

  const AdequateTables t0 = adequate_tables(sm.s0);
  sp.embedded_t0 = ElementSubset(n);
  std::vector<int> diag(sm.s0_order());
  for (int s = 0; s < sm.s0_order(); ++s) {
    diag[s] = sp.pair_index(sm.s0_in_left[s], sm.s0_in_right[s]);
    fail_construction(diag[s] >= 0, "diagonal element missing for " +
                                        std::to_string(s));
    sp.embedded_t0.add(diag[s]);
  }
  try {
    sp.t0_analysis = analyze_transversal(sp.sg, sp.embedded_t0);
  } catch (const Error& e) {
    throw ConstructionFailedError(
        std::string("diagonal transversal analysis: ") + e.what());
  }
  fail_construction(sp.t0_analysis.quasi_ideal,
                    "diagonal transversal is not a quasi-ideal");
  for (int s = 0; s < sm.s0_order(); ++s)
    for (int t = 0; t < sm.s0_order(); ++t)
      fail_construction(
          sp.sg.product(diag[s], diag[t]) == diag[sm.s0.product(s, t)],
          "diagonal is not isomorphic to S0 at (" + std::to_string(s) + "," +
              std::to_string(t) + ")");

  // Idempotent pairs are exactly those with xbar = a*x.
  for (int i = 0; i < n; ++i) {
    const auto [x, a] = sp.pairs[i];
    fail_construction((sp.sg.product(i, i) == i) ==
                          (sm.bar_left(x) == sm.values[a][x]),
                      "idempotent characterisation fails at pair " +
                          std::to_string(i));
  }

  // (x,a) R* (e_x, e_xbar) and (x,a) L* (f_abar, f_a).
  for (int i = 0; i < n; ++i) {
    const auto [x, a] = sp.pairs[i];
    const int q = sp.pair_index(sm.left_analysis.e_of[x],
                                sm.s0_in_right[t0.plus[sm.bar_left(x)]]);
    const int q2 = sp.pair_index(sm.s0_in_left[t0.star[sm.bar_right(a)]],
                                 sm.right_analysis.f_of[a]);
    fail_construction(q >= 0 && sp.t0_analysis.rstar.same(i, q),
                      "R*-placement fails at pair " + std::to_string(i));
    fail_construction(q2 >= 0 && sp.t0_analysis.lstar.same(i, q2),
                      "L*-placement fails at pair " + std::to_string(i));
  }

  const FormulaReport internal = check_internal_identities(sm);
  fail_construction(internal.ok(),
                    internal.ok() ? ""
                                  : "internal identity '" +
                                        internal.failures.front().identity +
                                        "' fails at " +
                                        tuple_str(
                                            internal.failures.front().witness));
  return sp;
}

std::pair<SpinedProduct, IsoReport> decompose_and_rebuild(
    const FiniteSemigroup& s, const TransversalAnalysis& a) {
  StarMap sm = extract_star(s, a);
  SpinedProduct sp = build_spined_product(sm);
  IsoReport rep;

  // Recover the coordinates of x as elements of L and R.
  const RestrictedParts parts = split_quasi_ideal(a);
  const std::vector<int>& l_from_parent = parts.left.from_parent;
  const std::vector<int>& r_from_parent = parts.right.from_parent;

  const int n = s.order();
  std::vector<int> phi(n, -1);
  for (int x = 0; x < n; ++x) {
    const int lx = l_from_parent[s.product(a.e_of[x], a.bar_of[x])];
    const int rx = r_from_parent[s.product(a.bar_of[x], a.f_of[x])];
    fail_iso(lx >= 0 && rx >= 0,
             "coordinates of " + std::to_string(x) + " miss L or R");
    phi[x] = sp.pair_index(lx, rx);
    fail_iso(phi[x] >= 0,
             "image of " + std::to_string(x) + " is not a pair");
  }
  rep.bijective = static_cast<int>(sp.pairs.size()) == n &&
                  std::set<int>(phi.begin(), phi.end()).size() ==
                      static_cast<size_t>(n);
  fail_iso(rep.bijective, "coordinate map is not a bijection");
  rep.homomorphism = true;
  for (int x = 0; x < n && rep.homomorphism; ++x)
    for (int y = 0; y < n && rep.homomorphism; ++y)
      rep.homomorphism =
          phi[s.product(x, y)] == sp.sg.product(phi[x], phi[y]);
  fail_iso(rep.homomorphism, "coordinate map is not a homomorphism");

  // E(T) both ways: idempotency scan against the image of E(S).
  {
    std::set<int> scan, image;
    for (int i = 0; i < static_cast<int>(sp.pairs.size()); ++i)
      if (sp.sg.product(i, i) == i) scan.insert(i);
    for (int y : idempotents(s).members()) image.insert(phi[y]);
    rep.idempotents_match = scan == image;
    fail_iso(rep.idempotents_match, "E(T) differs from the image of E(S)");
  }

  // x f_a = e_x a over all pairs, in the source.
  rep.lemma_xfa = true;
  for (const auto& [x, ar] : sp.pairs) {
    const int px = parts.left.to_parent[x];
    const int pa = parts.right.to_parent[ar];
    if (s.product(px, a.f_of[pa]) != s.product(a.e_of[px], pa))
      rep.lemma_xfa = false;
  }
  fail_iso(rep.lemma_xfa, "x f_a = e_x a fails on a pair");

  // R(T) = {(abar, a)} and is a copy of R; I(T) = {(x, xbar) : x in I(L)}.
  {
    std::set<int> rt_expected;
    for (int ar = 0; ar < sm.right.order(); ++ar)
      rt_expected.insert(
          sp.pair_index(sm.s0_in_left[sm.bar_right(ar)], ar));
    const std::vector<int> rt_members = sp.t0_analysis.set_R.members();
    std::set<int> rt(rt_members.begin(), rt_members.end());
    rep.r_part_matches = rt == rt_expected;
    if (rep.r_part_matches) {
      for (int ar = 0; ar < sm.right.order() && rep.r_part_matches; ++ar)
        for (int br = 0; br < sm.right.order() && rep.r_part_matches; ++br) {
          const int ab = sm.right.product(ar, br);
          const int lhs = sp.sg.product(
              sp.pair_index(sm.s0_in_left[sm.bar_right(ar)], ar),
              sp.pair_index(sm.s0_in_left[sm.bar_right(br)], br));
          rep.r_part_matches =
              lhs == sp.pair_index(sm.s0_in_left[sm.bar_right(ab)], ab);
        }
    }
    fail_iso(rep.r_part_matches, "R(T) is not the expected copy of R");

    std::set<int> it_expected;
    for (int x : sm.left_analysis.set_I.members())
      it_expected.insert(
          sp.pair_index(x, sm.s0_in_right[sm.bar_left(x)]));
    const std::vector<int> it_members = sp.t0_analysis.set_I.members();
    std::set<int> it(it_members.begin(), it_members.end());
    rep.i_part_matches = it == it_expected;
    fail_iso(rep.i_part_matches, "I(T) is not {(x, xbar) : x in I(L)}");
  }

  sp.source_iso = std::move(phi);
  return {std::move(sp), rep};
}

// ---------------------------------------------------------------------------
// Chen construction

ChenData degenerate_chen_data(const FiniteSemigroup& s0) {
  ChenData d;
  d.s0 = s0;
  const auto idem = idempotents(s0).members();
  d.carrier_size = static_cast<int>(idem.size());
  d.e0_to_carrier.assign(s0.order(), -1);
  for (int i = 0; i < d.carrier_size; ++i) d.e0_to_carrier[idem[i]] = i;
  d.act.assign(d.carrier_size, std::vector<int>(s0.order(), -1));
  d.proj.assign(d.carrier_size, -1);
  d.star.assign(s0.order(), std::vector<int>(d.carrier_size, -1));
  for (int i = 0; i < d.carrier_size; ++i) {
    d.proj[i] = idem[i];
    for (int e : idem) {
      d.act[i][e] = d.e0_to_carrier[s0.product(idem[i], e)];
      d.star[e][i] = s0.product(e, idem[i]);
    }
  }
  return d;
}

int ChenResult::element_index(int carrier, int s0_elem) const {
  const auto it =
      std::lower_bound(elements.begin(), elements.end(),
                       std::pair<int, int>{carrier, s0_elem});
  if (it == elements.end() || *it != std::pair<int, int>{carrier, s0_elem})
    return -1;
  return static_cast<int>(it - elements.begin());
}

ChenResult chen_construct(const ChenData& d) {
  const FiniteSemigroup& s0 = d.s0;
  AdequateTables t0;
  try {
    t0 = adequate_tables(s0);
  } catch (const NotAdequateError& e) {
    throw DataInvalidError(std::string("S0 must be adequate: ") + e.what());
  }
  const auto idem = idempotents(s0).members();
  const int m = d.carrier_size;
  fail_data(m >= 1, "carrier must be nonempty");
  fail_data(static_cast<int>(d.e0_to_carrier.size()) == s0.order() &&
                static_cast<int>(d.proj.size()) == m &&
                static_cast<int>(d.act.size()) == m &&
                static_cast<int>(d.star.size()) == s0.order(),
            "table sizes do not match the carrier and S0");
  std::vector<bool> used(m, false);
  for (int e = 0; e < s0.order(); ++e) {
    const bool is_idem = s0.product(e, e) == e;
    fail_data((d.e0_to_carrier[e] >= 0) == is_idem,
              "embedding must cover exactly the idempotents");
    if (is_idem) {
      const int c = d.e0_to_carrier[e];
      fail_data(c < m && !used[c], "embedding is not injective into carrier");
      used[c] = true;
      fail_data(d.proj[c] == e, "retraction is not the identity on E0");
    }
  }
  for (int x = 0; x < m; ++x) {
    fail_data(d.proj[x] >= 0 && d.proj[x] < s0.order() &&
                  s0.product(d.proj[x], d.proj[x]) == d.proj[x],
              "retraction of carrier " + std::to_string(x) +
                  " is not an idempotent of S0");
    fail_data(static_cast<int>(d.act[x].size()) == s0.order(),
              "act row size mismatch");
    for (int e : idem)
      fail_data(d.act[x][e] >= 0 && d.act[x][e] < m,
                "act value out of range at (" + std::to_string(x) + "," +
                    std::to_string(e) + ")");
  }
  // Right-act laws and compatibility with the retraction.
  for (int x = 0; x < m; ++x) {
    fail_data(d.act[x][d.proj[x]] == x,
              "x act (x proj) != x at carrier " + std::to_string(x));
    for (int e : idem) {
      fail_data(d.proj[d.act[x][e]] == s0.product(d.proj[x], e),
                "(x act e) proj != (x proj) e at (" + std::to_string(x) +
                    "," + std::to_string(e) + ")");
      for (int f : idem)
        fail_data(d.act[d.act[x][e]][f] == d.act[x][s0.product(e, f)],
                  "act is not a right action at (" + std::to_string(x) + "," +
                      std::to_string(e) + "," + std::to_string(f) + ")");
    }
  }
  // The act must extend multiplication on the embedded semilattice.
  for (int e : idem)
    for (int f : idem)
      fail_data(d.act[d.e0_to_carrier[e]][f] ==
                    d.e0_to_carrier[s0.product(e, f)],
                "act does not extend E0 multiplication at (" +
                    std::to_string(e) + "," + std::to_string(f) + ")");
  // Star laws.
  for (int f : idem) {
    fail_data(static_cast<int>(d.star[f].size()) == m,
              "star row size mismatch");
    for (int x = 0; x < m; ++x)
      fail_data(d.star[f][x] >= 0 && d.star[f][x] < s0.order(),
                "star value out of range");
    for (int g : idem)
      fail_data(d.star[f][d.e0_to_carrier[g]] == s0.product(f, g),
                "f star g != fg at (" + std::to_string(f) + "," +
                    std::to_string(g) + ")");
  }
  for (int x = 0; x < m; ++x)
    fail_data(d.star[d.proj[x]][x] == d.proj[x],
              "(x proj) star x != x proj at carrier " + std::to_string(x));
  for (int a : idem)
    for (int f : idem)
      for (int x = 0; x < m; ++x)
        for (int b : idem)
          fail_data(s0.product(s0.product(a, d.star[f][x]), b) ==
                        d.star[s0.product(a, f)][d.act[x][b]],
                    "a(f star x)b != af star (x act b) at " +
                        tuple_str({a, f, x, b}));

  ChenResult res;
  for (int x = 0; x < m; ++x)
    for (int w = 0; w < s0.order(); ++w)
      if (d.proj[x] == t0.plus[w]) res.elements.emplace_back(x, w);
  const int n = static_cast<int>(res.elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [e, x] = res.elements[i];
      const auto [g, w] = res.elements[j];
      const int a =
          s0.product(s0.product(x, d.star[t0.star[x]][g]), w);
      const int k = res.element_index(d.act[e][t0.plus[a]], a);
      fail_construction(k >= 0, "product escapes the carrier-pair set at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      table[i][j] = k;
    }
  try {
    res.sg = FiniteSemigroup::validate(table);
  } catch (const NonAssociativeError& e) {
    throw ConstructionFailedError(std::string("pair table: ") + e.what());
  }
  fail_construction(is_left_adequate(res.sg),
                    "constructed semigroup is not left adequate");

  res.t0 = ElementSubset(n);
  res.t0_from_s0.assign(s0.order(), -1);
  for (int w = 0; w < s0.order(); ++w) {
    res.t0_from_s0[w] = res.element_index(d.e0_to_carrier[t0.plus[w]], w);
    fail_construction(res.t0_from_s0[w] >= 0,
                      "diagonal element missing for " + std::to_string(w));
    res.t0.add(res.t0_from_s0[w]);
  }
  try {
    res.t0_analysis = analyze_transversal(res.sg, res.t0);
  } catch (const Error& e) {
    throw ConstructionFailedError(std::string("diagonal analysis: ") +
                                  e.what());
  }
  fail_construction(res.t0_analysis.quasi_ideal,
                    "diagonal transversal is not a quasi-ideal");
  for (int v = 0; v < s0.order(); ++v)
    for (int w = 0; w < s0.order(); ++w)
      fail_construction(res.sg.product(res.t0_from_s0[v], res.t0_from_s0[w]) ==
                            res.t0_from_s0[s0.product(v, w)],
                        "diagonal is not isomorphic to S0");
  // The one-sided equivalences must all come out true.
  const LeftAdequateReport eq =
      left_adequate_equivalences(res.sg, res.t0_analysis);
  fail_construction(eq.value, "one-sided equivalences fail on the output");
  return res;
}

// ---------------------------------------------------------------------------
// Regular case

InverseTransversalReport inverse_transversal_analysis(
    const FiniteSemigroup& s, const ElementSubset& s0) {
  if (regular_elements(s).size() != s.order()) {
    throw NotRegularError("every element must be regular");
  }
  Subsemigroup sub;
  try {
    sub = restrict_to(s, s0);
  } catch (const NotClosedError& e) {
    throw NotInverseSubError(std::string("S0 is not closed: ") + e.what());
  }
  for (int i = 0; i < sub.sg.order(); ++i) {
    if (inverses_of(sub.sg, i).size() != 1) {
      throw NotInverseSubError("element " + std::to_string(sub.to_parent[i]) +
                               " lacks a unique inverse inside S0");
    }
  }
  InverseTransversalReport rep;
  rep.analysis = analyze_transversal(s, s0);
  const int n = s.order();
  rep.inv_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    std::vector<int> hits;
    for (int y : inverses_of(s, x).members())
      if (s0.contains(y)) hits.push_back(y);
    if (hits.size() != 1) {
      throw UniquenessFailedError("element " + std::to_string(x) + " has " +
                                  std::to_string(hits.size()) +
                                  " inverses inside S0");
    }
    rep.inv_of[x] = hits.front();
  }
  const auto& a = rep.analysis;
  for (int x = 0; x < n; ++x) {
    const int x0 = rep.inv_of[x];
    rep.identities.require(a.e_of[x] == s.product(x, x0), "e_x = x x0", {x});
    rep.identities.require(a.f_of[x] == s.product(x0, x), "f_x = x0 x", {x});
    rep.identities.require(a.bar_of[x] == rep.inv_of[x0], "xbar = x00", {x});
    rep.identities.require(x0 == rep.inv_of[rep.inv_of[x0]], "x0 = x000",
                           {x});
  }
  ElementSubset fixed_i(n), image_i(n), fixed_l(n), image_l(n);
  for (int x = 0; x < n; ++x) {
    if (x == s.product(x, rep.inv_of[x])) fixed_i.add(x);
    image_i.add(s.product(x, rep.inv_of[x]));
    if (x == s.product(rep.inv_of[x], x)) fixed_l.add(x);
    image_l.add(s.product(rep.inv_of[x], x));
  }
  rep.identities.require(a.set_I == fixed_i && a.set_I == image_i,
                         "I = {x = x x0} = {x x0}", {});
  rep.identities.require(a.set_Lambda == fixed_l && a.set_Lambda == image_l,
                         "Lambda = {x = x0 x} = {x0 x}", {});
  return rep;
}

SpinedProduct build_regular_spined_product(const StarMap& sm) {
  if (regular_elements(sm.left).size() != sm.left.order() ||
      regular_elements(sm.right).size() != sm.right.order()) {
    throw NotRegularError("both parts must be regular");
  }
  const InverseTransversalReport left_rep = inverse_transversal_analysis(
      sm.left, ElementSubset::of(sm.left.order(), sm.s0_in_left));
  const InverseTransversalReport right_rep = inverse_transversal_analysis(
      sm.right, ElementSubset::of(sm.right.order(), sm.s0_in_right));
  check(left_rep.identities.ok() && right_rep.identities.ok(),
        "inverse coordinates disagree with the factorisation");

  SpinedProduct sp = build_spined_product(sm);

  // Every pair is regular via (x,a)(a0,x0)(x,a) = (x,a) with
  // a0 = x0 = the inverse of the shared middle factor.
  std::vector<int> inv_s0(sm.s0_order());
  for (int s = 0; s < sm.s0_order(); ++s) {
    const auto v = inverses_of(sm.s0, s).members();
    if (v.size() != 1)
      throw NotInverseSubError("S0 is not inverse at " + std::to_string(s));
    inv_s0[s] = v.front();
  }
  for (int i = 0; i < static_cast<int>(sp.pairs.size()); ++i) {
    const auto [x, a] = sp.pairs[i];
    const int si = inv_s0[sm.bar_left(x)];
    const int w = sp.pair_index(sm.s0_in_left[si], sm.s0_in_right[si]);
    if (w < 0 || sp.sg.product(sp.sg.product(i, w), i) != i) {
      throw NotRegularOutcomeError("regularity witness fails at pair " +
                                   std::to_string(i));
    }
  }
  if (regular_elements(sp.sg).size() != sp.sg.order()) {
    throw NotRegularOutcomeError("pair semigroup is not regular");
  }
  return sp;
}

LeftInverseChenResult left_inverse_chen(const FiniteSemigroup& s0,
                                        const FiniteSemigroup& band,
                                        const std::vector<int>& e0_embed) {
  // S0 must be inverse.
  if (regular_elements(s0).size() != s0.order())
    throw PreconditionFailedError("S0 must be regular");
  for (int x = 0; x < s0.order(); ++x)
    if (inverses_of(s0, x).size() != 1)
      throw PreconditionFailedError("S0 must be inverse");
  std::vector<int> inv_s0(s0.order());
  for (int x = 0; x < s0.order(); ++x)
    inv_s0[x] = inverses_of(s0, x).members().front();

  const int m = band.order();
  if (idempotents(band).size() != m)
    throw NotLeftNormalError("carrier must be a band");
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (band.product(band.product(x, y), z) !=
            band.product(band.product(x, z), y))
          throw NotLeftNormalError("xyz != xzy at " + tuple_str({x, y, z}));

  const auto idem = idempotents(s0).members();
  if (e0_embed.size() != idem.size())
    throw NotSemilatticeTransversalError(
        "embedding must list one band element per idempotent of S0");
  ElementSubset image(m);
  for (int v : e0_embed) image.add(v);
  if (image.size() != static_cast<int>(idem.size()))
    throw NotSemilatticeTransversalError("embedding is not injective");
  for (size_t i = 0; i < idem.size(); ++i)
    for (size_t j = 0; j < idem.size(); ++j) {
      const int p = s0.product(idem[i], idem[j]);
      const auto pos = std::find(idem.begin(), idem.end(), p) - idem.begin();
      if (band.product(e0_embed[i], e0_embed[j]) != e0_embed[pos])
        throw NotSemilatticeTransversalError(
            "embedding is not a homomorphism");
    }
  InverseTransversalReport band_rep;
  try {
    band_rep = inverse_transversal_analysis(band, image);
  } catch (const Error& e) {
    throw NotSemilatticeTransversalError(
        std::string("E0 is not an inverse transversal of the carrier: ") +
        e.what());
  }
  std::vector<int> embed_of_elem(s0.order(), -1);
  std::vector<int> elem_of_band(m, -1);
  for (size_t i = 0; i < idem.size(); ++i) {
    embed_of_elem[idem[i]] = e0_embed[i];
    elem_of_band[e0_embed[i]] = idem[i];
  }
  // In a left normal band, s g = s g0 lands back in the transversal.
  for (int e : idem)
    for (int g = 0; g < m; ++g) {
      const int p = band.product(embed_of_elem[e], g);
      if (elem_of_band[p] < 0 ||
          p != band.product(embed_of_elem[e], band_rep.inv_of[g]))
        throw NotLeftNormalError("sg = sg0 fails at (" + std::to_string(e) +
                                 "," + std::to_string(g) + ")");
    }

  ChenData d;
  d.s0 = s0;
  d.carrier_size = m;
  d.e0_to_carrier = embed_of_elem;
  d.act.assign(m, std::vector<int>(s0.order(), -1));
  d.proj.assign(m, -1);
  d.star.assign(s0.order(), std::vector<int>(m, -1));
  for (int x = 0; x < m; ++x) {
    d.proj[x] = elem_of_band[band_rep.inv_of[x]];
    for (int e : idem) {
      d.act[x][e] = band.product(x, embed_of_elem[e]);
      d.star[e][x] = elem_of_band[band.product(embed_of_elem[e], x)];
    }
  }

  LeftInverseChenResult out;
  out.chen = chen_construct(d);
  // Regularity witness per element, making the output left inverse.
  const auto& res = out.chen;
  for (int i = 0; i < static_cast<int>(res.elements.size()); ++i) {
    const auto [e, x] = res.elements[i];
    const int xi = inv_s0[x];
    const int w =
        res.element_index(d.e0_to_carrier[s0.product(xi, x)], xi);
    out.regularity.require(
        w >= 0 && res.sg.product(res.sg.product(i, w), i) == i,
        "(e,x)(x^-1 x, x^-1)(e,x) = (e,x)", {i});
  }
  if (!out.regularity.ok())
    throw NotRegularOutcomeError("output is not left inverse");
  if (regular_elements(res.sg).size() != res.sg.order())
    throw NotRegularOutcomeError("output is not regular");
  // The diagonal transversal is inverse.
  for (int i = 0; i < res.t0_analysis.s0.sg.order(); ++i)
    if (inverses_of(res.t0_analysis.s0.sg, i).size() != 1)
      throw NotRegularOutcomeError("diagonal transversal is not inverse");
  return out;
}

}  // namespace adeq
