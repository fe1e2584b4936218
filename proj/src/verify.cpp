#include "adeq/verify.hpp"

#include <algorithm>

#include <json.hpp>

#include "adeq/construction.hpp"
#include "adeq/families.hpp"
#include "adeq/search.hpp"
#include "adeq/transversal.hpp"

namespace adeq {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

std::string first_failure(const FormulaReport& rep) {
  if (rep.ok()) return "";
  return rep.failures.front().identity + " at " +
         tuple_str(rep.failures.front().witness);
}

// ChenData read off a left adequate quasi-ideal instance: carrier I,
// action and star by multiplication, retraction by the middle factor.
ChenData chen_data_of_instance(const FiniteSemigroup& s,
                               const TransversalAnalysis& a) {
  ChenData d;
  d.s0 = a.s0.sg;
  const auto carrier = a.set_I.members();
  d.carrier_size = static_cast<int>(carrier.size());
  std::vector<int> carrier_pos(s.order(), -1);
  for (int i = 0; i < d.carrier_size; ++i) carrier_pos[carrier[i]] = i;

  d.e0_to_carrier.assign(d.s0.order(), -1);
  d.proj.assign(d.carrier_size, -1);
  d.act.assign(d.carrier_size, std::vector<int>(d.s0.order(), -1));
  d.star.assign(d.s0.order(), std::vector<int>(d.carrier_size, -1));
  const auto idem = idempotents(d.s0).members();
  for (int e : idem) {
    const int p = a.s0.to_parent[e];
    if (carrier_pos[p] < 0)
      throw ConstructionFailedError("idempotent of S0 missing from I");
    d.e0_to_carrier[e] = carrier_pos[p];
  }
  for (int x = 0; x < d.carrier_size; ++x) {
    d.proj[x] = a.s0.from_parent[a.bar_of[carrier[x]]];
    for (int e : idem) {
      const int q = s.product(carrier[x], a.s0.to_parent[e]);
      if (carrier_pos[q] < 0)
        throw ConstructionFailedError("I is not closed under the E0 action");
      d.act[x][e] = carrier_pos[q];
      const int r = a.s0.from_parent[s.product(a.s0.to_parent[e], carrier[x])];
      if (r < 0)
        throw ConstructionFailedError("E0 * I leaves S0");
      d.star[e][x] = r;
    }
  }
  return d;
}

}  // namespace

int VerificationReport::passed() const {
  int count = 0;
  for (const auto& row : rows) count += row.pass ? 1 : 0;
  return count;
}

int VerificationReport::failed() const {
  return static_cast<int>(rows.size()) - passed();
}

VerificationReport run_verification_suite(const FiniteSemigroup& s,
                                          const ElementSubset& s0,
                                          const std::string& instance) {
  VerificationReport rep;
  rep.instance = instance;
  auto row = [&](const std::string& check, const std::string& anchor,
                 bool pass, const std::string& witness) {
    rep.rows.push_back({check, anchor, pass, pass ? "" : witness});
  };

  TransversalAnalysis a;
  try {
    a = analyze_transversal(s, s0);
  } catch (const Error& e) {
    row("adequate-transversal", "section-1", false, e.what());
    return rep;
  }
  row("adequate-transversal", "section-1", true, "");

  // Membership characterisations of R and L.
  {
    ElementSubset r_pred(s.order()), l_pred(s.order());
    for (int x = 0; x < s.order(); ++x) {
      if (a.e_of[x] == a.e_of[a.bar_of[x]]) r_pred.add(x);
      if (a.f_of[x] == a.f_of[a.bar_of[x]]) l_pred.add(x);
    }
    row("r-l-membership", "theorem-1.3",
        a.set_R == r_pred && a.set_L == l_pred,
        "e/f membership characterisation disagrees with the computed sets");
  }

  try {
    const bool qi = is_quasi_ideal(a);
    row("quasi-ideal-three-way", "lemma-1.4", qi == a.quasi_ideal,
        "flag disagrees with recomputation");
  } catch (const Error& e) {
    row("quasi-ideal-three-way", "lemma-1.4", false, e.what());
  }

  {
    const FormulaReport formulas = verify_product_formulas(a);
    FormulaReport triples, pairs;
    for (const auto& f : formulas.failures) {
      const bool pairwise = f.identity.find("(xy)") != std::string::npos ||
                            f.identity == "LR = S";
      (pairwise ? pairs : triples).failures.push_back(f);
    }
    row("factor-product-formulas", "lemma-1.5", triples.ok(),
        first_failure(triples));
    row("sandwich-products", "theorem-1.6", pairs.ok(), first_failure(pairs));
  }

  bool left_adequate_instance = false;
  try {
    left_adequate_instance = left_adequate_equivalences(s, a).value;
    row("one-sided-equivalences", "theorem-2.1", true, "");
  } catch (const Error& e) {
    row("one-sided-equivalences", "theorem-2.1", false, e.what());
  }

  if (a.quasi_ideal) {
    try {
      split_quasi_ideal(a);
      row("l-r-split", "theorem-2.3", true, "");
    } catch (const Error& e) {
      row("l-r-split", "theorem-2.3", false, e.what());
    }

    // Coordinate exchange x f_a = e_x a for pairs sharing a middle factor.
    {
      bool ok = true;
      std::vector<int> witness;
      for (int x : a.set_L.members())
        for (int r : a.set_R.members()) {
          if (a.bar_of[x] != a.bar_of[r]) continue;
          if (s.product(x, a.f_of[r]) != s.product(a.e_of[x], r) && ok) {
            ok = false;
            witness = {x, r};
          }
        }
      row("coordinate-exchange", "lemma-2.4", ok,
          ok ? "" : "x f_a != e_x a at " + tuple_str(witness));
    }

    std::string rebuild_error;
    bool rebuilt = false;
    try {
      const auto [sp, iso] = decompose_and_rebuild(s, a);
      rebuilt = iso.ok();
      if (!rebuilt) rebuild_error = "isomorphism report incomplete";
    } catch (const Error& e) {
      rebuild_error = e.what();
    }
    row("structure-round-trip", "theorem-2.8", rebuilt, rebuild_error);
    row("idempotent-pairs", "lemma-2.12", rebuilt, rebuild_error);
    row("r-i-parts", "remark-2.14", rebuilt, rebuild_error);

    try {
      const StarMap sm = extract_star(s, a);
      const FormulaReport internal = check_internal_identities(sm);
      const auto classify = [](const FormulaReport::Failure& f) {
        if (f.identity.find("implies") != std::string::npos) return 0;
        if (f.identity.find("e_a(a*x)f_x") != std::string::npos) return 1;
        if (f.identity.find("*_L") != std::string::npos) return 3;
        return 2;
      };
      const char* checks[4] = {"cancellation-transfer", "middle-sandwich",
                               "outer-factor-stability", "starred-placements"};
      const char* anchors[4] = {"lemma-2.9", "lemma-2.10", "lemma-2.11",
                                "lemma-2.13"};
      FormulaReport split[4];
      for (const auto& f : internal.failures)
        split[classify(f)].failures.push_back(f);
      for (int i = 0; i < 4; ++i)
        row(checks[i], anchors[i], split[i].ok(), first_failure(split[i]));

      const AxiomReport ax = check_star_axioms(sm, true);
      const SpinedProduct sp = build_spined_product(sm);
      row("multiplicative-star-condition", "theorem-3.1",
          ax.idempotent_axiom == sp.t0_analysis.multiplicative,
          "idempotent condition disagrees with T0 multiplicativity");
    } catch (const Error& e) {
      row("cancellation-transfer", "lemma-2.9", false, e.what());
      row("middle-sandwich", "lemma-2.10", false, e.what());
      row("outer-factor-stability", "lemma-2.11", false, e.what());
      row("starred-placements", "lemma-2.13", false, e.what());
      row("multiplicative-star-condition", "theorem-3.1", false, e.what());
    }
  } else {
    row("l-r-split", "theorem-2.3", true, "");
    row("coordinate-exchange", "lemma-2.4", true, "");
    row("structure-round-trip", "theorem-2.8", true, "");
    row("idempotent-pairs", "lemma-2.12", true, "");
    row("r-i-parts", "remark-2.14", true, "");
    row("cancellation-transfer", "lemma-2.9", true, "");
    row("middle-sandwich", "lemma-2.10", true, "");
    row("outer-factor-stability", "lemma-2.11", true, "");
    row("starred-placements", "lemma-2.13", true, "");
    row("multiplicative-star-condition", "theorem-3.1", true, "");
  }

  row("multiplicative-hierarchy", "section-3",
      a.multiplicative == (a.weakly_multiplicative && a.quasi_ideal),
      "multiplicative flag breaks the hierarchy");

  if (left_adequate_instance && a.quasi_ideal) {
    try {
      const ChenResult res = chen_construct(chen_data_of_instance(s, a));
      row("chen-reconstruction", "theorem-2.15",
          find_isomorphism(res.sg, s).has_value(),
          "constructed semigroup is not isomorphic to the instance");
    } catch (const Error& e) {
      row("chen-reconstruction", "theorem-2.15", false, e.what());
    }
  } else {
    row("chen-reconstruction", "theorem-2.15", true, "");
  }

  const bool regular = regular_elements(s).size() == s.order();
  if (regular) {
    try {
      const InverseTransversalReport inv = inverse_transversal_analysis(s, s0);
      row("inverse-transversal", "theorem-4.1", inv.identities.ok(),
          first_failure(inv.identities));
    } catch (const Error& e) {
      row("inverse-transversal", "theorem-4.1", false, e.what());
    }
  } else {
    row("inverse-transversal", "theorem-4.1", true, "");
  }
  if (regular && a.quasi_ideal) {
    try {
      build_regular_spined_product(extract_star(s, a));
      row("regular-witness", "theorem-4.2", true, "");
    } catch (const Error& e) {
      row("regular-witness", "theorem-4.2", false, e.what());
    }
  } else {
    row("regular-witness", "theorem-4.2", true, "");
  }
  return rep;
}

std::vector<std::pair<std::string, FiniteSemigroup>> builtin_corpus() {
  std::vector<std::pair<std::string, FiniteSemigroup>> out;
  out.emplace_back("trivial", semilattice_chain(1));
  out.emplace_back("left_zero_2", left_zero(2));
  out.emplace_back("left_zero_3", left_zero(3));
  out.emplace_back("right_zero_3", right_zero(3));
  out.emplace_back("chain_2", semilattice_chain(2));
  out.emplace_back("chain_4", semilattice_chain(4));
  out.emplace_back("rect_2x2", rectangular_band(2, 2));
  out.emplace_back("rect_2x3", rectangular_band(2, 3));
  out.emplace_back("rect_3x3", rectangular_band(3, 3));
  out.emplace_back("rect_4x4", rectangular_band(4, 4));
  out.emplace_back("cyclic_2", cyclic_group(2));
  out.emplace_back("cyclic_3", cyclic_group(3));
  out.emplace_back("cyclic_6", cyclic_group(6));
  out.emplace_back("monogenic_2_1", monogenic(2, 1));
  out.emplace_back("monogenic_3_2", monogenic(3, 2));
  out.emplace_back("brandt_B2", brandt_b2());
  out.emplace_back("sym_inv_1", symmetric_inverse_monoid(1));
  out.emplace_back("sym_inv_2", symmetric_inverse_monoid(2));
  out.emplace_back("full_tf_2", full_transformation_monoid(2));
  out.emplace_back("full_tf_3", full_transformation_monoid(3));
  out.emplace_back("chain2_x_leftzero2",
                   direct_product(semilattice_chain(2), left_zero(2)));
  out.emplace_back("rect22_x_chain2",
                   direct_product(rectangular_band(2, 2), semilattice_chain(2)));
  // {e, f, a, 0} with ea = a = af: adequate with a non-regular element.
  out.emplace_back("path_a", FiniteSemigroup::validate({{0, 3, 2, 3},
                                                        {3, 1, 3, 3},
                                                        {3, 2, 3, 3},
                                                        {3, 3, 3, 3}}));
  return out;
}

std::vector<VerificationReport> run_corpus(int max_generators) {
  std::vector<VerificationReport> reports;
  for (const auto& [name, s] : builtin_corpus()) {
    const auto found = search_transversals(s, max_generators);
    for (const auto& f : found) {
      std::string id = name + "/s0=" + [&] {
        std::string m;
        for (int x : f.subset.members())
          m += (m.empty() ? "" : ",") + std::to_string(x);
        return m;
      }();
      reports.push_back(run_verification_suite(s, f.subset, id));
    }
  }
  return reports;
}

std::string report_to_text(const VerificationReport& report) {
  std::string out;
  if (!report.instance.empty()) out += "instance " + report.instance + "\n";
  for (const auto& row : report.rows) {
    out += std::string(row.pass ? "PASS" : "FAIL") + "  " + row.check + "  [" +
           row.anchor + "]";
    if (!row.witness.empty()) out += "  " + row.witness;
    out += "\n";
  }
  out += "passed " + std::to_string(report.passed()) + "/" +
         std::to_string(report.rows.size()) + "\n";
  return out;
}

namespace {

nlohmann::json rows_json(const VerificationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"check", row.check},
                    {"anchor", row.anchor},
                    {"pass", row.pass},
                    {"witness", row.witness}});
  return rows;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  return rows_json(report).dump(2) + "\n";
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  int pass = 0, fail = 0;
  for (const auto& rep : reports) {
    out += report_to_text(rep);
    pass += rep.passed();
    fail += rep.failed();
  }
  out += "total rows " + std::to_string(pass + fail) + ", failures " +
         std::to_string(fail) + "\n";
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rep : reports)
    arr.push_back({{"instance", rep.instance}, {"rows", rows_json(rep)}});
  return arr.dump(2) + "\n";
}

}  // namespace adeq
