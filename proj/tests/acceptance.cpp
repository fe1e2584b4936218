// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.
// argv[1] must be the path to the command-line binary (used by the last
// criterion).

#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "adeq/construction.hpp"
#include "adeq/document.hpp"
#include "adeq/families.hpp"
#include "adeq/search.hpp"
#include "adeq/verify.hpp"
#include "corpus.hpp"

using namespace adeq;

namespace {

int failures = 0;

void report(int number, const char* name, bool pass, const std::string& note) {
  std::printf("%s  %2d  %s%s%s\n", pass ? "PASS" : "FAIL", number, name,
              note.empty() ? "" : "  ", note.c_str());
  if (!pass) ++failures;
}

template <typename F>
void criterion(int number, const char* name, F&& body) {
  std::string note;
  bool pass = false;
  try {
    pass = body(note);
  } catch (const std::exception& e) {
    note = e.what();
  }
  report(number, name, pass, note);
}

// Quasi-ideal transversals discovered across the corpus, shared by
// several criteria.
struct Discovered {
  std::string name;
  FiniteSemigroup s;
  FoundTransversal found;
};

std::vector<Discovered> discover() {
  std::vector<Discovered> out;
  for (const auto& [name, s] : testing::corpus())
    for (auto& f : search_transversals(s, 2))
      out.push_back({name, s, std::move(f)});
  return out;
}

std::string run_command(const std::string& cmd, int& exit_code) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return output;
  }
  char buf[4096];
  while (size_t got = std::fread(buf, 1, sizeof buf, pipe))
    output.append(buf, got);
  exit_code = pclose(pipe);
  return output;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const auto corpus = testing::corpus();
  const auto discovered = discover();

  criterion(1, "starred-relation correctness", [&](std::string& note) {
    if (corpus.size() < 15) {
      note = "corpus too small";
      return false;
    }
    int min_order = 1 << 20, max_order = 0;
    for (const auto& [name, s] : corpus) {
      min_order = std::min(min_order, s.order());
      max_order = std::max(max_order, s.order());
      if (!(r_star(s) == r_star_definitional(s)) ||
          !(l_star(s) == l_star_definitional(s))) {
        note = "oracle mismatch on " + name;
        return false;
      }
      const auto rs = r_star(s);
      const auto gr = green_r(s);
      const auto reg = regular_elements(s);
      for (int a = 0; a < s.order(); ++a)
        for (int b = 0; b < s.order(); ++b)
          if (reg.contains(a) && reg.contains(b) &&
              rs.same(a, b) != gr.same(a, b)) {
            note = "regular-pair disagreement on " + name;
            return false;
          }
    }
    if (min_order != 1 || max_order != 27) {
      note = "order range not 1..27";
      return false;
    }
    return true;
  });

  criterion(2, "transversal axioms", [&](std::string& note) {
    for (int m = 1; m <= 4; ++m)
      for (int k = 1; k <= 4; ++k) {
        const auto rb = rectangular_band(m, k);
        for (int x = 0; x < m * k; ++x) {
          const auto a =
              analyze_transversal(rb, ElementSubset::of(m * k, {x}));
          if (!verify_product_formulas(a).ok()) {
            note = "product formulas fail on a band singleton";
            return false;
          }
        }
      }
    for (const auto& [name, s] : corpus) {
      if (!is_adequate(s)) continue;
      const auto a = analyze_transversal(s, ElementSubset::full(s.order()));
      if (!verify_product_formulas(a).ok()) {
        note = "product formulas fail on " + name;
        return false;
      }
    }
    return true;
  });

  criterion(3, "quasi-ideal three-way equivalence", [&](std::string& note) {
    for (const auto& d : discovered)
      if (is_quasi_ideal(d.found.analysis) != d.found.analysis.quasi_ideal) {
        note = "disagreement on " + d.name;
        return false;
      }
    return true;
  });

  criterion(4, "structure round trip", [&](std::string& note) {
    int verified = 0;
    for (const auto& d : discovered) {
      if (!d.found.analysis.quasi_ideal) continue;
      const auto [sp, rep] = decompose_and_rebuild(d.s, d.found.analysis);
      if (!rep.ok()) {
        note = "round trip fails on " + d.name;
        return false;
      }
      ++verified;
    }
    note = std::to_string(verified) + " instances";
    return verified > 0;
  });

  criterion(5, "forward construction + mutation", [&](std::string& note) {
    std::mt19937 rng(20240817);
    int caught = 0, trials = 0;
    for (const auto& [name, s] : corpus) {
      if (!is_adequate(s) || s.order() < 2 || s.order() > 9) continue;
      const auto a = analyze_transversal(s, ElementSubset::full(s.order()));
      const auto sm = extract_star(s, a);
      build_spined_product(sm);  // throws on any soundness failure
      for (int rep = 0; rep < 12; ++rep) {
        auto bad = sm;
        const int r = static_cast<int>(rng() % bad.values.size());
        const int l = static_cast<int>(rng() % bad.values[r].size());
        const int v = static_cast<int>(rng() % bad.s0_order());
        if (bad.values[r][l] == v) continue;
        bad.values[r][l] = v;
        ++trials;
        try {
          build_spined_product(bad);
        } catch (const Error&) {
          ++caught;
        }
      }
    }
    note = std::to_string(caught) + "/" + std::to_string(trials) + " caught";
    return trials >= 50 && caught == trials;
  });

  criterion(6, "one-sided equivalences and splitting", [&](std::string& note) {
    int split = 0;
    for (const auto& d : discovered) {
      left_adequate_equivalences(d.s, d.found.analysis);
      if (d.found.analysis.quasi_ideal) {
        const auto parts = split_quasi_ideal(d.found.analysis);
        if (!is_left_adequate(parts.left.sg) ||
            !is_right_adequate(parts.right.sg)) {
          note = "split parts not one-sided adequate on " + d.name;
          return false;
        }
        ++split;
      }
    }
    note = std::to_string(split) + " splits";
    return split > 0;
  });

  criterion(7, "multiplicative hierarchy", [&](std::string& note) {
    for (const auto& d : discovered) {
      const auto& a = d.found.analysis;
      if (a.multiplicative != (a.weakly_multiplicative && a.quasi_ideal)) {
        note = "hierarchy breaks on " + d.name;
        return false;
      }
      if (!a.quasi_ideal) continue;
      const auto sm = extract_star(d.s, a);
      const auto ax = check_star_axioms(sm, true);
      const auto sp = build_spined_product(sm);
      if (ax.idempotent_axiom != sp.t0_analysis.multiplicative) {
        note = "idempotent condition mismatch on " + d.name;
        return false;
      }
    }
    return true;
  });

  criterion(8, "one-sided construction", [&](std::string& note) {
    for (const auto& [name, s] : corpus) {
      if (!is_adequate(s) || s.order() > 9) continue;
      const auto res = chen_construct(degenerate_chen_data(s));
      if (!find_isomorphism(res.sg, s)) {
        note = "degenerate output not isomorphic to S0 for " + name;
        return false;
      }
    }
    const auto band = direct_product(left_zero(2), semilattice_chain(2));
    const auto res = left_inverse_chen(semilattice_chain(2), band, {0, 1});
    if (!res.regularity.ok() ||
        regular_elements(res.chen.sg).size() != res.chen.sg.order()) {
      note = "band output is not left inverse";
      return false;
    }
    return true;
  });

  criterion(9, "regular and inverse case", [&](std::string& note) {
    int witnessed = 0;
    for (const auto& d : discovered) {
      if (regular_elements(d.s).size() != d.s.order()) continue;
      InverseTransversalReport inv;
      try {
        inv = inverse_transversal_analysis(d.s, d.found.subset);
      } catch (const NotInverseSubError&) {
        continue;  // transversal exists but is not inverse
      } catch (const UniquenessFailedError&) {
        continue;
      }
      if (!inv.identities.ok()) {
        note = "inverse identities fail on " + d.name;
        return false;
      }
      if (d.found.analysis.quasi_ideal) {
        build_regular_spined_product(extract_star(d.s, d.found.analysis));
        ++witnessed;
      }
    }
    note = std::to_string(witnessed) + " regular rebuilds";
    return witnessed > 0;
  });

  criterion(10, "cli contract", [&](std::string& note) {
    if (cli.empty()) {
      note = "no cli path given";
      return false;
    }
    int exit_code = 0;
    const std::string out = run_command(cli + " corpus run", exit_code);
    if (exit_code != 0) {
      note = "corpus run exited nonzero";
      return false;
    }
    for (const char* anchor :
         {"section-1", "theorem-1.3", "lemma-1.4", "lemma-1.5", "theorem-1.6",
          "theorem-2.1", "theorem-2.3", "lemma-2.4", "theorem-2.8",
          "lemma-2.9", "lemma-2.10", "lemma-2.11", "lemma-2.12", "lemma-2.13",
          "remark-2.14", "theorem-2.15", "section-3", "theorem-3.1",
          "theorem-4.1", "theorem-4.2"}) {
      if (out.find("PASS") == std::string::npos ||
          out.find(std::string("[") + anchor + "]") == std::string::npos) {
        note = std::string("anchor missing: ") + anchor;
        return false;
      }
    }
    if (out.find("FAIL") != std::string::npos) {
      note = "corpus run reported failures";
      return false;
    }
    for (const auto& [name, s] : corpus) {
      SemigroupDocument doc;
      doc.sg = s;
      const std::string text = serialize_document(doc);
      if (serialize_document(parse_document(text)) != text) {
        note = "round trip not byte-exact on " + name;
        return false;
      }
    }
    return true;
  });

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS"
                                    : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
