#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "adeq/construction.hpp"
#include "adeq/document.hpp"
#include "adeq/families.hpp"
#include "adeq/search.hpp"
#include "adeq/verify.hpp"
#include "corpus.hpp"

using namespace adeq;

TEST_CASE("document parsing") {
  CHECK(parse_document("1\n0\n").sg.order() == 1);
  CHECK(parse_document("2\n0 0\n1 1\n").sg == left_zero(2));
  CHECK(parse_document("# comment\n2\n0 0\n1 1 # trailing\n").sg ==
        left_zero(2));

  const auto doc = parse_document(
      "3\n0 0 0\n0 1 1\n0 1 2\nlabels: a b c\nsubset S0: 0,2\nmap f: 2,1,0\n");
  CHECK(doc.sg == FiniteSemigroup::validate(semilattice_chain(3).rows(),
                                            {{"a", "b", "c"}}));
  CHECK(doc.subsets.at("S0").members() == std::vector<int>{0, 2});
  CHECK(doc.maps.at("f") == std::vector<int>{2, 1, 0});

  CHECK_THROWS_AS(parse_document(""), SyntaxError);
  CHECK_THROWS_AS(parse_document("2\n0 0\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document("2\n0 0 0\n1 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document("2\n0 x\n1 1\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document("2\n0 0\n1 1\nnonsense\n"), SyntaxError);
  CHECK_THROWS_AS(parse_document("2\n0 5\n1 1\n"), OutOfRangeError);
  CHECK_THROWS_AS(parse_document("2\n1 0\n0 0\n"), NonAssociativeError);
  // Errors carry position information.
  try {
    parse_document("2\n0 0\n1 q\n");
    CHECK(false);
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialize round trip on the corpus") {
  for (const auto& [name, s] : testing::corpus()) {
    CAPTURE(name);
    SemigroupDocument doc;
    doc.sg = s;
    doc.subsets["E"] = idempotents(s);
    const std::string text = serialize_document(doc);
    const auto back = parse_document(text);
    CHECK(back.sg == s);
    CHECK(back.subsets.at("E") == idempotents(s));
    CHECK(serialize_document(back) == text);
  }
}

TEST_CASE("chen section round trip") {
  const auto s0 = semilattice_chain(3);
  const auto d = degenerate_chen_data(s0);
  SemigroupDocument doc;
  doc.sg = s0;
  doc.chen = ChenSection{};
  doc.chen->carrier = d.carrier_size;
  const auto idem = idempotents(s0).members();
  for (int e : idem) doc.chen->embed.push_back(d.e0_to_carrier[e]);
  doc.chen->proj = d.proj;
  for (int x = 0; x < d.carrier_size; ++x)
    for (int e : idem) doc.chen->act[x].push_back(d.act[x][e]);
  for (int e : idem)
    doc.chen->star[e] = d.star[e];

  const std::string text = serialize_document(doc);
  const auto back = parse_document(text);
  CHECK(serialize_document(back) == text);
  const auto lifted = chen_data_from_document(back);
  const auto res = chen_construct(lifted);
  CHECK(find_isomorphism(res.sg, s0).has_value());
  CHECK_THROWS_AS(chen_data_from_document(SemigroupDocument{}),
                  DataInvalidError);
}

TEST_CASE("family dispatcher") {
  CHECK(generate("rectangular_band", {2, 3}) == rectangular_band(2, 3));
  CHECK(generate("brandt_B2", {}) == brandt_b2());
  CHECK(generate("full_transformation_monoid", {3}).order() == 27);
  CHECK_THROWS_AS(generate("full_transformation_monoid", {4}),
                  ParamOutOfRangeError);
  CHECK_THROWS_AS(generate("rectangular_band", {0, 2}), ParamOutOfRangeError);
  CHECK_THROWS_AS(generate("no_such_family", {}), ParamOutOfRangeError);
}

TEST_CASE("transversal search") {
  SUBCASE("square band: exactly the four singletons") {
    const auto found = search_transversals(rectangular_band(2, 2), 2);
    REQUIRE(found.size() == 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(found[i].subset.members() == std::vector<int>{i});
      CHECK(found[i].analysis.quasi_ideal);
      CHECK(found[i].analysis.multiplicative);
    }
    CHECK(search_transversals(rectangular_band(2, 2), 2, true).size() == 1);
  }
  SUBCASE("adequate semigroups contain themselves") {
    for (const auto& [name, s] : testing::corpus()) {
      if (!is_adequate(s) || s.order() > 9) continue;
      CAPTURE(name);
      const auto found = search_transversals(s, 2);
      const bool has_full = std::any_of(
          found.begin(), found.end(), [&](const FoundTransversal& f) {
            return f.subset == ElementSubset::full(s.order());
          });
      CHECK(has_full);
    }
  }
  SUBCASE("B2 is a transversal of itself") {
    const auto found = search_transversals(brandt_b2(), 2);
    CHECK(std::any_of(found.begin(), found.end(),
                      [](const FoundTransversal& f) {
                        return f.subset == ElementSubset::full(5);
                      }));
  }
  SUBCASE("deterministic") {
    const auto a = search_transversals(rectangular_band(3, 3), 2);
    const auto b = search_transversals(rectangular_band(3, 3), 2);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].subset == b[i].subset);
  }
}

TEST_CASE("verification suite") {
  SUBCASE("passing instances") {
    auto rep = run_verification_suite(rectangular_band(3, 3),
                                      ElementSubset::of(9, {0}), "rb33");
    CHECK(rep.all_pass());
    rep = run_verification_suite(semilattice_chain(4), ElementSubset::full(4),
                                 "chain4");
    CHECK(rep.all_pass());
    CHECK(rep.rows.size() == 20);
  }
  SUBCASE("failure carries a witness") {
    const auto rep = run_verification_suite(semilattice_chain(2),
                                            ElementSubset::of(2, {0}), "bad");
    CHECK_FALSE(rep.all_pass());
    for (const auto& row : rep.rows)
      if (!row.pass) CHECK_FALSE(row.witness.empty());
  }
  SUBCASE("json schema") {
    const auto rep = run_verification_suite(rectangular_band(2, 2),
                                            ElementSubset::of(4, {0}), "rb22");
    const auto parsed = nlohmann::json::parse(report_to_json(rep));
    REQUIRE(parsed.is_array());
    for (const auto& row : parsed) {
      CHECK(row.contains("check"));
      CHECK(row.contains("anchor"));
      CHECK(row.contains("pass"));
      CHECK(row.contains("witness"));
    }
  }
}

TEST_CASE("corpus run is clean and covers the anchors") {
  const auto reports = run_corpus(2);
  CHECK(reports.size() >= 15);
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      CHECK(row.pass);
      if (!row.pass) CAPTURE(rep.instance + "/" + row.check);
    }
  }
  for (const char* anchor :
       {"section-1", "theorem-1.3", "lemma-1.4", "lemma-1.5", "theorem-1.6",
        "theorem-2.1", "theorem-2.3", "lemma-2.4", "theorem-2.8", "lemma-2.9",
        "lemma-2.10", "lemma-2.11", "lemma-2.12", "lemma-2.13", "remark-2.14",
        "theorem-2.15", "section-3", "theorem-3.1", "theorem-4.1",
        "theorem-4.2"}) {
    bool seen = false;
    for (const auto& rep : reports)
      for (const auto& row : rep.rows)
        if (row.anchor == anchor && row.pass) seen = true;
    CAPTURE(anchor);
    CHECK(seen);
  }
}
