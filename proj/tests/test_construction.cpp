#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adeq/construction.hpp"
#include "adeq/families.hpp"
#include "corpus.hpp"

using namespace adeq;

namespace {

TransversalAnalysis full_analysis(const FiniteSemigroup& s) {
  return analyze_transversal(s, ElementSubset::full(s.order()));
}

}  // namespace

TEST_CASE("spined product of a left zero and a right zero semigroup") {
  const auto lz = left_zero(2);
  const auto rz = right_zero(2);
  // Both share the trivial transversal {0}; the star map is constant.
  const auto sm = make_star_map(lz, ElementSubset::of(2, {0}), rz,
                                ElementSubset::of(2, {0}), {{0, 0}},
                                {{0, 0}, {0, 0}});
  const auto axioms = check_star_axioms(sm, true);
  CHECK(axioms.pass(true));
  CHECK(check_internal_identities(sm).ok());

  const auto sp = build_spined_product(sm);
  CHECK(sp.pairs.size() == 4);
  CHECK(find_isomorphism(sp.sg, rectangular_band(2, 2)).has_value());
  CHECK(sp.t0_analysis.quasi_ideal);
  CHECK(sp.embedded_t0.size() == 1);
}

TEST_CASE("diagonal case: both parts equal to S0") {
  for (const auto& [name, s] : testing::corpus()) {
    if (!is_adequate(s) || s.order() > 9) continue;
    CAPTURE(name);
    const auto a = full_analysis(s);
    const auto sm = extract_star(s, a);
    CHECK(sm.left.order() == s.order());
    CHECK(sm.right.order() == s.order());
    const auto sp = build_spined_product(sm);
    // T = {(x, x)} is a copy of S.
    CHECK(static_cast<int>(sp.pairs.size()) == s.order());
    CHECK(find_isomorphism(sp.sg, s).has_value());
  }
}

TEST_CASE("decompose and rebuild round trip") {
  std::vector<std::pair<FiniteSemigroup, std::vector<int>>> cases;
  cases.emplace_back(rectangular_band(2, 2), std::vector<int>{0});
  cases.emplace_back(rectangular_band(3, 3), std::vector<int>{4});
  cases.emplace_back(
      direct_product(rectangular_band(2, 2), semilattice_chain(2)),
      std::vector<int>{0, 1});
  for (const auto& [s, t] : cases) {
    const auto a = analyze_transversal(s, ElementSubset::of(s.order(), t));
    REQUIRE(a.quasi_ideal);
    const auto [sp, rep] = decompose_and_rebuild(s, a);
    CHECK(rep.ok());
    REQUIRE(sp.source_iso.has_value());
    CHECK(static_cast<int>(sp.source_iso->size()) == s.order());
    CHECK(static_cast<int>(sp.pairs.size()) == s.order());
  }
}

TEST_CASE("corrupted star maps are rejected") {
  // Diagonal star maps: every entry is pinned by the extension axiom, so
  // any single-entry corruption must be caught.
  std::vector<FiniteSemigroup> pool = {semilattice_chain(4), cyclic_group(6),
                                       brandt_b2(), symmetric_inverse_monoid(2),
                                       testing::path_semigroup()};
  std::mt19937 rng(20240817);
  int caught = 0, trials = 0;
  for (const auto& s : pool) {
    const auto sm = extract_star(s, full_analysis(s));
    for (int rep = 0; rep < 14; ++rep) {
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
  CHECK(trials >= 50);
  CHECK(caught == trials);
}

TEST_CASE("degenerate Chen data rebuilds S0") {
  for (const auto& [name, s] : testing::corpus()) {
    if (!is_adequate(s) || s.order() > 9) continue;
    CAPTURE(name);
    const auto res = chen_construct(degenerate_chen_data(s));
    CHECK(static_cast<int>(res.elements.size()) == s.order());
    CHECK(find_isomorphism(res.sg, s).has_value());
    CHECK(res.t0_analysis.quasi_ideal);
    CHECK(left_adequate_equivalences(res.sg, res.t0_analysis).value);
  }
}

TEST_CASE("invalid Chen data is rejected with a witness") {
  auto d = degenerate_chen_data(semilattice_chain(3));
  d.proj[1] = 2;
  CHECK_THROWS_AS(chen_construct(d), DataInvalidError);

  auto d2 = degenerate_chen_data(semilattice_chain(3));
  d2.star[1][2] = 2;  // 1 * bottom should be the bottom
  CHECK_THROWS_AS(chen_construct(d2), DataInvalidError);
}

TEST_CASE("degenerate data requires an adequate S0") {
  CHECK_THROWS_AS(chen_construct([] {
                    ChenData d;
                    d.s0 = rectangular_band(2, 2);
                    d.carrier_size = 4;
                    return d;
                  }()),
                  DataInvalidError);
}

TEST_CASE("inverse transversal analysis") {
  SUBCASE("B2 over itself") {
    const auto b2 = brandt_b2();
    const auto rep = inverse_transversal_analysis(b2, ElementSubset::full(5));
    CHECK(rep.identities.ok());
    for (int x = 0; x < 5; ++x)
      CHECK(inverses_of(b2, x).members() == std::vector<int>{rep.inv_of[x]});
  }
  SUBCASE("singleton in a band") {
    const auto rb = rectangular_band(2, 2);
    const auto rep = inverse_transversal_analysis(rb, ElementSubset::of(4, {0}));
    CHECK(rep.identities.ok());
    for (int x = 0; x < 4; ++x) CHECK(rep.inv_of[x] == 0);
  }
  SUBCASE("failure modes") {
    CHECK_THROWS_AS(
        inverse_transversal_analysis(monogenic(2, 1), ElementSubset::of(2, {1})),
        NotRegularError);
    // A right zero pair is not an inverse subsemigroup.
    CHECK_THROWS_AS(inverse_transversal_analysis(rectangular_band(2, 2),
                                                 ElementSubset::of(4, {0, 1})),
                    NotInverseSubError);
  }
}

TEST_CASE("regular spined product") {
  const auto rb = rectangular_band(3, 3);
  const auto a = analyze_transversal(rb, ElementSubset::of(9, {4}));
  const auto sm = extract_star(rb, a);
  const auto sp = build_regular_spined_product(sm);
  CHECK(regular_elements(sp.sg).size() == sp.sg.order());
  CHECK(find_isomorphism(sp.sg, rb).has_value());

  SUBCASE("inverse diagonal case") {
    const auto i2 = symmetric_inverse_monoid(2);
    const auto sm2 = extract_star(i2, full_analysis(i2));
    const auto sp2 = build_regular_spined_product(sm2);
    CHECK(find_isomorphism(sp2.sg, i2).has_value());
  }
  SUBCASE("non-regular parts are refused") {
    const auto m = testing::path_semigroup();
    REQUIRE(is_adequate(m));
    const auto sm3 = extract_star(m, full_analysis(m));
    CHECK_THROWS_AS(build_regular_spined_product(sm3), NotRegularError);
  }
}

TEST_CASE("left inverse Chen construction") {
  SUBCASE("left zero carrier over the trivial semigroup") {
    const auto res =
        left_inverse_chen(semilattice_chain(1), left_zero(2), {0});
    CHECK(res.regularity.ok());
    CHECK(find_isomorphism(res.chen.sg, left_zero(2)).has_value());
  }
  SUBCASE("product band carrier over a chain") {
    const auto band = direct_product(left_zero(2), semilattice_chain(2));
    const auto res = left_inverse_chen(semilattice_chain(2), band, {0, 1});
    CHECK(res.regularity.ok());
    CHECK(find_isomorphism(res.chen.sg, band).has_value());
    CHECK(regular_elements(res.chen.sg).size() == res.chen.sg.order());
  }
  SUBCASE("failure modes") {
    // A right zero carrier is a band but not left normal.
    CHECK_THROWS_AS(
        left_inverse_chen(semilattice_chain(1), right_zero(2), {0}),
        NotLeftNormalError);
    // Non-band carrier.
    CHECK_THROWS_AS(left_inverse_chen(semilattice_chain(1), cyclic_group(2), {0}),
                    NotLeftNormalError);
    // Non-inverse S0.
    CHECK_THROWS_AS(
        left_inverse_chen(full_transformation_monoid(2), left_zero(2), {0}),
        PreconditionFailedError);
  }
}
