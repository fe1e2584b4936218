"""End-to-end smoke checks for the python bindings."""

import adeq


def test_families_and_predicates():
    rb = adeq.rectangular_band(2, 3)
    assert rb.order() == 6
    assert adeq.is_abundant(rb)
    assert not adeq.is_adequate(rb)
    assert adeq.is_adequate(adeq.symmetric_inverse_monoid(2))
    assert adeq.generate("cyclic_group", [4]) == adeq.cyclic_group(4)
    assert len(adeq.idempotents(rb)) == 6
    assert adeq.r_star_classes(adeq.semilattice_chain(3)) == [[0], [1], [2]]


def test_transversal_pipeline():
    rb = adeq.rectangular_band(2, 2)
    analysis = adeq.analyze_transversal(rb, [0])
    assert analysis["quasi_ideal"]
    assert analysis["multiplicative"]
    found = adeq.search_transversals(rb)
    assert [f["members"] for f in found] == [[0], [1], [2], [3]]

    rebuilt = adeq.decompose_and_rebuild(rb, [0])
    assert rebuilt["iso_ok"]
    assert len(rebuilt["pairs"]) == 4

    rows = adeq.run_verification_suite(rb, [0], "rb22")
    assert rows and all(r["pass"] for r in rows)


def test_documents_and_chen():
    chain = adeq.semilattice_chain(3)
    text = adeq.serialize_table(chain)
    assert adeq.parse_table(text) == chain
    chen = adeq.chen_degenerate(chain)
    assert len(chen["elements"]) == 3
    try:
        adeq.analyze_transversal(adeq.cyclic_group(3), [1])
    except adeq.AdeqError:
        pass
    else:
        raise AssertionError("expected AdeqError")


if __name__ == "__main__":
    test_families_and_predicates()
    test_transversal_pipeline()
    test_documents_and_chen()
    print("smoke ok")
