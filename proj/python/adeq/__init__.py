"""Finite semigroup transversal toolkit."""

from adeq._core import (
    AdeqError,
    FiniteSemigroup,
    analyze_transversal,
    brandt_b2,
    builtin_corpus,
    chen_degenerate,
    cyclic_group,
    decompose_and_rebuild,
    direct_product,
    find_isomorphism,
    full_transformation_monoid,
    generate,
    idempotents,
    is_abundant,
    is_adequate,
    is_left_adequate,
    is_right_adequate,
    l_star_classes,
    left_zero,
    monogenic,
    parse_table,
    r_star_classes,
    rectangular_band,
    regular_elements,
    right_zero,
    run_verification_suite,
    search_transversals,
    semilattice_chain,
    serialize_table,
    symmetric_inverse_monoid,
)

__all__ = [
    "AdeqError",
    "FiniteSemigroup",
    "analyze_transversal",
    "brandt_b2",
    "builtin_corpus",
    "chen_degenerate",
    "cyclic_group",
    "decompose_and_rebuild",
    "direct_product",
    "find_isomorphism",
    "full_transformation_monoid",
    "generate",
    "idempotents",
    "is_abundant",
    "is_adequate",
    "is_left_adequate",
    "is_right_adequate",
    "l_star_classes",
    "left_zero",
    "monogenic",
    "parse_table",
    "r_star_classes",
    "rectangular_band",
    "regular_elements",
    "right_zero",
    "run_verification_suite",
    "search_transversals",
    "semilattice_chain",
    "serialize_table",
    "symmetric_inverse_monoid",
]
