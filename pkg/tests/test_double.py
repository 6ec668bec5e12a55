import pytest

from fatcat import (
    BUILTIN_PREDICATES,
    CompositionUndefined,
    NotInvertible,
    horizontal_compose,
    induced_from_square,
    interchange_suite,
    right_translation,
    verify_enrichment_closure,
    verify_interchange,
)
from fatcat.double import (
    count_interchange_grids,
    grid_cells_from_params,
    iter_grid_params,
)
from fatcat.fat import identity_hom_map
from helpers import idempotent_monoid_category


def test_right_translation_tables(s3):
    e = s3.identity(0)
    assert right_translation(s3, e, 0) == identity_hom_map(s3, 0, 0)
    for g in range(6):
        r = right_translation(s3, g, 0)
        for f in s3.hom_set(0, 0):
            assert r.apply(s3, f) == s3.compose(f, g)
        # r_{g^-1} undoes r_g.
        rinv = right_translation(s3, s3.inverse(g), 0)
        assert tuple(rinv.table[s3.hom_pos(m)] for m in r.table) == s3.hom_set(0, 0)


def test_right_translation_requires_invertible():
    C = idempotent_monoid_category()
    with pytest.raises(NotInvertible):
        right_translation(C, 1, 0)


def test_horizontal_compose_defining_condition(s3):
    # h''(f1' f1) = f2' f2 for every composable pair of induced squares.
    for f1, g1, g2, f1p, g3 in [(1, 2, 3, 4, 5), (2, 2, 2, 2, 2), (5, 1, 0, 3, 4)]:
        f2 = s3.compose(s3.compose(g2, f1), s3.inverse(g1))
        f2p = s3.compose(s3.compose(g3, f1p), s3.inverse(g2))
        left = induced_from_square(s3, f1, f2, g1, g2)
        right = induced_from_square(s3, f1p, f2p, g2, g3)
        w = horizontal_compose(s3, left, right)
        assert w.src.f == s3.compose(f1p, f1)
        assert w.dst.f == s3.compose(f2p, f2)
        assert w.h.apply(s3, w.src.f) == w.dst.f
        assert (w.g1, w.g2) == (g1, g3)


def test_horizontal_compose_requires_shared_vertical(s3):
    left = induced_from_square(s3, 1, 1, 1, 1)
    right = induced_from_square(s3, 2, 2, 2, 2)  # g1=2 != left.g2=1
    with pytest.raises(CompositionUndefined):
        horizontal_compose(s3, left, right)


def test_grid_count_oracle_matches_enumeration(z3, gl2f2):
    assert count_interchange_grids(z3) == 3**8
    assert count_interchange_grids(z3) == sum(1 for _ in iter_grid_params(z3))
    # Two objects, 6 isos between any pair, 2^9 object frames.
    assert count_interchange_grids(gl2f2) == 2**9 * 6**8


def test_interchange_generic_route_exhaustive_small(z2, z3):
    for C in (z2, z3):
        for params in iter_grid_params(C):
            tl, tr, bl, br = grid_cells_from_params(C, params)
            assert verify_interchange(C, tl, tr, bl, br).equal


def test_interchange_kernel_agrees_with_generic_route(s3):
    rep = interchange_suite(s3)
    assert rep.ok
    assert rep.data["exhaustive"]
    assert rep.checks == 6**8
    # Spot the same grids through the object-level route.
    for params in iter_grid_params(s3, stride=9973):
        tl, tr, bl, br = grid_cells_from_params(s3, params)
        res = verify_interchange(s3, tl, tr, bl, br)
        assert res.equal
        assert res.lhs.h.apply(s3, res.lhs.src.f) == res.lhs.dst.f


def test_interchange_suite_strides_when_capped(gl2f2):
    rep = interchange_suite(gl2f2, max_grids=10_000)
    assert rep.ok
    assert not rep.data["exhaustive"]
    assert rep.data["stride"] > 1
    assert rep.data["grids_checked"] <= 10_000 + rep.data["stride"]
    assert rep.data["grids_total"] == 2**9 * 6**8


def test_verify_interchange_rejects_non_pasteable(z3):
    tl, tr, bl, br = grid_cells_from_params(z3, (1, 1, 1, 1, 1, 1, 1, 1))
    _, _, bl2, _ = grid_cells_from_params(z3, (2, 1, 1, 1, 1, 1, 1, 1))
    with pytest.raises(CompositionUndefined):
        verify_interchange(z3, tl, tr, bl2, br)


def test_enrichment_always_true_predicate(z3):
    rep = verify_enrichment_closure(z3, BUILTIN_PREDICATES["always-true"])
    assert rep.ok


def test_enrichment_identity_table_fails_entry_requirement(z2):
    rep = verify_enrichment_closure(z2, BUILTIN_PREDICATES["identity-table"])
    assert not rep.ok
    assert all(v.law == "enrichment.right-translation-outside" for v in rep.violations)
    # The offending translation is named: r_g for the non-identity g.
    assert any(v.witness[0] == 1 for v in rep.violations)


def test_enrichment_translation_pair_closure_s3(s3):
    rep = verify_enrichment_closure(s3, BUILTIN_PREDICATES["translation-pair"])
    assert rep.ok
    assert rep.checks > 0
