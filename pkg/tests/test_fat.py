import pytest

from fatcat import (
    DefiningConditionError,
    EndpointMismatch,
    HomMap,
    NotInvertible,
    SquareDoesNotCommute,
    fat_object,
    identity_cell,
    induced_from_square,
    make_fat_morphism,
    verify_lemma1,
    vertical_compose,
)
from fatcat.fat import fat_objects, identity_hom_map
from helpers import discrete_category, idempotent_monoid_category


def test_fat_object_counts(z2, gl2f2):
    assert len(fat_objects(z2)) == 2
    assert len(fat_objects(discrete_category(3))) == 3
    assert len(fat_objects(gl2f2)) == 24  # 4 hom-sets of 6


def test_make_fat_morphism_rejects_bad_endpoints(s3):
    X = fat_object(s3, 1)
    h = identity_hom_map(s3, 0, 0)
    bad = HomMap((0, 0), (1, 1), s3.hom_set(0, 0))
    with pytest.raises(EndpointMismatch):
        make_fat_morphism(s3, X, X, 0, 0, bad)
    # Table carrying the top arrow elsewhere must be refused.
    twisted = HomMap((0, 0), (0, 0), tuple(s3.compose(2, f) for f in s3.hom_set(0, 0)))
    with pytest.raises(DefiningConditionError):
        make_fat_morphism(s3, X, X, s3.identity(0), s3.identity(0), twisted)
    # The identity table is fine.
    u = make_fat_morphism(s3, X, X, s3.identity(0), s3.identity(0), h)
    assert u == identity_cell(s3, X)


def test_identity_cell_is_a_vertical_unit(z3):
    for f1 in range(3):
        for g1 in range(3):
            for g2 in range(3):
                f2 = z3.compose(z3.compose(g2, f1), z3.inverse(g1))
                u = induced_from_square(z3, f1, f2, g1, g2)
                assert vertical_compose(z3, identity_cell(z3, u.dst), u) == u
                assert vertical_compose(z3, u, identity_cell(z3, u.src)) == u


def test_vertical_compose_table_is_pointwise(z3):
    # h-table of a stacked pair equals applying the two tables in order.
    u = induced_from_square(z3, 1, 1, 1, 1)
    v = induced_from_square(z3, 1, 2, 2, 0)
    w = vertical_compose(z3, v, u)
    for f in z3.hom_set(0, 0):
        assert w.h.apply(z3, f) == v.h.apply(z3, u.h.apply(z3, f))
    assert w.g1 == z3.compose(v.g1, u.g1)
    assert w.g2 == z3.compose(v.g2, u.g2)


def test_induced_cell_matches_conjugation_oracle(s3):
    for f1, g1, g2 in [(1, 2, 3), (4, 5, 1), (0, 3, 3)]:
        f2 = s3.compose(s3.compose(g2, f1), s3.inverse(g1))
        u = induced_from_square(s3, f1, f2, g1, g2)
        assert u.h.apply(s3, f1) == f2
        inv = s3.inverse(g1)
        for phi in s3.hom_set(0, 0):
            assert u.h.apply(s3, phi) == s3.compose(s3.compose(g2, phi), inv)


def test_induced_from_identity_square_is_identity_cell(s3):
    e = s3.identity(0)
    assert induced_from_square(s3, 3, 3, e, e) == identity_cell(s3, fat_object(s3, 3))


def test_induced_rejects_bad_squares(s3):
    with pytest.raises(SquareDoesNotCommute):
        induced_from_square(s3, 1, 2, s3.identity(0), s3.identity(0))
    C = idempotent_monoid_category()
    with pytest.raises(NotInvertible):
        induced_from_square(C, 0, 0, 1, 1)  # e . id = id . e but e^-1 missing


@pytest.mark.parametrize("fixture", ["z2", "z3", "s3"])
def test_lemma1_functoriality_is_exhaustive_and_clean(fixture, request):
    C = request.getfixturevalue(fixture)
    n = C.n_morphisms
    rep = verify_lemma1(C)
    assert rep.ok
    # One-object groupoid: f1, g1, g2 free for the top square, then
    # g1', g2' free for the bottom one.
    assert rep.checks == n**5
