import itertools

import pytest

from helpers import idempotent_monoid_category, indiscrete_z2_groupoid

from fatcat import CompositionUndefined, make_category, validate_category


def count_composable_triples(C):
    """Independent oracle: paths of length three through the quiver."""
    return sum(
        1
        for f in range(C.n_morphisms)
        for g in range(C.n_morphisms)
        for h in range(C.n_morphisms)
        if C.cod(f) == C.dom(g) and C.cod(g) == C.dom(h)
    )


def test_z2_groupoid_validates(z2):
    rep = validate_category(z2)
    assert rep.ok
    assert rep.data["associativity_triples"] == count_composable_triples(z2)


def test_parallel_iso_groupoid_validates():
    C = indiscrete_z2_groupoid()
    rep = validate_category(C)
    assert rep.ok
    # 2^4 object choices x 2^3 arrow choices per path of length three.
    assert count_composable_triples(C) == 128
    assert rep.data["associativity_triples"] == 128


def test_redirected_composition_is_reported(z3):
    comp = dict(z3.composition)
    comp[(1, 1)] = comp[(1, 1)]  # copy untouched
    bad = dict(comp)
    bad[(2, 1)] = 0 if bad[(2, 1)] != 0 else 1
    C = make_category(
        1, [(m.dom, m.cod, m.label) for m in z3.morphisms], bad, list(z3.identities)
    )
    rep = validate_category(C)
    assert not rep.ok
    assert any(v.witness[:2] == (2, 1) for v in rep.violations)


def test_compose_identity_and_inverse_laws(s3):
    e = s3.identity(0)
    for f in range(s3.n_morphisms):
        assert s3.compose(e, f) == f
        assert s3.compose(f, e) == f
        assert s3.compose(s3.inverse(f), f) == e


def test_compose_incompatible_raises(gl2f2):
    f = gl2f2.hom_set(0, 1)[0]
    g = gl2f2.hom_set(0, 1)[0]
    with pytest.raises(CompositionUndefined):
        gl2f2.compose(g, f)


def perm_compose(a, b):
    """Apply b first, then a."""
    return tuple(a[b[i]] for i in range(len(a)))


def test_s3_composition_matches_permutation_oracle(s3):
    by_label = {s3.label(f): f for f in range(s3.n_morphisms)}
    t12, t13 = by_label["(1 2)"], by_label["(1 3)"]
    # (1 2) after (1 3) is (1 3 2); the other order gives (1 2 3).
    assert s3.label(s3.compose(t12, t13)) == "(1 3 2)"
    assert s3.label(s3.compose(t13, t12)) == "(1 2 3)"
    # Full table against the permutation oracle.
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    for a in range(6):
        for b in range(6):
            assert s3.compose(a, b) == index[perm_compose(perms[a], perms[b])]


def test_hom_sets_partition_morphisms(gl2f2):
    seen = []
    for x in gl2f2.objects():
        for y in gl2f2.objects():
            seen.extend(gl2f2.hom_set(x, y))
    assert sorted(seen) == list(range(gl2f2.n_morphisms))
    assert gl2f2.hom_set(0, 1) == tuple(sorted(gl2f2.hom_set(0, 1)))


def test_inverse_is_an_involution(gl2f2):
    for f in range(gl2f2.n_morphisms):
        g = gl2f2.inverse(f)
        assert g is not None
        assert gl2f2.inverse(g) == f


def test_non_invertible_endomorphism_has_no_inverse():
    C = idempotent_monoid_category()
    assert validate_category(C).ok
    assert C.inverse(0) == 0
    assert C.inverse(1) is None
    assert not C.is_invertible(1)
