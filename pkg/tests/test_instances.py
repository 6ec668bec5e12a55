import itertools

import pytest

from fatcat import (
    FiniteGroup,
    SizeGuardExceeded,
    StructuralError,
    cyclic,
    graded_matrix_groupoid,
    group_as_groupoid,
    matrix_groupoid,
    symmetric,
    validate_category,
)
from fatcat.instances import _det_mod, general_linear, mat_identity, mat_mul


def gl_order(d, p):
    """|GL(d, p)| by the standard product formula."""
    out = 1
    for i in range(d):
        out *= p**d - p**i
    return out


def det_cofactor(m, p):
    """Determinant by Leibniz expansion, the slow independent oracle."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= m[i][perm[i]]
        total += prod
    return total % p


@pytest.mark.parametrize("d,p", [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)])
def test_general_linear_order(d, p):
    assert len(general_linear(d, p)) == gl_order(d, p)


@pytest.mark.parametrize("d,p", [(2, 2), (3, 2), (2, 3)])
def test_det_matches_cofactor_oracle(d, p):
    for entries in itertools.islice(itertools.product(range(p), repeat=d * d), 200):
        m = tuple(entries[i * d : (i + 1) * d] for i in range(d))
        assert _det_mod(m, p) == det_cofactor(m, p)


def test_mat_mul_is_modular():
    a = ((1, 1), (0, 1))
    b = ((1, 0), (1, 1))
    assert mat_mul(a, b, 2) == ((0, 1), (1, 1))
    assert mat_mul(a, mat_identity(2), 2) == a


def test_group_builders_validate():
    for G in (cyclic(1), cyclic(4), symmetric(3)):
        assert validate_category(group_as_groupoid(G)).ok
    assert symmetric(3).order == 6
    assert not symmetric(3).is_abelian()
    assert cyclic(4).is_abelian()


def test_group_table_rejects_non_groups():
    with pytest.raises(StructuralError):
        FiniteGroup("bad", ((0, 0), (0, 0)), ("a", "b"))  # no inverse for 1


def test_matrix_groupoid_shapes():
    assert matrix_groupoid(2, 1, 1).n_morphisms == 1
    assert matrix_groupoid(2, 2, 1).n_morphisms == 6
    C = matrix_groupoid(3, 1, 2)
    for x in C.objects():
        for y in C.objects():
            assert len(C.hom_set(x, y)) == 2  # GL(1, F3) = {1, 2}
    assert validate_category(C).ok


def test_matrix_groupoid_validates(gl2f2):
    rep = validate_category(gl2f2)
    assert rep.ok
    assert gl2f2.n_morphisms == 24
    for f in range(gl2f2.n_morphisms):
        assert gl2f2.is_invertible(f)


def test_size_guards_fail_fast():
    with pytest.raises(SizeGuardExceeded):
        matrix_groupoid(5, 3, 1)  # 5^9 candidate matrices
    with pytest.raises(SizeGuardExceeded):
        matrix_groupoid(2, 2, 40)
    with pytest.raises(SizeGuardExceeded):
        graded_matrix_groupoid(2, 20)


def test_graded_groupoid_validates():
    C = graded_matrix_groupoid(2, 2)
    assert validate_category(C).ok
    # Grades 0, 1, 2 and the overflow object.
    assert C.n_objects == 4
    assert len(C.hom_set(2, 2)) == 6
    assert len(C.hom_set(3, 3)) == 1
    assert len(C.hom_set(1, 2)) == 0


def test_direct_sum_is_strictly_unital(dsum2):
    C = dsum2.base
    id0 = C.identities[0]
    for f in range(C.n_morphisms):
        assert dsum2.tmor(f, id0) == f
        assert dsum2.tmor(id0, f) == f
    for a in C.objects():
        assert dsum2.tobj(a, 0) == a
        assert dsum2.tobj(0, a) == a


def test_direct_sum_tensor_associates_on_objects(dsum2):
    for a in dsum2.base.objects():
        for b in dsum2.base.objects():
            for c in dsum2.base.objects():
                assert dsum2.tobj(dsum2.tobj(a, b), c) == dsum2.tobj(a, dsum2.tobj(b, c))
