"""Concrete categories exercising the machinery.

Group groupoids (one object, arrows a finite group), matrix groupoids
(objects are fibers F_p^d at several base points, arrows all invertible
matrices, exact modular arithmetic throughout), and two monoidal
instances: the strict block-direct-sum structure on a dimension-graded
matrix family, and an abelian toy with non-identity unitor components.

Size guards keep everything enumerable at desk scale and fail fast.
"""

from __future__ import annotations

import itertools

from .category import FiniteCategory, Mor, ObjId
from .errors import SizeGuardExceeded, StructuralError
from .groups import FiniteGroup, cyclic
from .monoidal import MonoidalStructure

MAX_HOM = 512
MAX_OBJECTS = 16
MAX_ENUM = 100_000

Matrix = tuple[tuple[int, ...], ...]


def group_as_groupoid(G: FiniteGroup) -> FiniteCategory:
    """One object, one arrow per group element, composition = product."""
    n = G.order
    mors = tuple(Mor(i, 0, 0, G.labels[i]) for i in range(n))
    comp = {(g, f): G.mul[g][f] for g in range(n) for f in range(n)}
    return FiniteCategory(1, mors, comp, (G.identity,))


# -- exact matrix arithmetic over F_p ---------------------------------------


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def mat_identity(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def _det_mod(a: Matrix, p: int) -> int:
    """Determinant by fraction-free Gaussian elimination mod p."""
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, n):
            factor = (m[r][col] * inv) % p
            for c in range(col, n):
                m[r][c] = (m[r][c] - factor * m[col][c]) % p
    return det % p


def general_linear(d: int, p: int) -> list[Matrix]:
    """All invertible d x d matrices over F_p, in lexicographic entry order."""
    if d == 0:
        return [()]
    if p ** (d * d) > MAX_ENUM:
        raise SizeGuardExceeded(f"GL({d}, {p}): {p}^{d * d} candidates exceeds guard")
    out = []
    for entries in itertools.product(range(p), repeat=d * d):
        m = tuple(entries[i * d : (i + 1) * d] for i in range(d))
        if _det_mod(m, p) != 0:
            out.append(m)
    if len(out) > MAX_HOM:
        raise SizeGuardExceeded(f"GL({d}, {p}) has {len(out)} elements (> {MAX_HOM})")
    return out


def mat_label(m: Matrix) -> str:
    return "[" + ";".join("".join(str(x) for x in row) for row in m) + "]"


def matrix_groupoid(p: int, d: int, k: int) -> FiniteCategory:
    """k copies of the fiber F_p^d with every invertible matrix between them."""
    if k < 1 or d < 0:
        raise SizeGuardExceeded("need k >= 1 and d >= 0")
    if k > MAX_OBJECTS:
        raise SizeGuardExceeded(f"{k} objects exceeds guard {MAX_OBJECTS}")
    gl = general_linear(d, p)
    if k * k * len(gl) > MAX_HOM * MAX_OBJECTS:
        raise SizeGuardExceeded("total morphism count exceeds guard")
    mors: list[Mor] = []
    by_key: dict[tuple[ObjId, ObjId, Matrix], int] = {}
    for x in range(k):
        for y in range(k):
            for m in gl:
                mid = len(mors)
                mors.append(Mor(mid, x, y, f"{mat_label(m)}:{x}->{y}"))
                by_key[(x, y, m)] = mid
    mats = {mor.id: key[2] for key, mid in by_key.items() for mor in [mors[mid]]}
    comp = {}
    for g in mors:
        for f in mors:
            if f.cod == g.dom:
                prod = mat_mul(mats[g.id], mats[f.id], p) if d else ()
                comp[(g.id, f.id)] = by_key[(f.dom, g.cod, prod)]
    idm = mat_identity(d) if d else ()
    identities = tuple(by_key[(x, x, idm)] for x in range(k))
    return FiniteCategory(k, tuple(mors), comp, identities)


# -- strict direct-sum monoidal structure -----------------------------------


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    da, db = len(a), len(b)
    top = tuple(row + (0,) * db for row in a)
    bot = tuple((0,) * da + row for row in b)
    return top + bot


def graded_matrix_groupoid(p: int, max_dim: int) -> FiniteCategory:
    """One object per dimension 0..max_dim plus an absorbing overflow object.

    Arrows are the invertible matrices of each grade (endomorphisms only;
    no arrows between distinct grades).  The overflow object carries just
    its identity; tensors whose dimension would exceed ``max_dim``
    collapse onto it, which is what keeps the direct-sum monoidal tables
    total on a finite object set.
    """
    if max_dim < 0 or max_dim + 2 > MAX_OBJECTS:
        raise SizeGuardExceeded(f"max_dim {max_dim} out of range")
    n_objects = max_dim + 2  # grades 0..max_dim, then overflow
    mors: list[Mor] = []
    by_key: dict[tuple[int, Matrix], int] = {}
    for dim in range(max_dim + 1):
        for m in general_linear(dim, p):
            mid = len(mors)
            mors.append(Mor(mid, dim, dim, f"d{dim}:{mat_label(m)}"))
            by_key[(dim, m)] = mid
    top = n_objects - 1
    top_id = len(mors)
    mors.append(Mor(top_id, top, top, "top:id"))
    mats = {mid: key[1] for key, mid in by_key.items()}
    comp = {}
    for g in mors:
        for f in mors:
            if f.cod != g.dom:
                continue
            if g.id == top_id:
                comp[(g.id, f.id)] = top_id
            else:
                dim = g.dom
                prod = mat_mul(mats[g.id], mats[f.id], p) if dim else ()
                comp[(g.id, f.id)] = by_key[(dim, prod)]
    identities = tuple(
        by_key[(dim, mat_identity(dim) if dim else ())] for dim in range(max_dim + 1)
    ) + (top_id,)
    return FiniteCategory(n_objects, tuple(mors), comp, identities)


def direct_sum_monoidal(p: int = 2, max_dim: int = 2) -> MonoidalStructure:
    """Strict monoidal structure on the graded matrix groupoid.

    Tensor is block direct sum on both objects and arrows; the unit is
    the zero-dimensional grade; associator and unitors are identity
    components.  Products past ``max_dim`` land on the overflow object.
    """
    C = graded_matrix_groupoid(p, max_dim)
    top = C.n_objects - 1
    top_id = C.identities[top]

    def obj_dim(x: ObjId) -> int | None:
        return None if x == top else x

    # Rebuild the (dim, matrix) -> id index the same way the groupoid did.
    by_key: dict[tuple[int, Matrix], int] = {}
    mid = 0
    for dim in range(max_dim + 1):
        for mat in general_linear(dim, p):
            by_key[(dim, mat)] = mid
            mid += 1
    mats = {i: key[1] for key, i in by_key.items()}
    dims = {i: key[0] for key, i in by_key.items()}

    tensor_obj = {}
    for a in C.objects():
        for b in C.objects():
            da, db = obj_dim(a), obj_dim(b)
            if da is None or db is None or da + db > max_dim:
                tensor_obj[(a, b)] = top
            else:
                tensor_obj[(a, b)] = da + db

    tensor_mor = {}
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            if f == top_id or g == top_id or dims[f] + dims[g] > max_dim:
                tensor_mor[(f, g)] = top_id
            else:
                tensor_mor[(f, g)] = by_key[
                    (dims[f] + dims[g], block_diag(mats[f], mats[g]))
                ]

    assoc = {
        (a, b, c): C.identities[tensor_obj[(tensor_obj[(a, b)], c)]]
        for a in C.objects()
        for b in C.objects()
        for c in C.objects()
    }
    lunit = {a: C.identities[a] for a in C.objects()}
    runit = {a: C.identities[a] for a in C.objects()}
    return MonoidalStructure(C, tensor_obj, tensor_mor, 0, assoc, lunit, runit)


def corrupt_associator(
    M: MonoidalStructure, triple: tuple[ObjId, ObjId, ObjId], mor: int
) -> MonoidalStructure:
    """Copy of M with one associator component replaced (for negative tests)."""
    assoc = dict(M.assoc)
    assoc[triple] = mor
    return MonoidalStructure(
        M.base, M.tensor_obj, M.tensor_mor, M.unit, assoc, M.lunit, M.runit
    )


def unitor_toy_monoidal(n: int = 4, shift: int = 1) -> MonoidalStructure:
    """Abelian one-object instance with non-identity unitor components.

    Tensor on arrows is the group operation of Z_n (bifunctorial because
    the group is abelian); both unitor components are the element
    ``shift``.  Naturality and the triangle hold for any shift in an
    abelian group, which makes this the smallest instance where the
    lifted unitor cells have non-trivial boundary.
    """
    G = cyclic(n)
    C = group_as_groupoid(G)
    tensor_obj = {(0, 0): 0}
    tensor_mor = {
        (f, g): G.mul[f][g] for f in range(n) for g in range(n)
    }
    e = G.identity
    assoc = {(0, 0, 0): e}
    lunit = {0: shift % n}
    runit = {0: shift % n}
    return MonoidalStructure(C, tensor_obj, tensor_mor, 0, assoc, lunit, runit)
