"""Monoidal data on a finite category and its lift to fat objects.

A monoidal structure is supplied as explicit tables (tensor on objects
and arrows, unit, associator and unitor components) and validated, never
synthesized.  When the base validates, the fat category acquires a
product on objects, structure cells for the unitors and associator
(induced from the corresponding naturality squares), and the triangle
and pentagon hold as cell equalities; :func:`verify_fat_coherence`
asserts all of that exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory, MorId, ObjId
from .errors import SquareDoesNotCommute, StructuralError
from .fat import (
    FatMorphism,
    FatObject,
    _induced_cached,
    induced_from_square,
    vertical_compose,
)
from .report import Report


@dataclass(frozen=True)
class MonoidalStructure:
    base: FiniteCategory
    tensor_obj: dict[tuple[ObjId, ObjId], ObjId]
    tensor_mor: dict[tuple[MorId, MorId], MorId]
    unit: ObjId
    assoc: dict[tuple[ObjId, ObjId, ObjId], MorId]
    lunit: dict[ObjId, MorId]
    runit: dict[ObjId, MorId]

    def tobj(self, a: ObjId, b: ObjId) -> ObjId:
        try:
            return self.tensor_obj[(a, b)]
        except KeyError:
            raise StructuralError(f"tensor_obj undefined on ({a}, {b})") from None

    def tmor(self, f: MorId, g: MorId) -> MorId:
        try:
            return self.tensor_mor[(f, g)]
        except KeyError:
            raise StructuralError(f"tensor_mor undefined on ({f}, {g})") from None


def _check_monoidal_structure(M: MonoidalStructure, rep: Report) -> bool:
    """Table totality and component typing, before any law is checked."""
    C = M.base
    ok = True
    for a in C.objects():
        for b in C.objects():
            rep.checks += 1
            if (a, b) not in M.tensor_obj:
                rep.add("structure.tensor-obj-missing", (a, b))
                ok = False
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            rep.checks += 1
            r = M.tensor_mor.get((f, g))
            if r is None:
                rep.add("structure.tensor-mor-missing", (f, g))
                ok = False
    if not ok:
        return False
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            r = M.tensor_mor[(f, g)]
            rep.checks += 1
            if C.dom(r) != M.tobj(C.dom(f), C.dom(g)) or C.cod(r) != M.tobj(
                C.cod(f), C.cod(g)
            ):
                rep.add("structure.tensor-mor-endpoints", (f, g, r))
                ok = False
    for a in C.objects():
        for b in C.objects():
            for c in C.objects():
                rep.checks += 1
                m = M.assoc.get((a, b, c))
                if m is None:
                    rep.add("structure.associator-missing", (a, b, c))
                    ok = False
                    continue
                want_dom = M.tobj(M.tobj(a, b), c)
                want_cod = M.tobj(a, M.tobj(b, c))
                if C.dom(m) != want_dom or C.cod(m) != want_cod:
                    rep.add("structure.associator-endpoints", (a, b, c, m))
                    ok = False
                elif not C.is_invertible(m):
                    rep.add("law.associator-not-iso", (a, b, c, m))
                    ok = False
    for tbl, name, want in (
        (M.lunit, "left-unitor", lambda a: M.tobj(M.unit, a)),
        (M.runit, "right-unitor", lambda a: M.tobj(a, M.unit)),
    ):
        for a in C.objects():
            rep.checks += 1
            m = tbl.get(a)
            if m is None:
                rep.add(f"structure.{name}-missing", (a,))
                ok = False
            elif C.dom(m) != want(a) or C.cod(m) != a:
                rep.add(f"structure.{name}-endpoints", (a, m))
                ok = False
            elif not C.is_invertible(m):
                rep.add(f"law.{name}-not-iso", (a, m))
                ok = False
    return ok


def validate_monoidal(M: MonoidalStructure) -> Report:
    """Exhaustive monoidal-category law check on the base tables.

    Covers bifunctoriality, identity preservation, naturality of the
    associator and both unitors, the triangle over all object pairs and
    the pentagon over all object quadruples.  Every violation names its
    witnessing tuple.
    """
    rep = Report(suite="coherence-base")
    C = M.base
    if not _check_monoidal_structure(M, rep):
        return rep

    # id (x) id = id
    for a in C.objects():
        for b in C.objects():
            rep.checks += 1
            if M.tmor(C.identity(a), C.identity(b)) != C.identity(M.tobj(a, b)):
                rep.add("law.tensor-identity", (a, b))

    # Bifunctoriality over all pairs of composable pairs.
    composable = [
        (fp, f)
        for f in range(C.n_morphisms)
        for fp in range(C.n_morphisms)
        if C.dom(fp) == C.cod(f)
    ]
    for fp, f in composable:
        for gp, g in composable:
            rep.checks += 1
            lhs = M.tmor(C.compose(fp, f), C.compose(gp, g))
            rhs = C.compose(M.tmor(fp, gp), M.tmor(f, g))
            if lhs != rhs:
                rep.add("law.bifunctoriality", (fp, f, gp, g))

    # Associator naturality over all arrow triples.
    for f in range(C.n_morphisms):
        for g in range(C.n_morphisms):
            for h in range(C.n_morphisms):
                rep.checks += 1
                a = M.assoc[(C.dom(f), C.dom(g), C.dom(h))]
                b = M.assoc[(C.cod(f), C.cod(g), C.cod(h))]
                lhs = C.compose(b, M.tmor(M.tmor(f, g), h))
                rhs = C.compose(M.tmor(f, M.tmor(g, h)), a)
                if lhs != rhs:
                    rep.add(
                        "law.associator-naturality",
                        (C.dom(f), C.dom(g), C.dom(h), f, g, h),
                        "witness triple of objects, then triple of arrows",
                    )

    # Unitor naturality.
    i1 = C.identity(M.unit)
    for f in range(C.n_morphisms):
        rep.checks += 2
        if C.compose(M.lunit[C.cod(f)], M.tmor(i1, f)) != C.compose(
            f, M.lunit[C.dom(f)]
        ):
            rep.add("law.left-unitor-naturality", (f,))
        if C.compose(M.runit[C.cod(f)], M.tmor(f, i1)) != C.compose(
            f, M.runit[C.dom(f)]
        ):
            rep.add("law.right-unitor-naturality", (f,))

    # Triangle.
    for a in C.objects():
        for b in C.objects():
            rep.checks += 1
            lhs = C.compose(M.tmor(C.identity(a), M.lunit[b]), M.assoc[(a, M.unit, b)])
            rhs = M.tmor(M.runit[a], C.identity(b))
            if lhs != rhs:
                rep.add("law.triangle", (a, b))

    # Pentagon.
    for a in C.objects():
        for b in C.objects():
            for c in C.objects():
                for d in C.objects():
                    rep.checks += 1
                    lhs = C.compose(
                        M.tmor(C.identity(a), M.assoc[(b, c, d)]),
                        C.compose(
                            M.assoc[(a, M.tobj(b, c), d)],
                            M.tmor(M.assoc[(a, b, c)], C.identity(d)),
                        ),
                    )
                    rhs = C.compose(
                        M.assoc[(a, b, M.tobj(c, d))], M.assoc[(M.tobj(a, b), c, d)]
                    )
                    if lhs != rhs:
                        rep.add("law.pentagon", (a, b, c, d))
    return rep


# ---------------------------------------------------------------------------
# Structure lifted to fat objects
# ---------------------------------------------------------------------------


def fat_unit(M: MonoidalStructure) -> FatObject:
    return FatObject(M.unit, M.unit, M.base.identity(M.unit))


def tensor_fat_objects(M: MonoidalStructure, X1: FatObject, X2: FatObject) -> FatObject:
    return FatObject(
        M.tobj(X1.x, X2.x), M.tobj(X1.y, X2.y), M.tmor(X1.f, X2.f)
    )


def fat_left_unitor(M: MonoidalStructure, X: FatObject) -> FatMorphism:
    """Cell from unit (x) X down to X, induced by the unitor naturality square."""
    src = tensor_fat_objects(M, fat_unit(M), X)
    return induced_from_square(M.base, src.f, X.f, M.lunit[X.x], M.lunit[X.y])


def fat_right_unitor(M: MonoidalStructure, X: FatObject) -> FatMorphism:
    src = tensor_fat_objects(M, X, fat_unit(M))
    return induced_from_square(M.base, src.f, X.f, M.runit[X.x], M.runit[X.y])


def fat_associator(
    M: MonoidalStructure, X1: FatObject, X2: FatObject, X3: FatObject
) -> FatMorphism:
    """Reassociation cell, induced by the associator naturality square."""
    src = tensor_fat_objects(M, tensor_fat_objects(M, X1, X2), X3)
    dst = tensor_fat_objects(M, X1, tensor_fat_objects(M, X2, X3))
    return induced_from_square(
        M.base,
        src.f,
        dst.f,
        M.assoc[(X1.x, X2.x, X3.x)],
        M.assoc[(X1.y, X2.y, X3.y)],
    )


def verify_fat_coherence(M: MonoidalStructure) -> Report:
    """Coherence of the lifted structure, as cell equalities.

    Over all pairs of fat objects: the reassociation cell followed by
    "identity tensor left unitor" equals "right unitor tensor identity"
    (the two slanted squares are themselves verified to commute while
    being built).  Over all quadruples: the two reassociation paths agree
    as cells.  Every reassociation cell's table must be a bijection.
    Squares that fail to commute (a corrupted base structure) are
    reported rather than raised.
    """
    rep = Report(suite="coherence-fat")
    C = M.base
    cache: dict = {}
    from .fat import fat_objects as _fat_objects

    fobs = _fat_objects(C)
    unitF = fat_unit(M)

    def induced(fsrc: FatObject, fdst: FatObject, vx: MorId, vy: MorId, law: str, wit):
        try:
            return _induced_cached(C, cache, fsrc.f, fdst.f, vx, vy)
        except SquareDoesNotCommute:
            rep.add(law, wit, "structure square does not commute")
            return None

    def assoc_cell(X1, X2, X3, law: str, wit):
        src = tensor_fat_objects(M, tensor_fat_objects(M, X1, X2), X3)
        dst = tensor_fat_objects(M, X1, tensor_fat_objects(M, X2, X3))
        return induced(
            src, dst, M.assoc[(X1.x, X2.x, X3.x)], M.assoc[(X1.y, X2.y, X3.y)], law, wit
        )

    # Unitor coherence (the trough) over all fat-object pairs.
    for X1 in fobs:
        for X2 in fobs:
            wit = (X1.f, X2.f)
            P = tensor_fat_objects(M, X1, X2)
            A = tensor_fat_objects(M, tensor_fat_objects(M, X1, unitF), X2)
            B = tensor_fat_objects(M, X1, tensor_fat_objects(M, unitF, X2))
            mid = assoc_cell(X1, unitF, X2, "fat-triangle.associator-square", wit)
            left = induced(
                A,
                P,
                M.tmor(M.runit[X1.x], C.identity(X2.x)),
                M.tmor(M.runit[X1.y], C.identity(X2.y)),
                "fat-triangle.left-slant-square",
                wit,
            )
            right = induced(
                B,
                P,
                M.tmor(C.identity(X1.x), M.lunit[X2.x]),
                M.tmor(C.identity(X1.y), M.lunit[X2.y]),
                "fat-triangle.right-slant-square",
                wit,
            )
            if mid is None or left is None or right is None:
                continue
            rep.checks += 1
            if vertical_compose(C, right, mid) != left:
                rep.add("fat-triangle", wit)

    # Reassociation tables are bijections.
    for X1 in fobs:
        for X2 in fobs:
            for X3 in fobs:
                wit = (X1.f, X2.f, X3.f)
                cell = assoc_cell(X1, X2, X3, "fat-associator.square", wit)
                if cell is None:
                    continue
                rep.checks += 1
                if sorted(cell.h.table) != sorted(C.hom_set(*cell.h.dst)):
                    rep.add("fat-associator.bijection", wit)

    # Pentagon over all fat-object quadruples.
    for X1 in fobs:
        for X2 in fobs:
            for X3 in fobs:
                X12 = tensor_fat_objects(M, X1, X2)
                X23 = tensor_fat_objects(M, X2, X3)
                for X4 in fobs:
                    wit = (X1.f, X2.f, X3.f, X4.f)
                    X34 = tensor_fat_objects(M, X3, X4)
                    top_src = tensor_fat_objects(
                        M, tensor_fat_objects(M, X12, X3), X4
                    )
                    mid_obj = tensor_fat_objects(
                        M, tensor_fat_objects(M, X1, X23), X4
                    )
                    e1 = induced(
                        top_src,
                        mid_obj,
                        M.tmor(M.assoc[(X1.x, X2.x, X3.x)], C.identity(X4.x)),
                        M.tmor(M.assoc[(X1.y, X2.y, X3.y)], C.identity(X4.y)),
                        "fat-pentagon.edge-square",
                        wit,
                    )
                    e2 = assoc_cell(X1, X23, X4, "fat-pentagon.edge-square", wit)
                    mid2_obj = tensor_fat_objects(
                        M, X1, tensor_fat_objects(M, X23, X4)
                    )
                    e3_dst = tensor_fat_objects(M, X1, tensor_fat_objects(M, X2, X34))
                    e3 = induced(
                        mid2_obj,
                        e3_dst,
                        M.tmor(C.identity(X1.x), M.assoc[(X2.x, X3.x, X4.x)]),
                        M.tmor(C.identity(X1.y), M.assoc[(X2.y, X3.y, X4.y)]),
                        "fat-pentagon.edge-square",
                        wit,
                    )
                    e4 = assoc_cell(X12, X3, X4, "fat-pentagon.edge-square", wit)
                    e5 = assoc_cell(X1, X2, X34, "fat-pentagon.edge-square", wit)
                    if None in (e1, e2, e3, e4, e5):
                        continue
                    rep.checks += 1
                    lhs = vertical_compose(C, e3, vertical_compose(C, e2, e1))
                    rhs = vertical_compose(C, e5, e4)
                    if lhs != rhs:
                        rep.add("fat-pentagon", wit)
    return rep
