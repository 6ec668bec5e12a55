"""The fat construction on a finite category.

Given a category C, build the category whose objects are the arrows of C
and whose morphisms are cells ``(g1, g2, h)``: two connecting arrows
between the endpoints and a plain set-map ``h`` between the relevant
hom-sets, required to carry the top arrow to the bottom one.  Cells
compose vertically.  Commuting squares whose left side is invertible
induce cells of a canonical shape (``phi -> g2 . phi . g1^-1``), and that
assignment is functorial: the cell induced by a pasted square is the
vertical composite of the induced cells.  ``verify_lemma1`` checks this
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .category import FiniteCategory, MorId, ObjId
from .errors import (
    CompositionUndefined,
    DefiningConditionError,
    EndpointMismatch,
    NotInvertible,
    SquareDoesNotCommute,
    StructuralError,
)
from .report import Report


@dataclass(frozen=True)
class FatObject:
    """An arrow f: x -> y of the base category, viewed as an object."""

    x: ObjId
    y: ObjId
    f: MorId


def fat_object(C: FiniteCategory, f: MorId) -> FatObject:
    return FatObject(C.dom(f), C.cod(f), f)


def fat_objects(C: FiniteCategory) -> list[FatObject]:
    """One fat object per arrow of the base category."""
    return [fat_object(C, f) for f in range(C.n_morphisms)]


@dataclass(frozen=True)
class HomMap:
    """A total set-map between two hom-sets.

    ``table[i]`` is the image of the i-th arrow of ``hom_set(*src)`` in
    the canonical ascending-id order, so tables compare positionally.
    """

    src: tuple[ObjId, ObjId]
    dst: tuple[ObjId, ObjId]
    table: tuple[MorId, ...]

    def apply(self, C: FiniteCategory, f: MorId) -> MorId:
        if (C.dom(f), C.cod(f)) != self.src:
            raise EndpointMismatch(
                f"{C.label(f)} is not in hom{self.src}, cannot apply hom-map"
            )
        return self.table[C.hom_pos(f)]


def hom_map_from_callable(
    C: FiniteCategory,
    src: tuple[ObjId, ObjId],
    dst: tuple[ObjId, ObjId],
    fn: Callable[[MorId], MorId],
) -> HomMap:
    return HomMap(src, dst, tuple(fn(f) for f in C.hom_set(*src)))


def identity_hom_map(C: FiniteCategory, x: ObjId, y: ObjId) -> HomMap:
    return HomMap((x, y), (x, y), C.hom_set(x, y))


def check_hom_map(C: FiniteCategory, h: HomMap) -> None:
    """Raise StructuralError unless ``h`` is total and lands in its stated hom-set."""
    src_hom = C.hom_set(*h.src)
    dst_hom = set(C.hom_set(*h.dst))
    if len(h.table) != len(src_hom):
        raise StructuralError(
            f"hom-map table has {len(h.table)} entries, hom{h.src} has {len(src_hom)}"
        )
    for img in h.table:
        if img not in dst_hom:
            raise StructuralError(f"hom-map image {img} is not in hom{h.dst}")


def compose_hom_maps(C: FiniteCategory, second: HomMap, first: HomMap) -> HomMap:
    if first.dst != second.src:
        raise CompositionUndefined(
            f"hom-maps not composable: {first.dst} vs {second.src}"
        )
    pos = C._cache()["pos"]
    return HomMap(first.src, second.dst, tuple(second.table[pos[m]] for m in first.table))


@dataclass(frozen=True)
class FatMorphism:
    """A cell between two fat objects.

    ``g1`` connects the sources, ``g2`` the targets, and ``h`` maps the
    source hom-set to the destination hom-set, sending ``src.f`` to
    ``dst.f``.  Equality is extensional: same endpoints, same connecting
    arrows, same table entry by entry.
    """

    src: FatObject
    dst: FatObject
    g1: MorId
    g2: MorId
    h: HomMap


def make_fat_morphism(
    C: FiniteCategory,
    src: FatObject,
    dst: FatObject,
    g1: MorId,
    g2: MorId,
    h: HomMap,
) -> FatMorphism:
    """Validate and build a cell; rejects ill-typed or law-breaking data."""
    if (C.dom(g1), C.cod(g1)) != (src.x, dst.x):
        raise EndpointMismatch(
            f"g1={C.label(g1)} is not an arrow {src.x} -> {dst.x}"
        )
    if (C.dom(g2), C.cod(g2)) != (src.y, dst.y):
        raise EndpointMismatch(
            f"g2={C.label(g2)} is not an arrow {src.y} -> {dst.y}"
        )
    if h.src != (src.x, src.y) or h.dst != (dst.x, dst.y):
        raise EndpointMismatch(
            f"hom-map typed {h.src} -> {h.dst}, cell requires "
            f"{(src.x, src.y)} -> {(dst.x, dst.y)}"
        )
    check_hom_map(C, h)
    if h.apply(C, src.f) != dst.f:
        raise DefiningConditionError(
            f"hom-map sends {C.label(src.f)} to {C.label(h.apply(C, src.f))}, "
            f"expected {C.label(dst.f)}"
        )
    return FatMorphism(src, dst, g1, g2, h)


def identity_cell(C: FiniteCategory, X: FatObject) -> FatMorphism:
    """The vertical unit on X: identity arrows and the identity hom-map."""
    return FatMorphism(
        X, X, C.identity(X.x), C.identity(X.y), identity_hom_map(C, X.x, X.y)
    )


def vertical_compose(C: FiniteCategory, v: FatMorphism, u: FatMorphism) -> FatMorphism:
    """Stack ``u`` on top of ``v``: compose connecting arrows and tables."""
    if u.dst != v.src:
        raise CompositionUndefined("cells not vertically composable (middle mismatch)")
    return FatMorphism(
        u.src,
        v.dst,
        C.compose(v.g1, u.g1),
        C.compose(v.g2, u.g2),
        compose_hom_maps(C, v.h, u.h),
    )


def induced_from_square(
    C: FiniteCategory, f1: MorId, f2: MorId, g1: MorId, g2: MorId
) -> FatMorphism:
    """The cell induced by a commuting square with invertible left side.

    The square has f1 on top, f2 on the bottom, g1 and g2 as verticals;
    its hom-map is phi -> g2 . phi . g1^-1, which carries f1 to f2
    precisely because the square commutes.
    """
    if C.cod(g2) != C.cod(f2) or C.dom(g1) != C.dom(f1):
        raise EndpointMismatch("square sides do not line up")
    if C.compose(g2, f1) != C.compose(f2, g1):
        raise SquareDoesNotCommute(
            f"g2.f1 = {C.label(C.compose(g2, f1))} != f2.g1 = {C.label(C.compose(f2, g1))}"
        )
    g1_inv = C.inverse(g1)
    if g1_inv is None:
        raise NotInvertible(f"left vertical {C.label(g1)} has no inverse")
    src = fat_object(C, f1)
    dst = fat_object(C, f2)
    table = tuple(
        C.compose(C.compose(g2, phi), g1_inv) for phi in C.hom_set(src.x, src.y)
    )
    return FatMorphism(src, dst, g1, g2, HomMap((src.x, src.y), (dst.x, dst.y), table))


def _induced_cached(
    C: FiniteCategory, cache: dict, f1: MorId, f2: MorId, g1: MorId, g2: MorId
) -> FatMorphism:
    key = (f1, f2, g1, g2)
    cell = cache.get(key)
    if cell is None:
        cell = induced_from_square(C, f1, f2, g1, g2)
        cache[key] = cell
    return cell


def iter_induced_squares(
    C: FiniteCategory, invertible_top: bool = False
) -> Iterable[tuple[MorId, MorId, MorId, MorId]]:
    """Enumerate commuting squares (f1, f2, g1, g2) with g1 invertible.

    f1 ranges over all arrows (or invertible arrows only), g1 over the
    invertible arrows out of dom(f1), g2 over all arrows out of cod(f1);
    f2 is then forced.  Ascending-id order throughout, so downstream
    suites are deterministic.
    """
    nm = C.n_morphisms
    for f1 in range(nm):
        if invertible_top and not C.is_invertible(f1):
            continue
        x1, y1 = C.dom(f1), C.cod(f1)
        for g1 in range(nm):
            if C.dom(g1) != x1 or not C.is_invertible(g1):
                continue
            g1_inv = C.inverse(g1)
            for g2 in range(nm):
                if C.dom(g2) != y1:
                    continue
                if invertible_top and not C.is_invertible(g2):
                    continue
                f2 = C.compose(C.compose(g2, f1), g1_inv)
                yield f1, f2, g1, g2


def verify_lemma1(C: FiniteCategory) -> Report:
    """Functoriality of the induced-cell construction, exhaustively.

    For every vertically pasteable pair of commuting squares with
    invertible left sides, the composite of the induced cells must equal
    the cell induced by the pasted square.
    """
    rep = Report(suite="lemma1")
    cache: dict = {}
    nm = C.n_morphisms
    isos_from: dict[ObjId, list[MorId]] = {}
    all_from: dict[ObjId, list[MorId]] = {}
    for m in range(nm):
        all_from.setdefault(C.dom(m), []).append(m)
        if C.is_invertible(m):
            isos_from.setdefault(C.dom(m), []).append(m)

    for f1, f2, g1, g2 in iter_induced_squares(C):
        upper = _induced_cached(C, cache, f1, f2, g1, g2)
        x2, y2 = C.dom(f2), C.cod(f2)
        for g1p in isos_from.get(x2, ()):
            g1p_inv = C.inverse(g1p)
            for g2p in all_from.get(y2, ()):
                f3 = C.compose(C.compose(g2p, f2), g1p_inv)
                lower = _induced_cached(C, cache, f2, f3, g1p, g2p)
                pasted = _induced_cached(
                    C, cache, f1, f3, C.compose(g1p, g1), C.compose(g2p, g2)
                )
                rep.checks += 1
                if vertical_compose(C, lower, upper) != pasted:
                    rep.add(
                        "lemma1.functoriality",
                        (f1, g1, g2, g1p, g2p),
                        f"top square ({C.label(f1)}; {C.label(g1)}, {C.label(g2)}), "
                        f"bottom verticals ({C.label(g1p)}, {C.label(g2p)})",
                    )
    return rep
