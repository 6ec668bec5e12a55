"""Finite categories as explicit tables.

Everything downstream quantifies over this representation, so it is kept
deliberately dumb: dense integer ids for objects and arrows, composition
stored as a table rather than computed, and a validator that enumerates
every axiom instance.

Composition convention: ``compose(g, f)`` is the arrow "f then g", so it
is defined exactly when ``cod(f) == dom(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CompositionUndefined, StructuralError
from .report import Report

ObjId = int
MorId = int


@dataclass(frozen=True)
class Mor:
    """One arrow: dense id, endpoints, optional display label."""

    id: MorId
    dom: ObjId
    cod: ObjId
    label: str | None = None

    def name(self) -> str:
        return self.label if self.label is not None else f"m{self.id}"


@dataclass(frozen=True, eq=True)
class FiniteCategory:
    """A finite category given by explicit tables.

    ``composition`` maps ``(g, f)`` to the id of ``g`` after ``f`` and is
    defined exactly on cod/dom-compatible pairs.  ``identities[x]`` is the
    identity arrow of object ``x``.  Instances are immutable; derived
    structure (hom-sets, inverses) is cached lazily.
    """

    n_objects: int
    morphisms: tuple[Mor, ...]
    composition: dict[tuple[MorId, MorId], MorId]
    identities: tuple[MorId, ...]

    # -- basic accessors ------------------------------------------------

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    def objects(self) -> range:
        return range(self.n_objects)

    def mor(self, f: MorId) -> Mor:
        return self.morphisms[f]

    def dom(self, f: MorId) -> ObjId:
        return self.morphisms[f].dom

    def cod(self, f: MorId) -> ObjId:
        return self.morphisms[f].cod

    def identity(self, x: ObjId) -> MorId:
        return self.identities[x]

    def label(self, f: MorId) -> str:
        return self.morphisms[f].name()

    def compose(self, g: MorId, f: MorId) -> MorId:
        """Return "f then g".  Raises if the pair is not composable."""
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise CompositionUndefined(
                f"compose({self.label(g)}, {self.label(f)}): "
                f"cod({self.label(f)})={self.cod(f)} != dom({self.label(g)})={self.dom(g)}"
            ) from None

    # -- cached derived structure --------------------------------------

    def _cache(self) -> dict:
        d = self.__dict__.get("_derived")
        if d is None:
            hom: dict[tuple[ObjId, ObjId], list[MorId]] = {}
            pos: list[int] = [0] * len(self.morphisms)
            for m in self.morphisms:  # ascending id: canonical hom-set order
                bucket = hom.setdefault((m.dom, m.cod), [])
                pos[m.id] = len(bucket)
                bucket.append(m.id)
            d = {
                "hom": {k: tuple(v) for k, v in hom.items()},
                "pos": pos,
                "inv": [self._scan_inverse(f) for f in range(len(self.morphisms))],
            }
            object.__setattr__(self, "_derived", d)
        return d

    def _scan_inverse(self, f: MorId) -> MorId | None:
        x, y = self.dom(f), self.cod(f)
        for g in range(len(self.morphisms)):
            if self.dom(g) == y and self.cod(g) == x:
                if (
                    self.composition.get((g, f)) == self.identities[x]
                    and self.composition.get((f, g)) == self.identities[y]
                ):
                    return g
        return None

    def hom_set(self, x: ObjId, y: ObjId) -> tuple[MorId, ...]:
        """All arrows x -> y in ascending id order.

        This ordering is the canonical enumeration every hom-set map table
        is stored against.
        """
        return self._cache()["hom"].get((x, y), ())

    def hom_pos(self, f: MorId) -> int:
        """Position of ``f`` inside its own hom-set."""
        return self._cache()["pos"][f]

    def inverse(self, f: MorId) -> MorId | None:
        """The two-sided inverse of ``f`` if one exists (it is unique)."""
        return self._cache()["inv"][f]

    def is_invertible(self, f: MorId) -> bool:
        return self.inverse(f) is not None

    def iso_hom(self, x: ObjId, y: ObjId) -> tuple[MorId, ...]:
        """The invertible arrows x -> y, ascending id order."""
        return tuple(f for f in self.hom_set(x, y) if self.is_invertible(f))


def is_isomorphism(C: FiniteCategory, f: MorId) -> MorId | None:
    """Return the inverse of ``f`` if it is an isomorphism, else None."""
    return C.inverse(f)


def check_structure(C: FiniteCategory, rep: Report) -> bool:
    """Table well-formedness, reported separately from axiom violations."""
    ok = True
    nm = len(C.morphisms)
    if len(C.identities) != C.n_objects:
        rep.add("structure.identities-arity", (len(C.identities), C.n_objects))
        return False
    for i, m in enumerate(C.morphisms):
        rep.checks += 1
        if m.id != i:
            rep.add("structure.non-dense-morphism-id", (i, m.id))
            ok = False
        if not (0 <= m.dom < C.n_objects and 0 <= m.cod < C.n_objects):
            rep.add("structure.dangling-object", (m.id, m.dom, m.cod))
            ok = False
    for x, e in enumerate(C.identities):
        rep.checks += 1
        if not (0 <= e < nm):
            rep.add("structure.dangling-identity", (x, e))
            ok = False
        elif C.dom(e) != x or C.cod(e) != x:
            rep.add("structure.identity-endpoints", (x, e))
            ok = False
    for (g, f), r in C.composition.items():
        rep.checks += 1
        if not (0 <= g < nm and 0 <= f < nm and 0 <= r < nm):
            rep.add("structure.dangling-composition-entry", (g, f, r))
            ok = False
    return ok


def validate_category(C: FiniteCategory) -> Report:
    """Check the category axioms exhaustively.

    The report lists every violated axiom instance: totality of the
    composition table on compatible pairs, endpoint correctness of each
    entry, associativity on every composable triple, and both identity
    laws for every arrow.  Structural defects (dangling ids) are reported
    with a ``structure.`` prefix and short-circuit the axiom checks.
    """
    rep = Report(suite="axioms")
    if not check_structure(C, rep):
        return rep

    nm = len(C.morphisms)
    comp = C.composition

    # Totality and endpoints on compatible pairs; spurious entries too.
    for g in range(nm):
        for f in range(nm):
            compatible = C.cod(f) == C.dom(g)
            r = comp.get((g, f))
            rep.checks += 1
            if compatible and r is None:
                rep.add("axiom.composition-missing", (g, f), f"({C.label(g)}, {C.label(f)})")
            elif not compatible and r is not None:
                rep.add("axiom.composition-spurious", (g, f), f"({C.label(g)}, {C.label(f)})")
            elif r is not None and (C.dom(r) != C.dom(f) or C.cod(r) != C.cod(g)):
                rep.add(
                    "axiom.composition-endpoints",
                    (g, f, r),
                    f"compose({C.label(g)}, {C.label(f)}) = {C.label(r)}",
                )

    # Identity laws.
    for f in range(nm):
        rep.checks += 1
        left = comp.get((C.identities[C.cod(f)], f))
        right = comp.get((f, C.identities[C.dom(f)]))
        if left != f:
            rep.add("axiom.left-identity", (f,), C.label(f))
        if right != f:
            rep.add("axiom.right-identity", (f,), C.label(f))

    # Associativity over every composable triple (h after g after f).
    triples = 0
    for f in range(nm):
        gs = [g for g in range(nm) if C.dom(g) == C.cod(f)]
        for g in gs:
            gf = comp.get((g, f))
            for h in range(nm):
                if C.dom(h) != C.cod(g):
                    continue
                triples += 1
                rep.checks += 1
                hg = comp.get((h, g))
                lhs = comp.get((h, gf)) if gf is not None else None
                rhs = comp.get((hg, f)) if hg is not None else None
                if lhs is None or rhs is None or lhs != rhs:
                    rep.add(
                        "axiom.associativity",
                        (h, g, f),
                        f"({C.label(h)}, {C.label(g)}, {C.label(f)})",
                    )
    rep.data = {"associativity_triples": triples}
    return rep


def make_category(
    n_objects: int,
    arrows: list[tuple[ObjId, ObjId, str | None]],
    composition: dict[tuple[MorId, MorId], MorId],
    identities: list[MorId],
) -> FiniteCategory:
    """Convenience constructor from endpoint/label triples."""
    mors = tuple(Mor(i, d, c, lbl) for i, (d, c, lbl) in enumerate(arrows))
    return FiniteCategory(n_objects, mors, dict(composition), tuple(identities))
