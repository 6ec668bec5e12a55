"""Loading, naming and serializing instance documents.

Documents are JSON: a top-level ``kind`` tag (category, monoidal,
crossed_module, lattice) and a kind-specific body in which objects and
arrows are referenced by string name; names are mapped to dense ids at
load time.  A registry of builtin instances is addressable as
``builtin:NAME`` (or just ``NAME``) without a file.

Document equality is extensional: two documents are equal when their
serialized bodies coincide.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .category import FiniteCategory, Mor
from .crossed import (
    CrossedModule,
    conjugation_crossed_module,
    trivial_action_crossed_module,
)
from .errors import DocumentError, FatcatError
from .groups import FiniteGroup, cyclic, group_from_table, symmetric
from .instances import (
    corrupt_associator,
    direct_sum_monoidal,
    group_as_groupoid,
    matrix_groupoid,
    unitor_toy_monoidal,
)
from .lattice import LatticeConnection, demo_lattice, flat_lattice
from .monoidal import MonoidalStructure

KINDS = ("category", "monoidal", "crossed_module", "lattice")


@dataclass(eq=False)
class SpecDocument:
    kind: str
    source: str = field(compare=False)
    category: FiniteCategory | None = None
    monoidal: MonoidalStructure | None = None
    crossed: CrossedModule | None = None
    lattice: LatticeConnection | None = None
    obj_names: tuple[str, ...] | None = None

    def base_category(self) -> FiniteCategory:
        if self.kind == "category":
            assert self.category is not None
            return self.category
        if self.kind == "monoidal":
            assert self.monoidal is not None
            return self.monoidal.base
        raise DocumentError(f"document kind {self.kind!r} has no base category")

    def to_body(self) -> dict:
        return _document_body(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, SpecDocument) and self.to_body() == other.to_body()


# -- serialization ----------------------------------------------------------


def _object_names(C: FiniteCategory, given: tuple[str, ...] | None) -> list[str]:
    if given is not None and len(given) == C.n_objects:
        return list(given)
    return [f"o{x}" for x in range(C.n_objects)]


def _morphism_names(C: FiniteCategory) -> list[str]:
    labels = [m.name() for m in C.morphisms]
    if len(set(labels)) != len(labels):
        labels = [f"m{i}" for i in range(len(labels))]
    return labels


def _category_body(C: FiniteCategory, obj_names) -> dict:
    objs = _object_names(C, obj_names)
    mors = _morphism_names(C)
    return {
        "objects": objs,
        "morphisms": [
            {"name": mors[m.id], "dom": objs[m.dom], "cod": objs[m.cod]}
            for m in C.morphisms
        ],
        "compose": [
            {"g": mors[g], "f": mors[f], "result": mors[r]}
            for (g, f), r in sorted(C.composition.items())
        ],
        "identities": {objs[x]: mors[e] for x, e in enumerate(C.identities)},
    }


def _group_body(G: FiniteGroup) -> dict:
    return {
        "name": G.name,
        "mul": [list(row) for row in G.mul],
        "labels": list(G.labels),
    }


def _document_body(doc: SpecDocument) -> dict:
    if doc.kind == "category":
        C = doc.category
        assert C is not None
        return {"kind": "category", **_category_body(C, doc.obj_names)}
    if doc.kind == "monoidal":
        M = doc.monoidal
        assert M is not None
        C = M.base
        objs = _object_names(C, doc.obj_names)
        mors = _morphism_names(C)
        body = {"kind": "monoidal", **_category_body(C, doc.obj_names)}
        body["unit"] = objs[M.unit]
        body["tensor_obj"] = {
            objs[a]: {objs[b]: objs[M.tensor_obj[(a, b)]] for b in C.objects()}
            for a in C.objects()
        }
        body["tensor_mor"] = {
            mors[f]: {mors[g]: mors[M.tensor_mor[(f, g)]] for g in range(C.n_morphisms)}
            for f in range(C.n_morphisms)
        }
        body["assoc"] = {
            objs[a]: {
                objs[b]: {objs[c]: mors[M.assoc[(a, b, c)]] for c in C.objects()}
                for b in C.objects()
            }
            for a in C.objects()
        }
        body["lunit"] = {objs[a]: mors[M.lunit[a]] for a in C.objects()}
        body["runit"] = {objs[a]: mors[M.runit[a]] for a in C.objects()}
        return body
    if doc.kind == "crossed_module":
        CM = doc.crossed
        assert CM is not None
        return {
            "kind": "crossed_module",
            "G": _group_body(CM.G),
            "H": _group_body(CM.H),
            "tau": list(CM.tau),
            "alpha": [list(row) for row in CM.alpha],
        }
    if doc.kind == "lattice":
        L = doc.lattice
        assert L is not None
        return {
            "kind": "lattice",
            "group": _group_body(L.group),
            "T": L.T,
            "S": L.S,
            "horiz": [list(row) for row in L.horiz],
            "vert": [list(row) for row in L.vert],
        }
    raise DocumentError(f"unknown document kind {doc.kind!r}")


def serialize_document(doc: SpecDocument) -> str:
    return json.dumps(doc.to_body(), sort_keys=True, indent=2) + "\n"


# -- parsing ----------------------------------------------------------------


def _resolve(table: dict[str, int], name, what: str) -> int:
    if not isinstance(name, str) or name not in table:
        raise DocumentError(f"dangling {what} reference: {name!r}")
    return table[name]


def _parse_category(body: dict) -> tuple[FiniteCategory, tuple[str, ...]]:
    try:
        obj_list = list(body["objects"])
        mor_list = list(body["morphisms"])
        comp_list = list(body["compose"])
        id_map = dict(body["identities"])
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed category body: {exc}") from None
    if len(set(obj_list)) != len(obj_list):
        raise DocumentError("duplicate object names")
    objs = {name: i for i, name in enumerate(obj_list)}
    mors: list[Mor] = []
    mor_ids: dict[str, int] = {}
    for i, entry in enumerate(mor_list):
        try:
            name, dom, cod = entry["name"], entry["dom"], entry["cod"]
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed morphism entry {i}: {exc}") from None
        if name in mor_ids:
            raise DocumentError(f"duplicate morphism name {name!r}")
        mors.append(
            Mor(i, _resolve(objs, dom, "object"), _resolve(objs, cod, "object"), name)
        )
        mor_ids[name] = i
    comp: dict[tuple[int, int], int] = {}
    for entry in comp_list:
        try:
            g, f, r = entry["g"], entry["f"], entry["result"]
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"malformed compose entry: {exc}") from None
        key = (_resolve(mor_ids, g, "morphism"), _resolve(mor_ids, f, "morphism"))
        if key in comp:
            raise DocumentError(f"duplicate compose entry ({g}, {f})")
        comp[key] = _resolve(mor_ids, r, "morphism")
    identities = []
    for name in obj_list:
        if name not in id_map:
            raise DocumentError(f"missing identity for object {name!r}")
        identities.append(_resolve(mor_ids, id_map[name], "morphism"))
    C = FiniteCategory(len(obj_list), tuple(mors), comp, tuple(identities))
    return C, tuple(obj_list)


def _parse_monoidal(body: dict) -> tuple[MonoidalStructure, tuple[str, ...]]:
    C, obj_names = _parse_category(body)
    objs = {name: i for i, name in enumerate(obj_names)}
    mors = {m.label: m.id for m in C.morphisms}
    try:
        unit = _resolve(objs, body["unit"], "object")
        tensor_obj = {
            (objs[a], objs[b]): _resolve(objs, r, "object")
            for a, row in body["tensor_obj"].items()
            for b, r in row.items()
        }
        tensor_mor = {
            (mors[f], mors[g]): _resolve(mors, r, "morphism")
            for f, row in body["tensor_mor"].items()
            for g, r in row.items()
        }
        assoc = {
            (objs[a], objs[b], objs[c]): _resolve(mors, r, "morphism")
            for a, plane in body["assoc"].items()
            for b, row in plane.items()
            for c, r in row.items()
        }
        lunit = {objs[a]: _resolve(mors, r, "morphism") for a, r in body["lunit"].items()}
        runit = {objs[a]: _resolve(mors, r, "morphism") for a, r in body["runit"].items()}
    except KeyError as exc:
        raise DocumentError(f"malformed monoidal body: missing {exc}") from None
    M = MonoidalStructure(C, tensor_obj, tensor_mor, unit, assoc, lunit, runit)
    return M, obj_names


def _parse_group(body: dict, what: str) -> FiniteGroup:
    try:
        return group_from_table(
            body.get("name", what), body["mul"], body.get("labels")
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed group {what}: {exc}") from None
    except FatcatError as exc:
        raise DocumentError(f"group {what} invalid: {exc}") from None


GROUPS: dict[str, callable] = {
    "z1": lambda: cyclic(1),
    "z2": lambda: cyclic(2),
    "z3": lambda: cyclic(3),
    "z4": lambda: cyclic(4),
    "s3": lambda: symmetric(3),
}


def _parse_lattice(body: dict) -> LatticeConnection:
    group = body.get("group")
    if isinstance(group, str):
        if group not in GROUPS:
            raise DocumentError(f"unknown builtin group {group!r}")
        G = GROUPS[group]()
    elif isinstance(group, dict):
        G = _parse_group(group, "lattice group")
    else:
        raise DocumentError("lattice body needs a 'group' entry")
    try:
        return LatticeConnection(
            G,
            int(body["T"]),
            int(body["S"]),
            tuple(tuple(int(x) for x in row) for row in body["horiz"]),
            tuple(tuple(int(x) for x in row) for row in body["vert"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed lattice body: {exc}") from None


def parse_document(text: str, source: str = "<string>") -> SpecDocument:
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"{source}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(body, dict) or body.get("kind") not in KINDS:
        raise DocumentError(
            f"{source}: document must have a 'kind' tag in {KINDS}"
        )
    kind = body["kind"]
    if kind == "category":
        C, obj_names = _parse_category(body)
        return SpecDocument("category", source, category=C, obj_names=obj_names)
    if kind == "monoidal":
        M, obj_names = _parse_monoidal(body)
        return SpecDocument("monoidal", source, monoidal=M, obj_names=obj_names)
    if kind == "crossed_module":
        CM = CrossedModule(
            _parse_group(body.get("G", {}), "G"),
            _parse_group(body.get("H", {}), "H"),
            tuple(body.get("tau", ())),
            tuple(tuple(row) for row in body.get("alpha", ())),
        )
        return SpecDocument("crossed_module", source, crossed=CM)
    return SpecDocument("lattice", source, lattice=_parse_lattice(body))


# -- builtin instances ------------------------------------------------------


def _group_doc(name: str, G: FiniteGroup) -> SpecDocument:
    return SpecDocument(
        "category", f"builtin:{name}", category=group_as_groupoid(G), obj_names=("*",)
    )


def _dsum_corrupt() -> SpecDocument:
    M = direct_sum_monoidal(2, 2)
    C = M.base
    bad = next(m for m in C.hom_set(2, 2) if m != C.identities[2])
    return SpecDocument(
        "monoidal",
        "builtin:dsum2-corrupt",
        monoidal=corrupt_associator(M, (2, 0, 0), bad),
        obj_names=("d0", "d1", "d2", "top"),
    )


BUILTINS: dict[str, callable] = {
    "z1": lambda: _group_doc("z1", cyclic(1)),
    "z2": lambda: _group_doc("z2", cyclic(2)),
    "z3": lambda: _group_doc("z3", cyclic(3)),
    "z4": lambda: _group_doc("z4", cyclic(4)),
    "s3": lambda: _group_doc("s3", symmetric(3)),
    "gl2f2": lambda: SpecDocument(
        "category",
        "builtin:gl2f2",
        category=matrix_groupoid(2, 2, 2),
        obj_names=("p", "q"),
    ),
    "dsum2": lambda: SpecDocument(
        "monoidal",
        "builtin:dsum2",
        monoidal=direct_sum_monoidal(2, 2),
        obj_names=("d0", "d1", "d2", "top"),
    ),
    "dsum2-corrupt": _dsum_corrupt,
    "z4unitor": lambda: SpecDocument(
        "monoidal",
        "builtin:z4unitor",
        monoidal=unitor_toy_monoidal(4, 1),
        obj_names=("*",),
    ),
    "cm-conj-s3": lambda: SpecDocument(
        "crossed_module",
        "builtin:cm-conj-s3",
        crossed=conjugation_crossed_module(symmetric(3)),
    ),
    "cm-trivial-s3": lambda: SpecDocument(
        "crossed_module",
        "builtin:cm-trivial-s3",
        crossed=trivial_action_crossed_module(cyclic(2), symmetric(3)),
    ),
    "cm-trivial-z4": lambda: SpecDocument(
        "crossed_module",
        "builtin:cm-trivial-z4",
        crossed=trivial_action_crossed_module(cyclic(2), cyclic(4)),
    ),
    "lat-flat-z4": lambda: SpecDocument(
        "lattice", "builtin:lat-flat-z4", lattice=flat_lattice(cyclic(4), 3, 3)
    ),
    "lat-demo-z4": lambda: SpecDocument(
        "lattice", "builtin:lat-demo-z4", lattice=demo_lattice(cyclic(4), 3, 3)
    ),
    "lat-demo-s3": lambda: SpecDocument(
        "lattice", "builtin:lat-demo-s3", lattice=demo_lattice(symmetric(3), 2, 2)
    ),
}


def load_spec(spec: str) -> SpecDocument:
    """Load a document from a builtin name or a file path."""
    name = spec[len("builtin:") :] if spec.startswith("builtin:") else spec
    if name in BUILTINS:
        return BUILTINS[name]()
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return parse_document(fh.read(), source=spec)
    raise DocumentError(f"{spec!r} is neither a builtin instance nor a readable file")
