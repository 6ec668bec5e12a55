"""Mapping document kinds to verification suites.

``run_suite`` is the single entry point used by the command line: it
checks that the requested suite applies to the document kind, runs it,
and stamps the elapsed wall time on the report.
"""

from __future__ import annotations

import time

from .category import validate_category
from .crossed import verify_crossed_module
from .documents import SpecDocument
from .double import (
    BUILTIN_PREDICATES,
    interchange_suite,
    verify_enrichment_closure,
)
from .errors import SuiteError
from .fat import verify_lemma1
from .lattice import LatticeConnection, biholonomy, plaquette_biholonomy
from .monoidal import validate_monoidal, verify_fat_coherence
from .report import Report

DEFAULT_MAX_GRIDS = 2_000_000


def biholonomy_suite(L: LatticeConnection) -> Report:
    """Tabulate the rectangle transports g(t, s) for the whole lattice.

    For abelian structure groups the suite also checks, as a law, that
    each rectangle transport equals the product of the unit-square
    transports it encloses.
    """
    rep = Report(suite="biholonomy")
    G = L.group
    table = []
    for s in range(L.S + 1):
        row = []
        for t in range(L.T + 1):
            rep.checks += 1
            row.append(biholonomy(L, t, s))
        table.append(row)
    abelian = G.is_abelian()
    if abelian:
        for s in range(L.S + 1):
            for t in range(L.T + 1):
                rep.checks += 1
                acc = G.identity
                for j in range(s):
                    for i in range(t):
                        acc = G.mul[plaquette_biholonomy(L, i, j)][acc]
                if acc != table[s][t]:
                    rep.add(
                        "biholonomy.plaquette-product",
                        (t, s),
                        f"g({t},{s})={G.labels[table[s][t]]} but plaquette "
                        f"product is {G.labels[acc]}",
                    )
    rep.data = {
        "group": G.name,
        "abelian": abelian,
        "table": table,
        "labels": [[G.labels[g] for g in row] for row in table],
    }
    return rep


SUITES = (
    "axioms",
    "lemma1",
    "interchange",
    "enrichment",
    "coherence-base",
    "coherence-fat",
    "crossed-module",
    "biholonomy",
)

_CATEGORY_SUITES = {"axioms", "lemma1", "interchange", "enrichment"}


def run_suite(
    doc: SpecDocument,
    suite: str,
    *,
    max_size: int | None = None,
    predicate: str = "translation-pair",
) -> Report:
    if suite not in SUITES:
        raise SuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    started = time.perf_counter()

    if suite in _CATEGORY_SUITES:
        if doc.kind not in ("category", "monoidal"):
            raise SuiteError(f"suite {suite!r} needs a category, got {doc.kind!r}")
        C = doc.base_category()
        if suite == "axioms":
            rep = validate_category(C)
        elif suite == "lemma1":
            rep = verify_lemma1(C)
        elif suite == "interchange":
            rep = interchange_suite(C, max_grids=max_size or DEFAULT_MAX_GRIDS)
        else:
            if predicate not in BUILTIN_PREDICATES:
                raise SuiteError(
                    f"unknown predicate {predicate!r}; choose from "
                    f"{', '.join(sorted(BUILTIN_PREDICATES))}"
                )
            rep = verify_enrichment_closure(C, BUILTIN_PREDICATES[predicate])
    elif suite in ("coherence-base", "coherence-fat"):
        if doc.kind != "monoidal":
            raise SuiteError(f"suite {suite!r} needs a monoidal document, got {doc.kind!r}")
        assert doc.monoidal is not None
        if suite == "coherence-base":
            rep = validate_monoidal(doc.monoidal)
        else:
            rep = verify_fat_coherence(doc.monoidal)
    elif suite == "crossed-module":
        if doc.kind != "crossed_module":
            raise SuiteError(
                f"suite 'crossed-module' needs a crossed_module document, got {doc.kind!r}"
            )
        assert doc.crossed is not None
        rep = verify_crossed_module(doc.crossed)
    else:
        if doc.kind != "lattice":
            raise SuiteError(f"suite 'biholonomy' needs a lattice document, got {doc.kind!r}")
        assert doc.lattice is not None
        rep = biholonomy_suite(doc.lattice)

    rep.elapsed_ms = (time.perf_counter() - started) * 1000.0
    return rep
