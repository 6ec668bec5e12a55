"""Finite categories of morphisms-as-objects, with exhaustive law checking.

The central construction takes a finite category C and builds the
category whose objects are the arrows of C and whose morphisms are
triples (g1, g2, h) with h a hom-set map compatible with the boundary.
On the invertible fragment this carries a second, horizontal composition
forming a double category, and strict monoidal structure on C lifts to
it.  Everything is table-driven and checked by enumeration.
"""

from .category import (
    FiniteCategory,
    Mor,
    is_isomorphism,
    make_category,
    validate_category,
)
from .crossed import (
    CrossedModule,
    conjugation_crossed_module,
    trivial_action_crossed_module,
    verify_crossed_module,
)
from .documents import BUILTINS, SpecDocument, load_spec, parse_document, serialize_document
from .double import (
    BUILTIN_PREDICATES,
    CellPredicate,
    horizontal_compose,
    interchange_suite,
    right_translation,
    verify_enrichment_closure,
    verify_interchange,
)
from .errors import (
    CompositionUndefined,
    DefiningConditionError,
    DocumentError,
    EndpointMismatch,
    FatcatError,
    NotInvertible,
    SizeGuardExceeded,
    SquareDoesNotCommute,
    StructuralError,
    SuiteError,
)
from .fat import (
    FatMorphism,
    FatObject,
    HomMap,
    fat_object,
    identity_cell,
    induced_from_square,
    make_fat_morphism,
    verify_lemma1,
    vertical_compose,
)
from .groups import FiniteGroup, cyclic, group_from_table, symmetric
from .instances import (
    direct_sum_monoidal,
    graded_matrix_groupoid,
    group_as_groupoid,
    matrix_groupoid,
    unitor_toy_monoidal,
)
from .lattice import (
    LatticeConnection,
    biholonomy,
    demo_lattice,
    flat_lattice,
    plaquette_biholonomy,
)
from .monoidal import MonoidalStructure, validate_monoidal, verify_fat_coherence
from .report import Report, Violation
from .suites import SUITES, biholonomy_suite, run_suite

__all__ = [
    "BUILTINS",
    "BUILTIN_PREDICATES",
    "CellPredicate",
    "CompositionUndefined",
    "CrossedModule",
    "DefiningConditionError",
    "DocumentError",
    "EndpointMismatch",
    "FatMorphism",
    "FatObject",
    "FatcatError",
    "FiniteCategory",
    "FiniteGroup",
    "HomMap",
    "LatticeConnection",
    "MonoidalStructure",
    "Mor",
    "NotInvertible",
    "Report",
    "SUITES",
    "SizeGuardExceeded",
    "SpecDocument",
    "SquareDoesNotCommute",
    "StructuralError",
    "SuiteError",
    "Violation",
    "biholonomy",
    "biholonomy_suite",
    "conjugation_crossed_module",
    "cyclic",
    "demo_lattice",
    "direct_sum_monoidal",
    "fat_object",
    "flat_lattice",
    "graded_matrix_groupoid",
    "group_as_groupoid",
    "group_from_table",
    "horizontal_compose",
    "identity_cell",
    "induced_from_square",
    "interchange_suite",
    "is_isomorphism",
    "load_spec",
    "make_category",
    "make_fat_morphism",
    "matrix_groupoid",
    "parse_document",
    "plaquette_biholonomy",
    "right_translation",
    "run_suite",
    "serialize_document",
    "symmetric",
    "trivial_action_crossed_module",
    "unitor_toy_monoidal",
    "validate_category",
    "validate_monoidal",
    "verify_crossed_module",
    "verify_enrichment_closure",
    "verify_fat_coherence",
    "verify_interchange",
    "verify_lemma1",
    "vertical_compose",
]
