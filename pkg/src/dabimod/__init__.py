"""Exact DA-bimodule calculus over the two-strand bordered algebra B(2).

The package implements the algebra B(2) (quiver path algebras over F2
with U-variables), generic DA bimodules in matrix notation with a
relation checker, box tensor products, and the built-in crossing
bimodules P, N with the 2-action bimodules E1, E2, together with
isomorphism certificates showing that the crossings commute with both
2-actions.
"""

from .algebra import (
    AlgebraElement,
    BasisMonomial,
    enumerate_basis,
    intrinsic_degree,
    monomial,
    multiply_basis,
    render_monomial,
    unit,
)
from .boxtensor import (
    ConcreteDABimodule,
    check_concrete,
    diff_concrete,
    instantiate_reference,
    primary_product,
    secondary_product,
)
from .corpus import (
    CORPUS_IDS,
    DISPLAY_CORRECTIONS,
    PRODUCT_PAIRS,
    build,
    is_zero_boxsquare,
    reference_product,
    schema_cells_equal,
    symmetry_transform,
)
from .engine import (
    ConcreteTerm,
    DABimodule,
    DAGenerator,
    check_da_relations,
    evaluate_delta,
    infer_bidegrees,
    instantiate_cell,
    scan_bidegrees,
)
from .rewrite import rewrite_product, rewrite_word
from .schema import MalformedSchemaError, TermSchema, schema
from .verify import (
    ReproductionReport,
    find_isomorphism,
    run_reproduction,
    verify_one_morphism,
)

__all__ = [
    "AlgebraElement",
    "BasisMonomial",
    "CORPUS_IDS",
    "ConcreteDABimodule",
    "ConcreteTerm",
    "DABimodule",
    "DAGenerator",
    "DISPLAY_CORRECTIONS",
    "MalformedSchemaError",
    "PRODUCT_PAIRS",
    "ReproductionReport",
    "TermSchema",
    "build",
    "check_concrete",
    "check_da_relations",
    "diff_concrete",
    "enumerate_basis",
    "evaluate_delta",
    "find_isomorphism",
    "infer_bidegrees",
    "instantiate_cell",
    "instantiate_reference",
    "intrinsic_degree",
    "is_zero_boxsquare",
    "monomial",
    "multiply_basis",
    "primary_product",
    "reference_product",
    "render_monomial",
    "rewrite_product",
    "rewrite_word",
    "run_reproduction",
    "scan_bidegrees",
    "schema",
    "schema_cells_equal",
    "secondary_product",
    "symmetry_transform",
    "unit",
    "verify_one_morphism",
]

__version__ = "0.1.0"
