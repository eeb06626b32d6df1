"""Reversible BCH codes: construction, dimension formulas, and
minimum-distance certification."""

from .bch import BchCode, build_code, encode, is_reversible, membership
from .distance import (
    DistanceCertificate,
    certify,
    conjecture_probe,
    exact_min_distance,
    lift_reversible,
    subgroup_witness,
    subspace_quadruple_witness,
)
from .ffield import GF, FieldElement, build_field
from .qpoly import Poly, minimal_polynomial
from .theory import (
    DimensionReport,
    FormulaNotApplicable,
    bch_lower_bound,
    degree_formula,
    dimension_bounds,
    dimension_closed_form,
    sphere_packing_trigger,
)

__all__ = [
    "BchCode",
    "DimensionReport",
    "DistanceCertificate",
    "FieldElement",
    "FormulaNotApplicable",
    "GF",
    "Poly",
    "bch_lower_bound",
    "build_code",
    "build_field",
    "certify",
    "conjecture_probe",
    "degree_formula",
    "dimension_bounds",
    "dimension_closed_form",
    "encode",
    "exact_min_distance",
    "is_reversible",
    "lift_reversible",
    "membership",
    "minimal_polynomial",
    "sphere_packing_trigger",
    "subgroup_witness",
    "subspace_quadruple_witness",
]

__version__ = "0.1.0"
