"""Exact Schubert calculus for the incidence variety Fl(1, n-1).

Classical K-ring and Chow products, the small quantum K multiplication
table over the Novikov ring Z[Q1,Q2], verification sweeps (positivity,
ring axioms, classical limit, degree bounds), correlator closed forms,
the conjectural closed product formula, and balanced-flag combinatorics.
"""

from .basis import (
    SchubertIndex,
    codim,
    dual_index,
    enumerate_basis,
    from_linear,
    length,
    linear_index,
)
from .kring import chow_product, k_class_product, k_product
from .poly import CurveDegree, NovikovPolynomial, QKClass
from .qkring import (
    MultiplicationTable,
    build_table,
    chevalley_apply,
    degree_bound_check,
    qk_product,
    quantum_correction,
)

__version__ = "0.1.0"

__all__ = [
    "SchubertIndex",
    "NovikovPolynomial",
    "QKClass",
    "CurveDegree",
    "MultiplicationTable",
    "enumerate_basis",
    "linear_index",
    "from_linear",
    "length",
    "codim",
    "dual_index",
    "k_product",
    "k_class_product",
    "chow_product",
    "build_table",
    "qk_product",
    "chevalley_apply",
    "quantum_correction",
    "degree_bound_check",
    "__version__",
]
