"""Signed cycle counts on plane graphs: Kac-Ward and Ihara determinants,
the Feynman identity for the Euler polynomial, and the Witt-type formulas
that read it as a denominator identity."""

from __future__ import annotations

from .counting import CountTable, moebius, theta_tables, witt
from .euler import euler_polynomial
from .generators import generate, parse_builtin
from .graph import EmbeddedGraph, GraphSpec, build_graph, validate_embedding
from .lie import superdimension_table
from .matrices import GraphMatrices, IntegerPolynomial
from .series import RationalSeries
from .zeta import verify_all, zeta_series

__version__ = "0.1.0"

__all__ = [
    "CountTable",
    "EmbeddedGraph",
    "GraphMatrices",
    "GraphSpec",
    "IntegerPolynomial",
    "RationalSeries",
    "build_graph",
    "euler_polynomial",
    "generate",
    "moebius",
    "parse_builtin",
    "superdimension_table",
    "theta_tables",
    "validate_embedding",
    "verify_all",
    "witt",
    "zeta_series",
]
