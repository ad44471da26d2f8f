"""Exact star-set toolkit for graph spectra.

Computes star sets and star complements of rational eigenvalues,
classifies main/non-main vertices through simplex tableaux, enumerates
all star sets by pivoting, derives the associated graph invariants, and
applies them as a non-isomorphism screen for cospectral graphs.  All
arithmetic is exact.
"""

from .errors import StarkitError
from .exactla import IntPolynomial, RatMatrix, Rational, format_rational, parse_rational
from .graphio import Graph, corpus, from_graph6, induced_subgraph, join, to_graph6
from .spectral import EigenData, SpectrumReport, cospectral, eigen_data, rational_spectrum
from .starsets import (
    MainClassification,
    StarSet,
    StarSetCatalog,
    Tableau,
    build_tableau,
    classify,
    enumerate_star_sets,
    initial_star_set,
    pivot,
    star_partition,
    verify_star_set,
)
from .invariants import DegreeTable, InvariantReport, aleph, aleph_via_delta1, degree_table, report
from .isocheck import IsoVerdict, compare, small_iso
from .constructions import SrgParams, cone_three_eigenvalue_check, srg_params

__version__ = "0.1.0"

__all__ = [
    "StarkitError",
    "Rational",
    "RatMatrix",
    "IntPolynomial",
    "format_rational",
    "parse_rational",
    "Graph",
    "corpus",
    "from_graph6",
    "to_graph6",
    "induced_subgraph",
    "join",
    "EigenData",
    "SpectrumReport",
    "eigen_data",
    "rational_spectrum",
    "cospectral",
    "StarSet",
    "Tableau",
    "MainClassification",
    "StarSetCatalog",
    "initial_star_set",
    "verify_star_set",
    "build_tableau",
    "classify",
    "pivot",
    "enumerate_star_sets",
    "star_partition",
    "DegreeTable",
    "InvariantReport",
    "aleph",
    "aleph_via_delta1",
    "degree_table",
    "report",
    "IsoVerdict",
    "compare",
    "small_iso",
    "SrgParams",
    "srg_params",
    "cone_three_eigenvalue_check",
    "__version__",
]
