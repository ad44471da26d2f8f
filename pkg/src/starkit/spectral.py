"""Eigenvalue-level facts: multiplicity, exact eigenbasis, mainness.

An eigenvalue is main when its eigenspace is not orthogonal to the
all-ones vector.  Only rational eigenvalues are handled exactly; the
irrational part of a spectrum is reported by its total degree and
refused by everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotAnEigenvalueError
from .exactla import RatMatrix, char_poly, nullspace_basis, rational_roots
from .graphio import Graph


@dataclass(frozen=True)
class EigenData:
    value: Fraction
    multiplicity: int
    eigenbasis: RatMatrix  # n x multiplicity; columns span the eigenspace
    is_main: bool


@dataclass(frozen=True)
class SpectrumReport:
    entries: tuple[EigenData, ...]  # sorted by eigenvalue, descending
    residual_degree: int            # degree of the factor with no rational roots

    def rational_values(self) -> tuple[Fraction, ...]:
        return tuple(e.value for e in self.entries)

    def main_values(self) -> tuple[Fraction, ...]:
        return tuple(e.value for e in self.entries if e.is_main)

    def entry(self, value: Fraction) -> EigenData:
        for e in self.entries:
            if e.value == value:
                return e
        raise NotAnEigenvalueError(
            f"{value} is not a rational eigenvalue of this graph")


def _shifted_adjacency(graph: Graph, value: Fraction) -> RatMatrix:
    value = Fraction(value)
    a = graph.adjacency_matrix()
    return a - RatMatrix.identity(graph.n).scale(value)


@lru_cache(maxsize=None)
def eigen_data(graph: Graph, value: Fraction) -> EigenData:
    """Exact multiplicity, eigenbasis, and mainness of one eigenvalue."""
    value = Fraction(value)
    basis = nullspace_basis(_shifted_adjacency(graph, value))
    if not basis:
        raise NotAnEigenvalueError(
            f"{value} is not an eigenvalue of the graph")
    eigenbasis = RatMatrix.from_rows(basis).transpose()
    is_main = any(sum(vec) != 0 for vec in basis)
    return EigenData(value, len(basis), eigenbasis, is_main)


@lru_cache(maxsize=None)
def adjacency_char_poly(graph: Graph, convention: str = "monic"):
    return char_poly(graph.adjacency_matrix(), convention=convention)


@lru_cache(maxsize=None)
def rational_spectrum(graph: Graph) -> SpectrumReport:
    """All rational eigenvalues with multiplicity and mainness."""
    if graph.n == 0:
        return SpectrumReport((), 0)
    roots = rational_roots(adjacency_char_poly(graph))
    entries = []
    covered = 0
    for value, mult in roots:
        data = eigen_data(graph, value)
        # Symmetric matrices are diagonalizable, so geometric and
        # algebraic multiplicities must agree.
        if data.multiplicity != mult:
            raise AssertionError("multiplicity mismatch on a symmetric matrix")
        entries.append(data)
        covered += mult
    return SpectrumReport(tuple(entries), graph.n - covered)


def multiplicity(graph: Graph, value: Fraction) -> int:
    """Multiplicity of value as an eigenvalue (0 when it is not one)."""
    try:
        return eigen_data(graph, Fraction(value)).multiplicity
    except NotAnEigenvalueError:
        return 0


def cospectral(g: Graph, h: Graph) -> bool:
    """True when the characteristic polynomials agree exactly."""
    return adjacency_char_poly(g) == adjacency_char_poly(h)
