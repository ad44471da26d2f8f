"""Generators and verifiers for graphs where every star vertex is main.

Cones over suitable strongly regular graphs, and graphs whose star
complement is edgeless (tK1) or complete (Kt), all achieve
aleph_max(lam, G) = |X|.  The checks here verify those statements on
concrete instances through the tableau machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IrrationalSpectrumError,
    NotSRGError,
    PreconditionViolatedError,
)
from .exactla import format_rational
from .graphio import Graph, complement_set, empty_graph, induced_subgraph, join, vertex_set
from . import spectral, starsets


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int           # valency
    lambda_adj: int  # common neighbours of adjacent pairs
    mu_adj: int      # common neighbours of non-adjacent pairs


def srg_params(graph: Graph) -> SrgParams | None:
    """Parameters when the graph is strongly regular, else None.

    Strict sense: regular, at least one edge and one non-edge, and the
    common-neighbour count is constant over adjacent pairs and over
    non-adjacent pairs.  Complete and empty graphs are rejected.
    """
    n = graph.n
    if n < 2 or not graph.is_regular():
        return None
    k = graph.degree(0)
    lambda_adj: int | None = None
    mu_adj: int | None = None
    for u in range(n):
        nu = set(graph.neighbors(u))
        for v in range(u + 1, n):
            common = len(nu & set(graph.neighbors(v)))
            if graph.adj[u][v]:
                if lambda_adj is None:
                    lambda_adj = common
                elif lambda_adj != common:
                    return None
            else:
                if mu_adj is None:
                    mu_adj = common
                elif mu_adj != common:
                    return None
    if lambda_adj is None or mu_adj is None:
        return None  # complete or empty
    params = SrgParams(n, k, lambda_adj, mu_adj)
    if params.k * (params.k - params.lambda_adj - 1) != \
            (params.n - params.k - 1) * params.mu_adj:
        raise AssertionError("feasibility identity failed on counted values")
    return params


def cone_three_eigenvalue_check(graph: Graph) -> bool:
    """Does the cone over this strongly regular graph keep exactly three
    distinct eigenvalues?

    For a strongly regular graph with spectrum {nu, mu^a, lam^b} this
    happens exactly when lam*(nu - lam) = -n.  When the identity holds
    the constructed cone is verified outright: three distinct rational
    eigenvalues, the smallest one's multiplicity grown by one, the
    middle one still non-main, and the main eigenvalues being exactly
    the new largest one and lam.
    """
    params = srg_params(graph)
    if params is None:
        raise NotSRGError("input is not strongly regular in the strict sense")
    spec = spectral.rational_spectrum(graph)
    if spec.residual_degree:
        raise IrrationalSpectrumError(
            "the strongly regular graph has irrational eigenvalues")
    if len(spec.entries) != 3:
        raise NotSRGError(
            f"expected exactly 3 distinct eigenvalues, found {len(spec.entries)}")
    nu, mu, lam = (e.value for e in spec.entries)
    if lam * (nu - lam) != -params.n:
        return False

    cone = join(empty_graph(1), graph)
    cone_spec = spectral.rational_spectrum(cone)
    if cone_spec.residual_degree or len(cone_spec.entries) != 3:
        raise AssertionError("cone spectrum shape violates the construction")
    rho_e, mu_e, lam_e = cone_spec.entries
    if (mu_e.value, lam_e.value) != (mu, lam):
        raise AssertionError("cone kept different middle/smallest eigenvalues")
    if lam_e.multiplicity != spec.entry(lam).multiplicity + 1:
        raise AssertionError("smallest eigenvalue multiplicity did not grow by one")
    if mu_e.multiplicity != spec.entry(mu).multiplicity:
        raise AssertionError("middle eigenvalue multiplicity changed")
    if set(cone_spec.main_values()) != {rho_e.value, lam}:
        raise AssertionError("cone main eigenvalues are not {rho, lam}")
    return True


def verify_aleph_equals_starset(graph: Graph, value: Fraction,
                                cap: int | None = None) -> bool:
    """True when some star set of the eigenvalue has every vertex main,
    i.e. aleph_max equals the eigenvalue's multiplicity."""
    catalog = starsets.enumerate_star_sets(graph, Fraction(value), cap=cap)
    return any(item.main_vertices == item.star_set.members
               for item in catalog.items)


def _require(cond: bool, hypothesis: str) -> None:
    if not cond:
        raise PreconditionViolatedError(f"hypothesis violated: {hypothesis}")


def check_tk1_proposition(graph: Graph, value: Fraction, co_star) -> bool:
    """Edgeless star complement: the eigenvalue must be main and every
    star vertex main, provided lam is not 0 or -1.

    lam = 0 is impossible for an edgeless complement (0 is its whole
    spectrum) and lam = -1 is the single excluded case in which a star
    vertex can fail to be main.
    """
    value = Fraction(value)
    co = vertex_set(co_star, graph)
    _require(induced_subgraph(graph, co).edge_count() == 0,
             "the star complement must be edgeless")
    _require(value != 0, "lam must avoid the complement's spectrum, so lam != 0")
    _require(value != -1, "lam = -1 is excluded")
    members = complement_set(co, graph)
    _require(starsets.verify_star_set(graph, value, members),
             f"the complement of the given set must be a star set of "
             f"{format_rational(value)}")

    is_main = spectral.eigen_data(graph, value).is_main
    classification = starsets.classify(starsets.build_tableau(graph, value, members))
    return is_main and classification.main_vertices == members


def check_kt_proposition(graph: Graph, value: Fraction, co_star) -> bool:
    """Complete star complement on t >= 2 vertices: for a main
    eigenvalue lam != 0 every star vertex is main."""
    value = Fraction(value)
    co = vertex_set(co_star, graph)
    t = len(co)
    sub = induced_subgraph(graph, co)
    _require(t >= 2, "the star complement must have at least 2 vertices")
    _require(sub.edge_count() == t * (t - 1) // 2,
             "the star complement must be complete")
    _require(value != 0, "lam = 0 is excluded")
    members = complement_set(co, graph)
    _require(starsets.verify_star_set(graph, value, members),
             f"the complement of the given set must be a star set of "
             f"{format_rational(value)}")
    _require(spectral.eigen_data(graph, value).is_main,
             "lam must be a main eigenvalue of the graph")

    classification = starsets.classify(starsets.build_tableau(graph, value, members))
    return classification.main_vertices == members
