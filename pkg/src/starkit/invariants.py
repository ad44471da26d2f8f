"""Graph invariants derived from a complete star-set catalog.

For a main eigenvalue lam these are: the number of star sets, the
maximum/minimum count of main vertices over all star sets (aleph_max
and aleph_min), the histogram of main-set sizes, the per-vertex main
and non-main degrees with their extremes and histograms, and the vertex
classes sharing a common degree together with their induced subgraphs.
All of them are invariant under relabelling, which is what makes them
usable as a non-isomorphism screen.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompleteCatalogError
from .exactla import format_rational
from .graphio import Graph, VertexSet, induced_subgraph
from .starsets import MainClassification, StarSetCatalog, build_tableau


@dataclass(frozen=True)
class DegreeTable:
    """Per-vertex counts: in how many star sets is the vertex main
    (plus) or a non-main member (minus)."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]


@dataclass(frozen=True)
class VertexClass:
    kind: str      # "plus" or "minus"
    degree: int    # the shared main/non-main degree
    vertices: VertexSet
    graph_degrees: tuple[int, ...]  # ordinary degrees, sorted ascending
    induced: Graph


@dataclass(frozen=True)
class InvariantReport:
    value: Fraction
    k_lambda: int
    ss_count: int
    items: tuple[MainClassification, ...]
    aleph_max: int
    aleph_min: int
    main_size_histogram: dict
    max_plus_degree: int
    min_plus_degree: int
    max_minus_degree: int
    min_minus_degree: int
    plus_degree_histogram: dict
    minus_degree_histogram: dict
    degree_table: DegreeTable
    classes: tuple[VertexClass, ...]

    def vertex_class(self, kind: str, degree: int) -> VertexClass:
        for cls in self.classes:
            if cls.kind == kind and cls.degree == degree:
                return cls
        raise KeyError(f"no {kind} class of degree {degree}")


def _require_complete(catalog: StarSetCatalog) -> None:
    if not catalog.complete:
        raise IncompleteCatalogError(
            "catalog was capped; invariants need the complete star-set list")


def aleph(catalog: StarSetCatalog) -> tuple[int, int]:
    """(max, min) number of main vertices over all star sets."""
    _require_complete(catalog)
    sizes = [len(item.main_vertices) for item in catalog.items]
    return max(sizes), min(sizes)


def aleph_via_delta1(catalog: StarSetCatalog) -> tuple[int, int]:
    """Same pair computed through the column-sum reformulation.

    A star vertex is non-main exactly when its body column sums to one,
    so k minus the min/max count of unit column sums over all tableaux
    reproduces aleph.  Kept separate from aleph() as a cross-check; the
    tableaux are rebuilt from scratch here.
    """
    _require_complete(catalog)
    delta1 = []
    for item in catalog.items:
        t = build_tableau(catalog.graph, catalog.value, item.star_set.members)
        sums = [sum(t.body.column(j), Fraction(0)) for j in range(t.body.cols)]
        delta1.append(sum(1 for s in sums if s == 1))
    return catalog.k_lambda - min(delta1), catalog.k_lambda - max(delta1)


def degree_table(catalog: StarSetCatalog) -> DegreeTable:
    """Exact main/non-main degree of every vertex."""
    _require_complete(catalog)
    n = catalog.graph.n
    plus = [0] * n
    minus = [0] * n
    for item in catalog.items:
        for v in item.main_vertices:
            plus[v] += 1
        for v in item.non_main_vertices:
            minus[v] += 1
    return DegreeTable(tuple(plus), tuple(minus))


def report(catalog: StarSetCatalog, graph: Graph) -> InvariantReport:
    """The full invariant report for one eigenvalue of one graph."""
    _require_complete(catalog)
    if graph != catalog.graph:
        raise ValueError("catalog was computed for a different graph")

    amax, amin = aleph(catalog)
    table = degree_table(catalog)
    main_sizes = Counter(len(item.main_vertices) for item in catalog.items)
    plus_hist = Counter(table.plus)
    minus_hist = Counter(table.minus)

    classes = []
    for kind, degs in (("plus", table.plus), ("minus", table.minus)):
        for d in sorted(set(degs)):
            vertices = tuple(v for v in range(graph.n) if degs[v] == d)
            classes.append(VertexClass(
                kind, d, vertices,
                tuple(sorted(graph.degree(v) for v in vertices)),
                induced_subgraph(graph, vertices)))

    return InvariantReport(
        value=catalog.value,
        k_lambda=catalog.k_lambda,
        ss_count=len(catalog.items),
        items=catalog.items,
        aleph_max=amax,
        aleph_min=amin,
        main_size_histogram=dict(sorted(main_sizes.items())),
        max_plus_degree=max(table.plus),
        min_plus_degree=min(table.plus),
        max_minus_degree=max(table.minus),
        min_minus_degree=min(table.minus),
        plus_degree_histogram=dict(sorted(plus_hist.items())),
        minus_degree_histogram=dict(sorted(minus_hist.items())),
        degree_table=table,
        classes=tuple(classes),
    )


# ---------------------------------------------------------------------------
# rendering

def _set_str(graph: Graph, members) -> str:
    return "{" + ", ".join(graph.label(v) for v in members) + "}"


def render_report(rep: InvariantReport, graph: Graph) -> str:
    """ASCII report: membership grid in the style of a star-set table
    (1 = main member, -1 = non-main member, blank = not a member),
    then the named invariants."""
    lines = [f"lambda = {format_rational(rep.value)}  "
             f"(multiplicity {rep.k_lambda}, {rep.ss_count} star sets)"]
    lines.append("star sets:")
    for idx, item in enumerate(rep.items, start=1):
        lines.append(f"  X{idx} = {_set_str(graph, item.star_set.members)}"
                     f"  main: {_set_str(graph, item.main_vertices)}")

    headers = [f"X{idx}" for idx in range(1, rep.ss_count + 1)] + ["d+", "d-"]
    marks: list[list[str]] = []
    for v in range(graph.n):
        row = []
        for item in rep.items:
            if v in item.main_vertices:
                row.append("1")
            elif v in item.star_set.members:
                row.append("-1")
            else:
                row.append("")
        row.append(str(rep.degree_table.plus[v]))
        row.append(str(rep.degree_table.minus[v]))
        marks.append(row)

    width0 = max(len(graph.label(v)) for v in range(graph.n))
    widths = [max([len(headers[j])] + [len(r[j]) for r in marks])
              for j in range(len(headers))]
    lines.append("grid (1 = main member, -1 = non-main member):")

    def fmt(label: str, row: list[str]) -> str:
        return ("  " + label.rjust(width0) + " |"
                + " ".join(x.rjust(widths[j]) for j, x in enumerate(row)))

    lines.append(fmt("", headers))
    for v in range(graph.n):
        lines.append(fmt(graph.label(v), marks[v]))

    def hist_str(h: dict) -> str:
        return "{" + ", ".join(f"{k}: {v}" for k, v in h.items()) + "}"

    lines.append(f"(a) star sets: {rep.ss_count}")
    lines.append(f"(b) aleph_max = {rep.aleph_max}, aleph_min = {rep.aleph_min}")
    lines.append(f"(c) main-size histogram: {hist_str(rep.main_size_histogram)}")
    lines.append(f"(d) max d+ = {rep.max_plus_degree}, min d+ = {rep.min_plus_degree}")
    lines.append(f"(e) max d- = {rep.max_minus_degree}, min d- = {rep.min_minus_degree}")
    lines.append(f"(f) d+ histogram: {hist_str(rep.plus_degree_histogram)}")
    lines.append(f"(g) d- histogram: {hist_str(rep.minus_degree_histogram)}")
    lines.append("(h) degree classes:")
    for cls in rep.classes:
        sign = "+" if cls.kind == "plus" else "-"
        lines.append(
            f"  V{sign}_{cls.degree} = {_set_str(graph, cls.vertices)}"
            f"  degrees {list(cls.graph_degrees)}"
            f"  induced: {cls.induced.n} vertices, {cls.induced.edge_count()} edges")
    return "\n".join(lines)


def report_to_json(rep: InvariantReport, graph: Graph) -> dict:
    return {
        "lambda": format_rational(rep.value),
        "k_lambda": rep.k_lambda,
        "ss_count": rep.ss_count,
        "star_sets": [
            {"X": [graph.label(v) for v in item.star_set.members],
             "main": [graph.label(v) for v in item.main_vertices]}
            for item in rep.items],
        "aleph": {"max": rep.aleph_max, "min": rep.aleph_min},
        "histograms": {
            "main_size": {str(k): v for k, v in rep.main_size_histogram.items()},
            "plus_degree": {str(k): v for k, v in rep.plus_degree_histogram.items()},
            "minus_degree": {str(k): v for k, v in rep.minus_degree_histogram.items()},
        },
        "degree_extremes": {
            "plus": {"max": rep.max_plus_degree, "min": rep.min_plus_degree},
            "minus": {"max": rep.max_minus_degree, "min": rep.min_minus_degree},
        },
        "degree_table": {
            graph.label(v): {"plus": rep.degree_table.plus[v],
                             "minus": rep.degree_table.minus[v]}
            for v in range(graph.n)},
        "classes": [
            {"kind": cls.kind,
             "degree": cls.degree,
             "vertices": [graph.label(v) for v in cls.vertices],
             "graph_degrees": list(cls.graph_degrees),
             "induced": {
                 "n": cls.induced.n,
                 "edges": [[cls.induced.label(u), cls.induced.label(v)]
                           for u, v in cls.induced.edges()]}}
            for cls in rep.classes],
    }
