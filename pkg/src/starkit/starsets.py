"""Star sets, star complements, simplex tableaux, and main vertices.

A star set X for an eigenvalue lam of a graph G is a vertex set whose
size equals the multiplicity of lam such that lam is not an eigenvalue
of G - X.  The co-star block B = C - lam*I (C = adjacency of the
complement) is then invertible, and the simplex-style tableau

        rows  = co-star vertices (basic)
        cols  = star vertices (non-basic)
        body  = B^{-1} N          (N = complement-to-star adjacency)
        cost  = column sums of body, minus one

drives everything: non-zero cost entries mark the main vertices of X,
non-zero body entries mark the legal single-vertex exchanges, and the
exchange walk reaches every star set of lam.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import (
    CapExceededError,
    IsolatedVertexError,
    NotAnEigenvalueError,
    NotAStarSetError,
    UnsupportedSpectrumError,
    ZeroPivotError,
)
from .exactla import RatMatrix, format_rational, rank, rref, solve
from .graphio import Graph, VertexSet, complement_set, vertex_set
from . import spectral


@dataclass(frozen=True)
class StarSet:
    value: Fraction
    members: VertexSet
    co_star: VertexSet


@dataclass(frozen=True)
class Tableau:
    graph: Graph
    value: Fraction
    basic: tuple[int, ...]     # co-star vertices labelling the rows
    nonbasic: tuple[int, ...]  # star vertices labelling the columns
    body: RatMatrix
    reduced_cost: tuple[Fraction, ...]

    def star_set(self) -> StarSet:
        return StarSet(self.value, tuple(sorted(self.nonbasic)),
                       tuple(sorted(self.basic)))

    def entry(self, u: int, v: int) -> Fraction:
        """Body entry addressed by vertices (row u in the co-star set,
        column v in the star set)."""
        return self.body.at(self.basic.index(u), self.nonbasic.index(v))

    def cost(self, v: int) -> Fraction:
        return self.reduced_cost[self.nonbasic.index(v)]

    def canonical(self) -> Tableau:
        """Same tableau with rows and columns in ascending vertex order."""
        row_order = sorted(range(len(self.basic)), key=lambda i: self.basic[i])
        col_order = sorted(range(len(self.nonbasic)), key=lambda j: self.nonbasic[j])
        body = RatMatrix.from_rows(
            [[self.body.at(i, j) for j in col_order] for i in row_order])
        return Tableau(
            self.graph, self.value,
            tuple(self.basic[i] for i in row_order),
            tuple(self.nonbasic[j] for j in col_order),
            body,
            tuple(self.reduced_cost[j] for j in col_order))


@dataclass(frozen=True)
class MainClassification:
    star_set: StarSet
    main_vertices: VertexSet

    @property
    def non_main_vertices(self) -> VertexSet:
        main = set(self.main_vertices)
        return tuple(v for v in self.star_set.members if v not in main)


@dataclass(frozen=True)
class StarSetCatalog:
    graph: Graph
    value: Fraction
    k_lambda: int
    items: tuple[MainClassification, ...]  # sorted by star-set members
    complete: bool

    def star_sets(self) -> tuple[VertexSet, ...]:
        return tuple(item.star_set.members for item in self.items)


def _require_no_isolated(graph: Graph, what: str) -> None:
    bad = graph.isolated_vertices()
    if bad:
        raise IsolatedVertexError(
            f"graph has isolated vertices {bad}; {what} is only guaranteed "
            f"for graphs without them")


def _star_blocks(graph: Graph, value: Fraction, members: VertexSet):
    """(co_star, N, B) for a candidate star set.

    Shapes stay correct when the co-star set is empty: N is 0 x |X| and
    B is 0 x 0, so the block identity degenerates gracefully.
    """
    co = complement_set(members, graph)
    a = graph.adj
    n_block = RatMatrix(len(co), len(members), tuple(
        Fraction(a[u][v]) for u in co for v in members))
    b_block = RatMatrix(len(co), len(co), tuple(
        Fraction(a[u][v]) - (value if u == v else 0) for u in co for v in co))
    return co, n_block, b_block


def _solve_tableau(graph: Graph, value: Fraction, members: VertexSet):
    """(basic, nonbasic, body) or None when the co-star block is singular."""
    co, n_block, b_block = _star_blocks(graph, value, members)
    body = solve(b_block, n_block)
    if body is None:
        return None
    return co, members, body


def initial_star_set(graph: Graph, value: Fraction) -> StarSet:
    """Deterministic star set read off the exact eigenbasis.

    Row-reducing the transposed eigenbasis yields an identity block; the
    pivot columns name vertices whose rows of the eigenbasis are
    linearly independent, which is exactly the star-set criterion.
    """
    value = Fraction(value)
    data = spectral.eigen_data(graph, value)  # raises NotAnEigenvalueError
    _, pivots, _ = rref(data.eigenbasis.transpose())
    members = tuple(pivots)
    if len(members) != data.multiplicity:
        raise AssertionError("eigenbasis rows lost rank; exact arithmetic bug")
    return StarSet(value, members, complement_set(members, graph))


def verify_star_set(graph: Graph, value: Fraction, members) -> bool:
    """Exact star-set test.

    Two equivalent criteria are evaluated: the size/spectrum one
    (|X| equals the multiplicity and lam is not an eigenvalue of G - X)
    and the block identity A_X - lam*I = N^T B^{-1} N.  They must agree;
    disagreement would mean an arithmetic bug.
    """
    value = Fraction(value)
    members = vertex_set(members, graph)
    k = spectral.multiplicity(graph, value)
    solved = _solve_tableau(graph, value, members)
    by_spectrum = k > 0 and len(members) == k and solved is not None

    by_identity = False
    if solved is not None:
        co, _, body = solved
        _, n_block, _ = _star_blocks(graph, value, members)
        product = n_block.transpose() @ body
        a = graph.adj
        target = RatMatrix.from_rows(
            [[a[u][v] - (value if u == v else 0) for v in members]
             for u in members])
        by_identity = product == target

    if by_spectrum != by_identity:
        raise AssertionError("star-set criteria disagree; exact arithmetic bug")
    return by_spectrum


def build_tableau(graph: Graph, value: Fraction, members) -> Tableau:
    """Tableau for a verified star set; rows and columns ascend."""
    value = Fraction(value)
    members = vertex_set(members, graph)
    if not verify_star_set(graph, value, members):
        raise NotAStarSetError(
            f"{members} is not a star set of {format_rational(value)}")
    co, nonbasic, body = _solve_tableau(graph, value, members)
    cost = tuple(sum(body.column(j), Fraction(0)) - 1
                 for j in range(body.cols))
    return Tableau(graph, value, co, nonbasic, body, cost)


def classify(tableau: Tableau) -> MainClassification:
    """Main vertices of the star set: non-zero reduced-cost entries."""
    main = tuple(sorted(v for j, v in enumerate(tableau.nonbasic)
                        if tableau.reduced_cost[j] != 0))
    return MainClassification(tableau.star_set(), main)


def eigenvalue_is_main_via_tableau(tableau: Tableau) -> bool:
    """Eigenvalue-level mainness read from the reduced cost row.

    Must agree with the eigenbasis test in spectral.eigen_data; the
    equivalence needs a graph without isolated vertices.
    """
    _require_no_isolated(tableau.graph, "the reduced-cost mainness test")
    return any(c != 0 for c in tableau.reduced_cost)


def pivot(tableau: Tableau, u: int, v: int) -> Tableau:
    """Exchange co-star vertex u (a row) with star vertex v (a column).

    The standard simplex pivot transform; the new tableau belongs to the
    star set (X minus v) plus u.  Row and column labels swap in place so
    a pivot chain can be read positionally.
    """
    try:
        i = tableau.basic.index(u)
    except ValueError:
        raise ValueError(f"vertex {u} is not in the co-star set") from None
    try:
        j = tableau.nonbasic.index(v)
    except ValueError:
        raise ValueError(f"vertex {v} is not in the star set") from None
    p = tableau.body.at(i, j)
    if p == 0:
        raise ZeroPivotError(
            f"tableau entry at ({u}, {v}) is zero; not a legal exchange")

    rows = tableau.body.to_rows()
    m, k = tableau.body.rows, tableau.body.cols
    inv = 1 / p
    pivot_row = rows[i]
    new_rows = []
    for r in range(m):
        if r == i:
            new_rows.append([inv * x if c != j else inv
                             for c, x in enumerate(pivot_row)])
        else:
            f = rows[r][j]
            if f == 0:
                new_rows.append([x if c != j else Fraction(0)
                                 for c, x in enumerate(rows[r])])
            else:
                new_rows.append([
                    (-f * inv) if c == j else rows[r][c] - f * inv * pivot_row[c]
                    for c in range(k)])
    f = tableau.reduced_cost[j]
    new_cost = tuple(
        (-f * inv) if c == j else tableau.reduced_cost[c] - f * inv * pivot_row[c]
        for c in range(k))

    basic = list(tableau.basic)
    nonbasic = list(tableau.nonbasic)
    basic[i], nonbasic[j] = v, u
    return Tableau(tableau.graph, tableau.value, tuple(basic), tuple(nonbasic),
                   RatMatrix.from_rows(new_rows), new_cost)


def mainness_transfer_check(tableau: Tableau, u: int, v: int) -> bool:
    """Does the incoming vertex inherit the outgoing vertex's status?

    Pivoting at (u, v) moves u into the star set in place of v; this
    checks that u's main/non-main status in the new star set matches
    v's status in the old one.  Expected to hold for every legal pivot
    on graphs without isolated vertices.
    """
    _require_no_isolated(tableau.graph, "the status-transfer property")
    status_before = tableau.cost(v) != 0
    pivoted = pivot(tableau, u, v)
    status_after = pivoted.cost(u) != 0
    return status_before == status_after


def vertices_in_no_star_set(tableau: Tableau) -> VertexSet:
    """Co-star vertices whose body row is entirely zero.

    Such vertices belong to no star set of this eigenvalue; every star
    vertex belongs to at least its own.  Guaranteed only without
    isolated vertices.
    """
    _require_no_isolated(tableau.graph, "the no-star-set row test")
    out = []
    for i, u in enumerate(tableau.basic):
        if all(x == 0 for x in tableau.body.row(i)):
            out.append(u)
    return tuple(sorted(out))


def enumerate_star_sets(graph: Graph, value: Fraction, cap: int | None = None,
                        seed=None, on_cap: str = "raise") -> StarSetCatalog:
    """All star sets of one eigenvalue, by breadth-first pivoting.

    Co-star sets are exactly the non-singular column bases of the
    bordered block [N | B], and bases of a matrix are connected under
    single-column exchanges, so the pivot walk from any seed reaches
    every star set.  Tableaux are carried through pivots (exact, so
    nothing drifts) and each discovered set is recorded under its sorted
    vertex tuple; the catalog is sorted canonically, making the output
    independent of the seed and of traversal order.

    cap defaults to C(n, k).  When more sets than cap are found the
    enumeration aborts (on_cap="raise") or returns the sets found so
    far flagged incomplete (on_cap="partial").
    """
    value = Fraction(value)
    k = spectral.multiplicity(graph, value)
    if k == 0:
        raise NotAnEigenvalueError(
            f"{format_rational(value)} is not an eigenvalue of the graph")
    if cap is None:
        cap = comb(graph.n, k)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if on_cap not in ("raise", "partial"):
        raise ValueError("on_cap must be 'raise' or 'partial'")

    if seed is None:
        seed_members = initial_star_set(graph, value).members
    else:
        seed_members = vertex_set(seed, graph)
        if not verify_star_set(graph, value, seed_members):
            raise NotAStarSetError(
                f"seed {seed_members} is not a star set of "
                f"{format_rational(value)}")

    first = build_tableau(graph, value, seed_members)
    seen = {seed_members}
    queue: deque[Tableau] = deque([first])
    found: list[Tableau] = []
    complete = True
    while queue:
        tab = queue.popleft()
        found.append(tab)
        stop = False
        for i, u in enumerate(tab.basic):
            for j, v in enumerate(tab.nonbasic):
                if tab.body.at(i, j) == 0:
                    continue
                members = tuple(sorted(set(tab.nonbasic) - {v} | {u}))
                if members in seen:
                    continue
                if len(seen) == cap:
                    if on_cap == "raise":
                        raise CapExceededError(
                            f"more than {cap} star sets found for "
                            f"{format_rational(value)}")
                    complete = False
                    stop = True
                    break
                seen.add(members)
                queue.append(pivot(tab, u, v))
            if stop:
                break
        if stop:
            found.extend(queue)
            break

    items = tuple(sorted((classify(t) for t in found),
                         key=lambda c: c.star_set.members))
    return StarSetCatalog(graph, value, k, items, complete)


def _partition_by_elimination(blocks, n: int):
    """Forward elimination over the stacked eigenbasis rows, one
    eigenvalue block at a time; pivot columns are assigned to the block
    whose rows produced them."""
    reduced: list[tuple[int, list[Fraction]]] = []
    result = []
    for value, basis in blocks:
        cols = []
        for c in range(basis.cols):
            row = list(basis.column(c))
            for pc, prow in reduced:
                f = row[pc]
                if f:
                    row = [a - f * b for a, b in zip(row, prow)]
            pivot_col = next((t for t, x in enumerate(row) if x != 0), None)
            if pivot_col is None:
                return None
            inv = 1 / row[pivot_col]
            row = [x * inv for x in row]
            reduced.append((pivot_col, row))
            cols.append(pivot_col)
        result.append((value, tuple(sorted(cols))))
    return result


def _partition_by_backtracking(blocks, n: int):
    """Exhaustive fallback: assign each block a column set on which its
    eigenbasis rows are independent, blocks in order, columns disjoint.
    A valid assignment always exists because the stacked eigenbasis is
    invertible."""
    def place(idx: int, free: tuple[int, ...]):
        if idx == len(blocks):
            return []
        value, basis = blocks[idx]
        k = basis.cols
        for combo in combinations(free, k):
            sub = basis.submatrix(combo, range(k))
            if rank(sub) == k:
                rest = place(idx + 1, tuple(c for c in free if c not in combo))
                if rest is not None:
                    return [(value, combo)] + rest
        return None

    return place(0, tuple(range(n)))


def star_partition(graph: Graph) -> tuple[tuple[Fraction, VertexSet], ...]:
    """Partition of the vertices into one star set per eigenvalue.

    Requires an all-rational spectrum.  The elimination pass usually
    succeeds; when one of its blocks fails verification the exhaustive
    fallback finds a valid partition, which always exists.
    """
    spec = spectral.rational_spectrum(graph)
    if spec.residual_degree:
        raise UnsupportedSpectrumError(
            f"spectrum has an irrational part of degree {spec.residual_degree}")
    blocks = [(e.value, e.eigenbasis) for e in spec.entries]
    candidate = _partition_by_elimination(blocks, graph.n)
    if candidate is None or not all(
            verify_star_set(graph, value, members)
            for value, members in candidate):
        candidate = _partition_by_backtracking(blocks, graph.n)
        if candidate is None:
            raise AssertionError("no star partition found; arithmetic bug")
        for value, members in candidate:
            if not verify_star_set(graph, value, members):
                raise AssertionError("fallback produced an invalid block")
    return tuple((value, tuple(members)) for value, members in candidate)


def is_dominating(graph: Graph, members) -> bool:
    """Every vertex outside the set has a neighbour inside it."""
    inside = set(vertex_set(members, graph))
    return all(any(w in inside for w in graph.neighbors(v))
               for v in range(graph.n) if v not in inside)


def is_location_dominating(graph: Graph, members) -> bool:
    """Dominating, and outside vertices leave pairwise distinct
    neighbourhood traces on the set."""
    if not is_dominating(graph, members):
        return False
    inside = set(vertex_set(members, graph))
    traces = [frozenset(w for w in graph.neighbors(v) if w in inside)
              for v in range(graph.n) if v not in inside]
    return len(set(traces)) == len(traces)


# ---------------------------------------------------------------------------
# rendering

def render_tableau(tableau: Tableau, mark: tuple[int, int] | None = None) -> str:
    """ASCII tableau: row labels left, column labels on top, reduced cost
    last; `mark` frames one body entry as [entry]."""
    g = tableau.graph
    col_labels = [g.label(v) for v in tableau.nonbasic]
    row_labels = [g.label(u) for u in tableau.basic] + ["cost"]

    cells: list[list[str]] = []
    for i in range(tableau.body.rows):
        row = []
        for j in range(tableau.body.cols):
            text = format_rational(tableau.body.at(i, j))
            if mark is not None and (tableau.basic[i], tableau.nonbasic[j]) == mark:
                text = f"[{text}]"
            row.append(text)
        cells.append(row)
    cells.append([format_rational(c) for c in tableau.reduced_cost])

    width0 = max(len(s) for s in row_labels)
    widths = [max([len(col_labels[j])] + [len(row[j]) for row in cells])
              for j in range(len(col_labels))]

    def fmt_row(label: str, row: list[str]) -> str:
        out = label.rjust(width0) + " |"
        for j, x in enumerate(row):
            out += " " + x.rjust(widths[j])
        return out

    rule = "-" * width0 + "-+" + "-" * (sum(widths) + len(widths))
    lines = [fmt_row("", col_labels), rule]
    for i in range(tableau.body.rows):
        lines.append(fmt_row(row_labels[i], cells[i]))
    lines.append(rule)
    lines.append(fmt_row("cost", cells[-1]))
    return "\n".join(lines)


def tableau_to_json(tableau: Tableau) -> dict:
    g = tableau.graph
    return {
        "lambda": format_rational(tableau.value),
        "basic": [g.label(u) for u in tableau.basic],
        "nonbasic": [g.label(v) for v in tableau.nonbasic],
        "body": [[format_rational(tableau.body.at(i, j))
                  for j in range(tableau.body.cols)]
                 for i in range(tableau.body.rows)],
        "reduced_cost": [format_rational(c) for c in tableau.reduced_cost],
    }
