"""Non-isomorphism screen for graph pairs.

Isomorphic graphs must agree on every invariant computed here: counts,
degree sequences, characteristic polynomial, the set of rational main
eigenvalues, and per main eigenvalue the star-set invariants (a)-(h).
One disagreement proves non-isomorphism; agreement on everything is
only ever "inconclusive".  The full battery is always evaluated so the
witness log records every condition, including later failures that are
more informative than early ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError
from .exactla import format_rational
from .graphio import Graph
from . import invariants, spectral, starsets

NOT_ISOMORPHIC = "NotIsomorphic"
INCONCLUSIVE = "Inconclusive"

#: Default ceiling for the exact isomorphism backtracker.
SMALL_ISO_LIMIT = 10


@dataclass(frozen=True)
class ConditionRecord:
    condition: str
    eigenvalue: str | None  # rendered rational, None for structural checks
    left: str
    right: str
    passed: bool


@dataclass(frozen=True)
class IsoVerdict:
    status: str
    witnesses: tuple[ConditionRecord, ...]
    regular_caveat: bool
    notes: tuple[str, ...]

    def failures(self) -> tuple[ConditionRecord, ...]:
        return tuple(w for w in self.witnesses if not w.passed)


def small_iso(g1: Graph, g2: Graph, size_limit: int = SMALL_ISO_LIMIT) -> bool:
    """Exact isomorphism decision for small graphs.

    Degree-sequence prefilter, then backtracking over degree-compatible
    vertex assignments with incremental adjacency consistency.
    """
    if g1.n > size_limit or g2.n > size_limit:
        raise SizeLimitError(
            f"graphs exceed the size limit {size_limit} for exact matching")
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    n = g1.n
    if n == 0:
        return True

    deg1 = g1.degrees()
    deg2 = g2.degrees()
    # Most-constrained-first: rare degrees early shrink the branching.
    order = sorted(range(n), key=lambda v: (deg1.count(deg1[v]), -deg1[v]))
    image = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for w in range(n):
            if used[w] or deg2[w] != deg1[u]:
                continue
            ok = True
            for prev in order[:pos]:
                if g1.adj[u][prev] != g2.adj[w][image[prev]]:
                    ok = False
                    break
            if not ok:
                continue
            image[u] = w
            used[w] = True
            if extend(pos + 1):
                return True
            image[u] = -1
            used[w] = False
        return False

    return extend(0)


def _fmt_set(values) -> str:
    return "{" + ", ".join(format_rational(v) for v in values) + "}"


def _fmt_hist(h: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(h.items())) + "}"


def _class_summary(rep: invariants.InvariantReport, kind: str, degree: int) -> str:
    try:
        cls = rep.vertex_class(kind, degree)
    except KeyError:
        return "absent"
    return (f"|V|={len(cls.vertices)} degrees={list(cls.graph_degrees)} "
            f"induced: {cls.induced.n}v/{cls.induced.edge_count()}e")


def compare(g: Graph, h: Graph, cap: int | None = None) -> IsoVerdict:
    """Run the whole screen and return the verdict with its witness log.

    Checks, in order: vertex and edge counts, degree sequences, the
    characteristic polynomial, the rational main-eigenvalue sets, and
    for each shared rational main eigenvalue the invariants (a)-(h):
    star-set count, aleph pair, main-size histogram, main/non-main
    degree extremes and histograms, and per matched degree class the
    ordinary-degree lists plus induced-subgraph isomorphism.

    The verdict is NotIsomorphic exactly when some condition fails.
    When both graphs are regular the caveat flag is set: for cospectral
    regular pairs conditions at the largest eigenvalue carry no
    discriminating power.
    """
    records: list[ConditionRecord] = []

    def record(condition, eigenvalue, left, right, passed=None):
        if passed is None:
            passed = left == right
        records.append(ConditionRecord(
            condition, eigenvalue, str(left), str(right), passed))
        return passed

    record("order", None, g.n, h.n)
    record("size", None, g.edge_count(), h.edge_count())
    record("degree-sequence", None,
           list(g.degree_sequence()), list(h.degree_sequence()))
    record("characteristic-polynomial", None,
           str(spectral.adjacency_char_poly(g, convention="det")),
           str(spectral.adjacency_char_poly(h, convention="det")),
           spectral.cospectral(g, h))

    spec_g = spectral.rational_spectrum(g)
    spec_h = spectral.rational_spectrum(h)
    mains_g = spec_g.main_values()
    mains_h = spec_h.main_values()
    record("main-eigenvalues", None, _fmt_set(mains_g), _fmt_set(mains_h),
           set(mains_g) == set(mains_h))

    shared = sorted(set(mains_g) & set(mains_h), reverse=True)
    for value in shared:
        lam = format_rational(value)
        rep_g = invariants.report(
            starsets.enumerate_star_sets(g, value, cap=cap), g)
        rep_h = invariants.report(
            starsets.enumerate_star_sets(h, value, cap=cap), h)

        record("a", lam, rep_g.ss_count, rep_h.ss_count)
        record("b", lam,
               f"max={rep_g.aleph_max} min={rep_g.aleph_min}",
               f"max={rep_h.aleph_max} min={rep_h.aleph_min}")
        record("c", lam, _fmt_hist(rep_g.main_size_histogram),
               _fmt_hist(rep_h.main_size_histogram))
        record("d", lam,
               f"max={rep_g.max_plus_degree} min={rep_g.min_plus_degree}",
               f"max={rep_h.max_plus_degree} min={rep_h.min_plus_degree}")
        record("e", lam,
               f"max={rep_g.max_minus_degree} min={rep_g.min_minus_degree}",
               f"max={rep_h.max_minus_degree} min={rep_h.min_minus_degree}")
        record("f", lam, _fmt_hist(rep_g.plus_degree_histogram),
               _fmt_hist(rep_h.plus_degree_histogram))
        record("g", lam, _fmt_hist(rep_g.minus_degree_histogram),
               _fmt_hist(rep_h.minus_degree_histogram))

        keys = sorted({(c.kind, c.degree) for c in rep_g.classes}
                      | {(c.kind, c.degree) for c in rep_h.classes})
        for kind, degree in keys:
            sign = "+" if kind == "plus" else "-"
            left = _class_summary(rep_g, kind, degree)
            right = _class_summary(rep_h, kind, degree)
            passed = left == right
            if passed and left != "absent":
                cls_g = rep_g.vertex_class(kind, degree)
                cls_h = rep_h.vertex_class(kind, degree)
                limit = max(cls_g.induced.n, cls_h.induced.n, SMALL_ISO_LIMIT)
                iso = small_iso(cls_g.induced, cls_h.induced, size_limit=limit)
                if not iso:
                    passed = False
                    left += " [induced subgraphs not isomorphic]"
            record("h", lam, f"d{sign}={degree}: {left}",
                   f"d{sign}={degree}: {right}", passed)

    failures = [r for r in records if not r.passed]
    status = NOT_ISOMORPHIC if failures else INCONCLUSIVE
    notes = []
    if status == INCONCLUSIVE and (spec_g.residual_degree or spec_h.residual_degree):
        notes.append("unscreened eigenvalues present: the spectra have "
                     "irrational parts whose mainness is not examined")
    regular_caveat = g.is_regular() and h.is_regular()
    return IsoVerdict(status, tuple(records), regular_caveat, tuple(notes))


def verdict_to_json(verdict: IsoVerdict) -> dict:
    return {
        "status": verdict.status,
        "regular_caveat": verdict.regular_caveat,
        "notes": list(verdict.notes),
        "witnesses": [
            {"condition": w.condition,
             "lambda": w.eigenvalue,
             "left": w.left,
             "right": w.right,
             "pass": w.passed}
            for w in verdict.witnesses],
    }
