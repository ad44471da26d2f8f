"""Shared helpers and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check:
star sets by exhaustive subset filtering, characteristic polynomials by
cofactor expansion over polynomial entries, graph6 by a freestanding
bit-level decoder.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from starkit.exactla import RatMatrix, rank
from starkit.graphio import Graph


# ---------------------------------------------------------------------------
# star sets by brute force

def brute_force_star_sets(graph: Graph, value) -> list[tuple[int, ...]]:
    """All k-subsets X such that value is not an eigenvalue of G - X,
    where k is the eigenvalue's multiplicity (computed by rank)."""
    value = Fraction(value)
    a = graph.adj
    n = graph.n
    shifted = RatMatrix.from_rows(
        [[a[i][j] - (value if i == j else 0) for j in range(n)]
         for i in range(n)])
    k = n - rank(shifted)
    assert k > 0, "oracle called with a non-eigenvalue"
    out = []
    for combo in combinations(range(n), k):
        inside = set(combo)
        co = [v for v in range(n) if v not in inside]
        block = RatMatrix.from_rows(
            [[a[u][w] - (value if u == w else 0) for w in co] for u in co])
        if rank(block) == len(co):
            out.append(combo)
    return out


# ---------------------------------------------------------------------------
# characteristic polynomial by cofactor expansion

def _poly_add(p, q):
    size = max(len(p), len(q))
    return tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(size))


def _poly_sub(p, q):
    return _poly_add(p, tuple(-c for c in q))


def _poly_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _det_poly(mat):
    n = len(mat)
    if n == 0:
        return (1,)
    if n == 1:
        return mat[0][0]
    acc = ()
    sign = 1
    for col in range(n):
        minor = [[row[c] for c in range(n) if c != col] for row in mat[1:]]
        term = _poly_mul(mat[0][col], _det_poly(minor))
        acc = _poly_add(acc, term) if sign > 0 else _poly_sub(acc, term)
        sign = -sign
    return acc


def char_poly_cofactor(rows) -> tuple[int, ...]:
    """Coefficients of det(xI - A), lowest degree first, by expansion."""
    n = len(rows)
    mat = [[(( -rows[i][j], 1) if i == j else (-rows[i][j],))
            for j in range(n)] for i in range(n)]
    coeffs = list(_det_poly(mat))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# freestanding graph6 decoder (short form only; corpus scale)

def decode_graph6_short(text: str) -> tuple[int, set[frozenset[int]]]:
    values = [ord(ch) - 63 for ch in text.strip()]
    n = values[0]
    assert 0 <= n <= 62, "oracle handles the short form only"
    bits = []
    for val in values[1:]:
        assert 0 <= val <= 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = set()
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.add(frozenset((i, j)))
            idx += 1
    assert all(b == 0 for b in bits[idx:]), "padding bits must be zero"
    return n, edges


# ---------------------------------------------------------------------------
# misc

def edge_set(graph: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in graph.edges()}


def labels_of(graph: Graph, vertices) -> tuple[str, ...]:
    return tuple(graph.label(v) for v in vertices)


def by_labels(graph: Graph, *names: str) -> tuple[int, ...]:
    return tuple(sorted(graph.vertex_named(name) for name in names))
