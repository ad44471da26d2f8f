"""Graph data model, interchange formats, and the named example corpus.

Graphs are undirected and simple with a symmetric 0/1 adjacency matrix.
Vertices are indexed from 0 internally; display names (like "g1" or
"f7") live in the optional label table and appear in all human-readable
output.
"""

from __future__ import annotations

import json as _json
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError, SizeError, UnknownNameError
from .exactla import RatMatrix

#: Hard ceiling on decoded graph sizes; everything here is desk scale.
MAX_VERTICES = 100_000

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must be n x n")
        for i, row in enumerate(self.adj):
            if len(row) != self.n:
                raise ValueError("adjacency must be n x n")
            if row[i] != 0:
                raise ValueError("adjacency diagonal must be zero")
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError("adjacency entries must be 0 or 1")
                if x != self.adj[j][i]:
                    raise ValueError("adjacency must be symmetric")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count must equal n")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be pairwise distinct")

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> Graph:
        adj = [[0] * n for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError("self-loops are not allowed")
            adj[u][v] = adj[v][u] = 1
        return Graph(n, tuple(tuple(r) for r in adj),
                     tuple(labels) if labels is not None else None)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_named(self, name: str) -> int:
        """Resolve a display label (or a bare index) to a vertex."""
        if self.labels is not None and name in self.labels:
            return self.labels.index(name)
        try:
            v = int(name)
        except ValueError:
            raise KeyError(f"no vertex named {name!r}") from None
        if not 0 <= v < self.n:
            raise KeyError(f"vertex index {v} out of range")
        return v

    def degree(self, v: int) -> int:
        return sum(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.adj)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(j for j, x in enumerate(self.adj[v]) if x)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u][v])

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.n)
                     for j in range(i + 1, self.n) if self.adj[i][j])

    def edge_count(self) -> int:
        return len(self.edges())

    def isolated_vertices(self) -> VertexSet:
        return tuple(v for v in range(self.n) if self.degree(v) == 0)

    def is_regular(self) -> bool:
        degs = self.degrees()
        return self.n == 0 or len(set(degs)) == 1

    def adjacency_matrix(self) -> RatMatrix:
        return RatMatrix.from_rows(self.adj)

    def permuted(self, perm) -> Graph:
        """Relabelled copy: vertex v of the result is vertex perm[v] here."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        adj = tuple(tuple(self.adj[perm[i]][perm[j]] for j in range(self.n))
                    for i in range(self.n))
        labels = None if self.labels is None else tuple(self.labels[p] for p in perm)
        return Graph(self.n, adj, labels)


def vertex_set(members, graph: Graph) -> VertexSet:
    """Sorted, validated vertex tuple for the given graph."""
    mem = [int(v) for v in members]
    out = tuple(sorted(set(mem)))
    if len(out) != len(mem):
        raise ValueError("vertex set has repeated members")
    for v in out:
        if not 0 <= v < graph.n:
            raise IndexError(f"vertex {v} out of range for n={graph.n}")
    return out


def complement_set(members, graph: Graph) -> VertexSet:
    inside = set(members)
    return tuple(v for v in range(graph.n) if v not in inside)


# ---------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(data: bytes, base: int) -> tuple[int, int]:
    """Return (n, bytes consumed); `base` offsets error positions."""
    if not data:
        raise ParseError("empty graph6 data", base)
    b0 = data[0]
    if b0 != 126:
        return b0 - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", base + len(data))
        n = 0
        for k in range(1, 4):
            n = (n << 6) | (data[k] - 63)
        return n, 4
    if len(data) < 8:
        raise ParseError("truncated graph6 size field", base + len(data))
    n = 0
    for k in range(2, 8):
        n = (n << 6) | (data[k] - 63)
    return n, 8


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional ">>graph6<<" header is allowed)."""
    line = text.strip()
    base = 0
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not line:
        raise ParseError("empty graph6 data", base)
    data = line.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}", base + i)
    n, used = _g6_decode_size(data, base)
    if n > MAX_VERTICES:
        raise SizeError(f"graph6 declares {n} vertices; limit is {MAX_VERTICES}")
    body = data[used:]
    n_bits = n * (n - 1) // 2
    need = (n_bits + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {need}",
            base + used + min(len(body), need))
    adj = [[0] * n for _ in range(n)]
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                adj[i][j] = adj[j][i] = 1
            bit += 1
    return Graph(n, tuple(tuple(r) for r in adj))


def to_graph6(graph: Graph) -> str:
    """Canonical graph6 text; round-trips through from_graph6."""
    n = graph.n
    if n > 68719476735:
        raise SizeError("graph too large for graph6")
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        prefix = "~~" + "".join(chr(((n >> s) & 63) + 63)
                                for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(graph.adj[i][j])
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return prefix + "".join(chars)


# ---------------------------------------------------------------------------
# edge-list and JSON formats

def from_edge_list(text: str) -> Graph:
    """Parse "n=<count>" header plus one "u v" pair per line (0-based)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ParseError("edge list must start with an 'n=<count>' header")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ParseError(f"bad vertex count in {lines[0]!r}") from None
    if n < 0 or n > MAX_VERTICES:
        raise SizeError(f"vertex count {n} out of range")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"edge ({u}, {v}) invalid for n={n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(graph: Graph) -> str:
    lines = [f"n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def from_json(text: str) -> Graph:
    """Parse {"n": ..., "edges": [[u, v], ...], "labels": [...]} JSON."""
    try:
        obj = _json.loads(text)
    except _json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError("graph JSON needs 'n' and 'edges' keys")
    n = obj["n"]
    if not isinstance(n, int) or n < 0 or n > MAX_VERTICES:
        raise SizeError(f"vertex count {n!r} out of range")
    labels = obj.get("labels")
    try:
        return Graph.from_edges(n, [tuple(e) for e in obj["edges"]], labels)
    except (TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from exc


def to_json(graph: Graph) -> str:
    obj = {"n": graph.n, "edges": [list(e) for e in graph.edges()]}
    if graph.labels is not None:
        obj["labels"] = list(graph.labels)
    return _json.dumps(obj)


def read_graph(text: str, fmt: str) -> Graph:
    """Dispatch on format name: graph6 | edges | json."""
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edges":
        return from_edge_list(text)
    if fmt == "json":
        return from_json(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def write_graph(graph: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(graph) + "\n"
    if fmt == "edges":
        return to_edge_list(graph)
    if fmt == "json":
        return to_json(graph) + "\n"
    raise ValueError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# constructions

def induced_subgraph(graph: Graph, members) -> Graph:
    """Subgraph on the given vertices, keeping exactly the inside edges
    and the display labels of the kept vertices."""
    keep = vertex_set(members, graph)
    adj = tuple(tuple(graph.adj[u][v] for v in keep) for u in keep)
    labels = None if graph.labels is None else tuple(graph.labels[v] for v in keep)
    return Graph(len(keep), adj, labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    edges = list(g.edges()) + [(u + g.n, v + g.n) for u, v in h.edges()]
    labels = None
    if g.labels is not None and h.labels is not None:
        merged = g.labels + h.labels
        if len(set(merged)) == n:
            labels = merged
    return Graph.from_edges(n, edges, labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets;
    join(K1, h) is the cone over h."""
    base = disjoint_union(g, h)
    edges = list(base.edges())
    edges.extend((u, v + g.n) for u in range(g.n) for v in range(h.n))
    return Graph.from_edges(base.n, edges, base.labels)


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Complete bipartite K_{1,t}: centre 0 joined to t leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# ---------------------------------------------------------------------------
# the named corpus

CORPUS_NAMES = ("fig1", "G", "H", "F", "petersen", "C5cone")

# fig1: 7 vertices, reconstructed from two independently recorded
# co-star blocks; the loader cross-checks both (see _check_fig1).
_FIG1_EDGES_1B = ((1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
                  (3, 7), (4, 5), (5, 6), (5, 7), (6, 7))

# Expected [N | C - lambda*I] blocks for fig1, rows = co-star ascending,
# columns = star ascending then co-star ascending.
_FIG1_BLOCK_A = (  # star {1, 4} (1-based), lambda = -2
    (1, 0, 2, 1, 0, 0, 1),
    (0, 1, 1, 2, 0, 0, 1),
    (0, 1, 0, 0, 2, 1, 1),
    (1, 0, 0, 0, 1, 2, 1),
    (0, 0, 1, 1, 1, 1, 2),
)
_FIG1_BLOCK_B = (  # star {2, 3} (1-based), lambda = 1
    (1, 0, -1, 0, 0, 1, 0),
    (0, 1, 0, -1, 1, 0, 0),
    (0, 0, 0, 1, -1, 1, 1),
    (0, 0, 1, 0, 1, -1, 1),
    (1, 1, 0, 0, 1, 1, -1),
)

_G_ADJ = (
    (0, 1, 0, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 1, 0),
    (0, 1, 0, 1, 1, 1, 0),
    (0, 0, 1, 0, 1, 0, 1),
    (0, 0, 1, 1, 0, 1, 1),
    (0, 1, 1, 0, 1, 0, 1),
    (0, 0, 0, 1, 1, 1, 0),
)

_F_ADJ = (
    (0, 1, 0, 1, 1, 1, 0),
    (1, 0, 1, 0, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0),
    (1, 0, 1, 0, 1, 1, 0),
    (1, 0, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 1, 0, 1),
    (0, 0, 0, 0, 1, 1, 0),
)

_H_EDGES_1B = ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5),
               (3, 6), (3, 7), (4, 6), (5, 7), (6, 7))

# Adjacency of H restricted to {h1..h5}; recorded independently of the
# edge list above and asserted against it at load time.
_H_CO_STAR_BLOCK = (
    (0, 1, 1, 0, 0),
    (1, 0, 1, 0, 0),
    (1, 1, 0, 1, 1),
    (0, 0, 1, 0, 1),
    (0, 0, 1, 1, 0),
)


def _bordered_block(graph: Graph, lam: int, star: tuple[int, ...]):
    """Rows = co-star ascending; columns = star then co-star ascending;
    entries of [N | C - lam*I] as plain ints."""
    co = complement_set(star, graph)
    out = []
    for u in co:
        row = [graph.adj[u][v] for v in star]
        row.extend(graph.adj[u][v] - (lam if u == v else 0) for v in co)
        out.append(tuple(row))
    return tuple(out)


def _check_fig1(graph: Graph) -> None:
    if _bordered_block(graph, -2, (0, 3)) != _FIG1_BLOCK_A:
        raise AssertionError("fig1 reconstruction disagrees with block A")
    if _bordered_block(graph, 1, (1, 2)) != _FIG1_BLOCK_B:
        raise AssertionError("fig1 reconstruction disagrees with block B")


def _petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((i, i + 5))                # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return Graph.from_edges(10, edges)


@lru_cache(maxsize=None)
def corpus(name: str) -> Graph:
    """Named example graphs used throughout the tests and docs.

    fig1     7-vertex graph with spectrum {3, 1^2, 0, -1, -2^2}
    G, H, F  a cospectral 7-vertex triple with distinct 0-star structure
    petersen the Petersen graph
    C5cone   cone over the 5-cycle (the wheel on 6 vertices)
    """
    if name == "fig1":
        g = Graph.from_edges(7, [(u - 1, v - 1) for u, v in _FIG1_EDGES_1B],
                             labels=[str(i) for i in range(1, 8)])
        _check_fig1(g)
        return g
    if name == "G":
        return Graph(7, _G_ADJ, tuple(f"g{i}" for i in range(1, 8)))
    if name == "H":
        g = Graph.from_edges(7, [(u - 1, v - 1) for u, v in _H_EDGES_1B],
                             labels=[f"h{i}" for i in range(1, 8)])
        block = tuple(tuple(g.adj[i][j] for j in range(5)) for i in range(5))
        if block != _H_CO_STAR_BLOCK:
            raise AssertionError("H edge list disagrees with its co-star block")
        return g
    if name == "F":
        return Graph(7, _F_ADJ, tuple(f"f{i}" for i in range(1, 8)))
    if name == "petersen":
        return _petersen()
    if name == "C5cone":
        return join(empty_graph(1), cycle_graph(5))
    raise UnknownNameError(f"unknown corpus graph {name!r}; "
                           f"known names: {', '.join(CORPUS_NAMES)}")
