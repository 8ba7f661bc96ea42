"""Immutable simple graphs on vertices 0..n-1 plus the edge-counting primitives.

Everything downstream (families, spectral, connectivity, tree packing) consumes
this representation.  Graphs are immutable: edit helpers return new graphs, so
instances can be shared freely across workers.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph constructions or invalid arguments."""


class Graph:
    """Simple undirected graph: no loops, no parallel edges, labels 0..n-1."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop edge ({u},{v}) not allowed")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def adjacency_masks(self) -> list[int]:
        """Neighbor sets as bitmasks (requires n <= machine-friendly sizes)."""
        return [sum(1 << w for w in self._adj[v]) for v in range(self.n)]

    def with_edge(self, u: int, v: int) -> "Graph":
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        return Graph(self.n, self.edges() + [(u, v)])

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        drop = (min(u, v), max(u, v))
        return Graph(self.n, [e for e in self.edges() if e != drop])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexPartition:
    """A partition of V(G) into disjoint nonempty blocks covering 0..n-1."""

    __slots__ = ("blocks", "t", "t1", "t2", "n")

    def __init__(self, n: int, blocks: Sequence[Iterable[int]]):
        norm = [frozenset(b) for b in blocks]
        if any(not b for b in norm):
            raise GraphError("empty block in partition")
        seen: set[int] = set()
        for b in norm:
            for v in b:
                if not (0 <= v < n):
                    raise GraphError(f"vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise GraphError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise GraphError(f"partition does not cover vertices {missing}")
        self.n = n
        self.blocks = tuple(sorted(norm, key=lambda b: min(b)))
        self.t = len(norm)
        self.t1 = sum(1 for b in norm if len(b) == 1)
        self.t2 = self.t - self.t1

    def __repr__(self) -> str:
        return f"VertexPartition(t={self.t}, t1={self.t1}, t2={self.t2})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a simple graph, rejecting loops, duplicates and bad labels."""
    return Graph(n, edges)


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise GraphError("min_degree needs at least one vertex")
    return min(g.degree(v) for v in range(g.n))


def induced_edge_count(g: Graph, X: Iterable[int]) -> int:
    """Number of edges with both ends in X."""
    xs = set(X)
    return sum(1 for u in xs for v in g.neighbors(u) if v in xs and u < v)


def cross_edge_count(g: Graph, X: Iterable[int], Y: Iterable[int]) -> int:
    """Number of edges with one end in X, the other in Y; X, Y disjoint."""
    xs, ys = set(X), set(Y)
    if xs & ys:
        raise GraphError(f"cross_edge_count: sets overlap on {sorted(xs & ys)}")
    return sum(1 for u in xs for v in g.neighbors(u) if v in ys)


def partition_cross_edges(g: Graph, p: VertexPartition) -> int:
    """Edges whose ends lie in distinct blocks of p."""
    if p.n != g.n:
        raise GraphError("partition does not match graph order")
    return g.m - sum(induced_edge_count(g, b) for b in p.blocks)


# ---------------------------------------------------------------------------
# Edge-list text format.
#   line 1: "n m"; then m lines "u v" with u < v, sorted lexicographically.
#   Comment lines start with '#'.  LF line endings, ASCII.
# ---------------------------------------------------------------------------


class EdgeListFormatError(GraphError):
    """Raised with a line number when an edge-list file is malformed."""


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_edge_list(g))


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected two integers")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: non-integer token") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListFormatError(f"line {lineno}: negative header value")
            header = (a, b)
            continue
        if not a < b:
            raise EdgeListFormatError(f"line {lineno}: edge must satisfy u < v")
        if edges and (a, b) <= edges[-1]:
            raise EdgeListFormatError(
                f"line {lineno}: edges must be strictly increasing lexicographically"
            )
        edges.append((a, b))
    if header is None:
        raise EdgeListFormatError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise EdgeListFormatError(
            f"header announced {m} edges but file contains {len(edges)}"
        )
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise EdgeListFormatError(str(exc)) from None


def read_edge_list(path) -> Graph:
    with open(path, "r") as fh:
        return parse_edge_list(fh.read())
