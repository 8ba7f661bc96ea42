"""Exact spanning-tree packing with certificates in both directions.

The packing number is computed by graphic-matroid union with augmenting
exchanges: edges are offered in lexicographic order to k forests; when an edge
cannot be placed directly, a labeling search swaps edges between forests to
make room.  On failure the violating Nash-Williams partition is read off the
terminal state: the blocks are the components of the "clogged" edges (those
whose parallel copy is in the span of the current forests).  Every crossing
edge of that partition is then a forest edge, which bounds e(pi) by
k(t-1) - deficiency exactly.

A subset-DP oracle evaluates the Nash-Williams minimum over all vertex
partitions directly (n <= 12), independent of the augmenting-path code.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, VertexPartition, partition_cross_edges


@dataclass
class TreePacking:
    trees: tuple[frozenset, ...]  # edge sets, each a spanning tree


@dataclass
class PartitionCertificate:
    partition: VertexPartition
    k: int
    deficiency: int  # k(t-1) - e(pi) > 0


class _ForestPack:
    """k edge-disjoint forests over a fixed graph, with augmenting insertion."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.forests: list[set[tuple[int, int]]] = [set() for _ in range(k)]
        self.adj: list[dict[int, set[int]]] = [
            {v: set() for v in range(g.n)} for _ in range(k)
        ]

    def _path_edges(self, i: int, u: int, v: int) -> list[tuple[int, int]] | None:
        """Edges on the unique u-v path in forest i, or None if disconnected."""
        if u == v:
            return []
        adj = self.adj[i]
        prev: dict[int, int] = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y not in prev:
                    prev[y] = x
                    if y == v:
                        queue.clear()
                        break
                    queue.append(y)
        if v not in prev:
            return None
        path = []
        y = v
        while y != u:
            x = prev[y]
            path.append((min(x, y), max(x, y)))
            y = x
        return path

    def _add(self, i: int, e: tuple[int, int]) -> None:
        self.forests[i].add(e)
        self.adj[i][e[0]].add(e[1])
        self.adj[i][e[1]].add(e[0])

    def _remove(self, i: int, e: tuple[int, int]) -> None:
        self.forests[i].remove(e)
        self.adj[i][e[0]].discard(e[1])
        self.adj[i][e[1]].discard(e[0])

    def try_insert(self, e0: tuple[int, int], commit: bool = True) -> bool:
        """Attempt to place e0, swapping edges between forests as needed."""
        parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {e0: None}
        queue = deque([e0])
        while queue:
            f = queue.popleft()
            u, v = f
            for i in range(self.k):
                path = self._path_edges(i, u, v)
                if path is None:
                    if commit:
                        self._augment(f, i, parent)
                    return True
                for gedge in path:
                    if gedge not in parent:
                        parent[gedge] = (f, i)
                        queue.append(gedge)
        return False

    def _augment(self, f: tuple[int, int], i: int, parent) -> None:
        # walk the label chain: f moves into forest i, freeing its old slot
        # for its parent, until the new edge itself is placed
        while parent[f] is not None:
            p, j = parent[f]  # f currently lives in forest j, on p's cycle there
            self._remove(j, f)
            self._add(i, f)
            f, i = p, j
        self._add(i, f)

    def placed(self) -> int:
        return sum(len(F) for F in self.forests)


def _clogged_partition(g: Graph, pack: _ForestPack, k: int) -> VertexPartition:
    """Blocks = components of the edges whose parallel copy cannot be inserted."""
    clogged = [e for e in g.edges() if not pack.try_insert(e, commit=False)]
    comp: dict[int, int] = {}
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in clogged:
        adj[u].add(v)
        adj[v].add(u)
    blocks: list[list[int]] = []
    seen: set[int] = set()
    for v in range(g.n):
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        block = [v]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    block.append(y)
                    stack.append(y)
        blocks.append(block)
    return VertexPartition(g.n, blocks)


def has_k_disjoint_trees(g: Graph, k: int) -> TreePacking | PartitionCertificate:
    """Either a packing of k spanning trees or a violating partition.

    Exactly one of the two certificates is returned; both are independently
    verifiable against g.
    """
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    if g.n == 0:
        raise GraphError("empty graph")
    if not g.is_connected():
        comp_partition = _components_partition(g)
        deficiency = k * (comp_partition.t - 1) - 0
        return PartitionCertificate(comp_partition, k, deficiency)
    pack = _ForestPack(g, k)
    for e in g.edges():
        pack.try_insert(e)
    if pack.placed() == k * (g.n - 1):
        trees = tuple(frozenset(F) for F in pack.forests)
        return TreePacking(trees)
    part = _clogged_partition(g, pack, k)
    e_pi = partition_cross_edges(g, part)
    deficiency = k * (part.t - 1) - e_pi
    if part.t < 2 or deficiency <= 0:
        raise AssertionError("augmentation terminal state yielded no valid certificate")
    return PartitionCertificate(part, k, deficiency)


def _components_partition(g: Graph) -> VertexPartition:
    blocks = []
    seen: set[int] = set()
    for v in range(g.n):
        if v in seen:
            continue
        stack, block = [v], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    block.append(y)
                    stack.append(y)
        blocks.append(block)
    return VertexPartition(g.n, blocks)


def tree_packing_number(g: Graph) -> tuple[int, TreePacking]:
    """Maximum number of edge-disjoint spanning trees, with a witnessing packing."""
    if g.n == 0:
        raise GraphError("empty graph")
    if g.n == 1:
        return 0, TreePacking(())
    if not g.is_connected():
        return 0, TreePacking(())
    upper = min(g.m // (g.n - 1), min(g.degree(v) for v in range(g.n)))
    tau = 0
    best = TreePacking(())
    for k in range(1, upper + 1):
        res = has_k_disjoint_trees(g, k)
        if isinstance(res, PartitionCertificate):
            break
        tau, best = k, res
    return tau, best


def verify_packing(g: Graph, p: TreePacking) -> bool:
    """Certificate checker: disjoint spanning trees using only edges of g."""
    used: set[tuple[int, int]] = set()
    gedges = set(g.edges())
    for tree in p.trees:
        edges = {(min(u, v), max(u, v)) for u, v in tree}
        if len(edges) != g.n - 1 or not edges <= gedges or edges & used:
            return False
        used |= edges
        # connectivity over all n vertices with n-1 edges == spanning tree
        adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != g.n:
            return False
    return True


def verify_partition_certificate(g: Graph, c: PartitionCertificate) -> bool:
    """Recompute e(pi) and check e(pi) < k(t-1) with t >= 2."""
    if c.partition.t < 2:
        return False
    e_pi = partition_cross_edges(g, c.partition)
    return e_pi < c.k * (c.partition.t - 1)


MAX_ORACLE_VERTICES = 12


def nw_oracle(g: Graph) -> int:
    """tau by exhaustive minimization of floor(e(pi) / (t-1)) over all partitions.

    Evaluated by subset DP over the Nash-Williams criterion: k trees exist iff
    max over partitions of sum_B (e(B) + k) never exceeds m + k.  Exact, and
    independent of the matroid-union path.  n <= 12 only.
    """
    n = g.n
    if n > MAX_ORACLE_VERTICES:
        raise GraphError(f"oracle limited to n <= {MAX_ORACLE_VERTICES}")
    if n < 2:
        return 0
    if not g.is_connected():
        return 0
    masks = g.adjacency_masks()
    size = 1 << n
    esub = [0] * size
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        esub[s] = esub[rest] + (masks[v] & rest).bit_count()

    def feasible(k: int) -> bool:
        # dp[s] = max over partitions of s of sum(e(B) + k)
        dp = [0] * size
        for s in range(1, size):
            low = s & -s
            rest = s ^ low
            best = esub[s] + k  # block = s itself
            sub = rest
            while sub:
                t = s ^ sub  # block containing the lowest vertex
                cand = esub[t] + k + dp[sub]
                if cand > best:
                    best = cand
                sub = (sub - 1) & rest
            dp[s] = best
        return dp[size - 1] <= g.m + k

    upper = min(g.m // (n - 1), min(g.degree(v) for v in range(n)))
    tau = 0
    for k in range(1, upper + 1):
        if feasible(k):
            tau = k
        else:
            break
    return tau
