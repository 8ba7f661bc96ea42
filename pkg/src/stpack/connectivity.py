"""Global edge connectivity with minimum-cut certificates.

Computed exactly by unit-capacity maximum flow from vertex 0 to every other
vertex.  The certificate is the cut side not containing vertex 0, ties broken
by lexicographically smallest vertex set, so reports are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, cross_edge_count


def _max_flow_unit(g: Graph, s: int, t: int) -> tuple[int, set[int]]:
    """Edmonds-Karp on the unit-capacity symmetric network.

    Returns (flow value, vertices reachable from s in the final residual).
    """
    cap: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        cap[(u, v)] = 1
        cap[(v, u)] = 1
    while True:
        parent: dict[int, int] = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if w not in parent and cap[(u, w)] > 0:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            return sum(1 for w in g.neighbors(s) if cap[(s, w)] == 0), set(parent)
        v = t
        while v != s:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u


@dataclass
class EdgeConnectivityResult:
    kappa_prime: int
    cut_side: tuple[int, ...]  # the side not containing vertex 0


def edge_connectivity(g: Graph) -> EdgeConnectivityResult:
    """kappa'(G) with a witnessing cut side S (0 not in S)."""
    if g.n < 2:
        raise GraphError("edge connectivity needs n >= 2")
    best_value: int | None = None
    best_side: tuple[int, ...] | None = None
    for t in range(1, g.n):
        value, reach = _max_flow_unit(g, 0, t)
        side = tuple(sorted(set(range(g.n)) - reach))
        if best_value is None or (value, side) < (best_value, best_side):
            best_value, best_side = value, side
    assert best_value is not None and best_side is not None
    return EdgeConnectivityResult(best_value, best_side)


def is_k_edge_connected(g: Graph, k: int) -> tuple[bool, tuple[int, ...] | None]:
    """True iff kappa'(g) >= k; on failure also a cut side with fewer than k edges."""
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    res = edge_connectivity(g)
    if res.kappa_prime >= k:
        return True, None
    return False, res.cut_side


@dataclass
class CliquePlusTReport:
    hypotheses_hold: bool
    hypothesis_failures: list[str]
    conclusion_holds: bool
    kappa_prime: int


def check_lemma_clique_plus_T(g: Graph, U, T, k: int) -> CliquePlusTReport:
    """Checker for: clique on U plus four vertices of degree >= k+1 forces
    (k+1)-edge-connectivity.

    Hypothesis failures are reported separately from conclusion failures.
    """
    us, ts = set(U), set(T)
    if us & ts or us | ts != set(range(g.n)) or len(ts) != 4:
        raise GraphError("U, T must partition V(G) with |T| = 4")
    if k < 3 or g.n < 3 * k + 2:
        raise GraphError(f"requires k >= 3 and n >= 3k+2; got n={g.n}, k={k}")
    failures = []
    ul = sorted(us)
    for i, u in enumerate(ul):
        for w in ul[i + 1 :]:
            if not g.has_edge(u, w):
                failures.append(f"missing clique edge ({u},{w})")
    for v in sorted(ts):
        if g.degree(v) < k + 1:
            failures.append(f"degree of {v} is {g.degree(v)} < {k + 1}")
    res = edge_connectivity(g)
    return CliquePlusTReport(
        hypotheses_hold=not failures,
        hypothesis_failures=failures,
        conclusion_holds=res.kappa_prime >= k + 1,
        kappa_prime=res.kappa_prime,
    )


def cut_size(g: Graph, side) -> int:
    """e(S, V - S) for a nonempty proper vertex subset."""
    s = set(side)
    if not s or len(s) >= g.n:
        raise GraphError("cut side must be a nonempty proper subset")
    return cross_edge_count(g, s, set(range(g.n)) - s)
