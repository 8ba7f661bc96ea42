"""Constructors for the named graph families.

Label conventions (fixed so per-vertex spectral assertions can address named
vertices by index):

* make_F / make_Fprime: clique vertices u_1..u_{n-4} are 0..n-5 (u_j = j-1),
  the four outside vertices v_1..v_4 are n-4..n-1.
* make_F1: clique vertices are 0..n-6 with the distinguished vertex a = 0;
  b, c, d, e, f are n-5..n-1.
* make_ZF: K_{n-k-1} is 0..n-k-2, the K_{k-1} join set is n-k-1..n-3,
  the outside K_2 is {n-2, n-1}.
* make_B: K_{delta+1} is 0..delta with bridge vertex 0, K_{n-delta-1} is
  delta+1..n-1; the k-1 bridge edges go from 0 to delta+1..delta+k-1.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GraphError

# F vertex indices, given (n, k)


def F_vertex_indices(n: int, k: int) -> dict[str, int]:
    """Indices of the named vertices of F_{n,k} / F'_{n,k}."""
    return {
        "v1": n - 4,
        "v2": n - 3,
        "v3": n - 2,
        "v4": n - 1,
        "u_last_attached": k - 2,  # u_{k-1}
    }


def F_parts(n: int) -> tuple[list[int], list[int]]:
    """(U, T) vertex lists of F_{n,k} under the label convention."""
    return list(range(n - 4)), list(range(n - 4, n))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def _check_F_range(n: int, k: int, strict: bool) -> None:
    if k < 3:
        raise GraphError(f"k must be >= 3, got {k}")
    if strict:
        if n < 3 * k + 2:
            raise GraphError(f"n={n} below theorem range n >= 3k+2 = {3 * k + 2}")
    elif n - 4 < k + 1:
        raise GraphError(f"n={n} too small even below theorem range (need n-4 >= k+1)")


def make_F(n: int, k: int, strict: bool = True) -> Graph:
    """Clique K_{n-4} plus T = {v1..v4} inducing K_4 - v1v2.

    v1, v2 attach to u_1..u_{k-1}; v3, v4 attach to u_1..u_{k-2}.
    Pass strict=False to build below the theorem range n >= 3k+2.
    """
    _check_F_range(n, k, strict)
    v1, v2, v3, v4 = n - 4, n - 3, n - 2, n - 1
    edges = list(combinations(range(n - 4), 2))
    edges += [(v1, v3), (v1, v4), (v2, v3), (v2, v4), (v3, v4)]
    for j in range(k - 1):  # u_1..u_{k-1} are 0..k-2
        edges += [(j, v1), (j, v2)]
    for j in range(k - 2):
        edges += [(j, v3), (j, v4)]
    return Graph(n, edges)


def make_Fprime(n: int, k: int, strict: bool = True) -> Graph:
    """make_F with edge v2-u_{k-1} removed and v1v2 added; T induces K_4."""
    _check_F_range(n, k, strict)
    g = make_F(n, k, strict=strict)
    v1, v2 = n - 4, n - 3
    return g.without_edge(v2, k - 2).with_edge(v1, v2)


def make_F1(n: int) -> Graph:
    """Clique K_{n-5} with distinguished vertex a plus T = {b,c,d,e,f}.

    T-edges bc, bd, cd, ce, df, ef; cross edges ab, ae, af.  Every T-vertex
    has degree 3.
    """
    if n < 10:
        raise GraphError(f"make_F1 needs n >= 10, got {n}")
    a = 0
    b, c, d, e, f = n - 5, n - 4, n - 3, n - 2, n - 1
    edges = list(combinations(range(n - 5), 2))
    edges += [(b, c), (b, d), (c, d), (c, e), (d, f), (e, f)]
    edges += [(a, b), (a, e), (a, f)]
    return Graph(n, edges)


def make_ZF(n: int, k: int) -> Graph:
    """Join of K_{k-1} with the disjoint union K_{n-k-1} + K_2."""
    if k < 2:
        raise GraphError(f"make_ZF needs k >= 2, got {k}")
    if n < 2 * k + 3:
        raise GraphError(f"make_ZF needs n >= 2k+3 = {2 * k + 3}, got {n}")
    big = list(range(n - k - 1))
    join = list(range(n - k - 1, n - 2))
    pair = [n - 2, n - 1]
    edges = list(combinations(big, 2))
    edges += list(combinations(join, 2))
    edges.append((pair[0], pair[1]))
    edges += [(min(u, w), max(u, w)) for u in join for w in big + pair]
    return Graph(n, edges)


def make_B(n: int, delta: int, k: int) -> Graph:
    """K_{delta+1} and K_{n-delta-1} linked by k-1 edges from one bridge vertex."""
    if k < 2:
        raise GraphError(f"make_B needs k >= 2, got {k}")
    if delta < 1:
        raise GraphError(f"make_B needs delta >= 1, got {delta}")
    if n < delta + 2 + max(1, k - 1):
        raise GraphError(f"make_B: n={n} too small for delta={delta}, k={k}")
    edges = list(combinations(range(delta + 1), 2))
    edges += list(combinations(range(delta + 1, n), 2))
    edges += [(0, delta + 1 + j) for j in range(k - 1)]
    return Graph(n, edges)
