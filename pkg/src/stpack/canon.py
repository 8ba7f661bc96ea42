"""Canonical labeling for small graphs (n <= 64).

Degree-refinement plus individualization backtracking.  Two graphs get equal
labels iff they are isomorphic (respecting the optional initial coloring).
The label is the lexicographically smallest adjacency encoding over all
refinement-consistent orderings, so it is deterministic across runs and
platforms.

Branching on a cell whose vertices are pairwise interchangeable (transposition
twins) is collapsed to a single representative; transpositions of twins are
automorphisms, so this prunes without affecting the minimum.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, GraphError

MAX_CANON_VERTICES = 64


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered cell list.

    Splits cells by neighbor counts into splitter cells until stable; the
    resulting order depends only on the cell structure, never on labels.
    """
    cells = [list(c) for c in cells]
    work = list(range(len(cells)))
    while work:
        si = work.pop(0)
        if si >= len(cells):
            continue
        splitter = 0
        for v in cells[si]:
            splitter |= 1 << v
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) > 1:
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
                if len(groups) > 1:
                    parts = [groups[c] for c in sorted(groups)]
                    cells[i : i + 1] = parts
                    work.extend(range(i, len(cells)))
                    i += len(parts) - 1
            i += 1
    return cells


def _all_twins(adj: list[int], cell: list[int]) -> bool:
    """True when every transposition (cell[0] v) is an automorphism.

    Such transpositions generate the full symmetric group on the cell, so
    branching on a single representative is exact.
    """
    v0 = cell[0]
    for v in cell[1:]:
        if (adj[v0] & ~(1 << v)) != (adj[v] & ~(1 << v0)):
            return False
    return True


def _encode(adj: list[int], order: list[int]) -> bytes:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    bits = bytearray()
    acc = 0
    nb = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            acc = (acc << 1) | ((ai >> order[j]) & 1)
            nb += 1
            if nb == 8:
                bits.append(acc)
                acc = nb = 0
    if nb:
        bits.append(acc << (8 - nb))
    return bytes(bits)


def canonical_order(g: Graph, cells: Sequence[Iterable[int]] | None = None) -> list[int]:
    """A canonical vertex ordering; see canonical_form for the contract."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise GraphError(f"canonical labeling limited to {MAX_CANON_VERTICES} vertices")
    if n == 0:
        return []
    adj = g.adjacency_masks()
    if cells is None:
        start = [list(range(n))]
    else:
        start = [sorted(c) for c in cells]
        if sum(len(c) for c in start) != n or {v for c in start for v in c} != set(range(n)):
            raise GraphError("initial cells must partition the vertex set")
        start = [c for c in start if c]
    best: tuple[bytes, list[int]] | None = None

    def rec(cur: list[list[int]]) -> None:
        nonlocal best
        cur = _refine(adj, cur)
        target = next((i for i, c in enumerate(cur) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cur]
            key = _encode(adj, order)
            if best is None or key < best[0]:
                best = (key, order)
            return
        cell = cur[target]
        branch = [cell[0]] if _all_twins(adj, cell) else cell
        for v in branch:
            rest = [w for w in cell if w != v]
            rec(cur[:target] + [[v], rest] + cur[target + 1 :])

    rec(start)
    assert best is not None
    return best[1]


def canonical_form(g: Graph, cells: Sequence[Iterable[int]] | None = None) -> str:
    """Canonical label string: equal iff isomorphic (color-respecting if cells given).

    Only intended for explorer-scale graphs (n <= 64).
    """
    norm = None if cells is None else [sorted(c) for c in cells]
    order = canonical_order(g, norm)
    shape = "" if norm is None else ";" + ",".join(str(len(c)) for c in norm)
    return f"{g.n}:{g.m}{shape}:" + _encode(g.adjacency_masks(), order).hex()
