"""Enumeration of the conjectured extremal classes and their spectral argmax.

A class member is a clique K_{n-t1} plus t1 outside vertices T with prescribed
internal edge count e(T), prescribed cross count e(T,U), minimum T-degree
k+c, and (k+c)-edge-connectivity.  Because the clique is fully symmetric, the
attachment pattern only matters through the multiset of "columns" (the subset
of T each attachment vertex sees), and no member needs more than e(T,U)
distinct attachment vertices.  Enumeration therefore runs over T-graphs up to
isomorphism crossed with column multisets, deduplicated by canonical form on
the gadget (T plus attachment window, window colored separately).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_form
from .connectivity import edge_connectivity
from .graph import Graph, GraphError, VertexPartition, partition_cross_edges
from .spectral import DEFAULT_TOL, spectral_radius
from .treepack import (
    PartitionCertificate,
    tree_packing_number,
    verify_partition_certificate,
)

MAX_T1 = 8
MAX_CROSS = 12


@dataclass
class ClassSpec:
    n: int
    k: int
    c: int
    variant: str  # "H1" (c <= k-2) or "H2" (c = k-1)
    t1: int
    eT_range: tuple[int, ...]  # admissible e(T) values
    e_pi_total: int  # e(T) + e(T,U), met with equality: k * t1 - 1

    def eTU(self, eT: int) -> int:
        return self.e_pi_total - eT


def class_spec(n: int, k: int, c: int) -> ClassSpec:
    """Parameters of the candidate class for (k+c)-edge-connected graphs."""
    if k < 2 or not 0 <= c <= k - 1:
        raise GraphError(f"need k >= 2 and 0 <= c <= k-1; got k={k}, c={c}")
    if c <= k - 2:
        variant, t1 = "H1", 2 * c + 2
        lo = 2 * c * c + 2 * c + 1
        hi = 2 * c * c + 3 * c + 1
        eT_range = tuple(range(lo, hi + 1))
    else:
        variant, t1 = "H2", 2 * c + 3
        eT_range = (2 * c * c + 3 * c + 1,)
    if n - t1 < 2:
        raise GraphError(f"n={n} leaves a clique smaller than 2 vertices")
    return ClassSpec(n, k, c, variant, t1, eT_range, k * t1 - 1)


def _t_graphs_up_to_iso(t1: int, eT: int) -> list[Graph]:
    """Connected-or-not graphs on t1 labeled vertices with eT edges, one per iso class."""
    pairs = list(combinations(range(t1), 2))
    if eT > len(pairs):
        return []
    seen: set[str] = set()
    out: list[Graph] = []
    for chosen in combinations(pairs, eT):
        g = Graph(t1, chosen)
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def _column_multisets(t1: int, total: int, need: list[int]) -> list[tuple[int, ...]]:
    """Multisets of nonempty T-subsets (bitmasks) with sizes summing to `total`.

    need[v] is the minimum number of columns vertex v must appear in (degree
    deficit against k+c).  Columns are produced in nonincreasing mask order so
    each multiset appears once.
    """
    subsets = sorted(range(1, 1 << t1), reverse=True)
    out: list[tuple[int, ...]] = []

    def rec(idx: int, left: int, counts: list[int], acc: list[int]) -> None:
        if left == 0:
            if all(counts[v] >= need[v] for v in range(t1)):
                out.append(tuple(acc))
            return
        for i in range(idx, len(subsets)):
            s = subsets[i]
            size = s.bit_count()
            if size > left:
                continue
            for v in range(t1):
                if s >> v & 1:
                    counts[v] += 1
            acc.append(s)
            rec(i, left - size, counts, acc)
            acc.pop()
            for v in range(t1):
                if s >> v & 1:
                    counts[v] -= 1

    rec(0, total, [0] * t1, [])
    return out


def _gadget(tg: Graph, columns: tuple[int, ...], window: int) -> Graph:
    t1 = tg.n
    edges = list(tg.edges())
    for j, mask in enumerate(columns):
        for v in range(t1):
            if mask >> v & 1:
                edges.append((v, t1 + j))
    edges += [
        (t1 + i, t1 + j) for i in range(window) for j in range(i + 1, window)
    ]
    return Graph(t1 + window, edges)


def _assemble(spec: ClassSpec, tg: Graph, columns: tuple[int, ...]) -> Graph:
    """Full member: T = 0..t1-1, clique = t1..n-1 with window vertices first."""
    n, t1 = spec.n, spec.t1
    edges = list(tg.edges())
    for j, mask in enumerate(columns):
        for v in range(t1):
            if mask >> v & 1:
                edges.append((v, t1 + j))
    edges += list((u, w) for u, w in combinations(range(t1, n), 2))
    return Graph(n, edges)


@dataclass
class EnumerationResult:
    members: list[Graph]  # deduplicated, passing all class requirements
    rejected_connectivity: int  # candidates dropped by the (k+c)-cut requirement


def enumerate_class(spec: ClassSpec) -> EnumerationResult:
    """All members of the class, one per isomorphism class."""
    if spec.t1 > MAX_T1:
        raise GraphError(f"t1={spec.t1} exceeds tractability guard {MAX_T1}")
    if max(spec.eTU(eT) for eT in spec.eT_range) > MAX_CROSS:
        raise GraphError(
            f"cross-edge budget {max(spec.eTU(e) for e in spec.eT_range)} exceeds guard {MAX_CROSS}"
        )
    mindeg = spec.k + spec.c
    gadget_seen: set[str] = set()
    full_seen: set[str] = set()
    members: list[Graph] = []
    rejected = 0
    for eT in spec.eT_range:
        etu = spec.eTU(eT)
        if etu < 0 or etu > spec.n - spec.t1:
            continue
        window = etu
        for tg in _t_graphs_up_to_iso(spec.t1, eT):
            need = [max(0, mindeg - tg.degree(v)) for v in range(spec.t1)]
            if sum(need) > etu:
                continue
            for columns in _column_multisets(spec.t1, etu, need):
                gadget = _gadget(tg, columns, window)
                gkey = canonical_form(
                    gadget,
                    cells=[range(spec.t1), range(spec.t1, spec.t1 + window)],
                )
                if gkey in gadget_seen:
                    continue
                gadget_seen.add(gkey)
                g = _assemble(spec, tg, columns)
                if edge_connectivity(g).kappa_prime < mindeg:
                    rejected += 1
                    continue
                fkey = canonical_form(g)
                if fkey in full_seen:
                    continue
                full_seen.add(fkey)
                members.append(g)
    return EnumerationResult(members, rejected)


def class_partition(spec: ClassSpec) -> VertexPartition:
    """The defining partition of a member: t1 singletons plus the clique block."""
    return VertexPartition(
        spec.n, [[v] for v in range(spec.t1)] + [list(range(spec.t1, spec.n))]
    )


def argmax_spectral(
    spec: ClassSpec, top: int = 5, tol: float = DEFAULT_TOL, jobs: int = 1
) -> list[tuple[Graph, float]]:
    """Class members ranked by spectral radius, descending; ties by canonical form."""
    enum = enumerate_class(spec)
    if not enum.members:
        raise GraphError("empty class")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rhos = list(pool.map(lambda g: spectral_radius(g, tol).rho, enum.members))
    else:
        rhos = [spectral_radius(g, tol).rho for g in enum.members]
    ranked = sorted(
        zip(enum.members, rhos),
        key=lambda pair: (-pair[1], canonical_form(pair[0])),
    )
    return ranked[: max(top, 0)] if top else ranked


def tie_groups(ranked: list[tuple[Graph, float]], tol: float = DEFAULT_TOL) -> list[list[int]]:
    """Indices of ranked members grouped when their rho values sit within 10*tol."""
    groups: list[list[int]] = []
    for i, (_, rho) in enumerate(ranked):
        if groups and abs(ranked[groups[-1][-1]][1] - rho) <= 10 * tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def conjecture_report(
    n: int, k: int, c: int, top: int = 5, tol: float = DEFAULT_TOL, jobs: int = 1
) -> dict:
    """Class size, spectral argmax, and the per-member tau <= k-1 certificate."""
    spec = class_spec(n, k, c)
    enum = enumerate_class(spec)
    if not enum.members:
        raise GraphError("empty class")
    ranked = argmax_spectral(spec, top=0, tol=tol, jobs=jobs)
    part = class_partition(spec)
    tau_bound_all = True
    for g in enum.members:
        e_pi = partition_cross_edges(g, part)
        cert = PartitionCertificate(part, k, k * (part.t - 1) - e_pi)
        if e_pi != spec.e_pi_total or not verify_partition_certificate(g, cert):
            tau_bound_all = False
    best, best_rho = ranked[0]
    tau_best, _ = tree_packing_number(best)
    kappa_best = edge_connectivity(best).kappa_prime
    groups = tie_groups(ranked, tol)
    return {
        "n": n,
        "k": k,
        "c": c,
        "variant": spec.variant,
        "class_size": len(enum.members),
        "rejected_connectivity": enum.rejected_connectivity,
        "argmax_rho": best_rho,
        "argmax_canonical": canonical_form(best),
        "argmax_edges": best.edges(),
        "argmax_tau": tau_best,
        "argmax_kappa_prime": kappa_best,
        "rho_values": [rho for _, rho in ranked[: max(top, 1)]],
        "tie_group_sizes": [len(grp) for grp in groups],
        "argmax_is_tied": len(groups[0]) > 1,
        "all_members_tau_le_k_minus_1": tau_bound_all,
        "canonical_partition_only": True,  # members built from the defining partition
        "pass": tau_bound_all,
    }
