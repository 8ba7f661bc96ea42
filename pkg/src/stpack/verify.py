"""Executable verifiers for the structural lemmas and counting inequalities.

All inequality scaffolding runs in exact rational arithmetic (the bounds are
polynomials in n, k with half-integer coefficients); floating point is used
only for spectral quantities.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable

from .canon import canonical_form
from .connectivity import edge_connectivity
from .families import F_parts, F_vertex_indices, make_F, make_Fprime
from .graph import (
    Graph,
    GraphError,
    VertexPartition,
    cross_edge_count,
    format_edge_list,
    induced_edge_count,
    partition_cross_edges,
)
from .spectral import (
    DEFAULT_TOL,
    Ordering,
    compare_spectral,
    equitable_quotient,
    quotient_spectral_radius,
    spectral_radius,
)
from .treepack import (
    PartitionCertificate,
    has_k_disjoint_trees,
    verify_partition_certificate,
)


def edges_lower_bound_rhs(n: int, k: int) -> Fraction:
    """n^2/2 - 9n/2 + 2k + 12, the edge threshold the extremal graph must beat."""
    return Fraction(n * n, 2) - Fraction(9 * n, 2) + 2 * k + 12


def g_bound(t1, t2, n: int, k: int) -> Fraction:
    """2 t2^2 - (2n - 2 t1 - k + 2) t2 + (n-t1+2)(n-t1+1)/2 + k(t1-1) - 2.

    Upper bound on e(G) given t1 trivial and t2 nontrivial partition parts.
    t1, t2 may be Fractions (the quadrilateral vertex (4, (n-4)/2) needs it).
    """
    t1, t2 = Fraction(t1), Fraction(t2)
    if n < t1 + 2 * t2:
        raise GraphError(f"infeasible (t1={t1}, t2={t2}) for n={n}: need n >= t1 + 2 t2")
    return (
        2 * t2 * t2
        - (2 * n - 2 * t1 - k + 2) * t2
        + Fraction((n - t1 + 2) * (n - t1 + 1), 2)
        + k * (t1 - 1)
        - 2
    )


# closed forms of g at the points used in the proof, for cross-checking
def _closed_forms(n: int, k: int) -> dict[str, Fraction]:
    half = Fraction(1, 2)
    return {
        "g(0,5)": half * n * n - Fraction(17, 2) * n + 4 * k + 39,
        "g(1,4)": half * n * n - Fraction(15, 2) * n + 4 * k + 30,
        "g(2,3)": half * n * n - Fraction(13, 2) * n + 4 * k + 22,
        "g(3,2)": half * n * n - Fraction(11, 2) * n + 4 * k + 15,
        "g(4,2)": half * n * n - Fraction(13, 2) * n + 5 * k + 21,
        "g(5,1)": half * n * n - Fraction(11, 2) * n + 5 * k + 14,
        "g(4,(n-4)/2)": half * (k + 1) * n + k - 3,
        "g(n-2,1)": Fraction(k * (n - 2)),
    }


def clique_partition_bound(n: int, a: Iterable[int]) -> int:
    """C(n - sum_{i<l} a_i, 2) + sum_{i<l} C(a_i, 2).

    Max of sum C(x_i, 2) subject to x_i >= a_i, sum x_i = n, for nondecreasing
    nonnegative a; attained by pushing everything into the last coordinate.
    """
    a = list(a)
    if len(a) < 2:
        raise GraphError("need at least two parts")
    if any(x < 0 for x in a) or any(a[i] > a[i + 1] for i in range(len(a) - 1)):
        raise GraphError("a must be nondecreasing and nonnegative")
    if sum(a) > n:
        raise GraphError(f"infeasible: sum(a)={sum(a)} > n={n}")
    head = sum(a[:-1])
    return math.comb(n - head, 2) + sum(math.comb(x, 2) for x in a[:-1])


def clique_partition_max_bruteforce(n: int, a: Iterable[int]) -> int:
    """Exhaustive maximization of sum C(x_i, 2); small instances only."""
    a = list(a)
    best = -1

    def rec(i: int, left: int, acc: int) -> None:
        nonlocal best
        if i == len(a) - 1:
            if left >= a[-1]:
                best = max(best, acc + math.comb(left, 2))
            return
        for x in range(a[i], left + 1):
            rec(i + 1, left - x, acc + math.comb(x, 2))

    rec(0, n, 0)
    if best < 0:
        raise GraphError("infeasible constraints")
    return best


def canonical_F_partition(n: int) -> VertexPartition:
    """The t=5 partition of F_{n,k}: four singletons v1..v4 plus the clique."""
    u, t = F_parts(n)
    return VertexPartition(n, [[v] for v in t] + [u])


def verify_family(n: int, k: int, tol: float = DEFAULT_TOL) -> dict:
    """Checks every structural claim about F_{n,k} at one parameter point."""
    if k < 3 or n < 3 * k + 2:
        raise GraphError(f"requires k >= 3 and n >= 3k+2; got n={n}, k={k}")
    g = make_F(n, k)
    u, t = F_parts(n)
    checks: dict[str, bool] = {}
    conn = edge_connectivity(g)
    checks["kappa_prime_equals_k_plus_1"] = conn.kappa_prime == k + 1
    checks["e_T_is_5"] = induced_edge_count(g, t) == 5
    checks["e_T_U_is_4k_minus_6"] = cross_edge_count(g, t, u) == 4 * k - 6
    part = canonical_F_partition(n)
    e_pi = partition_cross_edges(g, part)
    checks["canonical_partition_edges"] = e_pi == 4 * k - 1
    cert = PartitionCertificate(part, k, k * (part.t - 1) - e_pi)
    checks["canonical_certificate_valid"] = verify_partition_certificate(g, cert)
    res = has_k_disjoint_trees(g, k)
    tau_cert_ok = isinstance(res, PartitionCertificate) and verify_partition_certificate(g, res)
    checks["no_k_packing_with_certificate"] = tau_cert_ok
    checks["deficiency_exactly_1"] = (
        isinstance(res, PartitionCertificate) and res.deficiency == 1
    )
    rho = spectral_radius(g, tol).rho
    checks["rho_above_clique"] = rho > n - 5
    margin = Fraction(g.m) - edges_lower_bound_rhs(n, k)
    checks["edge_margin_2k_minus_3"] = margin == 2 * k - 3
    return {
        "n": n,
        "k": k,
        "kappa_prime": conn.kappa_prime,
        "e_pi": e_pi,
        "rho": rho,
        "edge_margin": str(margin),
        "checks": checks,
        "pass": all(checks.values()),
    }


def F_quotient_cells(n: int, k: int) -> list[list[int]]:
    """Symmetry cells of F_{n,k}: {v1,v2}, {v3,v4}, {u_1..u_{k-2}}, {u_{k-1}}, tail."""
    return [
        [n - 4, n - 3],
        [n - 2, n - 1],
        list(range(k - 2)),
        [k - 2],
        list(range(k - 1, n - 4)),
    ]


def Fprime_quotient_cells(n: int, k: int) -> list[list[int]]:
    """Symmetry cells of F'_{n,k}: {v1}, {v2,v3,v4}, {u_1..u_{k-2}}, {u_{k-1}}, tail."""
    return [
        [n - 4],
        [n - 3, n - 2, n - 1],
        list(range(k - 2)),
        [k - 2],
        list(range(k - 1, n - 4)),
    ]


def verify_lemma31(n: int, k: int, tol: float = DEFAULT_TOL) -> dict:
    """rho(F_{n,k}) > rho(F'_{n,k}), plus the Perron identities behind it."""
    if k < 3 or n < 3 * k + 2:
        raise GraphError(f"requires k >= 3 and n >= 3k+2; got n={n}, k={k}")
    f = make_F(n, k)
    fp = make_Fprime(n, k)
    cmp_res = compare_spectral(f, fp, tol)
    q_f = quotient_spectral_radius(equitable_quotient(f, F_quotient_cells(n, k)))
    q_fp = quotient_spectral_radius(equitable_quotient(fp, Fprime_quotient_cells(n, k)))
    sr = spectral_radius(fp, tol)
    x = sr.perron
    idx = F_vertex_indices(n, k)
    v1, v2, v3, v4 = idx["v1"], idx["v2"], idx["v3"], idx["v4"]
    uk1 = idx["u_last_attached"]
    tail = x[k - 1 : n - 4]
    identity_tol = 1e-9
    checks = {
        "ordering_greater": cmp_res.ordering is Ordering.GREATER,
        "power_vs_quotient_F": bool(abs(cmp_res.rho1 - q_f) < 1e-8),
        "power_vs_quotient_Fprime": bool(abs(cmp_res.rho2 - q_fp) < 1e-8),
        "x_v2_eq_x_v3": bool(abs(x[v2] - x[v3]) < identity_tol),
        "x_v3_eq_x_v4": bool(abs(x[v3] - x[v4]) < identity_tol),
        "x_uk1_ge_x_v1": bool(x[uk1] >= x[v1] - identity_tol),
        "tail_entries_equal": bool(tail.max() - tail.min() < identity_tol) if len(tail) else True,
    }
    return {
        "n": n,
        "k": k,
        "ordering": cmp_res.ordering.value,
        "gap": cmp_res.gap,
        "rho_F": cmp_res.rho1,
        "rho_Fprime": cmp_res.rho2,
        "quotient_rho_F": q_f,
        "quotient_rho_Fprime": q_fp,
        "checks": checks,
        "pass": all(checks.values()),
    }


def verify_case1_quadrilateral(n: int, k: int) -> dict:
    """The convexity step: Hessian PSD, vertex max at (5,1), and the final bound."""
    if k < 3 or n < 3 * k + 2:
        raise GraphError(f"requires k >= 3 and n >= 3k+2; got n={n}, k={k}")
    # Hessian of g is constant [[1,2],[2,4]]: det 0, trace 5 -> PSD
    hessian_psd = (1 * 4 - 2 * 2) == 0 and (1 + 4) == 5
    vertices = {
        "(4,2)": g_bound(4, 2, n, k),
        "(5,1)": g_bound(5, 1, n, k),
        "(4,(n-4)/2)": g_bound(4, Fraction(n - 4, 2), n, k),
        "(n-2,1)": g_bound(n - 2, 1, n, k),
    }
    max_value = max(vertices.values())
    rhs = edges_lower_bound_rhs(n, k)
    checks = {
        "hessian_psd": hessian_psd,
        "max_at_5_1": vertices["(5,1)"] == max_value,
        "g51_le_rhs": vertices["(5,1)"] <= rhs,
    }
    return {
        "n": n,
        "k": k,
        "vertex_values": {key: str(val) for key, val in vertices.items()},
        "rhs": str(rhs),
        "margin": str(rhs - vertices["(5,1)"]),
        "checks": checks,
        "pass": all(checks.values()),
    }


def verify_claims(n: int, k: int) -> dict:
    """Exact-arithmetic scaffolding: closed forms, edge-count bounds, t chain."""
    if k < 3 or n < 3 * k + 2:
        raise GraphError(f"requires k >= 3 and n >= 3k+2; got n={n}, k={k}")
    cf = _closed_forms(n, k)
    rhs = edges_lower_bound_rhs(n, k)
    checks: dict[str, bool] = {}
    points = {
        "g(0,5)": (0, 5),
        "g(1,4)": (1, 4),
        "g(2,3)": (2, 3),
        "g(3,2)": (3, 2),
        "g(4,2)": (4, 2),
        "g(5,1)": (5, 1),
        "g(4,(n-4)/2)": (4, Fraction(n - 4, 2)),
        "g(n-2,1)": (n - 2, 1),
    }
    for name, (t1, t2) in points.items():
        checks[f"closed_form_{name}"] = g_bound(t1, t2, n, k) == cf[name]
    for name in ("g(0,5)", "g(1,4)", "g(2,3)", "g(3,2)"):
        checks[f"below_rhs_{name}"] = cf[name] < rhs
    # t-lower-bound chain: (k+1)t <= 2(kt-k-1) iff t(k-1) >= 2k+2
    chain = all(
        ((k + 1) * t <= 2 * (k * t - k - 1)) == (t * (k - 1) >= 2 * k + 2)
        for t in range(1, n + 1)
    )
    checks["t_chain_equivalence"] = chain
    # cross-edge window 4(k+1) - 2e(T) <= e(T,U1) <= 4k - 1 - e(T) with the
    # concrete distributions of F and F'
    for name, e_t, e_tu in (("F", 5, 4 * k - 6), ("Fprime", 6, 4 * k - 7)):
        checks[f"cross_window_{name}"] = (
            4 * (k + 1) - 2 * e_t <= e_tu <= 4 * k - 1 - e_t
        )
    return {"n": n, "k": k, "checks": checks, "pass": all(checks.values())}


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p): pairs scanned in lexicographic order, one uniform draw each.

    Python's Mersenne Twister is platform-stable, so identical (n, p, seed)
    always yield the identical graph.
    """
    if not 0 <= p <= 1:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def spot_check_theorem2(n: int, k: int, trials: int, seed: int, tol: float = DEFAULT_TOL) -> dict:
    """Randomized check of: rho(G) >= rho(F_{n,k}) and kappa' = k+1 force
    tau >= k unless G is F_{n,k} itself.

    Samples mix dense G(n, p) draws with planted perturbations of F_{n,k};
    pure uniform sampling almost never lands near the spectral threshold.
    """
    if k < 3 or n < 3 * k + 2:
        raise GraphError(f"requires k >= 3 and n >= 3k+2; got n={n}, k={k}")
    f = make_F(n, k)
    rho_f = spectral_radius(f, tol).rho
    f_canon = canonical_form(f)
    rng = random.Random(seed)
    survivors = 0
    filtered_rho = 0
    filtered_kappa = 0
    filtered_disconnected = 0
    counterexamples: list[str] = []
    f_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for trial in range(trials):
        if trial % 5 == 4:
            # planted F-like sample: F itself or F plus a few extra edges
            g = f
            extra = rng.randrange(0, 3)
            pool = [e for e in f_pairs if not f.has_edge(*e)]
            for e in rng.sample(pool, extra):
                g = g.with_edge(*e)
        else:
            p = rng.choice([0.7, 0.8, 0.9])
            g = random_graph(n, p, rng.randrange(2**31))
        if not g.is_connected():
            filtered_disconnected += 1
            continue
        if edge_connectivity(g).kappa_prime != k + 1:
            filtered_kappa += 1
            continue
        rho = spectral_radius(g, tol).rho
        if rho < rho_f - 1e-9:
            filtered_rho += 1
            continue
        survivors += 1
        res = has_k_disjoint_trees(g, k)
        if isinstance(res, PartitionCertificate):
            if canonical_form(g) != f_canon:
                counterexamples.append(format_edge_list(g))
                break
    return {
        "n": n,
        "k": k,
        "trials": trials,
        "seed": seed,
        "rho_F": rho_f,
        "survivors": survivors,
        "filtered_rho": filtered_rho,
        "filtered_kappa": filtered_kappa,
        "filtered_disconnected": filtered_disconnected,
        "vacuous": survivors == 0,
        "counterexamples": counterexamples,
        "pass": survivors > 0 and not counterexamples,
    }
