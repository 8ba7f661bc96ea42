"""Command-line entry point: construct / spectral / connectivity / treepack /
verify / explore, all emitting a single JSON report on stdout.

Exit codes: 0 success or verification pass, 1 verification failure, 2 usage or
input error.  Identical invocations produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .connectivity import edge_connectivity
from .explore import argmax_spectral, class_spec, conjecture_report, enumerate_class
from .families import make_B, make_complete, make_F, make_F1, make_Fprime, make_ZF
from .graph import EdgeListFormatError, GraphError, read_edge_list, write_edge_list
from .canon import canonical_form
from .spectral import DEFAULT_TOL, SpectralError, equitable_quotient, spectral_radius
from .treepack import (
    PartitionCertificate,
    TreePacking,
    has_k_disjoint_trees,
    tree_packing_number,
)
from .verify import (
    spot_check_theorem2,
    verify_case1_quadrilateral,
    verify_claims,
    verify_family,
    verify_lemma31,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


def _emit(report: dict) -> None:
    print(json.dumps(report, sort_keys=True, indent=2))


def _base_report(args: argparse.Namespace) -> dict:
    # jobs is a runtime knob, not a parameter of the computation: reports are
    # contractually identical for any worker count, so it stays out
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("func", "jobs") and v is not None
    }
    return {"tool_version": __version__, "parameters": params}


def _parse_cells(spec: str, n: int) -> list[list[int]]:
    """Cell syntax: cells separated by ';', members by ',', ranges as 'a-b'."""
    cells: list[list[int]] = []
    for chunk in spec.split(";"):
        cell: list[int] = []
        for item in chunk.split(","):
            item = item.strip()
            if not item:
                continue
            if "-" in item:
                a, b = item.split("-", 1)
                cell.extend(range(int(a), int(b) + 1))
            else:
                cell.append(int(item))
        cells.append(cell)
    return cells


def _cmd_construct(args) -> int:
    family = args.family
    if family == "F":
        g = make_F(args.n, args.k)
    elif family == "Fprime":
        g = make_Fprime(args.n, args.k)
    elif family == "F1":
        g = make_F1(args.n)
    elif family == "ZF":
        g = make_ZF(args.n, args.k)
    elif family == "B":
        if args.delta is None:
            raise GraphError("--delta required for family B")
        g = make_B(args.n, args.delta, args.k)
    elif family == "complete":
        g = make_complete(args.n)
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown family {family}")
    write_edge_list(g, args.out)
    report = _base_report(args)
    report.update({"n": g.n, "m": g.m, "out": args.out})
    _emit(report)
    return EXIT_OK


def _cmd_spectral(args) -> int:
    g = read_edge_list(args.infile)
    res = spectral_radius(g, args.tol)
    report = _base_report(args)
    report.update(
        {
            "rho": res.rho,
            "residual": res.residual,
            "iterations": res.iterations,
            "tol": args.tol,
        }
    )
    if args.perron:
        report["perron"] = [float(x) for x in res.perron]
    if args.quotient_cells:
        q = equitable_quotient(g, _parse_cells(args.quotient_cells, g.n))
        from .spectral import quotient_spectral_radius

        report["quotient_rho"] = quotient_spectral_radius(q)
        report["quotient_matrix"] = q.B.tolist()
        report["quotient_cells"] = [list(c) for c in q.cells]
    _emit(report)
    return EXIT_OK


def _cmd_connectivity(args) -> int:
    g = read_edge_list(args.infile)
    res = edge_connectivity(g)
    report = _base_report(args)
    report.update({"kappa_prime": res.kappa_prime, "cut": list(res.cut_side)})
    _emit(report)
    return EXIT_OK


def _cmd_treepack(args) -> int:
    g = read_edge_list(args.infile)
    report = _base_report(args)
    if args.k is None:
        tau, packing = tree_packing_number(g)
        report.update(
            {
                "tau": tau,
                "certificate_kind": "packing",
                "certificate": [sorted(map(list, t)) for t in packing.trees],
            }
        )
    else:
        res = has_k_disjoint_trees(g, args.k)
        if isinstance(res, TreePacking):
            report.update(
                {
                    "k": args.k,
                    "certificate_kind": "packing",
                    "certificate": [sorted(map(list, t)) for t in res.trees],
                }
            )
        else:
            report.update(
                {
                    "k": args.k,
                    "certificate_kind": "partition",
                    "certificate": {
                        "blocks": [sorted(b) for b in res.partition.blocks],
                        "deficiency": res.deficiency,
                    },
                }
            )
    _emit(report)
    return EXIT_OK


def _cmd_verify(args) -> int:
    target = args.target
    if target == "lemma31":
        report = verify_lemma31(args.n, args.k, args.tol)
    elif target == "family":
        report = verify_family(args.n, args.k, args.tol)
    elif target == "case1":
        report = verify_case1_quadrilateral(args.n, args.k)
    elif target == "claims":
        report = verify_claims(args.n, args.k)
    elif target == "theorem2":
        report = spot_check_theorem2(args.n, args.k, args.trials, args.seed, args.tol)
    else:  # pragma: no cover
        raise GraphError(f"unknown target {target}")
    out = _base_report(args)
    out.update(report)
    _emit(out)
    return EXIT_OK if report["pass"] else EXIT_VERIFICATION_FAILED


def _cmd_explore(args) -> int:
    report = _base_report(args)
    body = conjecture_report(
        args.n, args.k, args.c, top=args.top, tol=args.tol, jobs=args.jobs
    )
    report.update(body)
    if args.dump_dir:
        os.makedirs(args.dump_dir, exist_ok=True)
        spec = class_spec(args.n, args.k, args.c)
        ranked = argmax_spectral(spec, top=0, tol=args.tol, jobs=args.jobs)
        for i, (g, _) in enumerate(ranked):
            write_edge_list(g, os.path.join(args.dump_dir, f"member_{i:04d}.txt"))
        report["dumped"] = len(ranked)
    _emit(report)
    return EXIT_OK if body["pass"] else EXIT_VERIFICATION_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stpack",
        description="spanning-tree packing / spectral radius verification toolkit",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("STP_SPECTRAL_JOBS", "1")),
        help="worker parallelism for verify/explore batches (reports are identical for any value)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a named family graph as an edge list")
    p.add_argument("--family", required=True, choices=["F", "Fprime", "F1", "ZF", "B", "complete"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--delta", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("spectral", help="spectral radius of a graph file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--quotient-cells", dest="quotient_cells")
    p.add_argument("--perron", action="store_true")
    p.add_argument("--json", action="store_true", help="reports are always JSON")
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("connectivity", help="edge connectivity with a cut certificate")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("treepack", help="spanning tree packing number / certificates")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_treepack)

    p = sub.add_parser("verify", help="run one verifier target")
    p.add_argument(
        "--target",
        required=True,
        choices=["lemma31", "family", "case1", "claims", "theorem2"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("explore", help="enumerate a candidate class and rank by rho")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--top", type=int, default=5)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--dump-dir", dest="dump_dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_explore)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (GraphError, EdgeListFormatError, SpectralError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
