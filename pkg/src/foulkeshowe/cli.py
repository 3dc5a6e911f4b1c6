"""Command-line interface.

Subcommands:

* ``psi``      -- build the compressed map, report dimensions/rank/injectivity,
                  optionally export the matrix in FHM1 format;
* ``verify``   -- run the named property suites;
* ``foulkes``  -- termwise multiplicity comparison for a <= b;
* ``hermite``  -- two-row multiplicity equalities;
* ``mult``     -- plethysm multiplicities, whole table or a single partition.

Every command prints one JSON document to stdout.  Exit codes: 0 computed or
verified, 1 a mathematical property failed, 2 usage error, 3 resource limit.
Mathematical fields of the JSON are deterministic across runs; ``timing`` is
not and is kept in a separate key.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import ResourceLimitError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

PSI_AB_LIMIT = 12


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated partition: {text!r}")
    if not parts or any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}")
    return parts


def _emit(result: dict, started: float) -> None:
    result["timing"] = {"seconds": round(time.time() - started, 3)}
    json.dump(result, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _partition_key(lam) -> str:
    return ",".join(str(p) for p in lam)


def _cmd_psi(args) -> int:
    from .exactla import certify_injective
    from .foulkes_map import psi_composed, psi_fused
    from .matio import write_matrix

    started = time.time()
    if args.a * args.b > PSI_AB_LIMIT:
        raise ResourceLimitError(f"a*b = {args.a * args.b} exceeds limit {PSI_AB_LIMIT}")
    psi = (psi_fused if args.fused else psi_composed)(args.a, args.b)
    result = {
        "command": "psi",
        "parameters": {"a": args.a, "b": args.b, "fused": args.fused},
        "domain_dim": len(psi.domain),
        "codomain_dim": len(psi.codomain),
        "nnz": psi.matrix.nnz,
        "artifacts": {},
    }
    if args.certify:
        cert = certify_injective(psi.matrix)
        result["certificate"] = cert.as_dict()
        result["rank"] = cert.rank
        result["injective"] = cert.injective
    if args.export:
        tag = "psi-fused" if args.fused else "psi"
        write_matrix(args.export, psi.matrix, tag)
        result["artifacts"]["matrix"] = args.export
    _emit(result, started)
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .checks import ALL_CHECKS

    started = time.time()
    names = list(ALL_CHECKS) if args.claims == "all" else [args.claims]
    reports = {}
    all_ok = True
    for name in names:
        suite = ALL_CHECKS[name]
        if name == "commute":
            report = suite(max_d=min(args.max_ab, 8))
        elif name in ("invariance", "factorization", "fused", "qsplit"):
            pairs = [
                (a, b)
                for (a, b) in ((2, 3), (2, 4), (3, 4))
                if a * b <= args.max_ab
            ]
            report = suite(pairs=tuple(pairs))
        elif name == "zeta":
            report = suite(max_b=min(7, args.max_ab))
        else:
            report = suite(max_n=min(10, args.max_ab))
        reports[name] = {
            "ok": report.ok,
            "cases": report.cases,
            "detail": report.detail,
        }
        if not report.ok:
            reports[name]["counterexample"] = report.counterexample
            all_ok = False
    _emit(
        {
            "command": "verify",
            "parameters": {"claims": args.claims, "max_ab": args.max_ab},
            "ok": all_ok,
            "reports": reports,
        },
        started,
    )
    return EXIT_OK if all_ok else EXIT_VIOLATION


def _warm_cache(a: int, b: int) -> None:
    """Seed the character memo and block-partition list from the disk cache."""
    from .cache import block_partitions_cached, character_table_cached

    if a * b <= 12:
        character_table_cached(a * b)
        block_partitions_cached(a, b)


def _cmd_foulkes(args) -> int:
    from .plethysm_oracle import foulkes_check

    started = time.time()
    _warm_cache(args.a, args.b)
    report = foulkes_check(args.a, args.b)
    _emit(
        {
            "command": "foulkes",
            "parameters": {"a": args.a, "b": args.b},
            "ok": report.ok,
            "table": {
                _partition_key(lam): [x, y] for lam, x, y in report.rows
            },
            "violations": [_partition_key(lam) for lam in report.violations],
        },
        started,
    )
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_hermite(args) -> int:
    from .plethysm_oracle import hermite_check

    started = time.time()
    _warm_cache(args.a, args.b)
    report = hermite_check(args.a, args.b)
    _emit(
        {
            "command": "hermite",
            "parameters": {"a": args.a, "b": args.b},
            "ok": report.ok,
            "table": {
                _partition_key(lam): [x, y] for lam, x, y in report.rows
            },
            "violations": [_partition_key(lam) for lam in report.violations],
        },
        started,
    )
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _cmd_mult(args) -> int:
    from .plethysm_oracle import multiplicity, multiplicity_vector

    started = time.time()
    _warm_cache(args.a, args.b)
    result = {"command": "mult", "parameters": {"a": args.a, "b": args.b}}
    if getattr(args, "lam", None):
        result["parameters"]["lambda"] = _partition_key(args.lam)
        result["multiplicity"] = multiplicity(args.lam, args.a, args.b)
    else:
        vec = multiplicity_vector(args.a, args.b)
        result["table"] = {
            _partition_key(lam): m for lam, m in vec.mults.items() if m
        }
        result["dimension_check"] = vec.dimension_sym()
    _emit(result, started)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foulkeshowe",
        description="Exact computation and verification around the map "
        "Sym^a(Sym^b) -> Sym^b(Sym^a).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="build the compressed map and certify its rank")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--fused", action="store_true", help="use the per-column formula")
    p.add_argument("--export", metavar="PATH", help="write the matrix as FHM1 text")
    p.add_argument("--certify", action="store_true", help="certify injectivity")
    p.set_defaults(run=_cmd_psi)

    from .checks import ALL_CHECKS

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--claims", choices=list(ALL_CHECKS) + ["all"], required=True)
    p.add_argument("--max-ab", type=int, default=8, dest="max_ab")
    p.set_defaults(run=_cmd_verify)

    for name, fn in (("foulkes", _cmd_foulkes), ("hermite", _cmd_hermite)):
        p = sub.add_parser(name)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.set_defaults(run=fn)

    p = sub.add_parser("mult", help="plethysm multiplicities")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--lambda", type=_parse_partition, dest="lam", default=None)
    p.set_defaults(run=_cmd_mult)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
