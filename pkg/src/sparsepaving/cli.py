"""Command-line entry point.

Exit codes: 0 success, 2 domain error, 3 verification failure, 64 bad usage.
JSON and CSV go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import census as census_mod
from .errors import AxiomError, DomainError
from .maps import MAPS
from .matroid import (
    is_paving,
    is_sparse_paving,
    matroid_from_json,
    matroid_to_json,
    sparse_from_circuits,
)
from .partition import build_partition, gamma_count
from .starstar import (
    greedy_star_star,
    max_star_star_exact,
    random_star_star,
    sparse_count_lower_bound,
    star_star_upper_bound,
)
from .subsets import elements, family_from_json, family_to_json, mask_of

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise UsageError(message)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _pivot(args):
    if args.pivot is None:
        return None
    try:
        labels = [int(tok) for tok in args.pivot.split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"--pivot must be comma-separated integers, got {args.pivot!r}")
    if len(set(labels)) != len(labels):
        raise DomainError("--pivot has repeated elements")
    return mask_of(labels, args.n)


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc.strerror}")
    except ValueError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})")


def cmd_partition(args):
    part = build_partition(args.n, args.r, _pivot(args))
    _emit(part.to_json())
    return EXIT_OK


def cmd_construct(args):
    if args.circuits is not None:
        try:
            raw = json.loads(args.circuits)
        except ValueError as exc:
            raise DomainError(f"--circuits is not valid JSON ({exc})")
        circuits = family_from_json(raw, args.n, args.r)
    elif args.seed is not None:
        circuits = random_star_star(args.n, args.r, random.Random(args.seed))
    else:
        raise UsageError("construct needs --circuits or --seed")
    m = sparse_from_circuits(args.n, args.r, circuits)
    out = matroid_to_json(m)
    out["circuits"] = family_to_json(circuits)
    _emit(out)
    return EXIT_OK


def cmd_verify(args):
    data = _read_json(args.file)
    try:
        m = matroid_from_json(data)
    except AxiomError as exc:
        report = {"valid": False, "error": str(exc)}
        if exc.witness is not None:
            b1, b2, x = exc.witness
            report["witness"] = {"B1": list(elements(b1)), "B2": list(elements(b2)), "x": x}
        _emit(report)
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY
    _emit({
        "valid": True,
        "n": m.n,
        "r": m.r,
        "bases": len(m.bases),
        "paving": is_paving(m),
        "sparse_paving": is_sparse_paving(m),
    })
    return EXIT_OK


def cmd_bounds(args):
    upper = star_star_upper_bound(args.n, args.r)
    _emit({
        "n": args.n,
        "r": args.r,
        "star_star_upper_bound": f"{upper.numerator}/{upper.denominator}"
        if upper.denominator != 1 else str(upper.numerator),
        "star_star_upper_bound_decimal": f"{float(upper):.6f}",
        "sparse_count_lower_bound": sparse_count_lower_bound(args.n, args.r),
        "gamma": gamma_count(args.n, args.r),
    })
    return EXIT_OK


def cmd_map(args):
    m = matroid_from_json(_read_json(args.file))
    pivot = None
    if args.pivot is not None:
        args.n = m.n
        pivot = _pivot(args)
    image = MAPS[args.which](m, pivot)
    _emit(image.to_json())
    return EXIT_OK


def cmd_maxstar(args):
    fam = max_star_star_exact(args.n, args.r)
    upper = star_star_upper_bound(args.n, args.r)
    _emit({
        "n": args.n,
        "r": args.r,
        "size": len(fam),
        "family": family_to_json(fam),
        "greedy_size": len(greedy_star_star(args.n, args.r)),
        "upper_bound": f"{upper.numerator}/{upper.denominator}",
    })
    return EXIT_OK


def cmd_census(args):
    cache = None
    cache_dir = args.cache_dir or census_mod.default_cache_dir()
    if args.resume:
        cache = census_mod.load_cache(cache_dir)
    rows = census_mod.census(args.max_n, threads=args.threads, cache=cache)
    if cache is not None:
        census_mod.save_cache(cache_dir, cache)
    if args.out:
        census_mod.census_export(rows, args.out, args.format)
    else:
        text = census_mod.rows_to_csv(rows) if args.format == "csv" else census_mod.rows_to_json(rows)
        sys.stdout.write(text)
    bad = [row for row in rows if not row.all_ok]
    for row in bad:
        failed = ", ".join(k for k, v in row.flags.items() if not v)
        sys.stderr.write(f"bound violated at n={row.n}, r={row.r}: {failed}\n")
    return EXIT_VERIFY if bad else EXIT_OK


def build_parser():
    p = _Parser(prog="sparsepaving", description="Sparse-paving matroid constructions and census.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def nr(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)

    sp = sub.add_parser("partition", help="partition all r-subsets into (**)-classes")
    nr(sp)
    sp.add_argument("--pivot")
    sp.set_defaults(func=cmd_partition)

    sp = sub.add_parser("construct", help="sparse-paving matroid from its r-circuits")
    nr(sp)
    sp.add_argument("--circuits")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="check a matroid JSON file")
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bounds", help="closed-form bounds for (n, r)")
    nr(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("map", help="encode a matroid as sparse-paving matroids")
    sp.add_argument("--which", choices=sorted(MAPS), required=True)
    sp.add_argument("--file", required=True)
    sp.add_argument("--pivot")
    sp.set_defaults(func=cmd_map)

    sp = sub.add_parser("census", help="brute-force counts and bound checks")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--out")
    sp.add_argument("--resume", action="store_true")
    sp.add_argument("--cache-dir")
    sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("maxstar", help="exact maximum (**)-family")
    nr(sp)
    sp.set_defaults(func=cmd_maxstar)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError:
        return EXIT_USAGE
    except (DomainError, AxiomError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
