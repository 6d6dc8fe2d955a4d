"""Command-line front end.

Exit codes: 0 success, 1 selftest failure, 2 invalid parameters,
3 internal inconsistency, 4 parse error, 5 invariant violation,
6 condition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .moduli import (
    InvalidK,
    SampleStats,
    _worker_count,
    dim_G,
    dim_identity,
    discriminant,
    expected_dim,
    nonempty,
    orbit_fingerprint,
    sample_Lk,
)
from .monad import (
    NegativeK1,
    NormalizationViolation,
    check_all,
    chern_of_cohomology,
    dim_Lk,
    dim_V,
    dim_Wspace,
    dumps_monad,
    k_from_chern,
    loads_monad,
    shape_from_k,
)
from .surface import ClassMismatch, chi, h0, h1, h1_direct, h2, vanishing_pattern

SCHEMA_VERSION = 1

EXIT_OK, EXIT_SELFTEST, EXIT_PARAMS, EXIT_INTERNAL, EXIT_PARSE, EXIT_INVARIANT, EXIT_CONDITION = range(7)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit(report: dict, fmt: str) -> None:
    report = {"schema_version": SCHEMA_VERSION, **report}
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
        return
    width = max(len(k) for k in report)
    for k, v in report.items():
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True)
        sys.stdout.write(f"{k.ljust(width)}  {v}\n")


def _kvec(args):
    try:
        return k_from_chern(args.n, args.r, args.a, args.c)
    except NormalizationViolation as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None


def _chern_dict(ch) -> dict:
    return {"rank": ch.rk, "c1": list(ch.c1), "ch2": _frac(ch.ch2)}


def cmd_invariants(args) -> dict:
    kv = _kvec(args)
    rep = {
        "command": "invariants",
        "n": kv.n, "r": kv.r, "a": kv.a, "c": kv.c,
        "k": list(kv.k),
        "nonempty": nonempty(kv),
        "discriminant": _frac(discriminant(kv)),
    }
    if kv.k1 >= 0:
        s = shape_from_k(kv)
        rep.update({
            "ranks": list(s.ranks),
            "dim_V": dim_V(kv),
            "dim_W": dim_Wspace(kv),
            "dim_Lk": dim_Lk(kv),
            "dim_G": dim_G(kv),
            "expected_dim": expected_dim(kv),
            "dim_identity": dim_identity(kv),
            "chern_character": _chern_dict(chern_of_cohomology(s)),
        })
    else:
        rep.update({"ranks": None, "dim_V": None, "dim_W": None, "dim_Lk": None, "dim_G": None,
                    "expected_dim": 2 * kv.r * kv.c + (kv.r - 1) * kv.n * kv.a ** 2,
                    "dim_identity": None, "chern_character": None})
    return rep


def cmd_cohomology(args) -> dict:
    if args.n < 1:
        raise CliError(EXIT_PARAMS, f"n must be at least 1 (got n={args.n})")
    cls = (args.p, args.q)
    a, b, c, e = h0(args.n, cls), h1(args.n, cls), h2(args.n, cls), chi(args.n, cls)
    pattern = vanishing_pattern(args.n, cls)
    if (a > 0, b > 0, c > 0) != pattern or b != h1_direct(args.n, cls):
        raise CliError(EXIT_INTERNAL, f"cohomology of O({args.p},{args.q}) disagrees with the vanishing regions")
    return {"command": "cohomology", "n": args.n, "p": args.p, "q": args.q,
            "h0": a, "h1": b, "h2": c, "chi": e, "nonvanishing": list(pattern)}


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    try:
        return loads_monad(text)
    except ClassMismatch as exc:
        raise CliError(EXIT_INVARIANT, f"homogeneity violation: {exc}") from None
    except (NormalizationViolation, NegativeK1) as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_PARSE, f"cannot parse {path}: {exc}") from None


def cmd_check(args) -> dict:
    mp = _load(args.path)
    rep = check_all(mp)
    kv = mp.shape.kvec
    return {"command": "check", "n": kv.n, "r": kv.r, "a": kv.a, "c": kv.c,
            "conditions": rep.as_dict(),
            "chern_character": _chern_dict(chern_of_cohomology(mp.shape)),
            "in_Lk": rep.in_Lk}


def cmd_sample(args) -> dict:
    kv = _kvec(args)
    if kv.k1 < 0:
        raise CliError(EXIT_PARAMS, f"k1 = {kv.k1} < 0: the moduli space is empty")
    stats = SampleStats()
    workers = _worker_count(None)
    try:
        pts = sample_Lk(kv, args.seed, args.attempts, max_points=args.max_points, workers=workers, stats=stats)
    except InvalidK as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    files = []
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, mp in enumerate(pts):
            p = out / f"monad_{kv.n}_{kv.r}_{kv.a}_{kv.c}_s{args.seed}_{i:03d}.json"
            p.write_text(dumps_monad(mp))
            files.append(str(p))
    return {"command": "sample", "n": kv.n, "r": kv.r, "a": kv.a, "c": kv.c, "seed": args.seed,
            "attempts": stats.attempts, "successes": stats.successes, "distinct_points": len(pts),
            "failures": dict(sorted(stats.failures.items())), "files": files}


def cmd_orbit(args) -> dict:
    from .selftest import orbit_properties

    mp = _load(args.path)
    rep = check_all(mp)
    if not rep.in_Lk:
        raise CliError(EXIT_CONDITION, f"point is not in L_k (first failure: {rep.first_failure()})")
    props = orbit_properties(mp, random.Random(args.seed), max(1, args.group_elements))
    fp = orbit_fingerprint(mp)
    return {"command": "orbit", "seed": args.seed, "group_elements": args.group_elements,
            "properties": props, "all_pass": all(props.values()), "fingerprint": fp.as_dict()}


def cmd_selftest(args) -> dict:
    from .selftest import run_all

    results = run_all(args.grid_size, workers=_worker_count(None))
    rep = {"command": "selftest", "grid_size": args.grid_size,
           "criteria": [{"number": r.number, "name": r.name, "passed": r.passed, "checks": r.checked,
                         "seconds": round(r.seconds, 2), "detail": r.detail} for r in results],
           "passed": all(r.passed for r in results)}
    if not rep["passed"]:
        first = next(r for r in results if not r.passed)
        _emit(rep, args.format)
        raise CliError(EXIT_SELFTEST, f"criterion {first.number} failed: {first.detail}")
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hirzmonad", description="Monads for framed sheaves on Hirzebruch surfaces")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def quad(sp):
        for name in ("n", "r", "a", "c"):
            sp.add_argument(name, type=int)

    sp = sub.add_parser("invariants", help="numerical invariants of (n, r, a, c)")
    quad(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("cohomology", help="cohomology of O(p, q)")
    for name in ("n", "p", "q"):
        sp.add_argument(name, type=int)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("check", help="validate a monad file")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("sample", help="search for points of L_k")
    quad(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--attempts", type=int, default=500)
    sp.add_argument("--max-points", type=int, default=None)
    sp.add_argument("--out-dir", default=None)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("orbit", help="group-action experiments at a point of L_k")
    sp.add_argument("path")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--group-elements", type=int, default=20)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("selftest", help="run the acceptance criteria")
    sp.add_argument("--grid-size", choices=("small", "default"), default="default")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARAMS if exc.code else EXIT_OK
    try:
        report = args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    _emit(report, args.format)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
