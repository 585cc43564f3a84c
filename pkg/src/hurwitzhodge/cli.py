"""Command-line front end.

Exit codes: 0 pass, 1 failed check, 2 usage error, 3 resource limit.
The cache file (``*.hwz.jsonl``) comes from ``--cache`` or ``HODGE_CACHE``;
without either nothing is persisted.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

from .elsv import InvalidRange, lambda_g_check, witten_table
from .exact import format_rational
from .hurwitz import (DEFAULT_BUDGET, BudgetExceeded, CacheError, HurwitzCache, hurwitz_oracle,
                      hurwitz_solve)
from .pipeline import table_report
from .suites import SUITES, run_suite
from .workspace import Workspace

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
CACHE_ENV = "HODGE_CACHE"


@dataclass
class RunConfig:
    d_max: int = 12
    g_max: int = 2
    oracle_budget: int = DEFAULT_BUDGET
    cache_path: Optional[str] = None
    output_format: str = "text"
    suite: str = "fast"


class UsageError(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


def parse_alpha(text: str):
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"cannot parse partition {text!r}") from None
    if not parts or any(p < 1 for p in parts):
        raise UsageError(f"partition parts must be positive integers: {text!r}")
    return tuple(sorted(parts, reverse=True))


def parse_rows(text: str) -> List[int]:
    """``"1..4"``, ``"2,5"`` or a mix such as ``"1..3,6"``."""
    out = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if ".." in piece:
                lo, hi = piece.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif piece:
                out.append(int(piece))
    except ValueError:
        raise UsageError(f"cannot parse rows {text!r}") from None
    return out


def _load_cache(cfg: RunConfig) -> HurwitzCache:
    if cfg.cache_path and os.path.exists(cfg.cache_path):
        return HurwitzCache.load(cfg.cache_path)
    return HurwitzCache()


def _save_cache(cfg: RunConfig, cache: HurwitzCache, before: int):
    if cfg.cache_path and len(cache.entries) != before:
        cache.save(cfg.cache_path)


def _emit(cfg: RunConfig, text: str, record):
    if cfg.output_format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def cmd_hurwitz(cfg: RunConfig, args) -> int:
    alpha = parse_alpha(args.alpha)
    if args.g < 0:
        raise UsageError("genus must be >= 0")
    if args.oracle:
        value = hurwitz_oracle(args.g, alpha, cfg.oracle_budget)
        text = f"H={format_rational(value.H)} (oracle F={value.F})"
    else:
        if sum(alpha) > cfg.d_max or args.g > cfg.g_max:
            raise ResourceLimit(f"(g={args.g}, d={sum(alpha)}) exceeds d_max={cfg.d_max}, "
                                f"g_max={cfg.g_max}")
        cache = _load_cache(cfg)
        before = len(cache.entries)
        value = hurwitz_solve(args.g, alpha, cache)
        _save_cache(cfg, cache, before)
        text = f"H={format_rational(value.H)} r={value.r}"
    _emit(cfg, text, {"g": value.g, "alpha": list(value.alpha), "r": value.r,
                      "H": format_rational(value.H), "provenance": value.provenance,
                      "F": value.F})
    return EXIT_OK


def _workspace(cfg: RunConfig) -> Workspace:
    return Workspace(_load_cache(cfg))


def cmd_witten(cfg: RunConfig, args) -> int:
    ws = _workspace(cfg)
    before = len(ws.cache.entries)
    table = witten_table(args.g, args.n, ws)
    _save_cache(cfg, ws.cache, before)
    if cfg.output_format == "json":
        print(table.to_json().rstrip("\n"))
    else:
        for rec in table.records():
            b = " ".join(f"tau_{x}" for x in rec["b"])
            print(f"<{b} lambda_{rec['k']}>_{rec['g']} = {rec['value']}")
    return EXIT_OK


def cmd_lambdag(cfg: RunConfig, args) -> int:
    ws = _workspace(cfg)
    before = len(ws.cache.entries)
    report = lambda_g_check(args.g, args.n, ws)
    _save_cache(cfg, ws.cache, before)
    _emit(cfg, report.line(), {"g": report.g, "n": report.n, "pass": report.passed,
                               "c_g": None if report.c_g is None else format_rational(report.c_g)})
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_tables(cfg: RunConfig, args) -> int:
    rows = parse_rows(args.rows) if args.rows else None
    ws = _workspace(cfg)
    before = len(ws.cache.entries)
    report = table_report(args.which, rows, ws)
    _save_cache(cfg, ws.cache, before)
    if not report:
        raise UsageError(f"no {args.which} rows selected")
    for row in report:
        _emit(cfg, row.line(), row.to_json())
    return EXIT_OK if all(r.match for r in report) else EXIT_FAIL


def cmd_verify(cfg: RunConfig, args) -> int:
    ws = _workspace(cfg)
    before = len(ws.cache.entries)
    failures = []

    def report(check):
        if cfg.output_format == "json":
            print(json.dumps(check.record(), sort_keys=True))
        else:
            print(check.line())
        if not check.passed:
            failures.append(check.record())

    checks = run_suite(cfg.suite, ws, report)
    _save_cache(cfg, ws.cache, before)
    summary = {"suite": cfg.suite, "checks": len(checks), "failed": len(failures)}
    if cfg.output_format == "text":
        print(f"{len(checks) - len(failures)}/{len(checks)} checks passed")
    if failures:
        print(json.dumps({"failures": failures, **summary}, sort_keys=True), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hurwitzhodge",
                                description="Exact Hurwitz numbers, Hodge integrals and the "
                                            "lambda_g formula.")
    p.add_argument("--d-max", type=int, default=RunConfig.d_max)
    p.add_argument("--g-max", type=int, default=RunConfig.g_max)
    p.add_argument("--budget", type=int, default=RunConfig.oracle_budget,
                   help="oracle work bound on (d(d-1)/2)^r")
    p.add_argument("--cache", default=None, help=f"cache file (*.hwz.jsonl); env {CACHE_ENV}")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hurwitz", help="one Hurwitz number")
    h.add_argument("--g", type=int, required=True)
    h.add_argument("--alpha", required=True, help="comma separated parts, e.g. 2,1")
    h.add_argument("--oracle", action="store_true", help="count factorizations directly")
    h.set_defaults(func=cmd_hurwitz)

    for name, func, text in [("witten", cmd_witten, "Witten symbols from P_{g,n}"),
                             ("lambdag", cmd_lambdag, "lambda_g check at (g, n)")]:
        s = sub.add_parser(name, help=text)
        s.add_argument("--g", type=int, required=True)
        s.add_argument("--n", type=int, required=True)
        s.set_defaults(func=func)

    t = sub.add_parser("tables", help="coefficient tables one above minimum degree")
    t.add_argument("--which", choices=["g1", "higher"], default="g1")
    t.add_argument("--rows", default=None,
                   help="n values for g1, genera for higher, e.g. 1..4 or 2,3")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run an acceptance suite")
    v.add_argument("--suite", choices=sorted(SUITES), default="fast")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig(d_max=args.d_max, g_max=args.g_max, oracle_budget=args.budget,
                    cache_path=os.environ.get(CACHE_ENV) or args.cache,
                    output_format=args.format, suite=getattr(args, "suite", "fast"))
    try:
        return args.func(cfg, args)
    except (UsageError, InvalidRange, KeyError, CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, ResourceLimit) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
