"""Command line front end: batch verification plus small algebra tools."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .algebra.field import FieldError, PrimeField
from .algebra.monomial import OrderKind
from .algebra.textio import ParseError, format_polynomial, parse_ideal_text
from .groebner import GroebnerTimeout, Ideal
from .hilbert import NotHomogeneous, data_from_series, hilbert_series
from .scenarios import CHECK_NAMES, METHODS, SUBSPACE_MODES, CheckResult, FanoConfiguration, run_check
from .schubert import grassmannian_degree

# JSON Schema (draft 2020-12) every verification report conforms to.
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "fanochords verification report",
    "type": "object",
    "required": ["version", "config", "checks", "overall", "total_ms"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "config": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "expected", "computed", "certificate",
                             "prime", "seeds", "ms"],
                "additionalProperties": False,
                "properties": {
                    "name": {"enum": list(CHECK_NAMES)},
                    "status": {"enum": ["pass", "fail", "timeout"]},
                    "expected": {"type": "object"},
                    "computed": {"type": "object"},
                    "certificate": {"type": "object"},
                    "prime": {"type": "integer", "minimum": 2},
                    "seeds": {"type": "array", "items": {"type": "integer"}},
                    "ms": {"type": "integer", "minimum": 0},
                },
            },
        },
        "overall": {"enum": ["pass", "fail"]},
        "total_ms": {"type": "integer", "minimum": 0},
    },
}


@dataclass
class RunConfig:
    checks: tuple[str, ...]
    prime: int = 32003
    seed: int = 0
    method: str | None = None
    subspaces: str = "general"
    trials: int = 3
    timeout: float = 600.0
    out: str | None = None
    timings: bool = True
    jobs: int = 1
    verbose: bool = False

    def __post_init__(self):
        unknown = [c for c in self.checks if c not in CHECK_NAMES]
        if unknown:
            raise ValueError(f"unknown check(s): {', '.join(unknown)}")
        PrimeField(self.prime)
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")

    def fano(self) -> FanoConfiguration:
        return FanoConfiguration(self.prime, self.seed, self.subspaces, self.method, self.trials)

    def echo(self) -> dict:
        return {"checks": list(self.checks), **self.fano().as_json(), "timeout_secs": self.timeout}


def _run_one(args: tuple[str, FanoConfiguration, float]) -> CheckResult:
    name, cfg, timeout = args
    return run_check(name, cfg, timeout)


def run(config: RunConfig) -> dict:
    """Execute the selected checks and assemble the report (ordered by check name)."""
    start = time.monotonic()
    cfg = config.fano()
    jobs = [(name, cfg, config.timeout) for name in config.checks]
    if config.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = []
        for job in jobs:
            results.append(_run_one(job))
            if config.verbose:
                r = results[-1]
                print(f"{r.name}: {r.status} ({r.ms} ms)", file=sys.stderr)
    results.sort(key=lambda r: r.name)
    if not config.timings:
        for r in results:
            r.ms = 0
    total = int(round(1000 * (time.monotonic() - start))) if config.timings else 0
    overall = "pass" if all(r.status == "pass" for r in results) else "fail"
    return {"version": __version__, "config": config.echo(),
            "checks": [r.to_json() for r in results], "overall": overall, "total_ms": total}


def report_text(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fanochords", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run named checks and write a JSON report")
    v.add_argument("names", nargs="*", default=["all"], metavar="NAME",
                   help=f"checks to run, or 'all' ({', '.join(CHECK_NAMES)})")
    v.add_argument("--prime", type=int, default=32003)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--method", choices=METHODS, default=None,
                   help="run only one degree route (default: both)")
    v.add_argument("--subspaces", choices=SUBSPACE_MODES, default="general")
    v.add_argument("--trials", type=int, default=3, help="random trials per check")
    v.add_argument("--timeout-secs", type=float, default=600.0)
    v.add_argument("--out", default=None, help="report path (default: stdout)")
    v.add_argument("--no-timings", action="store_true",
                   help="write 0 for durations so reports are byte-identical")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("-v", "--verbose", action="store_true")

    g = sub.add_parser("gb", help="reduced Gröbner basis of an ideal file")
    g.add_argument("file")
    g.add_argument("--order", default=None, help="lex, grevlex or elim:k (default: file header)")
    g.add_argument("--timeout-secs", type=float, default=600.0)

    h = sub.add_parser("hilbert", help="Hilbert series data of a homogeneous ideal file")
    h.add_argument("file")
    h.add_argument("--timeout-secs", type=float, default=600.0)

    sub.add_parser("schema", help="print the JSON schema of verification reports")

    s = sub.add_parser("schubert-degree", help="degree of G(k, n) by Pieri")
    s.add_argument("k", type=int)
    s.add_argument("n", type=int)
    return p


def _read_ideal(parser, path: str):
    try:
        return parse_ideal_text(Path(path).read_text())
    except OSError as exc:
        parser.exit(2, f"fanochords: cannot read {path}: {exc.strerror}\n")
    except (ParseError, FieldError, ValueError) as exc:
        parser.exit(2, f"fanochords: {path}: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        names = tuple(CHECK_NAMES) if args.names in (["all"], []) else tuple(args.names)
        try:
            config = RunConfig(names, args.prime, args.seed, args.method, args.subspaces,
                               args.trials, args.timeout_secs, args.out, not args.no_timings,
                               args.jobs, args.verbose)
        except (ValueError, FieldError) as exc:
            parser.error(str(exc))
        report = run(config)
        text = report_text(report)
        if config.out:
            Path(config.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0 if report["overall"] == "pass" else 1

    if args.command == "gb":
        ring, gens = _read_ideal(parser, args.file)
        if args.order:
            try:
                ring = ring.with_order(OrderKind.parse(args.order))
            except ValueError as exc:
                parser.error(str(exc))
        try:
            gb = Ideal(ring, [g.to_ring(ring) for g in gens]).groebner(timeout=args.timeout_secs)
        except GroebnerTimeout as exc:
            print(f"fanochords: {exc} {exc.progress}", file=sys.stderr)
            return 3
        for g in gb:
            print(format_polynomial(g))
        return 0

    if args.command == "hilbert":
        ring, gens = _read_ideal(parser, args.file)
        try:
            hs = hilbert_series(Ideal(ring, gens), timeout=args.timeout_secs)
        except NotHomogeneous as exc:
            parser.exit(2, f"fanochords: {exc}\n")
        except GroebnerTimeout as exc:
            print(f"fanochords: {exc} {exc.progress}", file=sys.stderr)
            return 3
        data = data_from_series(hs)
        num, d = hs.reduced()
        out = {"numerator": list(hs.numerator), "reduced_numerator": list(num),
               "denominator_exponent": d, "dimension": data.projective_dimension,
               "degree": data.degree, "hilbert_polynomial": data.polynomial_text("t")}
        if data.projective_dimension == 1:
            out["genus"] = int(1 - data.evaluate(0))
        print(json.dumps(out))
        return 0

    if args.command == "schema":
        print(json.dumps(REPORT_SCHEMA, indent=2))
        return 0

    if args.command == "schubert-degree":
        try:
            print(grassmannian_degree(args.k, args.n))
        except ValueError as exc:
            parser.error(str(exc))
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
