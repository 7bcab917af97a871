"""Command-line front end with deterministic text/JSON output.

Exit codes: 0 success, 2 parse error, 3 resource bound exceeded,
4 internal consistency failure (oracle mismatch, corrupt data).
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import hurwitz as hz
from .errors import BoundError, ConsistencyError, ParseError
from .characters import char_table
from .class_algebra import (
    mult_sum,
    oracle_structure_constant,
    structure_constant,
)
from .partitions import (
    class_size,
    degree,
    format_fraction,
    format_partition,
    parse_diagram_sum,
    parse_partition,
    partitions_of,
)
from .psym import PPoly, parse_ppoly, schur
from .w_ops import EXPLICIT_OPS, apply_explicit, apply_spectral, eigenvalue

DEFAULT_SEED = 20101146


@dataclass
class CliConfig:
    cache_dir: str = None
    max_degree: int = 10
    output: str = "text"
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.max_degree > 14:
            raise BoundError("max_degree is capped at 14")


def _emit(config: CliConfig, text_value, json_obj):
    if config.output == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        print(text_value)


def cmd_mult(config: CliConfig, args):
    a = parse_diagram_sum(args.left)
    b = parse_diagram_sum(args.right)
    result = mult_sum(a, b)
    _emit(config, result.to_text(), {"result": result.to_json_obj()})


def cmd_chartable(config: CliConfig, args):
    table = char_table(args.n, max_degree=config.max_degree)
    lines = ["classes: " + " ".join(format_partition(p) for p in table.order)]
    for r in table.order:
        lines.append(
            "%s: %s" % (format_partition(r), " ".join(str(x) for x in table.row(r)))
        )
    _emit(config, "\n".join(lines), table.to_json_obj())


def cmd_schur(config: CliConfig, args):
    r = parse_partition(args.r)
    if degree(r) > config.max_degree:
        raise BoundError("degree %d exceeds max degree %d" % (degree(r), config.max_degree))
    f = schur(r)
    _emit(config, f.to_text(), f.to_json_obj())


def cmd_eigenvalue(config: CliConfig, args):
    v = eigenvalue(parse_partition(args.delta), parse_partition(args.r))
    _emit(config, format_fraction(v), {"value": format_fraction(v)})


def cmd_wapply(config: CliConfig, args):
    delta = parse_partition(args.delta)
    f = parse_ppoly(args.poly)
    if args.explicit:
        result = apply_explicit(delta, f)
    else:
        result = apply_spectral(delta, f)
    _emit(config, result.to_text(), result.to_json_obj())


def cmd_hurwitz(config: CliConfig, args):
    classes = [parse_partition(t) for t in args.classes]
    n = args.n if args.n is not None else (degree(classes[0]) if classes else 0)
    for d in classes:
        if degree(d) != n:
            raise ParseError("class %s does not have degree %d" % (format_partition(d), n))
    value = hz.hurwitz_chain(classes) if classes else Fraction(0)
    _emit(
        config,
        format_fraction(value),
        {
            "n": n,
            "branches": [list(d) for d in classes],
            "value": format_fraction(value),
        },
    )


def cmd_evolve(config: CliConfig, args):
    directions = [parse_partition(t) for t in args.directions]
    if args.p_bound > config.max_degree:
        raise BoundError("p-bound %d exceeds max degree %d" % (args.p_bound, config.max_degree))
    series = hz.generating_function(directions, p_bound=args.p_bound, order=args.order)
    obj = series.to_json_obj()
    lines = []
    for term in obj["terms"]:
        beta = " ".join("b%s^%d" % (p, k) for p, k in term["beta"].items()) or "1"
        mono = format_partition(tuple(term["mono"]))
        lines.append("%s | p_%s : %s" % (beta, mono, term["coef"]))
    _emit(config, "\n".join(lines), obj)


def _selftest_suites(level: str, seed: int):
    """Oracle-equivalence suites; returns a deterministic report object."""
    rng = random.Random(seed)
    n_max = 4 if level == "quick" else 5
    suites = []

    # structure constants vs permutation enumeration
    cases = failures = 0
    for n in range(1, n_max + 1):
        parts = partitions_of(n)
        for d1 in parts:
            for d2 in parts:
                for d in parts:
                    cases += 1
                    if structure_constant(d1, d2, d) != oracle_structure_constant(d1, d2, d):
                        failures += 1
    if level == "full":
        parts6 = partitions_of(6)
        for _ in range(25):
            d1, d2, d = (rng.choice(parts6) for _ in range(3))
            cases += 1
            if structure_constant(d1, d2, d) != oracle_structure_constant(d1, d2, d):
                failures += 1
    suites.append({"name": "structure_constants_vs_oracle", "cases": cases,
                   "failures": failures})

    # Hurwitz chains vs tuple counts
    cases = failures = 0
    for n in range(1, min(n_max, 4) + 1):
        parts = partitions_of(n)
        triples = [(a, b, c) for a in parts for b in parts for c in parts]
        if len(triples) > 60:
            triples = rng.sample(triples, 60)
        for tup in triples:
            cases += 1
            if hz.hurwitz_chain(tup) != hz.oracle_tuple_count(tup, n):
                failures += 1
    suites.append({"name": "hurwitz_chain_vs_tuple_oracle", "cases": cases,
                   "failures": failures})

    # explicit operators vs spectral route
    cases = failures = 0
    deg_max = 4 if level == "quick" else 5
    for delta in sorted(EXPLICIT_OPS, key=lambda d: (degree(d), d)):
        for n in range(deg_max + 1):
            for mono in partitions_of(n):
                f = PPoly({mono: 1})
                cases += 1
                if apply_explicit(delta, f) != apply_spectral(delta, f):
                    failures += 1
    suites.append({"name": "explicit_vs_spectral_operators", "cases": cases,
                   "failures": failures})

    # character table orthogonality
    cases = failures = 0
    for n in range(1, n_max + 1):
        cases += 1
        try:
            char_table(n).check_orthogonality()
        except ConsistencyError:
            failures += 1
    suites.append({"name": "character_table_orthogonality", "cases": cases,
                   "failures": failures})

    # class sizes tile n!
    cases = failures = 0
    for n in range(1, n_max + 3):
        cases += 1
        if sum(class_size(p) for p in partitions_of(n)) != math.factorial(n):
            failures += 1
    suites.append({"name": "class_sizes_sum_to_factorial", "cases": cases,
                   "failures": failures})

    ok = all(s["failures"] == 0 for s in suites)
    return {"level": level, "seed": seed, "suites": suites, "ok": ok}


def cmd_selftest(config: CliConfig, args):
    report = _selftest_suites(args.level, config.seed)
    if config.output == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        for s in report["suites"]:
            print("%s: %d cases, %d failures" % (s["name"], s["cases"], s["failures"]))
        print("selftest %s: %s" % (report["level"], "PASS" if report["ok"] else "FAIL"))
    if not report["ok"]:
        raise ConsistencyError("selftest failures: see report")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="diagram-ops",
        description="Exact algebra of Young diagrams, characters, "
                    "cut-and-join operators and Hurwitz numbers.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    parser.add_argument("--max-degree", type=int, default=10)
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="product of two diagram sums")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("chartable", help="character table of S_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("schur", help="Schur function in power sums")
    p.add_argument("r")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("eigenvalue", help="eigenvalue of W(delta) on schur(R)")
    p.add_argument("delta")
    p.add_argument("r")
    p.set_defaults(func=cmd_eigenvalue)

    p = sub.add_parser("wapply", help="apply W(delta) to a polynomial")
    p.add_argument("delta")
    p.add_argument("poly")
    p.add_argument("--explicit", action="store_true",
                   help="use the tabulated differential operator")
    p.set_defaults(func=cmd_wapply)

    p = sub.add_parser("hurwitz", help="Hurwitz bracket of equal-degree classes")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("classes", nargs="+")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("evolve", help="generating function of Hurwitz numbers")
    p.add_argument("--p-bound", type=int, default=4)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("directions", nargs="+")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("selftest", help="run oracle-equivalence suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = CliConfig(
            cache_dir=args.cache_dir,
            max_degree=args.max_degree,
            output="json" if args.json else "text",
            seed=args.seed,
        )
        if config.cache_dir is not None:
            import os

            os.environ["DIAGRAM_OPS_CACHE_DIR"] = config.cache_dir
        args.func(config, args)
        return 0
    except ParseError as e:
        _fail(args, "parse", e)
        return 2
    except (BoundError, RecursionError) as e:
        _fail(args, "resource", e)
        return 3
    except ConsistencyError as e:
        _fail(args, "consistency", e)
        return 4


def _fail(args, kind, exc):
    if getattr(args, "json", False):
        print(json.dumps({"error": {"kind": kind, "msg": str(exc)}}, sort_keys=True))
    else:
        print("error (%s): %s" % (kind, exc), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
