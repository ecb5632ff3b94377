"""Command-line front end.

Every subcommand prints one JSON document (``export`` prints DOT or JSON).
Exit status: 0 success or pass, 1 property false or counterexample found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field

from . import catalog, construct, covers, props, search, suites
from .core import FinSpace, e_space, lambda_space, sierpinski, v_space
from .errors import FinitopError, NotNormal, NotT0
from .schemas import SCHEMAS

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    workers: int = 1
    output: str = "json"

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be at least 1")
        for v, b in self.bounds.items():
            if b < 1:
                raise ValueError(f"bound for {v} must be at least 1")


class UsageError(Exception):
    pass


_BUILTIN = {
    "sierpinski": sierpinski, "e_space": e_space, "v_space": v_space, "lambda_space": lambda_space,
}
_SIZED = {
    "discrete": FinSpace.discrete, "indiscrete": FinSpace.indiscrete,
    "chain_lower": construct.chain_lower, "chain_upper": construct.chain_upper,
    "divisor": construct.divisor_space,
}


def load_space(ref):
    """A space from a JSON file, or a built-in name such as ``sierpinski`` or ``discrete3``."""
    if os.path.exists(ref):
        with open(ref, encoding="utf-8") as fh:
            return FinSpace.from_dict(json.load(fh))
    if ref in _BUILTIN:
        return _BUILTIN[ref]()
    m = re.fullmatch(r"([a-z_]+?)_?(\d+)", ref)
    if m and m.group(1) in _SIZED:
        return _SIZED[m.group(1)](int(m.group(2)))
    raise UsageError(f"no such space file or built-in: {ref}")


def parse_bounds(text):
    bounds = {}
    for part in text.split(","):
        name, _, value = part.partition("=")
        if not value or not name.strip():
            raise UsageError(f"bad bound {part!r}; expected VAR=N")
        bounds[name.strip()] = int(value)
    return bounds


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False))


# -- subcommands -------------------------------------------------------------

def cmd_enumerate(args):
    stream = search.enumerate_spaces(args.n, args.t0, args.iso)
    spaces = list(stream)
    out = {"n": args.n, "t0_only": args.t0, "up_to_iso": args.iso, "count": len(spaces)}
    if args.list:
        out["spaces"] = [X.to_dict() for X in spaces]
    _emit(out)
    return EXIT_OK


def cmd_check(args):
    X = load_space(args.space)
    if args.property not in props.PREDICATES:
        raise UsageError(f"unknown property {args.property!r}; known: {', '.join(sorted(props.PREDICATES))}")
    rep = props.check(X, args.property)
    _emit(rep.to_dict())
    return EXIT_OK if rep.verdict else EXIT_FALSE


def cmd_decompose(args):
    X = load_space(args.space)
    try:
        dec = construct.normal_t0_decomposition(X)
    except NotT0 as e:
        _emit({"decomposed": False, "reason": str(e)})
        return EXIT_FALSE
    except NotNormal as e:
        _emit({"decomposed": False, "reason": str(e),
               "witness": [sorted(w) for w in e.witness] if e.witness else []})
        return EXIT_FALSE
    if args.format == "dot":
        sys.stdout.write(dec.to_dot())
    else:
        _emit({"decomposed": True, **dec.to_dict()})
    return EXIT_OK


def cmd_shrink(args):
    X = load_space(args.space)
    with open(args.cover, encoding="utf-8") as fh:
        U = covers.Cover.from_dict(X, json.load(fh))
    try:
        V = covers.shrink(U)
    except NotNormal as e:
        _emit({"shrinks": False, "reason": str(e), "witness": [sorted(w) for w in e.witness]})
        return EXIT_FALSE
    _emit({"shrinks": True, "shrinking": V.to_dict()})
    return EXIT_OK


def cmd_search(args):
    cfg = RunConfig("search", bounds=parse_bounds(args.bound), workers=args.workers)
    outcome = search.find_counterexample(args.where, cfg.bounds, workers=cfg.workers)
    _emit(outcome.to_dict())
    return EXIT_FALSE if outcome.found else EXIT_OK


def cmd_symbolic_verify(args):
    try:
        windows = tuple(int(w) for w in args.windows.split(","))
    except ValueError:
        raise UsageError(f"bad window list {args.windows!r}") from None
    names = [args.claim] if args.claim else None
    results = catalog.verify_catalog(windows, names)
    ok = all(r.verdict for r in results)
    _emit({"verdict": ok, "windows": list(windows), "claims": [r.to_dict() for r in results]})
    return EXIT_OK if ok else EXIT_FALSE


def cmd_suite(args):
    rep = suites.run_suite(args.id, args.max_n, samples=args.samples, seed=args.seed)
    _emit(rep.to_dict())
    return EXIT_OK if rep.passed else EXIT_FALSE


def cmd_export(args):
    X = load_space(args.space)
    if args.format == "dot":
        sys.stdout.write(X.to_dot())
    else:
        _emit(X.to_dict())
    return EXIT_OK


def cmd_schema(args):
    _emit(SCHEMAS[args.name])
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="finitop", description="Finite topological spaces as preorders.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="count (and optionally list) spaces on n points")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t0", action="store_true", help="posets only")
    s.add_argument("--iso", action="store_true", help="one space per homeomorphism class")
    s.add_argument("--list", action="store_true", help="include the spaces in the report")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check", help="evaluate one property")
    s.add_argument("--space", required=True)
    s.add_argument("--property", required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("decompose", help="retract a normal T0 space onto its maximal points")
    s.add_argument("--space", required=True)
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("shrink", help="shrink an open cover")
    s.add_argument("--space", required=True)
    s.add_argument("--cover", required=True)
    s.set_defaults(func=cmd_shrink)

    s = sub.add_parser("search", help="find the first spaces satisfying a query")
    s.add_argument("--where", required=True)
    s.add_argument("--bound", required=True, help="e.g. X=4,Y=3")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("symbolic-verify", help="run the countable-space claim catalog")
    s.add_argument("--claim", choices=sorted(catalog.CLAIMS))
    s.add_argument("--windows", default="8,32,128")
    s.set_defaults(func=cmd_symbolic_verify)

    s = sub.add_parser("suite", help="run an exhaustive theorem suite")
    s.add_argument("--id", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("export", help="write a space as DOT or JSON")
    s.add_argument("--space", required=True)
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("schema", help="print the JSON schema of a format or report")
    s.add_argument("name", choices=sorted(SCHEMAS))
    s.set_defaults(func=cmd_schema)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, FinitopError, KeyError, ValueError, OSError, SyntaxError) as e:
        print(f"finitop {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
