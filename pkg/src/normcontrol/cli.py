"""Command-line front end.

Subcommands:

  invert    read one element (JSON), write a certified inverse (JSON)
  certify   run a bound-certification campaign, write a CSV (or JSON) report
  sweep     cross-product campaigns over kind/p/delta/group grids, CSV out
  search    hill-climb a lower bound for the inversion constant, JSON out
  bezout    solve sum x_k y_k = 1 for a JSON array of elements, JSON out

Exit status: 0 success, 1 hypothesis violation (message names the failed
precondition), 2 parse/config error, 3 not invertible.

Real-valued flags (p, delta) are parsed as decimal strings and echoed back
verbatim in reports; computation is double precision.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._version import __version__
from .algebra import AlgebraKind, Family, norm, unit_one, unitized_multiply
from .errors import (
    ConsistencyError,
    GroupMismatchError,
    HypothesisViolated,
    NotInvertible,
    SamplingExhausted,
)
from .group import Group
from .harness import (
    SampleSpec,
    Strategy,
    certify_campaign,
    extremal_search,
    sweep,
)
from .inversion import auto_invert, bezout_solve, invert_with
from . import serialize


def _parse_group(token: str) -> Group:
    text = token.strip().strip("[]")
    orders = tuple(int(part) for part in text.split(",") if part.strip())
    if not orders:
        raise ValueError(f"cannot parse group {token!r}")
    return Group(orders)


def _parse_family(token: str) -> Family:
    key = token.strip().lower()
    if key == "ap":
        return Family.AP
    if key == "lp":
        return Family.LP
    raise ValueError(f"unknown kind {token!r}; expected 'ap' or 'lp'")


def _parse_strategy(token: str) -> Strategy:
    key = token.strip().lower()
    if key in ("spectral", "spectralrejection", "rejection"):
        return Strategy.SPECTRAL_REJECTION
    if key in ("boundary", "boundarybiased"):
        return Strategy.BOUNDARY_BIASED
    raise ValueError(f"unknown strategy {token!r}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_invert(args) -> int:
    kind = AlgebraKind(_parse_family(args.kind), float(args.p))
    delta = float(args.delta) if args.delta is not None else None
    x = serialize.element_from_dict(json.loads(_read_text(args.infile)))
    if args.theorem.strip().lower() == "auto":
        ci = auto_invert(x, kind, delta)
    else:
        theorem = serialize.theorem_from_token(args.theorem)
        ci = invert_with(theorem, x, kind, delta,
                         norm_tol=args.norm_tol, gap_tol=args.gap_tol)
    text = serialize.dumps(serialize.inverse_to_dict(ci))
    _write_text(args.out, text)
    if args.check:
        reread = serialize.element_from_dict(json.loads(text)["inverse"])
        resid = norm(unitized_multiply(x, reread) - unit_one(x.group), kind)
        if resid > 1e-9:
            raise ConsistencyError(
                f"round-trip check failed: residual {resid:.3e} > 1e-9")
        print(f"check: residual={resid:.3e} ok", file=sys.stderr)
    return 0


def _cmd_certify(args) -> int:
    kind = AlgebraKind(_parse_family(args.kind), float(args.p))
    spec = SampleSpec(
        group=_parse_group(args.group),
        kind=kind,
        delta=float(args.delta),
        seed=args.seed,
        strategy=_parse_strategy(args.strategy),
    )
    theorem = serialize.theorem_from_token(args.theorem)
    report = certify_campaign(spec, theorem, args.trials, jobs=args.jobs,
                              cross_check=args.cross_check)
    if args.format == "json":
        _write_text(args.out, serialize.dumps(serialize.report_to_dict(report)))
    else:
        _write_text(args.out, serialize.report_to_csv(report, args.p, args.delta))
    return 0


def _cmd_sweep(args) -> int:
    families = [_parse_family(tok) for tok in args.kinds.split(",") if tok.strip()]
    deltas = [tok.strip() for tok in args.deltas.split(",") if tok.strip()]
    ps = [tok.strip() for tok in args.ps.split(",") if tok.strip()]
    groups = [_parse_group(tok) for tok in args.groups.split(";") if tok.strip()]
    theorems = None
    if args.theorems:
        theorems = [serialize.theorem_from_token(t)
                    for t in args.theorems.split(",") if t.strip()]
    cells = sweep(families, deltas, ps, groups, args.trials, seed=args.seed,
                  strategy=_parse_strategy(args.strategy), theorems=theorems,
                  jobs=args.jobs)
    _write_text(args.out, serialize.cells_to_csv(cells, args.trials))
    return 0


def _cmd_search(args) -> int:
    kind = AlgebraKind(_parse_family(args.kind), float(args.p))
    est = extremal_search(kind, float(args.delta), _parse_group(args.group),
                          args.iterations, args.seed, restarts=args.restarts)
    _write_text(args.out, serialize.dumps(serialize.estimate_to_dict(est)))
    return 0


def _cmd_bezout(args) -> int:
    kind = AlgebraKind(_parse_family(args.kind), float(args.p))
    data = json.loads(_read_text(args.infile))
    xs = [serialize.element_from_dict(item) for item in data]
    sol = bezout_solve(xs, kind)
    _write_text(args.out, serialize.dumps(serialize.bezout_to_dict(sol)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normcontrol",
        description="Certified inversion in unitized convolution algebras "
                    "on finite abelian groups.")
    parser.add_argument("--version", action="version",
                        version=f"normcontrol {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kind(p):
        p.add_argument("--kind", required=True, help="algebra family: ap or lp")
        p.add_argument("--p", required=True, help="norm exponent (decimal string)")

    inv = sub.add_parser("invert", help="invert one element with a certificate")
    add_kind(inv)
    inv.add_argument("--in", dest="infile", default="-", help="element JSON path")
    inv.add_argument("--out", default="-", help="output path (default stdout)")
    inv.add_argument("--theorem", default="auto",
                     help="auto, oracle, splitting, thm5, thm6, thm7, lp1, lp2")
    inv.add_argument("--delta", default=None, help="hypothesis gap level")
    inv.add_argument("--check", action="store_true",
                     help="re-read the emitted inverse and verify the residual")
    inv.add_argument("--norm-tol", type=float, default=1e-12)
    inv.add_argument("--gap-tol", type=float, default=1e-12)
    inv.set_defaults(func=_cmd_invert)

    cert = sub.add_parser("certify", help="randomized bound certification")
    add_kind(cert)
    cert.add_argument("--theorem", required=True)
    cert.add_argument("--delta", required=True)
    cert.add_argument("--group", required=True, help="e.g. 8 or 3,4")
    cert.add_argument("--trials", type=int, required=True)
    cert.add_argument("--seed", type=int, default=0)
    cert.add_argument("--strategy", default="boundary")
    cert.add_argument("--jobs", type=int, default=1)
    cert.add_argument("--cross-check", action="store_true",
                      help="also measure distance to the oracle inverse")
    cert.add_argument("--format", choices=("csv", "json"), default="csv")
    cert.add_argument("--out", default="-")
    cert.set_defaults(func=_cmd_certify)

    sw = sub.add_parser("sweep", help="campaign grid over kind/p/delta/group")
    sw.add_argument("--kinds", default="ap,lp")
    sw.add_argument("--ps", required=True, help="comma-separated exponents")
    sw.add_argument("--deltas", required=True, help="comma-separated gap levels")
    sw.add_argument("--groups", required=True, help="semicolon-separated groups")
    sw.add_argument("--trials", type=int, required=True)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--strategy", default="boundary")
    sw.add_argument("--theorems", default=None,
                    help="restrict to these theorems (comma-separated)")
    sw.add_argument("--jobs", type=int, default=1)
    sw.add_argument("--out", default="-")
    sw.set_defaults(func=_cmd_sweep)

    se = sub.add_parser("search", help="extremal lower-bound search")
    add_kind(se)
    se.add_argument("--delta", required=True)
    se.add_argument("--group", required=True)
    se.add_argument("--iterations", type=int, default=5000)
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--restarts", type=int, default=8)
    se.add_argument("--out", default="-")
    se.set_defaults(func=_cmd_search)

    bz = sub.add_parser("bezout", help="solve sum x_k y_k = 1 with norm control")
    add_kind(bz)
    bz.add_argument("--in", dest="infile", default="-",
                    help="JSON array of elements")
    bz.add_argument("--out", default="-")
    bz.set_defaults(func=_cmd_bezout)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotInvertible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, TypeError, OSError, GroupMismatchError,
            SamplingExhausted, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
