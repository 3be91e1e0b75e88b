"""Command-line entry point: ``spectough <command> ...``.

Exit codes: 0 success or check passed, 1 check failed or counterexample,
2 usage error, 3 input error.  Machine output goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction

from . import verify as V
from .codecs import FORMATS, parse_graph, sniff_format, write_graph
from .errors import (
    InvalidArgument,
    NotConnectedError,
    NumericFailure,
    ParseError,
    SizeGuardError,
    ToughnessUndefinedError,
)
from .families import (
    OneTough,
    Rdelta,
    Rint,
    Rs,
    RsDelta,
    Rts,
    Split,
    SplitFamilyParams,
    TFracTough,
    TIntTough,
    build_extremal,
    closed_form_quotient,
)
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, charpoly3, distance_bounds, distance_matrix, spectral_radius, wiener_indices
from .toughness import DEFAULT_LIMIT, toughness_exact

log = logging.getLogger("spectough")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

SWEEP_COLUMNS = ("n", "seed_index", "lambda1", "threshold", "margin", "tau", "verdict")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, default=V._jsonable)


def _read_graph(path: str, fmt: str | None):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
            if fmt is None:
                first = data.split(b"\n", 1)[0].split()
                fmt = "edge-list" if len(first) == 2 and all(t.isdigit() for t in first) else "graph6"
        else:
            with open(path, "rb") as fh:
                data = fh.read()
            if fmt is None:
                fmt = sniff_format(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        return parse_graph(data, fmt)
    except (ParseError, InvalidArgument) as exc:
        raise InputError(f"{path}: {exc}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _family(args):
    kind = args.kind
    if kind == "one-tough":
        _require(args, "n", "delta")
        return OneTough(args.n, args.delta)
    if kind == "t-int":
        _require(args, "n", "t")
        if args.t.denominator != 1:
            raise UsageError("--t must be an integer for t-int")
        return TIntTough(args.n, int(args.t))
    if kind == "t-frac":
        _require(args, "n")
        if args.q is None:
            _require(args, "t")
            if args.t.numerator != 1:
                raise UsageError("--t must be 1/q for t-frac")
            return TFracTough(args.n, args.t.denominator)
        return TFracTough(args.n, args.q)
    if kind == "split":
        _require(args, "s", "parts")
        return Split(SplitFamilyParams(args.s, args.parts))
    raise UsageError(f"unknown family kind {kind}")


def _quotient_kind(args):
    kind = args.kind
    if kind == "rdelta":
        _require(args, "n", "delta")
        return Rdelta(args.n, args.delta)
    if kind == "rs":
        _require(args, "n", "s")
        return Rs(args.n, args.s)
    if kind == "rsdelta":
        _require(args, "n", "s", "delta")
        return RsDelta(args.n, args.s, args.delta)
    if kind == "rts":
        _require(args, "n", "t", "s")
        return Rts(args.n, args.t, args.s)
    if kind == "rint":
        _require(args, "n", "t")
        return Rint(args.n, int(args.t))
    raise UsageError(f"unknown quotient kind {kind}")


def _theorem(name: str, param: Fraction):
    if name == "t1":
        if param.denominator != 1:
            raise UsageError("t1 takes an integer minimum degree")
        return V.T1(int(param))
    if name == "t2i":
        if param.denominator != 1:
            raise UsageError("t2i takes an integer t")
        return V.T2i(int(param))
    if param.numerator != 1:
        raise UsageError("t2ii takes t = 1/q, e.g. --param 1/2")
    return V.T2ii(param.denominator)


def _limit(args) -> int:
    if args.limit > DEFAULT_LIMIT and not args.allow_exponential:
        raise UsageError(f"--limit above {DEFAULT_LIMIT} needs --allow-exponential (cost grows as 2^n)")
    return args.limit


def _add_graph_input(p):
    p.add_argument("file", help="graph file (.g6 or .el), or - for stdin")
    p.add_argument("--format", choices=FORMATS, help="override format sniffing")


def _add_limit(p):
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="enumeration size guard")
    p.add_argument("--allow-exponential", action="store_true",
                   help="acknowledge exponential cost when raising --limit")


def _add_params(p):
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--t", type=_fraction)
    p.add_argument("--q", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--parts", type=_parts, help="comma-separated nonincreasing part sizes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectough", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dsr", help="distance spectral radius")
    _add_graph_input(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)

    p = sub.add_parser("toughness", help="exact toughness")
    _add_graph_input(p)
    _add_limit(p)

    p = sub.add_parser("bounds", help="2W/n and sqrt(2(n-1)W2/n) bounds")
    _add_graph_input(p)

    p = sub.add_parser("wiener", help="Wiener index W and W2")
    _add_graph_input(p)

    p = sub.add_parser("family", help="build an extremal family graph")
    p.add_argument("--kind", required=True, choices=("one-tough", "t-int", "t-frac", "split"))
    p.add_argument("--output-format", choices=FORMATS, default="graph6")
    _add_params(p)

    p = sub.add_parser("quotient", help="closed-form quotient matrix")
    p.add_argument("--kind", required=True, choices=("rdelta", "rs", "rsdelta", "rts", "rint"))
    _add_params(p)

    p = sub.add_parser("verify", help="run one lemma or identity check")
    p.add_argument("--check", required=True,
                   choices=("lemma1", "lemma2", "bounds", "compmin", "perron", "charpoly"))
    p.add_argument("--kind", help="family kind for lemma2, matrix kind for charpoly")
    p.add_argument("file", nargs="?", help="graph file for lemma1 and bounds")
    p.add_argument("--format", choices=FORMATS)
    _add_params(p)

    p = sub.add_parser("check", help="classify a graph against a theorem")
    p.add_argument("--theorem", required=True, choices=("t1", "t2i", "t2ii"))
    p.add_argument("--param", required=True, type=_fraction,
                   help="delta for t1, t for t2i, 1/q for t2ii")
    _add_graph_input(p)
    _add_limit(p)

    p = sub.add_parser("sweep", help="counterexample sweep over a graph population")
    p.add_argument("--model", required=True, choices=("random", "exhaustive"))
    p.add_argument("--theorem", required=True, choices=("t1", "t2i", "t2ii"))
    p.add_argument("--param", required=True, type=_fraction)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--min-delta", type=int, default=0)
    p.add_argument("--max-n", type=int)
    p.add_argument("--output", choices=("json", "csv"), default="json")
    _add_limit(p)
    return parser


def _cmd_dsr(args, out):
    g = _read_graph(args.file, args.format)
    res = spectral_radius(distance_matrix(g), args.tol, args.max_iter)
    out.write(_dump(res.to_json()) + "\n")
    return EXIT_OK


def _cmd_toughness(args, out):
    g = _read_graph(args.file, args.format)
    out.write(_dump(toughness_exact(g, _limit(args)).to_json()) + "\n")
    return EXIT_OK


def _cmd_bounds(args, out):
    g = _read_graph(args.file, args.format)
    lower, upper = distance_bounds(g)
    out.write(_dump({"lower": lower, "upper": upper}) + "\n")
    return EXIT_OK


def _cmd_wiener(args, out):
    g = _read_graph(args.file, args.format)
    w, w2 = wiener_indices(g)
    out.write(_dump({"W": w, "W2": w2}) + "\n")
    return EXIT_OK


def _cmd_family(args, out):
    g = build_extremal(_family(args))
    out.write(write_graph(g, args.output_format).decode("ascii").rstrip("\n") + "\n")
    return EXIT_OK


def _cmd_quotient(args, out):
    q = closed_form_quotient(_quotient_kind(args))
    body = q.to_json()
    body["charpoly"] = [str(c) for c in charpoly3(q)]
    body["lambda1"] = q.largest_eigenvalue()
    out.write(_dump(body) + "\n")
    return EXIT_OK


def _cmd_verify(args, out):
    check = args.check
    if check in ("lemma1", "bounds"):
        if args.file is None:
            raise UsageError(f"--check {check} needs a graph file")
        g = _read_graph(args.file, args.format)
        rep = V.check_lemma1(g) if check == "lemma1" else V.check_bounds(g)
    elif check == "lemma2":
        if args.kind is None:
            raise UsageError("--check lemma2 needs --kind")
        rep = V.check_lemma2_consistency(_family(args))
    elif check == "compmin":
        _require(args, "n", "s", "c")
        rep = V.check_composition_min(args.n, args.s, args.c, args.p or 1)
    elif check == "perron":
        _require(args, "n", "s", "c")
        rep = V.check_perron_ratio(args.n, args.s, args.c, args.p or 1)
    else:
        if args.kind not in ("rdelta", "rsdelta", "rts"):
            raise UsageError("--check charpoly needs --kind rdelta|rsdelta|rts")
        if args.kind == "rdelta":
            _require(args, "n", "delta")
            rep = V.check_charpoly("rdelta", n=args.n, delta=args.delta)
        elif args.kind == "rsdelta":
            _require(args, "n", "s", "delta")
            rep = V.check_charpoly("rsdelta", n=args.n, s=args.s, delta=args.delta)
        else:
            _require(args, "n", "t", "s")
            rep = V.check_charpoly("rts", n=args.n, t=args.t, s=args.s)
    out.write(rep.dumps() + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_check(args, out):
    g = _read_graph(args.file, args.format)
    cls = V.check_theorem(g, _theorem(args.theorem, args.param), _limit(args))
    out.write(_dump(cls.to_json()) + "\n")
    return EXIT_FAIL if cls.verdict == "Counterexample" else EXIT_OK


def _cmd_sweep(args, out):
    which = _theorem(args.theorem, args.param)
    if args.model == "random":
        _require(args, "n")
        pop = V.RandomPopulation(args.n, args.count, args.seed, args.min_delta)
    else:
        _require(args, "max_n")
        pop = V.ExhaustivePopulation(args.max_n)
    rep = V.sweep(pop, which, _limit(args))
    if args.output == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rep.details:
            writer.writerow({k: row[k] for k in SWEEP_COLUMNS})
        out.write(buf.getvalue())
    else:
        out.write(rep.dumps() + "\n")
    log.info("sweep verdicts: %s", rep.counts)
    return EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS = {
    "dsr": _cmd_dsr,
    "toughness": _cmd_toughness,
    "bounds": _cmd_bounds,
    "wiener": _cmd_wiener,
    "family": _cmd_family,
    "quotient": _cmd_quotient,
    "verify": _cmd_verify,
    "check": _cmd_check,
    "sweep": _cmd_sweep,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"spectough: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidArgument as exc:
        print(f"spectough: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, NotConnectedError, ToughnessUndefinedError, SizeGuardError) as exc:
        print(f"spectough: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericFailure as exc:
        print(f"spectough: numeric failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
