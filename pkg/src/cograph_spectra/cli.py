"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (not a cograph, invalid
balanced parameters, malformed cotree or edge list), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .balanced import full_spectrum, spectrum_to_json
from .cotree import (
    BalancedParams,
    Cotree,
    CotreeError,
    InvalidParams,
    NotACograph,
    balanced_cotree,
    cotree_to_json,
    expand_to_graph,
    parse_cotree,
    parse_edge_list,
    recognize_cograph,
    serialize_cotree,
)
from .diagonalize import diagonalize_shifted, eigenvalue_counts, integer_spectrum, locate_all
from .generate import random_cotree
from .interlacing import estimate_spectrum
from .numeric import format_rational, parse_rational, rational_to_json
from .oracle import adjacency, exact_inertia


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--cotree", metavar="PATH", help="cotree text file (*.ct)")
    src.add_argument("--edges", metavar="PATH", help="edge list file, one 'u v' pair per line")
    src.add_argument("--balanced", metavar="A1,...,AR", help="balanced cotree parameters")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="cograph-spectra", description="Exact adjacency spectra of cographs.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="integer eigenvalues with multiplicities")
    p = sub.add_parser("inertia", parents=[common], help="eigenvalue counts around a point")
    p.add_argument("--at", type=_rational_arg, required=True, metavar="RATIONAL")
    p = sub.add_parser("locate", parents=[common], help="all eigenvalues, exactly or in small intervals")
    p.add_argument("--tol", type=_rational_arg, default=Fraction(1, 2**40), metavar="RATIONAL")
    sub.add_parser("interlace", parents=[common], help="eigenvalue bounds from the balanced completion")
    sub.add_parser("recognize", parents=[common], help="cotree of a cograph given as an edge list")
    p = sub.add_parser("verify", parents=[common], help="random cross-check of the cotree algorithm against dense elimination")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50, help="number of random cographs")
    p.add_argument("--max-n", type=int, default=32, help="largest cograph order")
    p.add_argument("--shifts", type=int, default=5, help="random integer shifts per cograph")
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load(args) -> tuple[Cotree, BalancedParams | None]:
    if args.balanced is not None:
        params = BalancedParams.parse(args.balanced)
        return balanced_cotree(params), params
    if args.cotree is not None:
        return parse_cotree(_read(args.cotree)), None
    if args.edges is not None:
        return recognize_cograph(parse_edge_list(_read(args.edges))), None
    raise UsageError("one of --cotree, --edges or --balanced is required")


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_spectrum(args) -> None:
    if args.balanced is not None:
        params = BalancedParams.parse(args.balanced)
        spectrum, residual, n = full_spectrum(params).as_dict(), 0, params.order
    else:
        t, _ = _load(args)
        scan = integer_spectrum(t)
        spectrum, residual, n = scan.integral, scan.residual_count, scan.n
    lines = [f"{v} ^ {m}" for v, m in sorted(spectrum.items())]
    if residual:
        lines.append(f"non-integral eigenvalues: {residual}")
    payload = {"n": n, "spectrum": spectrum_to_json(spectrum), "residual_count": residual}
    _emit(args, payload, "\n".join(lines))


def cmd_inertia(args) -> None:
    t, _ = _load(args)
    c = eigenvalue_counts(t, args.at)
    payload = {"at": rational_to_json(args.at), "greater": c.greater, "equal": c.equal, "less": c.less}
    _emit(args, payload, f"greater={c.greater} equal={c.equal} less={c.less}")


def cmd_locate(args) -> None:
    t, _ = _load(args)
    items = locate_all(t, args.tol)
    lines = []
    for it in items:
        if it.is_exact:
            lines.append(f"{format_rational(it.lo)} ^ {it.count}")
        else:
            approx = float((it.lo + it.hi) / 2)
            lines.append(f"({format_rational(it.lo)}, {format_rational(it.hi)}) ^ {it.count}  ~ {approx:.12g}")
    payload = [
        {"lo": rational_to_json(it.lo), "hi": rational_to_json(it.hi), "count": it.count, "exact": it.is_exact}
        for it in items
    ]
    _emit(args, payload, "\n".join(lines))


def cmd_interlace(args) -> None:
    t, _ = _load(args)
    params, bounds = estimate_spectrum(t)
    payload = {"params": list(params.a), "order": params.order, "m": bounds.m, "bounds": bounds.to_json()}
    _emit(args, payload, f"completion {params} (n = {params.order}, m = {bounds.m})\n{bounds.render()}")


def cmd_recognize(args) -> None:
    t, _ = _load(args)
    _emit(args, cotree_to_json(t), serialize_cotree(t))


def run_verify(seed: int, count: int, max_n: int, shifts: int) -> dict:
    """Compare cotree inertia with dense elimination on random connected cographs."""
    rng = random.Random(seed)
    checks = failures = 0
    failed = []
    for case in range(count):
        n = rng.randint(1, max_n)
        t = random_cotree(rng, n)
        mat = adjacency(expand_to_graph(t))
        for _ in range(shifts):
            x = rng.randint(-n, n)
            got = diagonalize_shifted(t, x).inertia
            want = exact_inertia(mat, x)
            checks += 1
            if got != want:
                failures += 1
                failed.append({"case": case, "cotree": serialize_cotree(t), "shift": x})
    return {"seed": seed, "cographs": count, "checks": checks, "passed": checks - failures, "failed": failures, "failures": failed}


def cmd_verify(args) -> int:
    if args.count < 0 or args.max_n < 1 or args.shifts < 0:
        raise UsageError("--count and --shifts must be >= 0 and --max-n >= 1")
    report = run_verify(args.seed, args.count, args.max_n, args.shifts)
    text = (
        f"seed={report['seed']} cographs={report['cographs']} checks={report['checks']} "
        f"passed={report['passed']} failed={report['failed']}"
    )
    _emit(args, report, text)
    return 0 if report["failed"] == 0 else 1


COMMANDS = {
    "spectrum": cmd_spectrum,
    "inertia": cmd_inertia,
    "locate": cmd_locate,
    "interlace": cmd_interlace,
    "recognize": cmd_recognize,
    "verify": cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "recognize" and args.edges is None and args.cotree is None:
            raise UsageError("recognize needs --edges or --cotree")
        status = COMMANDS[args.command](args)
        return int(status or 0)
    except UsageError as exc:
        print(f"cograph-spectra: error: {exc}", file=sys.stderr)
        return 2
    except (NotACograph, InvalidParams, CotreeError, ValueError, ZeroDivisionError) as exc:
        print(f"cograph-spectra: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
