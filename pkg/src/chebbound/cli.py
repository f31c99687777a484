"""Command-line front end emitting coefficients, brackets, sweeps and certificates.

Data goes to stdout (or ``--output``), diagnostics to stderr.  Output is
deterministic: no timestamps, '.' decimal separator, floats printed with 17
significant digits so that double-precision values round-trip exactly.

Exit codes: 0 success, 1 any rejected certificate (``certify`` only),
2 invalid arguments or domain violations.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .certificate import sign_certificate
from .chebpoly import clenshaw_eval
from .errors import DomainError
from .expseries import (
    cheb_sandwich,
    exp_cheb_coefficients,
    partial_sum,
    sup_error_comparison,
    taylor_eval,
)

SWEEP_HEADER = "x,lower,upper,exp,taylor_lower,taylor_upper"


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebbound",
        description="Two-sided polynomial brackets of exp(x) below -1 and their per-degree certificates.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("csv", "json"), default=None,
        help="output format (default: csv; certify defaults to json)",
    )
    common.add_argument("--output", default=None, help="write output to this file instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="expansion coefficients a_0..a_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("enclose", parents=[common], help="bracket exp(x) at one point x < -1")
    p.add_argument("--n", type=int, required=True, help="bracket index; degrees used are 2n-1 and 2n")
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("sweep", parents=[common], help="bracket exp over a grid, as CSV rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--with-taylor", action="store_true", help="add the odd/even Maclaurin baseline columns")
    p.add_argument("--log-grid", action="store_true", help="log-spaced grid (useful for wide ranges)")

    p = sub.add_parser("certify", parents=[common], help="sign-condition certificates per degree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--range", dest="range_", metavar="LO..HI", help="inclusive degree range, e.g. 1..64")

    p = sub.add_parser("compare", parents=[common], help="sup-norm error of Chebyshev vs Maclaurin on [-1,1]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="") as handle:
            handle.write(text)


def _csv(header: str, rows: list[list[str]]) -> str:
    lines = [header]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _cmd_coeffs(args) -> int:
    if args.n < 0:
        raise DomainError("--n must be >= 0")
    coeffs = exp_cheb_coefficients(args.n)
    if (args.format or "csv") == "json":
        payload = [{"index": i, "a": float(v)} for i, v in enumerate(coeffs)]
        _emit(_json_text(payload), args.output)
    else:
        rows = [[str(i), _fmt(v)] for i, v in enumerate(coeffs)]
        _emit(_csv("index,a", rows), args.output)
    return 0


def _cmd_enclose(args) -> int:
    if args.n < 1:
        raise DomainError("--n must be >= 1")
    if not args.x < -1.0:
        raise DomainError("x must lie in (-inf, -1): the bracket is certified only below -1")
    enc = cheb_sandwich(args.n, args.x)
    if (args.format or "csv") == "json":
        payload = {
            "x": enc.x,
            "lower": enc.lower,
            "upper": enc.upper,
            "lower_degree": enc.lower_degree,
            "upper_degree": enc.upper_degree,
        }
        _emit(_json_text(payload), args.output)
    else:
        header = "x,lower,upper,lower_degree,upper_degree"
        row = [_fmt(enc.x), _fmt(enc.lower), _fmt(enc.upper), str(enc.lower_degree), str(enc.upper_degree)]
        _emit(_csv(header, [row]), args.output)
    return 0


def _sweep_grid(x_min: float, x_max: float, points: int, log_grid: bool) -> np.ndarray:
    if log_grid:
        return -np.geomspace(-x_min, -x_max, points)
    return np.linspace(x_min, x_max, points)


def _cmd_sweep(args) -> int:
    if args.n < 1:
        raise DomainError("--n must be >= 1")
    if args.points < 2:
        raise DomainError("--points must be >= 2")
    if not args.x_max <= -1.0 - 1e-6:
        raise DomainError("--x-max must be <= -1-1e-6: the bracket is certified only below -1")
    if not args.x_min < args.x_max:
        raise DomainError("--x-min must be < --x-max")
    grid = _sweep_grid(args.x_min, args.x_max, args.points, args.log_grid)
    lower = clenshaw_eval(partial_sum(2 * args.n - 1), grid)
    upper = clenshaw_eval(partial_sum(2 * args.n), grid)
    ref = np.exp(grid)
    if args.with_taylor:
        t_lo = taylor_eval(2 * args.n - 1, grid)
        t_hi = taylor_eval(2 * args.n, grid)
    else:
        t_lo = t_hi = None

    if (args.format or "csv") == "json":
        payload = []
        for i, x in enumerate(grid):
            payload.append(
                {
                    "x": float(x),
                    "lower": float(lower[i]),
                    "upper": float(upper[i]),
                    "exp": float(ref[i]),
                    "taylor_lower": float(t_lo[i]) if t_lo is not None else None,
                    "taylor_upper": float(t_hi[i]) if t_hi is not None else None,
                }
            )
        _emit(_json_text(payload), args.output)
    else:
        rows = []
        for i, x in enumerate(grid):
            row = [_fmt(x), _fmt(lower[i]), _fmt(upper[i]), _fmt(ref[i])]
            if t_lo is not None:
                row.extend([_fmt(t_lo[i]), _fmt(t_hi[i])])
            else:
                row.extend(["", ""])
            rows.append(row)
        _emit(_csv(SWEEP_HEADER, rows), args.output)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo_s, sep, hi_s = text.partition("..")
    if not sep:
        raise DomainError("range must look like LO..HI, e.g. 1..64")
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError as exc:
        raise DomainError("range endpoints must be integers") from exc
    if lo < 1 or hi < lo:
        raise DomainError("range needs 1 <= LO <= HI")
    return lo, hi


def _cmd_certify(args) -> int:
    if args.range_ is not None:
        lo, hi = _parse_range(args.range_)
    else:
        if args.n is None or args.n < 1:
            raise DomainError("--n must be >= 1")
        lo = hi = args.n
    certs = [sign_certificate(k) for k in range(lo, hi + 1)]
    if (args.format or "json") == "json":
        _emit(_json_text([c.to_json_dict() for c in certs]), args.output)
    else:
        header = "n,ratio_num,ratio_den,unit_quadratic,shifted_quadratic,leading_positive,verdict"
        rows = [
            [
                str(c.n),
                "4",
                str(5 * (c.n + 1)),
                str(c.cond_unit_quadratic).lower(),
                str(c.cond_shifted_quadratic).lower(),
                str(c.cond_leading_positive).lower(),
                c.verdict,
            ]
            for c in certs
        ]
        _emit(_csv(header, rows), args.output)
    return 0 if all(c.verdict == "accepted" for c in certs) else 1


def _cmd_compare(args) -> int:
    if args.n < 1:
        raise DomainError("--n must be >= 1")
    if args.points < 100:
        raise DomainError("--points must be >= 100")
    results = [(d, *sup_error_comparison(d, args.points)) for d in range(1, args.n + 1)]
    if (args.format or "csv") == "json":
        payload = [
            {"degree": d, "cheb_sup_err": ce, "taylor_sup_err": te} for d, ce, te in results
        ]
        _emit(_json_text(payload), args.output)
    else:
        rows = [[str(d), _fmt(ce), _fmt(te)] for d, ce, te in results]
        _emit(_csv("degree,cheb_sup_err,taylor_sup_err", rows), args.output)
    return 0


_DISPATCH = {
    "coeffs": _cmd_coeffs,
    "enclose": _cmd_enclose,
    "sweep": _cmd_sweep,
    "certify": _cmd_certify,
    "compare": _cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except DomainError as exc:
        print(f"chebbound {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"chebbound {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
