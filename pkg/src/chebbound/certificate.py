"""Mechanical re-verification of the bracketing conditions, degree by degree.

The bracket at degree N hinges on a certificate polynomial

    G_N = f_N - f_N'  =  I_N(1) U_N + I_{N+1}(1) U_{N-1},

whose sign on (-inf, -1) is (-1)^N.  This module builds G_N along two
independent algebraic routes (series-minus-derivative, and the compact U
form) and checks them against each other, evaluates the five-part
quadratic-in-e^t decomposition that exhibits the sign, and issues a
per-degree accept/reject certificate from three exact rational discriminant
conditions on the ratio bound 4/(5(N+1)).

Coefficient construction runs at extended internal precision: the reduction
route subtracts derivative sums of order one from coefficients of order one
to leave residuals of order I_N(1), which underflows the 53-bit mantissa
already for moderate N.  Public results are rounded to float64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from mpmath import mp

from .bessel import bessel_i, series_sum
from .chebpoly import (
    ChebSeries,
    clenshaw_eval,
    differentiate,
    differentiate_coeffs,
    u_to_t_coeffs,
)
from .errors import DomainError
from .expseries import partial_sum

__all__ = [
    "Certificate",
    "QuadraticInE",
    "build_G_via_reduction",
    "build_G_closed_form",
    "decomposition_poly",
    "decomposition_quadratics",
    "reduction_identity_residual",
    "decomposition_check",
    "decomposition_terms",
    "sign_certificate",
    "grid_sign_scan",
]

# refuse the decomposition once its largest exponential, e^{(2N+3)t}, would
# leave float64 range
_EXP_ARG_LIMIT = 700.0


def _needed_dps(n: int) -> int:
    """Working digits that keep coefficients of size 2 I_n(1) meaningful."""
    if n < 2:
        return 35
    digits_lost = 0.30103 * n + math.lgamma(n + 1) / math.log(10.0)
    return 35 + int(digits_lost)


def _mp_exp_coeffs(n: int, dps: int):
    """a_0..a_n as mpf values at ``dps`` working digits."""
    one = mp.mpf(1)
    tol = mp.mpf(10) ** (-(dps + 5))
    cap = 4 * dps + 80
    vals = [series_sum(0, one, tol, cap)]
    vals.extend(2 * series_sum(k, one, tol, cap) for k in range(1, n + 1))
    return vals


@lru_cache(maxsize=None)
def build_G_via_reduction(n: int) -> ChebSeries:
    """G_n obtained as f_n minus its derivative, both in the T basis.

    The exponential cancels between the truncation error and its
    derivative, so the difference is the certificate polynomial itself.
    Coefficient algebra runs at extended precision and is rounded to
    float64 on return.
    """
    if n < 0:
        raise DomainError("build_G_via_reduction needs n >= 0")
    dps = _needed_dps(n)
    with mp.workdps(dps):
        a = _mp_exp_coeffs(n, dps)
        d = differentiate_coeffs(a)
        g = [a[j] - (d[j] if j < len(d) else 0) for j in range(n)]
        g.append(a[n] if n >= 1 else a[0])
        out = np.array([float(v) for v in g], dtype=np.float64)
    return ChebSeries(out)


@lru_cache(maxsize=None)
def build_G_closed_form(n: int) -> ChebSeries:
    """G_n assembled as I_n(1) U_n + I_{n+1}(1) U_{n-1} in the T basis.

    Uses the exact integer U-to-T expansions, so the only rounding is the
    final cast of each coefficient to float64.
    """
    if n < 0:
        raise DomainError("build_G_closed_form needs n >= 0")
    dps = _needed_dps(n)
    with mp.workdps(dps):
        one = mp.mpf(1)
        tol = mp.mpf(10) ** (-(dps + 5))
        cap = 4 * dps + 80
        i_n = series_sum(n, one, tol, cap)
        i_np1 = series_sum(n + 1, one, tol, cap)
        un = u_to_t_coeffs(n)
        unm1 = u_to_t_coeffs(n - 1)
        g = [i_n * un[j] + (i_np1 * unm1[j] if j < len(unm1) else 0) for j in range(n + 1)]
        out = np.array([float(v) for v in g], dtype=np.float64)
    return ChebSeries(out)


@lru_cache(maxsize=None)
def decomposition_poly(n: int) -> ChebSeries:
    """The polynomial variant whose transform splits into the five terms.

    I_{n+1}(1) U_{n-1} + I_n(1) U_{n-2} - I_n(1) + I_n(1) T_n: it differs
    from the reduction polynomial by I_n(1) (1 + T_n), carrying half its
    leading coefficient.  The five-part split in :func:`decomposition_terms`
    is an exact identity for this variant, not for G_n itself.
    """
    if n < 1:
        raise DomainError("decomposition_poly needs n >= 1")
    i_n = bessel_i(n, 1.0)
    i_np1 = bessel_i(n + 1, 1.0)
    unm1 = u_to_t_coeffs(n - 1)
    unm2 = u_to_t_coeffs(n - 2)
    c = np.zeros(n + 1)
    for j, v in enumerate(unm1):
        c[j] += i_np1 * v
    for j, v in enumerate(unm2):
        c[j] += i_n * v
    c[0] -= i_n
    c[n] += i_n
    return ChebSeries(c)


def reduction_identity_residual(n: int, x: float) -> float:
    """Relative residual of f_n(x) - f_n'(x) = G_n(x) in double precision.

    Left side through the double-precision series and derivative pipeline,
    right side from the closed form; the residual is scaled by the largest
    magnitude entering the identity, max(1, |f_n|, |f_n'|, |G_n|).
    """
    if n < 0:
        raise DomainError("reduction_identity_residual needs n >= 0")
    f = partial_sum(n)
    fv = clenshaw_eval(f, x)
    fpv = clenshaw_eval(differentiate(f), x)
    gv = clenshaw_eval(build_G_closed_form(n), x)
    scale = max(1.0, abs(fv), abs(fpv), abs(gv))
    return abs((fv - fpv) - gv) / scale


@dataclass(frozen=True)
class QuadraticInE:
    """Quadratic a2 u^2 + a1 u + a0 in the variable u = e^t."""

    a2: float
    a1: float
    a0: float

    def __call__(self, u: float) -> float:
        return (self.a2 * u + self.a1) * u + self.a0


def _decomposition_params(n: int, r: float):
    """Split parameters; the pair for an out-of-range index is zeroed.

    For n >= 2 all four special indices n-2..n+1 lie inside 0..2n-1 and the
    choice is a = d = 2r, b = c = 2(-1)^n - 2r.  For n = 1 the indices n+1
    and n-2 fall outside the geometric sum, so their absorbers a, d vanish
    and b = c = 2(-1)^n carry the whole cross term.
    """
    sign2 = 2.0 * (-1) ** n
    has_b = n + 1 <= 2 * n - 1
    has_e = n - 2 >= 0
    a = 2.0 * r if has_b else 0.0
    d = 2.0 * r if has_e else 0.0
    return a, sign2 - a, sign2 - d, d, has_b, has_e


def decomposition_quadratics(n: int) -> tuple[QuadraticInE, ...]:
    """The five quadratics in e^t underlying the pieces A..E at degree n."""
    if n < 1:
        raise DomainError("the decomposition needs n >= 1")
    r = bessel_i(n + 1, 1.0) / bessel_i(n, 1.0)
    a, b, c, d, _, _ = _decomposition_params(n, r)
    return (
        QuadraticInE(1.0, -2.0 * r, 1.0),
        QuadraticInE(1.0, -2.0 * r, 1.0 - a),
        QuadraticInE(1.0, -2.0 * r - b, 1.0),
        QuadraticInE(1.0, -2.0 * r - c, 1.0),
        QuadraticInE(1.0 - d, -2.0 * r, 1.0),
    )


def decomposition_terms(n: int, t: float) -> tuple[float, float, float, float, float]:
    """The five pieces A..E of the transformed certificate polynomial.

    Each piece is e^{kt} times one of :func:`decomposition_quadratics` at
    u = e^t (A sums its quadratic over the non-special exponents), so all
    five are nonnegative whenever the discriminant conditions of
    :func:`sign_certificate` hold; their sum equals the quantity checked by
    :func:`decomposition_check`.
    """
    _validate_decomposition_args(n, t)
    q_a, q_b, q_c, q_d, q_e = decomposition_quadratics(n)
    r = bessel_i(n + 1, 1.0) / bessel_i(n, 1.0)
    _, _, _, _, has_b, has_e = _decomposition_params(n, r)
    e1 = math.exp(t)
    special = {n - 2, n - 1, n, n + 1}
    term_a = sum((math.exp(k * t) * q_a(e1) for k in range(0, 2 * n) if k not in special), 0.0)
    term_b = math.exp((n + 1) * t) * q_b(e1) if has_b else 0.0
    term_c = math.exp(n * t) * q_c(e1)
    term_d = math.exp((n - 1) * t) * q_d(e1)
    term_e = math.exp((n - 2) * t) * q_e(e1) if has_e else 0.0
    return term_a, term_b, term_c, term_d, term_e


def _validate_decomposition_args(n: int, t: float) -> None:
    if n < 1:
        raise DomainError("the decomposition needs n >= 1")
    if not t > 0:
        raise DomainError("the decomposition needs t > 0")
    if t < 1e-6:
        raise DomainError("t below 1e-6 is refused: (e^t - 1) is evaluated directly")
    if (2 * n + 3) * t > _EXP_ARG_LIMIT:
        raise OverflowError("e^{(2n+3)t} would leave float64 range")


def decomposition_check(n: int, t: float) -> float:
    """Relative residual between the transformed polynomial and A+..+E.

    The left side evaluates the variant polynomial at -cosh(t), multiplied
    by 4 (-1)^n sinh(t) e^{(n+1)t} / (I_n(1)(e^t - 1)); the right side sums
    the five pieces built directly from exponentials.  Plain float64
    throughout: this is a consistency diagnostic, not the certified path.
    """
    _validate_decomposition_args(n, t)
    x = -math.cosh(t)
    kval = clenshaw_eval(decomposition_poly(n), x)
    lhs = (
        4.0
        * (-1) ** n
        * kval
        * math.sinh(t)
        * math.exp((n + 1) * t)
        / (bessel_i(n, 1.0) * (math.exp(t) - 1.0))
    )
    rhs = sum(decomposition_terms(n, t))
    return abs(lhs - rhs) / max(1.0, abs(rhs))


@dataclass(frozen=True)
class Certificate:
    """Accept/reject record for the sign conditions at one degree."""

    n: int
    ratio_bound: Fraction
    cond_unit_quadratic: bool
    cond_shifted_quadratic: bool
    cond_leading_positive: bool
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "ratio_bound": {"num": 4, "den": 5 * (self.n + 1)},
            "conditions": {
                "unit_quadratic": self.cond_unit_quadratic,
                "shifted_quadratic": self.cond_shifted_quadratic,
                "leading_positive": self.cond_leading_positive,
            },
            "verdict": self.verdict,
        }


def sign_certificate(n: int) -> Certificate:
    """Check the three discriminant conditions at degree n in exact rationals.

    With rb = 4/(5(n+1)) the conditions are 4 rb^2 - 4 < 0,
    4 rb^2 - 4(1 - 2 rb) < 0 and 1 - 2 rb > 0; together they make every
    piece of the decomposition nonnegative for t > 0, certifying that
    (-1)^n G_n > 0 on (-inf, -1) and hence the bracket at this degree.
    Arithmetic is exact (fractions), independent of any floating-point
    Bessel evaluation.
    """
    if n < 1:
        raise DomainError("certificates are defined for n >= 1")
    rb = Fraction(4, 5 * (n + 1))
    cond_unit = 4 * rb * rb - 4 < 0
    cond_shifted = 4 * rb * rb - 4 * (1 - 2 * rb) < 0
    cond_leading = 1 - 2 * rb > 0
    accepted = cond_unit and cond_shifted and cond_leading
    return Certificate(
        n=n,
        ratio_bound=rb,
        cond_unit_quadratic=cond_unit,
        cond_shifted_quadratic=cond_shifted,
        cond_leading_positive=cond_leading,
        verdict="accepted" if accepted else "rejected",
    )


def grid_sign_scan(n: int, x_min: float, points: int) -> bool:
    """Empirical complement to the certificate: sign of G_n on a log grid.

    Evaluates the reduction-built G_n on ``points`` log-spaced abscissae
    from ``x_min`` up to -1 - 1e-6 and reports whether (-1)^n G_n stays
    strictly positive everywhere.
    """
    if n < 1:
        raise DomainError("grid_sign_scan needs n >= 1")
    if not x_min < -1.0:
        raise DomainError("grid_sign_scan needs x_min < -1")
    if points < 10:
        raise DomainError("grid_sign_scan needs at least 10 points")
    grid = -np.geomspace(-x_min, 1.0 + 1e-6, points)
    vals = clenshaw_eval(build_G_via_reduction(n), grid)
    return bool(np.all((-1) ** n * vals > 0.0))
