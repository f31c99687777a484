"""Chebyshev expansion of exp on [-1, 1] and the certified sandwich below -1.

The expansion coefficients are modified Bessel values at 1,

    a_0 = I_0(1),    a_n = 2 I_n(1)  (n >= 1),

and the truncations f_N = sum_{n<=N} a_n T_n bracket exp on (-inf, -1):
odd-degree truncations from below, even-degree ones from above.  The
``cheb_sandwich`` pairing (2N-1, 2N) realises that bracket; the classical
Maclaurin pairing (N, N+1) for odd N and x < 0 is provided as the baseline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .bessel import DEFAULT_PRECISION, EvalPrecision, bessel_i
from .chebpoly import ChebSeries, _as_points, clenshaw_eval
from .errors import DomainError

__all__ = [
    "Enclosure",
    "exp_cheb_coefficients",
    "partial_sum",
    "taylor_eval",
    "taylor_sandwich",
    "cheb_sandwich",
    "endpoint_gap",
    "sup_error_comparison",
]


@dataclass(frozen=True)
class Enclosure:
    """A certified two-sided bracket of exp at a single point.

    ``lower`` and ``upper`` are the values of the degree ``lower_degree``
    (odd) and ``upper_degree`` (even) truncations; lower <= exp(x) <= upper
    holds on the certified domain.  The two float fields can coincide to
    machine precision when the degrees are large and x is close to the
    domain edge.
    """

    x: float
    lower: float
    upper: float
    lower_degree: int
    upper_degree: int

    def __post_init__(self):
        if self.lower_degree != self.upper_degree - 1:
            raise ValueError("degree pairing must be (2N-1, 2N)")


@lru_cache(maxsize=None)
def _coeffs_cached(n: int, rel_tol: float, max_terms: int) -> tuple[float, ...]:
    prec = EvalPrecision(rel_tol, max_terms)
    out = [bessel_i(0, 1.0, prec)]
    out.extend(2.0 * bessel_i(k, 1.0, prec) for k in range(1, n + 1))
    return tuple(out)


def exp_cheb_coefficients(
    n: int, prec: EvalPrecision = DEFAULT_PRECISION
) -> np.ndarray:
    """Coefficients a_0..a_n of the Chebyshev expansion of exp on [-1, 1].

    All entries are positive and strictly decreasing from a_1 on, with
    a_{k+1}/a_k <= 4/(5(k+1)).
    """
    if n < 0:
        raise DomainError("coefficient count needs n >= 0")
    return np.array(_coeffs_cached(n, prec.rel_tol, prec.max_terms))


def partial_sum(n: int, prec: EvalPrecision = DEFAULT_PRECISION) -> ChebSeries:
    """The degree-n truncation f_n = sum_{k<=n} a_k T_k as a T-basis series."""
    return ChebSeries(exp_cheb_coefficients(n, prec))


def taylor_eval(n: int, x):
    """Degree-n Maclaurin partial sum of exp, by Horner accumulation.

    Accepts a scalar or an array of points.
    """
    if n < 0:
        raise DomainError("taylor_eval needs n >= 0")
    pts, scalar = _as_points(x)
    out = _kernels.taylor_kernel(n, pts)
    return float(out[0]) if scalar else out


def taylor_sandwich(n: int, x: float) -> Enclosure:
    """Maclaurin bracket: degree-n sum <= exp(x) <= degree-(n+1) sum.

    Valid for odd n and x < 0; anything else is rejected.
    """
    if n < 1 or n % 2 == 0:
        raise DomainError("the Maclaurin bracket needs an odd degree")
    if not x < 0:
        raise DomainError("the Maclaurin bracket holds for x < 0 only")
    return Enclosure(
        x=float(x),
        lower=taylor_eval(n, x),
        upper=taylor_eval(n + 1, x),
        lower_degree=n,
        upper_degree=n + 1,
    )


def cheb_sandwich(
    n: int, x: float, prec: EvalPrecision = DEFAULT_PRECISION
) -> Enclosure:
    """Chebyshev bracket f_{2n-1}(x) <= exp(x) <= f_{2n}(x) for x < -1.

    ``n`` counts bracket pairs, so the polynomial degrees are 2n-1 and 2n.
    Points with x >= -1 are rejected rather than given an uncertified
    answer: the bracket is only guaranteed on (-inf, -1).
    """
    if n < 1:
        raise DomainError("the Chebyshev bracket needs n >= 1")
    if not x < -1.0:
        raise DomainError("the Chebyshev bracket is certified on x < -1 only")
    lo_series = partial_sum(2 * n - 1, prec)
    hi_series = partial_sum(2 * n, prec)
    return Enclosure(
        x=float(x),
        lower=clenshaw_eval(lo_series, x),
        upper=clenshaw_eval(hi_series, x),
        lower_degree=2 * n - 1,
        upper_degree=2 * n,
    )


def endpoint_gap(n: int, prec: EvalPrecision = DEFAULT_PRECISION) -> float:
    """f_n(-1) - exp(-1): >= 0 for even n, <= 0 for odd n (to ~1e-13).

    Because T_k(-1) = (-1)^k and the coefficients decrease, the truncation
    alternates around exp(-1) at the endpoint; the gap shrinks to 0 as the
    expansion converges.
    """
    if n < 0:
        raise DomainError("endpoint_gap needs n >= 0")
    return clenshaw_eval(partial_sum(n, prec), -1.0) - math.exp(-1.0)


def sup_error_comparison(
    n: int, grid_points: int, prec: EvalPrecision = DEFAULT_PRECISION
) -> tuple[float, float]:
    """Sup-norm errors of f_n and the degree-n Maclaurin sum on [-1, 1].

    Both maxima are taken over a uniform grid of ``grid_points`` points; the
    Chebyshev error never exceeds the Maclaurin error.
    """
    if n < 0:
        raise DomainError("sup_error_comparison needs n >= 0")
    if grid_points < 100:
        raise DomainError("grid must have at least 100 points")
    grid = np.linspace(-1.0, 1.0, grid_points)
    ref = np.exp(grid)
    cheb_err = float(np.max(np.abs(clenshaw_eval(partial_sum(n, prec), grid) - ref)))
    taylor_err = float(np.max(np.abs(taylor_eval(n, grid) - ref)))
    return cheb_err, taylor_err
