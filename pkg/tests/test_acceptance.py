"""Acceptance gate: one test per release criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Inequality criteria on the bracket itself are checked
with both sides in extended precision (the brackets tighten below double
resolution at high degree near x = -1, so no floating-point tolerance could
be granted on the inequality); the double-precision API values are checked
to track the extended values.
"""

import json
import time

import numpy as np
import pytest
from mpmath import mp

import oracles
from chebbound import (
    bessel_i,
    bessel_i_enclosure,
    bessel_ratio_bound,
    cheb_sandwich,
    decomposition_check,
    decomposition_terms,
    grid_sign_scan,
    recurrence_residual,
    reduction_identity_residual,
    taylor_sandwich,
)
from chebbound.cli import main as cli_main

# double-path values vs extended-precision values: the alternating terms of
# the partial sums cancel heavily at moderate negative x, so the double
# evaluation carries conditioning noise (observed worst ~3e-11)
_TRACK_RTOL = 1e-9


def _report(num, label, elapsed, limit):
    print(f"[criterion {num}] {label}: PASS ({elapsed:.2f} s < {limit:g} s)")
    assert elapsed < limit


def test_criterion_1_sandwich_reproduction():
    start = time.perf_counter()
    grid = -np.geomspace(1e4, 1.0 + 1e-6, 400)
    violations = 0
    for x in grid:
        sums = oracles.mp_partial_sums(x, 32)
        ref = oracles.mp_exp(x)
        for n_pair in range(1, 17):
            enc = cheb_sandwich(n_pair, float(x))
            lo, hi = sums[enc.lower_degree], sums[enc.upper_degree]
            if not (lo <= ref <= hi):
                violations += 1
            assert abs(enc.lower - float(lo)) <= _TRACK_RTOL * max(1.0, abs(float(lo)))
            assert abs(enc.upper - float(hi)) <= _TRACK_RTOL * max(1.0, abs(float(hi)))
    assert violations == 0
    _report(1, "two-sided bracket on 400 log-spaced points, pairs 1..16", time.perf_counter() - start, 10.0)


def test_criterion_2_certificate_completeness(capsys):
    start = time.perf_counter()
    code = cli_main(["certify", "--range", "1..64"])
    out = capsys.readouterr().out
    payload = json.loads(out)
    assert code == 0
    assert len(payload) == 64
    assert all(cert["verdict"] == "accepted" for cert in payload)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(2, "64 accepted certificates, exit 0", elapsed, 1.0)


def test_criterion_3_reduction_identity():
    start = time.perf_counter()
    xs = np.linspace(-10.0, 10.0, 50)
    worst = 0.0
    for n in range(1, 33):
        for x in xs:
            worst = max(worst, reduction_identity_residual(n, float(x)))
    assert worst <= 1e-12
    _report(3, f"series-minus-derivative equals closed form (worst {worst:.2e})", time.perf_counter() - start, 5.0)


def test_criterion_4_bessel_estimates():
    start = time.perf_counter()
    for n in range(0, 31):
        for x in (0.1, 0.5, 1.0, 2.0):
            enc = bessel_i_enclosure(n, x)
            val = bessel_i(n, x)
            assert enc.lo < val < enc.hi
        ratio = bessel_i(n + 1, 1.0) / bessel_i(n, 1.0)
        assert ratio <= bessel_ratio_bound(n, 1.0, specialize=True)
    _report(4, "series values strictly inside enclosures; ratio bound at 1", time.perf_counter() - start, 1.0)


def test_criterion_5_recurrence():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 31):
        rel = recurrence_residual(n, 1.0) / (n * bessel_i(n, 1.0))
        worst = max(worst, rel)
    assert worst <= 1e-12
    _report(5, f"three-term recurrence residual at x=1 (worst {worst:.2e})", time.perf_counter() - start, 1.0)


def test_criterion_6_sign_law():
    start = time.perf_counter()
    for n in range(1, 17):
        assert grid_sign_scan(n, -1e4, 500) is True
    _report(6, "(-1)^n G_n > 0 on 500-point log grids", time.perf_counter() - start, 5.0)


def test_criterion_7_decomposition_identity():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 17):
        for t in (1e-3, 0.1, 0.5, 1.0, 2.0, 5.0):
            if (n + 1) * t > 40.0:
                continue
            worst = max(worst, decomposition_check(n, t))
            assert all(term >= 0.0 for term in decomposition_terms(n, t))
    assert worst <= 1e-9
    _report(7, f"five-part split matches and stays nonnegative (worst {worst:.2e})", time.perf_counter() - start, 2.0)


def test_criterion_8_near_minimax_superiority(capsys):
    start = time.perf_counter()
    code = cli_main(["compare", "--n", "10", "--points", "1000"])
    out = capsys.readouterr().out
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert len(rows) == 10
    for row in rows:
        assert float(row[1]) <= float(row[2])
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(8, "Chebyshev sup error <= Maclaurin sup error, degrees 1..10", elapsed, 2.0)


def test_criterion_9_taylor_sandwich_baseline():
    start = time.perf_counter()
    grid = np.linspace(-10.0, -1e-3, 200)
    violations = 0
    for x in grid:
        sums = oracles.mp_taylor_prefix_sums(x, 16)
        ref = oracles.mp_exp(x)
        for n in range(1, 16, 2):
            enc = taylor_sandwich(n, float(x))
            lo, hi = sums[n], sums[n + 1]
            if not (lo <= ref <= hi):
                violations += 1
            assert abs(enc.lower - float(lo)) <= _TRACK_RTOL * max(1.0, abs(float(lo)))
            assert abs(enc.upper - float(hi)) <= _TRACK_RTOL * max(1.0, abs(float(hi)))
    assert violations == 0
    _report(9, "Maclaurin bracket for odd degrees <= 15 on 200 points", time.perf_counter() - start, 1.0)
