"""Acceptance criteria, one check per criterion.

Run ``python3 tests/test_acceptance.py`` for a plain pass/fail listing, or let
pytest collect it (the listing is repeated in the terminal summary).
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest

from chernbounds import bounds as B
from chernbounds import catalog as K
from chernbounds.chern import (
    ChernData,
    dual,
    split_chern,
    twist_numeric,
    twist_symbolic,
    whitney,
    whitney_quotient,
)
from chernbounds.cli import execute, render
from chernbounds.exact_arith import h0_line_bundle
from chernbounds.riemann_roch import euler_char, euler_char_poly
from chernbounds.splitting import GstMatrix, brute_force_max_sumsq, extremal_nogap_sequence

SEED = 20240611
RESULTS: dict[int, tuple[bool, str]] = {}

NULL_CORRELATION = GstMatrix.from_rows([[0, 0], [0, -1], [-1, -1]])


def _difference(d: K.SheafDescriptor, t: int) -> int:
    return B.h0_upper(d.splitting + t, d.ambient_dim) - d.h0_series(t)


def criterion_1():
    d = K.find("null_correlation")
    bad = [t for t in range(1, 21)
           if not (B.rigrossa_rhs(NULL_CORRELATION, t) == t + 2 == _difference(d, t))]
    return not bad, f"bound == oracle == t+2 for t in 1..20; mismatches at {bad}"


def criterion_2():
    bad = []
    for k in range(1, 6):
        for n in (1, 2, 3):
            d = K.find(f"example2_n={n}_k={k}")
            for t in range(1, 21):
                if not (B.rigrossa_rhs(d.gst, t) == k * (t + 1) == _difference(d, t)):
                    bad.append((n, k, t))
    return not bad, f"bound == oracle == k(t+1), k 1..5, n 1..3, t 1..20; mismatches {bad[:5]}"


def criterion_3():
    rng = random.Random(SEED)
    bad = []
    for _ in range(200):
        n, c1, c2 = rng.randint(1, 50), rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        if euler_char(ChernData(2, n, (c1, c2))) != Fraction(c1 * c1 + 3 * c1, 2) - c2 + n:
            bad.append((n, c1, c2))
    return not bad, f"200 random triples on P^2; mismatches {bad[:3]}"


def criterion_4():
    bad, count = [], 0
    for N in range(1, 6):
        for n in range(1, 5):
            for b in product(range(-3, 4), repeat=n):
                if list(b) != sorted(b, reverse=True):
                    continue
                p = euler_char_poly(split_chern(b, N))
                for t in range(-min(b), -min(b) + 4):
                    count += 1
                    if p(t) != sum(h0_line_bundle(x + t, N) for x in b):
                        bad.append((b, N, t))
    return not bad, f"{count} (b, N, t) cases; mismatches {bad[:3]}"


def criterion_5():
    rng = random.Random(SEED + 5)
    nc = K.find("null_correlation").chern.c2
    ok = B.c2_lower([0, 0], [0, -1]) == 1 == nc
    bad = []
    for _ in range(100):
        b = sorted((rng.randint(-9, 9) for _ in range(rng.randint(1, 7))), reverse=True)
        if B.c2_lower(b, b) != sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b))):
            bad.append(b)
    return ok and not bad, f"null-correlation floor {B.c2_lower([0, 0], [0, -1])} vs c2 {nc}; split mismatches {bad[:3]}"


def criterion_6():
    rows = []
    for n in range(2, 13):
        top = max(B.delta_lower_nogap(n, c1) for c1 in range(n + 1))
        low = min(B.delta_lower_nogap(n, c1) for c1 in range(n + 1))
        rows.append((n, top, low, B.delta_lower_uniform(n)))
    bad = [r for r in rows if r[1] != r[3]]
    detail = ("max over c1 of the no-gap floor == uniform floor, n 2..12; "
              f"(n, max, min, uniform) mismatches {bad[:3]}")
    return not bad, detail


def criterion_7():
    bad = [(n, c1) for n in range(1, 9) for c1 in range(-2 * n, 2 * n + 1)
           if extremal_nogap_sequence(n, c1).sum_squares != brute_force_max_sumsq(n, c1)]
    return not bad, f"n <= 8, |c1| <= 2n; mismatches {bad[:3]}"


def criterion_8():
    rng = random.Random(SEED + 8)
    bad, checked = [], 0
    while checked < 300:
        n, N = rng.randint(3, 6), rng.randint(3, 6)
        b = sorted((rng.randint(-4, 4) for _ in range(n)), reverse=True)
        # b is a splitting type of C, so c_1 = sum(b); the other classes are free
        classes = (sum(b),) + tuple(rng.randint(-40, 40) for _ in range(N - 1))
        C = ChernData(N, n, classes)
        delta2 = C.c2 - sum(b[i] * b[j] for i in range(n) for j in range(i + 1, n))
        if delta2 == 0:
            continue
        checked += 1
        for s in range(3, min(n, N) + 1):
            lam = B.lambda_s(C, b, s)
            if lam.degree > s - 2 or lam.coeff(s - 2) != comb(n - 2, s - 2) * delta2:
                bad.append((n, N, classes, b, s))
    return not bad, f"{checked} random instances; mismatches {bad[:2]}"


def criterion_9():
    bad = []
    for N in (2, 3, 4):
        for M in range(1, 11):
            C = K.chern_from_koszul("points", N, M=M)
            if any(C.c(i) for i in range(1, N)) or C.c(N) != M * factorial(N - 1):
                bad.append((N, M, C.c(N)))
    return not bad, f"c_N == +M(N-1)! for M 1..10, N 2..4; (N, M, c_N) mismatches {bad[:3]}"


def criterion_10():
    bad = []
    for b in range(1, 6):
        d = K.find(f"wide_window_b={b}")
        window = B.negative_c2_window(d.chern, d.splitting)
        expected = set(range(-b + 1, b))
        if window != expected or len(window) != 2 * b - 1 or len(window) != d.splitting.diameter - 1:
            bad.append((b, sorted(window)))
    return not bad, f"windows for b 1..5; mismatches {bad}"


def criterion_11():
    names, violations = [], []
    for d in K.builtin_catalog():
        if d.cohomology is None:
            continue
        names.append(d.name)
        for r in K.verify(d).reports:
            if r.bound_name in ("P_bound", "Q_bound", "regularity_bound", "chern_bound") \
                    and r.verdict == B.VIOLATED:
                violations.append((d.name, r.bound_name))
    splits = [n for n in names if n.startswith("split_")]
    lines = [n for n in splits if n.count(",") == 0]
    has_plane = "null_correlation_plane" in names
    reg_bad = []
    for N in (2, 3, 4):
        for n in (1, 2, 3):
            for b in product(range(-3, 4), repeat=n):
                if list(b) != sorted(b, reverse=True):
                    continue
                C = split_chern(b, N)
                reg, _ = B.regularity_bound(B.cohomology_bounds(n, N, C.c1, C.c2, b), N)
                if reg < -b[-1]:
                    reg_bad.append((b, N))
    ok = not violations and not reg_bad and len(splits) == 357 and lines and has_plane
    return ok, (f"{len(names)} descriptors with known cohomology ({len(splits)} split, "
                f"{len(lines)} line bundles); violations {violations[:3]}; regularity failures {reg_bad[:3]}")


def criterion_12():
    rng = random.Random(SEED + 12)
    bad = 0
    for _ in range(500):
        N = rng.randint(1, 6)

        def rand_chern():
            return ChernData(N, rng.randint(1, 6), tuple(rng.randint(-30, 30) for _ in range(N)))

        sub, quot = rand_chern(), rand_chern()
        l, m = rng.randint(-10, 10), rng.randint(-10, 10)
        checks = [
            whitney_quotient(whitney(sub, quot), sub) == quot,
            twist_numeric(twist_numeric(sub, l), m) == twist_numeric(sub, l + m),
            twist_symbolic(sub).evaluate(l) == twist_numeric(sub, l),
            dual(dual(sub)) == sub,
            whitney(sub, quot) == whitney(quot, sub),
        ]
        bad += not all(checks)
    return bad == 0, f"500 random instances; {bad} failures"


def criterion_13():
    res = execute(["catalog", "verify", "--json"])
    payload = json.loads(render(res))
    sharp = {d["name"]: set(d["sharp"]) for d in payload["descriptors"]}
    markers = {
        "1 rigrossa (null_correlation)": "rigrossa" in sharp["null_correlation"],
        "2 rigrossa (example2)": all("rigrossa" in sharp[f"example2_n=2_k={k}"] for k in range(1, 6)),
        "5 c2_lower (null_correlation)": "c2_lower" in sharp["null_correlation"],
        "10 negative_c2_window (wide_window)": all(
            "negative_c2_window" in sharp[f"wide_window_b={b}"] for b in range(1, 6)),
    }
    ok = res.exit_code == 0 and payload["overall"] == "pass" and all(markers.values())
    missing = [k for k, v in markers.items() if not v]
    return ok, f"exit {res.exit_code}, {payload['count']} descriptors, missing markers {missing}"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 14)}


def evaluate(i: int) -> tuple[bool, str]:
    if i not in RESULTS:
        try:
            RESULTS[i] = CRITERIA[i]()
        except Exception as exc:  # a crash is a failure, not an error in the harness
            RESULTS[i] = (False, f"raised {type(exc).__name__}: {exc}")
    return RESULTS[i]


def line(i: int) -> str:
    ok, detail = evaluate(i)
    return f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", sorted(CRITERIA))
def test_criterion(i):
    ok, detail = evaluate(i)
    print(line(i))
    assert ok, detail


if __name__ == "__main__":
    for i in sorted(CRITERIA):
        print(line(i))
