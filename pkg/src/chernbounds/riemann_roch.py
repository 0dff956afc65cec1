"""Euler characteristics on P^N from Chern data (Hirzebruch-Riemann-Roch).

chi(F) is the degree-N coefficient of ch(F) * td(P^N), with the hyperplane
class playing the role of t and deg(t^N) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .chern import ChernData
from .exact_arith import Polynomial, TruncatedSeries


@dataclass(frozen=True)
class CharacterSeries:
    series: TruncatedSeries

    @property
    def rank(self) -> Fraction:
        return self.series[0]

    def __getitem__(self, k: int) -> Fraction:
        return self.series[k]


def power_sums(classes: Sequence[int], K: int) -> list[Fraction]:
    """Newton power sums p_1..p_K of the Chern roots.

    p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^(k-1) k c_k.
    """
    def c(i):
        return classes[i - 1] if 1 <= i <= len(classes) else 0

    p = [Fraction(0)] * (K + 1)
    for k in range(1, K + 1):
        acc = Fraction((-1) ** (k - 1) * k * c(k))
        for i in range(1, k):
            acc += (-1) ** (i - 1) * c(i) * p[k - i]
        p[k] = acc
    return p[1:]


def chern_character(C: ChernData) -> CharacterSeries:
    N = C.ambient_dim
    p = power_sums(C.classes, N)
    coeffs = [Fraction(C.rank)] + [p[k - 1] / factorial(k) for k in range(1, N + 1)]
    return CharacterSeries(TruncatedSeries(coeffs, N))


@lru_cache(maxsize=None)
def todd_class(N: int) -> TruncatedSeries:
    """(t / (1 - e^{-t}))^(N+1) truncated at t^N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    # (1 - e^{-t}) / t = sum_k (-1)^k t^k / (k+1)!
    g = TruncatedSeries([Fraction((-1) ** k, factorial(k + 1)) for k in range(N + 1)], N)
    return g.inverse() ** (N + 1)


def euler_char(C: ChernData) -> Fraction:
    N = C.ambient_dim
    return (chern_character(C).series * todd_class(N))[N]


def euler_char_poly(C: ChernData) -> Polynomial:
    """chi(F(t)) as a polynomial in the twist t, via ch(F(t)) = ch(F) e^{t h}."""
    N = C.ambient_dim
    ch = chern_character(C).series
    td = todd_class(N)
    coeffs = [Fraction(0)] * (N + 1)
    for j in range(N + 1):
        if not ch[j]:
            continue
        for m in range(N - j + 1):
            coeffs[m] += ch[j] * td[N - j - m] / factorial(m)
    return Polynomial(coeffs)


# Symbolic chi as a polynomial in the classes, used by the Chern-class bounds.
# A polynomial is a dict mapping exponent tuples (e_1..e_N) to coefficients.

def _mono_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _mono_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + scale * c
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def chi_monomials(rank: int, N: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """chi(F) on P^N for rank ``rank`` as (exponents, coefficient) pairs in c_1..c_N."""
    zero = (0,) * N

    def var(i):
        e = [0] * N
        e[i - 1] = 1
        return {tuple(e): Fraction(1)}

    p: list[dict] = [{}]
    for k in range(1, N + 1):
        acc = {e: c * ((-1) ** (k - 1) * k) for e, c in var(k).items()}
        for i in range(1, k):
            acc = _mono_add(acc, _mono_mul(var(i), p[k - i]), (-1) ** (i - 1))
        p.append(acc)
    td = todd_class(N)
    chi = {zero: Fraction(rank) * td[N]} if td[N] else {}
    for k in range(1, N + 1):
        scale = td[N - k] / factorial(k)
        chi = _mono_add(chi, p[k], scale)
    return tuple(sorted(chi.items()))


def eval_monomials(monos, classes: Sequence[int]) -> Fraction:
    total = Fraction(0)
    for e, c in monos:
        term = c
        for x, k in zip(classes, e):
            if k:
                term *= x**k
        total += term
    return total
