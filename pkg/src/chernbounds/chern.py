"""Chern data of coherent sheaves on P^N.

A sheaf is recorded by its ambient dimension N, its rank n and the integers
c_1..c_N. The Chern polynomial lives in Z[t]/(t^(N+1)); classes above the
rank are kept (they need not vanish for sheaves that are not bundles).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Sequence

from .exact_arith import Polynomial, TruncatedSeries, gbinom


@dataclass(frozen=True)
class ChernData:
    ambient_dim: int
    rank: int
    classes: tuple[int, ...]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        classes = tuple(int(c) for c in self.classes)
        if len(classes) != self.ambient_dim:
            raise ValueError(
                f"expected {self.ambient_dim} Chern classes, got {len(classes)}"
            )
        object.__setattr__(self, "classes", classes)

    @classmethod
    def trivial(cls, rank: int, ambient_dim: int) -> "ChernData":
        return cls(ambient_dim, rank, (0,) * ambient_dim)

    def c(self, i: int) -> int:
        """c_i with c_0 = 1 and c_i = 0 for i < 0 or i > N."""
        if i == 0:
            return 1
        if 1 <= i <= self.ambient_dim:
            return self.classes[i - 1]
        return 0

    @property
    def c1(self) -> int:
        return self.c(1)

    @property
    def c2(self) -> int:
        return self.c(2)

    def chern_polynomial(self) -> TruncatedSeries:
        return TruncatedSeries((1,) + self.classes, self.ambient_dim)

    @classmethod
    def from_series(cls, series: TruncatedSeries, rank: int) -> "ChernData":
        if series[0] != 1:
            raise ValueError("Chern polynomial must have constant term 1")
        classes = []
        for c in series.coeffs[1:]:
            if c.denominator != 1:
                raise ValueError(f"non-integral Chern class {c}")
            classes.append(c.numerator)
        return cls(series.cap, rank, tuple(classes))


@dataclass(frozen=True)
class TwistedChern:
    """Chern classes of F(t) as polynomials in the twist variable t."""

    base: ChernData
    symbolic_classes: tuple[Polynomial, ...]

    def class_poly(self, i: int) -> Polynomial:
        if i == 0:
            return Polynomial.constant(1)
        return self.symbolic_classes[i - 1]

    def evaluate(self, t: int) -> ChernData:
        vals = []
        for p in self.symbolic_classes:
            v = p(t)
            assert v.denominator == 1
            vals.append(v.numerator)
        return ChernData(self.base.ambient_dim, self.base.rank, tuple(vals))


def _same_ambient(a: ChernData, b: ChernData) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient mismatch: P^{a.ambient_dim} vs P^{b.ambient_dim}")


def whitney(sub: ChernData, quot: ChernData) -> ChernData:
    """Chern data of the middle term of 0 -> sub -> F -> quot -> 0."""
    _same_ambient(sub, quot)
    series = sub.chern_polynomial() * quot.chern_polynomial()
    return ChernData.from_series(series, sub.rank + quot.rank)


def whitney_quotient(total: ChernData, sub: ChernData) -> ChernData:
    """Chern data of the quotient total/sub."""
    _same_ambient(total, sub)
    rank = total.rank - sub.rank
    if rank <= 0:
        raise ValueError(f"quotient rank would be {rank}")
    series = total.chern_polynomial() * sub.chern_polynomial().inverse()
    return ChernData.from_series(series, rank)


def elementary_symmetric(values: Sequence[int], k: int) -> int:
    if k == 0:
        return 1
    if k > len(values):
        return 0
    return sum(prod(c) for c in combinations(values, k))


def split_chern(b: Sequence[int], N: int) -> ChernData:
    """Chern data of O(b_1) + ... + O(b_n) on P^N."""
    b = [int(x) for x in b]
    if not b:
        raise ValueError("splitting type must be non-empty")
    classes = tuple(elementary_symmetric(b, k) for k in range(1, N + 1))
    return ChernData(N, len(b), classes)


def _twist_coeff(n: int, s: int, k: int) -> int:
    # coefficient of l^k c_{s-k} in c_s(F(l)); generalized binomial for s > n
    return gbinom(n - s + k, k)


def twist_numeric(C: ChernData, l: int) -> ChernData:
    """Chern data of F(l)."""
    n, N = C.rank, C.ambient_dim
    classes = tuple(
        sum(_twist_coeff(n, s, k) * l**k * C.c(s - k) for k in range(s + 1))
        for s in range(1, N + 1)
    )
    return ChernData(N, n, classes)


def twist_symbolic(C: ChernData) -> TwistedChern:
    n, N = C.rank, C.ambient_dim
    polys = tuple(
        Polynomial(_twist_coeff(n, s, k) * C.c(s - k) for k in range(s + 1))
        for s in range(1, N + 1)
    )
    return TwistedChern(C, polys)


def dual(C: ChernData) -> ChernData:
    return ChernData(
        C.ambient_dim, C.rank, tuple((-1) ** i * c for i, c in enumerate(C.classes, 1))
    )


def restrict_hyperplane(C: ChernData) -> ChernData:
    if C.ambient_dim < 2:
        raise ValueError("cannot restrict data on P^1 to a hyperplane")
    return ChernData(C.ambient_dim - 1, C.rank, C.classes[:-1])


def restrict_to(C: ChernData, dim: int) -> ChernData:
    """Restriction to a general linear subspace of dimension ``dim``."""
    if not 1 <= dim <= C.ambient_dim:
        raise ValueError(f"cannot restrict P^{C.ambient_dim} data to P^{dim}")
    return ChernData(dim, C.rank, C.classes[:dim])


def discriminant(C: ChernData) -> int:
    """2 n c_2 - (n - 1) c_1^2."""
    if C.ambient_dim < 2:
        raise ValueError("discriminant needs ambient_dim >= 2")
    n = C.rank
    return 2 * n * C.c2 - (n - 1) * C.c1**2


def high_chern_tail(C: ChernData, s: int) -> Polynomial:
    """c_s(F(t)) for a class index above the rank; degree <= s - n - 1."""
    n, N = C.rank, C.ambient_dim
    if not n < s <= N:
        raise ValueError(f"need rank < s <= N, got s={s}, n={n}, N={N}")
    return twist_symbolic(C).class_poly(s)
