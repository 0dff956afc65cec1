"""Exact rationals, truncated power series and univariate polynomials.

Everything here is immutable and exact; ``Rational`` is the stdlib
:class:`fractions.Fraction`, which already keeps values reduced with a
positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def gbinom(m: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer top, ``m(m-1)...(m-k+1)/k!``."""
    if k < 0:
        return 0
    if m >= 0:
        return comb(m, k)
    # binom(-m', k) = (-1)^k binom(m'+k-1, k)
    return (-1) ** k * comb(-m + k - 1, k)


class TruncatedSeries:
    """Element of Q[t]/(t^(cap+1))."""

    __slots__ = ("cap", "coeffs")

    def __init__(self, coeffs: Iterable[Number], cap: int):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        cs = [as_rational(c) for c in coeffs][: cap + 1]
        cs.extend([Fraction(0)] * (cap + 1 - len(cs)))
        object.__setattr__(self, "cap", cap)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, cap: int) -> "TruncatedSeries":
        return cls([1], cap)

    @classmethod
    def exp(cls, a: Number, cap: int) -> "TruncatedSeries":
        """exp(a*t) truncated."""
        a = as_rational(a)
        return cls([a**k / factorial(k) for k in range(cap + 1)], cap)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k <= self.cap:
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.cap, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, cap={self.cap})"

    def _check(self, other: "TruncatedSeries") -> None:
        if self.cap != other.cap:
            raise ValueError(f"cap mismatch: {self.cap} != {other.cap}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.cap)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.cap)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.cap)

    def scale(self, s: Number) -> "TruncatedSeries":
        s = as_rational(s)
        return TruncatedSeries([s * a for a in self.coeffs], self.cap)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return series_inverse(self) ** (-e)
        result = TruncatedSeries.one(self.cap)
        base = self
        while e:
            if e & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            e >>= 1
        return result

    def inverse(self) -> "TruncatedSeries":
        return series_inverse(self)

    def truncate(self, cap: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, cap)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common cap."""
    a._check(b)
    n = a.cap
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(n + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return TruncatedSeries(out, n)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv = [Fraction(0)] * (a.cap + 1)
    inv[0] = 1 / a0
    for k in range(1, a.cap + 1):
        s = sum(a.coeffs[j] * inv[k - j] for j in range(1, k + 1))
        inv[k] = -s / a0
    return TruncatedSeries(inv, a.cap)


class Polynomial:
    """Dense univariate polynomial over Q; ``coeffs[k]`` multiplies t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @classmethod
    def monomial(cls, c: Number, k: int) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def shift(self, a: Number) -> "Polynomial":
        """The polynomial t -> p(t + a)."""
        lin = Polynomial([a, 1])
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc


def h0_line_bundle(a: int, r: int) -> int:
    """Dimension of degree-``a`` forms in r+1 variables, i.e. h^0 O_{P^r}(a)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return comb(a + r, r) if a >= 0 else 0


def binom_poly(r: int) -> Polynomial:
    """(t+1)(t+2)...(t+r)/r!, the Euler characteristic of O_{P^r}(t)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    p = Polynomial.constant(1)
    for i in range(1, r + 1):
        p = p * Polynomial([i, 1])
    return p * Fraction(1, factorial(r))


def line_poly(r: int, shift: int) -> Polynomial:
    """t -> chi(O_{P^r}(t + shift)); equals h^0 whenever t + shift >= -r."""
    return binom_poly(r).shift(shift)


def poly_from_values(values: Sequence[Number], start: int = 0) -> Polynomial:
    """Lagrange interpolation through (start + i, values[i])."""
    xs = [Fraction(start + i) for i in range(len(values))]
    total = Polynomial()
    for i, yi in enumerate(values):
        term = Polynomial.constant(as_rational(yi))
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Polynomial([-xj, 1]) * (1 / (xs[i] - xj))
        total = total + term
    return total
