"""Splitting types, global-section types and no-gap sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional, Sequence

from .chern import elementary_symmetric

MAX_BRUTE_FORCE_N = 10


@dataclass(frozen=True)
class SplittingType:
    """A non-increasing integer sequence b_1 >= ... >= b_n, n >= 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if not entries:
            raise ValueError("a splitting type needs at least one entry")
        if any(x < y for x, y in zip(entries, entries[1:])):
            raise ValueError(f"sequence {list(entries)} is not non-increasing")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, seq: "SplittingType | Iterable[int]") -> "SplittingType":
        if isinstance(seq, SplittingType):
            return seq
        return cls(tuple(seq))

    @classmethod
    def sorted_from(cls, seq: Iterable[int]) -> "SplittingType":
        return cls(tuple(sorted(seq, reverse=True)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, t: int) -> "SplittingType":
        return SplittingType(tuple(x + t for x in self.entries))

    def __neg__(self) -> "SplittingType":
        return SplittingType(tuple(-x for x in reversed(self.entries)))

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def c1(self) -> int:
        return sum(self.entries)

    @property
    def e2(self) -> int:
        """sum_{i<j} b_i b_j, the second Chern class of O(b)."""
        return elementary_symmetric(self.entries, 2)

    @property
    def diameter(self) -> int:
        return self.entries[0] - self.entries[-1]

    @property
    def sum_squares(self) -> int:
        return sum(x * x for x in self.entries)


def no_gap(b: "SplittingType | Sequence[int]") -> bool:
    b = SplittingType.of(b)
    return all(x - y <= 1 for x, y in zip(b, b.entries[1:]))


def leq(a, b) -> bool:
    """Componentwise a_i <= b_i."""
    a, b = SplittingType.of(a), SplittingType.of(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def cbar(c1: int, n: int) -> int:
    """The residue 0 <= c <= n/2 with c1 = +-c mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    r = c1 % n
    return min(r, n - r)


def _base_extremal(n: int, cb: int) -> list[int]:
    if n % 2 == 0:
        h = (n - 2) // 2
        return list(range(-h, h + 1)) + [cb]
    h = (n - 3) // 2
    return list(range(-h, (n - 1) // 2 + 1)) + [cb - (n - 1) // 2]


def extremal_nogap_sequence(n: int, c1: int) -> SplittingType:
    """A no-gap sequence of length n and sum c1 with the largest sum of squares."""
    if n < 1:
        raise ValueError("n must be positive")
    cb = cbar(c1, n)
    base = _base_extremal(n, cb)
    if (c1 - cb) % n == 0:
        k = (c1 - cb) // n
        seq = [x + k for x in base]
    else:
        # c1 = -cb mod n: negate the construction, then shift
        k = (c1 + cb) // n
        seq = [-x + k for x in base]
    return SplittingType.sorted_from(seq)


def nogap_sequences(n: int, c1: int) -> Iterable[SplittingType]:
    """All no-gap sequences of length n summing to c1.

    Such a sequence is b_n plus a 0/1 step pattern, so there are at most
    2^(n-1) candidates.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for steps in product((0, 1), repeat=n - 1):
        # b_i = m + sum_{j >= i} steps[j]
        offsets = [0] * n
        for i in range(n - 2, -1, -1):
            offsets[i] = offsets[i + 1] + steps[i]
        rest = c1 - sum(offsets)
        if rest % n == 0:
            m = rest // n
            yield SplittingType(tuple(m + o for o in offsets))


def brute_force_max_sumsq(n: int, c1: int) -> int:
    if n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"n={n} exceeds the enumeration guard {MAX_BRUTE_FORCE_N}")
    best = None
    for b in nogap_sequences(n, c1):
        s = b.sum_squares
        if best is None or s > best:
            best = s
    assert best is not None
    return best


@dataclass(frozen=True)
class GstMatrix:
    """Global-section types a_1..a_N of restrictions to general j-spaces.

    ``rows[j-1]`` is a_j or None when unknown; a_1 is the splitting type.
    """

    ambient_dim: int
    rows: tuple[Optional[SplittingType], ...]

    def __post_init__(self):
        rows = tuple(None if r is None else SplittingType.of(r) for r in self.rows)
        if len(rows) != self.ambient_dim:
            raise ValueError(f"expected {self.ambient_dim} rows, got {len(rows)}")
        if rows[0] is None:
            raise ValueError("row a_1 (the splitting type) is required")
        n = len(rows[0])
        for j, r in enumerate(rows, 1):
            if r is not None and len(r) != n:
                raise ValueError(f"row a_{j} has length {len(r)}, expected {n}")
        for j in range(2, len(rows) + 1):
            prev, cur = rows[j - 2], rows[j - 1]
            if prev is not None and cur is not None and not leq(cur, prev):
                raise ValueError(f"row a_{j} = {list(cur)} is not <= a_{j-1} = {list(prev)}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Optional[Sequence[int]]]) -> "GstMatrix":
        return cls(len(rows), tuple(rows))

    @property
    def splitting(self) -> SplittingType:
        return self.rows[0]

    @property
    def rank(self) -> int:
        return len(self.rows[0])

    def row(self, j: int) -> Optional[SplittingType]:
        return self.rows[j - 1]

    def complete(self) -> bool:
        return all(r is not None for r in self.rows)

    def twist(self, t: int) -> "GstMatrix":
        return GstMatrix(self.ambient_dim, tuple(None if r is None else r + t for r in self.rows))

    @property
    def plane_row(self) -> Optional[SplittingType]:
        """gst of a general plane section (a_2), or None on P^1."""
        return self.rows[1] if self.ambient_dim >= 2 else None

    @property
    def gst(self) -> SplittingType:
        """gst of the sheaf itself (a_N)."""
        r = self.rows[-1]
        if r is None:
            raise ValueError("row a_N is unknown")
        return r


@dataclass(frozen=True)
class InvariantSet:
    rank: int
    c1: int
    d: int
    c2: Optional[int] = None
    b: Optional[SplittingType] = None
    delta2: Optional[int] = None
    entry_bounds: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    @property
    def entry_range(self) -> tuple[int, int]:
        """Integer range allowed for every splitting-type entry."""
        lo, hi = self.entry_bounds
        return -((-lo.numerator) // lo.denominator), hi.numerator // hi.denominator

    def candidate_splittings(self) -> list[SplittingType]:
        """Every splitting type compatible with the known invariants."""
        if self.b is not None:
            return [self.b]
        lo, hi = self.entry_range
        out = []
        for top in range(lo + self.d, hi + 1):
            bottom = top - self.d
            if bottom < lo:
                continue
            inner = self.rank - 2
            if self.rank == 1:
                if self.d == 0 and top == self.c1:
                    out.append(SplittingType((top,)))
                continue
            for mid in _nonincreasing(inner, top, bottom):
                seq = (top,) + mid + (bottom,)
                if sum(seq) == self.c1:
                    out.append(SplittingType(seq))
        return out


def _nonincreasing(length: int, hi: int, lo: int):
    if length == 0:
        yield ()
        return
    for x in range(hi, lo - 1, -1):
        for rest in _nonincreasing(length - 1, x, lo):
            yield (x,) + rest


def invariant_convert(
    *,
    rank: Optional[int] = None,
    b=None,
    c1: Optional[int] = None,
    c2: Optional[int] = None,
    d: Optional[int] = None,
    delta2: Optional[int] = None,
) -> InvariantSet:
    """Complete one of the invariant sets {b, delta2}, {b, c2}, {c1, c2, d}, {c1, d, delta2}.

    delta2 = c2 - sum_{i<j} b_i b_j. Without b the entries are only known to
    lie in [c1/n - d, c1/n + d].
    """
    if b is not None:
        b = SplittingType.of(b)
        if (c2 is None) == (delta2 is None):
            raise ValueError("with b give exactly one of c2, delta2")
        if c2 is None:
            c2 = b.e2 + delta2
        else:
            delta2 = c2 - b.e2
        n = len(b)
        mean = Fraction(b.c1, n)
        return InvariantSet(n, b.c1, b.diameter, c2, b, delta2,
                            (mean - b.diameter, mean + b.diameter))
    if c1 is None or d is None or rank is None:
        raise ValueError("unsupported invariant set; need b, or rank with c1 and d")
    if (c2 is None) == (delta2 is None):
        raise ValueError("with (c1, d) give exactly one of c2, delta2")
    if d < 0:
        raise ValueError("diameter must be non-negative")
    mean = Fraction(c1, rank)
    return InvariantSet(rank, c1, d, c2, None, delta2, (mean - d, mean + d))
