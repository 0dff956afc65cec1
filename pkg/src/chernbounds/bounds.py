"""Numeric bounds relating a torsion-free sheaf to the split bundle O(b).

Evaluators return plain integers/polynomials; pass ``oracle=`` to get a
:class:`BoundReport` comparing the bound with a known true value.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from threading import RLock
from math import comb, factorial
from typing import Any, Optional, Sequence, Union

from .chern import ChernData, split_chern, twist_numeric, twist_symbolic
from .exact_arith import Polynomial, h0_line_bundle
from .riemann_roch import chi_monomials
from .splitting import GstMatrix, InvariantSet, SplittingType, cbar, leq

SATISFIED = "satisfied"
EQUALITY = "equality"
VIOLATED = "violated"
NO_ORACLE = "no-oracle"

# direction of a bound relative to the oracle value
UPPER = "upper"  # oracle <= bound
LOWER = "lower"  # oracle >= bound
EQUAL = "equal"  # oracle == bound expected


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    bound_value: Any
    oracle_value: Any = None
    verdict: str = NO_ORACLE
    direction: str = UPPER
    params: dict = field(default_factory=dict)
    note: str = ""

    @classmethod
    def compare(cls, name, bound, oracle, direction=UPPER, params=None, note=""):
        if oracle is None:
            verdict = NO_ORACLE
        elif oracle == bound:
            verdict = EQUALITY
        elif direction == EQUAL:
            verdict = VIOLATED
        elif (direction == UPPER) == (oracle < bound):
            verdict = SATISFIED
        else:
            verdict = VIOLATED
        return cls(name, bound, oracle, verdict, direction, dict(params or {}), note)


def _maybe(name, value, oracle, direction, params=None):
    if oracle is None:
        return value
    return BoundReport.compare(name, value, oracle, direction, params)


# --- section counts -------------------------------------------------------

def h0_upper(b, N: int, oracle: Optional[int] = None):
    """h^0 O(b) on P^N, an upper bound for h^0 F."""
    value = sum(h0_line_bundle(x, N) for x in b)
    return _maybe("h0_upper", value, oracle, UPPER)


def hN_upper(b, N: int, oracle: Optional[int] = None):
    """h^0 O(-b-N-1) on P^N, an upper bound for h^N F."""
    value = sum(h0_line_bundle(-x - N - 1, N) for x in b)
    return _maybe("hN_upper", value, oracle, UPPER)


def grossa_rhs(M: GstMatrix, reading: str = "subspace", oracle: Optional[int] = None):
    """Lower bound for h^0 O(b) - h^0 F from the gst rows a_1..a_N.

    ``reading="subspace"`` takes the first-sum terms h^0 O(a_{j-1,i}) on
    P^{j-1}; ``reading="full"`` takes them on P^N as literally displayed.
    """
    if reading not in ("subspace", "full"):
        raise ValueError(f"unknown reading {reading!r}")
    if not M.complete():
        raise ValueError("grossa bound needs every gst row")
    N, n = M.ambient_dim, M.rank
    total = 0
    for i in range(n):
        for j in range(2, N + 1):
            a_j, a_prev = M.row(j)[i], M.row(j - 1)[i]
            if a_j < 0:
                total += h0_line_bundle(a_prev, j - 1 if reading == "subspace" else N)
            else:
                gap = a_prev - a_j - 1
                if gap >= 0:
                    for k in range(j, N + 1):
                        total += h0_line_bundle(a_j, N - k) * h0_line_bundle(gap, k)
    return _maybe("grossa", total, oracle, LOWER)


def rigrossa_rhs(M: GstMatrix, t: int, oracle: Optional[int] = None):
    """Lower bound for h^0 O(b+t) - h^0 F(t) when every gst entry plus t is >= 0."""
    if not M.complete():
        raise ValueError("rigrossa bound needs every gst row")
    low = min(min(r) for r in M.rows)
    if low + t < 0:
        raise ValueError(f"twist t={t} too small: need t >= {-low}")
    N, n = M.ambient_dim, M.rank
    total = 0
    for i in range(n):
        for j in range(2, N + 1):
            a_j, a_prev = M.row(j)[i], M.row(j - 1)[i]
            gap = a_prev - a_j - 1
            if gap < 0:
                continue
            for k in range(j, N + 1):
                total += h0_line_bundle(a_j + t, N - k) * h0_line_bundle(gap, k)
    return _maybe("rigrossa", total, oracle, LOWER, {"t": t})


def _plane_terms(b, a_plane, N):
    b, a = SplittingType.of(b), SplittingType.of(a_plane)
    if len(b) != len(a):
        raise ValueError("b and a_plane must have equal length")
    if min(a) < 0:
        raise ValueError("plane gst must be non-negative (gsr = rank)")
    if not leq(a, b):
        raise ValueError("plane gst must be <= b componentwise")
    return b, a


def menogrande2_rhs(b, a_plane, N: int, oracle: Optional[int] = None):
    """Upper bound h^0 O(b) - sum_i h^0_{P^{N-2}}(a_i) h^0_{P^2}(b_i - a_i - 1)."""
    b, a = _plane_terms(b, a_plane, N)
    value = h0_upper(b, N) - sum(
        h0_line_bundle(ai, N - 2) * h0_line_bundle(bi - ai - 1, 2) for bi, ai in zip(b, a)
    )
    return _maybe("menogrande2", value, oracle, UPPER)


def menogrande_rhs(b, a_plane, N: int, oracle: Optional[int] = None):
    """Weaker form h^0 O(b) - h^0_{P^2}(b - a - 1)."""
    b, a = _plane_terms(b, a_plane, N)
    value = h0_upper(b, N) - sum(h0_line_bundle(bi - ai - 1, 2) for bi, ai in zip(b, a))
    return _maybe("menogrande", value, oracle, UPPER)


# --- second Chern class and discriminant ----------------------------------

def c2_lower(b, a_plane, oracle: Optional[int] = None):
    """sum_{i<j} b_i b_j + sum_i (b_i - a_i)(b_i - a_i + 1)/2."""
    b, a = SplittingType.of(b), SplittingType.of(a_plane)
    if len(b) != len(a):
        raise ValueError("b and a_plane must have equal length")
    if not leq(a, b):
        raise ValueError("plane gst must be <= b componentwise")
    value = b.e2 + sum((x - y) * (x - y + 1) // 2 for x, y in zip(b, a))
    return _maybe("c2_lower", value, oracle, LOWER)


def c2_of_twist(C: ChernData, t: int) -> int:
    n = C.rank
    return C.c2 + (n - 1) * t * C.c1 + comb(n, 2) * t * t


def negative_c2_window(C: ChernData, b=None) -> frozenset:
    """All integers t with c_2(F(t)) <= 0."""
    if C.ambient_dim < 2:
        raise ValueError("c_2 needs ambient_dim >= 2")
    n = C.rank
    if n == 1:
        if C.c2 > 0:
            return frozenset()
        raise ValueError("rank 1 with c_2 <= 0: every twist has c_2 <= 0")
    # convex quadratic; integer minimum sits at floor or ceil of the vertex
    A, B = comb(n, 2), (n - 1) * C.c1
    vertex = Fraction(-B, 2 * A)
    t0 = vertex.numerator // vertex.denominator
    start = t0 if c2_of_twist(C, t0) <= c2_of_twist(C, t0 + 1) else t0 + 1
    if c2_of_twist(C, start) > 0:
        return frozenset()
    lo = hi = start
    while c2_of_twist(C, lo - 1) <= 0:
        lo -= 1
    while c2_of_twist(C, hi + 1) <= 0:
        hi += 1
    return frozenset(range(lo, hi + 1))


def window_size_bound(b) -> int:
    """Largest number of twists with c_2 <= 0 allowed for a non-split sheaf."""
    return max(0, SplittingType.of(b).diameter - 1)


def delta_lower_nogap(n: int, c1: int) -> int:
    """Discriminant floor for no-gap splitting types, refined by the residue of c1."""
    if n < 1:
        raise ValueError("n must be positive")
    cb = cbar(c1, n)
    if n % 2 == 0:
        v = -Fraction(2 * n, 4) * comb(n, 3) - (n - 1) * cb * cb
    else:
        v = -Fraction(2 * n, 4) * comb(n + 1, 3) + (n - 1) * cb * (n - cb)
    assert v.denominator == 1
    return v.numerator


def delta_lower_uniform(n: int) -> int:
    """-n^2 (n^2 - 1) / 12."""
    if n < 1:
        raise ValueError("n must be positive")
    num = n * n * (n * n - 1)
    assert num % 12 == 0
    return -num // 12


def semistable_delta_floor(n: int, stable: bool) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(3 * n * n, 4) if stable else Fraction(2 * n)


# --- higher Chern classes -------------------------------------------------

def lambda_s(C: ChernData, b, s: int) -> Polynomial:
    """c_s(F(t)) - c_s(O(b + t)) as a polynomial in t."""
    b = SplittingType.of(b)
    n, N = C.rank, C.ambient_dim
    if len(b) != n:
        raise ValueError("splitting type length must equal the rank")
    if b.c1 != C.c1:
        raise ValueError(f"splitting type sums to {b.c1}, but c_1 = {C.c1}")
    if not 3 <= s <= min(n, N):
        raise ValueError(f"need 3 <= s <= min(n, N) = {min(n, N)}, got {s}")
    own = twist_symbolic(C).class_poly(s)
    split = twist_symbolic(split_chern(b, N)).class_poly(s)
    return own - split


def lambda_leading_prediction(C: ChernData, b, s: int) -> int:
    """binom(n-2, s-2) * (c_2 - sum_{i<j} b_i b_j)."""
    b = SplittingType.of(b)
    return comb(C.rank - 2, s - 2) * (C.c2 - b.e2)


# --- splitting criteria ---------------------------------------------------

def split_predicates(b, a, N: int, h0_values: Optional[dict] = None,
                     split_flag: Optional[bool] = None) -> BoundReport:
    """Check the numeric equivalents of splitting against each other.

    ``a`` is gst(F) (a GstMatrix or its last row); ``h0_values`` maps twists t
    to h^0 F(t). Condition 2 is a == b; condition 4 is h^0 F(t) == h^0 O(b+t)
    for some t >= -a_n.
    """
    b = SplittingType.of(b)
    if isinstance(a, GstMatrix):
        a = a.gst
    a = SplittingType.of(a)
    cond2 = a == b
    detail: dict = {"a_equals_b": cond2}
    verdicts = [cond2]
    if h0_values:
        eligible = {t: v for t, v in h0_values.items() if t >= -a[-1]}
        if eligible:
            cond3 = all(v == h0_upper(b + t, N) for t, v in h0_values.items())
            cond4 = any(v == h0_upper(b + t, N) for t, v in eligible.items())
            detail["h0_equal_all_t"] = cond3
            detail["h0_equal_some_t"] = cond4
            verdicts += [cond3, cond4]
    if split_flag is not None:
        detail["declared_split"] = split_flag
        verdicts.append(split_flag)
    if len(verdicts) == 1:
        verdict = NO_ORACLE
    else:
        verdict = SATISFIED if len(set(verdicts)) == 1 else VIOLATED
    return BoundReport("split_predicates", "split" if cond2 else "non-split",
                       None if len(verdicts) == 1 else ("split" if all(verdicts[1:]) else "non-split"),
                       verdict, EQUAL, detail)


def louso_check(a, c1: int, split: Optional[bool] = None) -> BoundReport:
    """c_1 >= sum a_i; equality happens only for F = O(a)."""
    a = SplittingType.of(a)
    report = BoundReport.compare("louso", a.c1, c1, LOWER)
    if split is not None and (report.verdict == EQUALITY) != split:
        return BoundReport(report.bound_name, report.bound_value, report.oracle_value,
                           VIOLATED, LOWER, {"declared_split": split},
                           "equality must coincide with F split")
    return report


# --- cohomology, regularity and Chern class bounds ------------------------

@dataclass(frozen=True)
class CohomologyBounds:
    ambient_dim: int
    per_index_bounds: tuple[int, ...]
    vanishing_threshold: int
    chern_bounds: dict = field(default_factory=dict)

    def P(self, i: int) -> int:
        return self.per_index_bounds[i]

    @property
    def Q(self) -> int:
        return self.vanishing_threshold


# largest twist window a prefix-sum table may span before giving up
MAX_TWIST_WINDOW = 2_000_000


class RecursionBudgetError(ValueError):
    """The cohomology recursion would need a twist window beyond MAX_TWIST_WINDOW."""


class _Tower:
    """P^i and Q for every twist of one splitting shape on P^N.

    ``shape`` is b normalized to b_1 = 0; offset s stands for the splitting
    type shape + s. Sums over consecutive twists use lazily extended prefix
    sums, so each window sum costs O(1) once the table covers it.
    """

    def __init__(self, N: int, shape: tuple, delta2: int):
        self.N, self.shape, self.delta2 = N, shape, delta2
        self._p: dict = {}
        self._q: dict = {}
        self._cum: dict = {}  # i -> [anchor, right sums, left sums]
        self._lock = RLock()

    def b(self, s: int) -> tuple:
        return tuple(x + s for x in self.shape)

    @property
    def lower(self) -> "_Tower":
        return _tower(self.N - 1, self.shape, self.delta2)

    def p(self, i: int, s: int) -> int:
        key = (i, s)
        if key not in self._p:
            self._p[key] = self._compute_p(i, s)
        return self._p[key]

    def _compute_p(self, i: int, s: int) -> int:
        N, b = self.N, self.b(s)
        if i == 0:
            return h0_upper(b, N)
        if i == N:
            return hN_upper(b, N)
        if N == 2:
            c1 = sum(b)
            c2 = SplittingType(b).e2 + self.delta2
            chi = (c1 * c1 + 3 * c1) // 2 - c2 + len(b)
            return max(0, h0_upper(b, 2) + hN_upper(b, 2) - chi)
        low = self.lower
        qh = low.q(s)
        if i == 1:
            # h^1 F(-k) = 0 for k >= Q(F_H); telescope h^1 F(-k) <= h^1 F(-k-1) + h^1 F_H(-k)
            return low.window(1, s - qh, s)
        # h^i F(k) <= h^i F(k+1) + h^{i-1} F_H(k+1), and h^i F(k) = 0 for k >= Q(F_H)
        return low.window(i - 1, s + 1, s + qh + 1)

    def q(self, s: int) -> int:
        if s not in self._q:
            self._q[s] = self._compute_q(s)
        return self._q[s]

    def _compute_q(self, s: int) -> int:
        N = self.N
        b1, bn = s, s + self.shape[-1]
        if N == 2:
            # from k0 = -b_n on, h^1 F(k) strictly drops until it is zero
            pos = -bn + self.p(1, s - bn)
            # Serre duality: h^1 F(-k) = h^1 F^v(k-3); F^v has splitting type -b
            dual_shape = tuple(self.shape[-1] - x for x in reversed(self.shape))
            neg = 3 + b1 + _tower(2, dual_shape, self.delta2).p(1, -self.shape[-1])
            return max(pos, neg, b1 + 1, -bn - 2, 1)
        qh = self.lower.q(s)
        # F_H is (Q(F_H) + N - 1)-regular, so from there on h^1 F(k) strictly drops
        start = qh + N - 1
        pos = start + self.p(1, s + start)
        return max(qh, pos, -bn - N, b1 + 1, 1)

    def window(self, i: int, lo: int, hi: int) -> int:
        """sum of P^i over offsets lo..hi."""
        if hi < lo:
            return 0
        return self._prefix(i, hi + 1) - self._prefix(i, lo)

    def _prefix(self, i: int, s: int) -> int:
        # C(s) = sum_{anchor <= u < s} P^i(u), extended below the anchor by subtraction
        with self._lock:
            if i not in self._cum:
                self._cum[i] = [s, [0], [0]]
            anchor, right, left = self._cum[i]
            if abs(s - anchor) > MAX_TWIST_WINDOW:
                raise RecursionBudgetError(
                    f"P^{i} on P^{self.N} needs a window of {abs(s - anchor)} twists "
                    f"(limit {MAX_TWIST_WINDOW})")
            while s > anchor + len(right) - 1:
                u = anchor + len(right) - 1
                right.append(right[-1] + self.p(i, u))
            while s < anchor - len(left) + 1:
                u = anchor - len(left)
                left.append(left[-1] - self.p(i, u))
            return right[s - anchor] if s >= anchor else left[anchor - s]


_TOWERS: dict = {}
_TOWERS_LOCK = RLock()


def _tower(N: int, shape: tuple, delta2: int) -> _Tower:
    key = (N, shape, delta2)
    with _TOWERS_LOCK:
        if key not in _TOWERS:
            _TOWERS[key] = _Tower(N, shape, delta2)
        return _TOWERS[key]


def _locate(N: int, b: tuple, delta2: int) -> tuple[_Tower, int]:
    shape = tuple(x - b[0] for x in b)
    return _tower(N, shape, delta2), b[0]


def _pi(N: int, i: int, b: tuple, delta2: int) -> int:
    tower, s = _locate(N, b, delta2)
    return tower.p(i, s)


def _q(N: int, b: tuple, delta2: int) -> int:
    tower, s = _locate(N, b, delta2)
    return tower.q(s)


def _chern_bound(N: int, s: int, b: tuple, delta2: int, known: dict) -> int:
    """Bound for |c_s| from Riemann-Roch on a general P^s."""
    n = len(b)
    c1 = sum(b)
    c2 = SplittingType(b).e2 + delta2
    P = [_pi(s, i, b, delta2) for i in range(s + 1)]
    chi_bound = max(sum(P[0::2]), sum(P[1::2]))
    exact = Fraction(0)
    loose = Fraction(0)
    cs_mono = tuple(1 if j == s - 1 else 0 for j in range(s))
    for e, coef in chi_monomials(n, s):
        if e == cs_mono:
            continue
        term = coef * c1 ** e[0] * (c2 ** e[1] if s >= 2 else 1)
        if any(e[2:]):
            mag = abs(term)
            for j in range(3, s + 1):
                if e[j - 1]:
                    mag *= known[j] ** e[j - 1]
            loose += mag
        else:
            exact += term
    # chi = (-1)^(s-1) c_s / (s-1)! + rest
    total = factorial(s - 1) * (chi_bound + abs(exact) + loose)
    return total.numerator // total.denominator


def cohomology_bounds(n: int, N: int, c1: int, c2: int, b) -> CohomologyBounds:
    """Bounds P^i (i = 0..N), Q and C_s (3 <= s <= N) for reflexive sheaves.

    The bounds depend only on (n, N, c1, c2, b); they follow the induction on
    N through general hyperplane sections.
    """
    if N < 2:
        raise ValueError("cohomology bounds need N >= 2")
    b = SplittingType.of(b)
    if len(b) != n:
        raise ValueError(f"splitting type has length {len(b)}, rank is {n}")
    if b.c1 != c1:
        raise ValueError(f"c1={c1} does not match sum of splitting type {b.c1}")
    key = b.entries
    delta2 = c2 - b.e2
    P = tuple(_pi(N, i, key, delta2) for i in range(N + 1))
    Q = _q(N, key, delta2)
    chern: dict = {}
    for s in range(3, N + 1):
        chern[s] = _chern_bound(N, s, key, delta2, chern)
    return CohomologyBounds(N, P, Q, chern)


def cohomology_bounds_from_invariants(inv: InvariantSet, N: int) -> CohomologyBounds:
    """Worst case of :func:`cohomology_bounds` over every compatible splitting type."""
    results = []
    for b in inv.candidate_splittings():
        c2 = inv.c2 if inv.c2 is not None else b.e2 + inv.delta2
        results.append(cohomology_bounds(inv.rank, N, inv.c1, c2, b))
    if not results:
        raise ValueError("no splitting type is compatible with the given invariants")
    P = tuple(max(r.P(i) for r in results) for i in range(N + 1))
    Q = max(r.Q for r in results)
    chern = {s: max(r.chern_bounds[s] for r in results) for s in range(3, N + 1)}
    return CohomologyBounds(N, P, Q, chern)


def regularity_bound(bounds: CohomologyBounds, N: Optional[int] = None) -> tuple[int, int]:
    """(regularity bound Q, global-generation threshold Q + N)."""
    N = bounds.ambient_dim if N is None else N
    return bounds.Q, bounds.Q + N
