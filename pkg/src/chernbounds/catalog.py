"""Sheaf descriptors with known invariants and the bound verifier.

A descriptor stores the Chern data, splitting type, global-section types and
closed-form section counts of a concrete sheaf. :func:`verify` runs every
applicable bound against that ground truth.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from . import bounds as B
from .chern import (
    ChernData,
    discriminant,
    high_chern_tail,
    split_chern,
    twist_numeric,
    whitney,
)
from .exact_arith import Polynomial, TruncatedSeries, h0_line_bundle, line_poly
from .jsonio import decode_int, decode_rational, dumps, encode_int, encode_rational
from .riemann_roch import euler_char, euler_char_poly
from .splitting import GstMatrix, SplittingType, no_gap

CATALOG_FORMAT = "chernbounds-catalog"


# --- Koszul computations --------------------------------------------------

def _ci_structure_series(degrees: Sequence[int], N: int) -> TruncatedSeries:
    """Chern polynomial of O_Y for a complete intersection of the given degrees."""
    total = TruncatedSeries.one(N)
    for p in range(1, len(degrees) + 1):
        for subset in combinations(degrees, p):
            line = TruncatedSeries([1, -sum(subset)], N)  # C(O(-d)) = 1 - d t
            total = total * (line if p % 2 == 0 else line.inverse())
    return total


def chern_from_koszul(shape: str, N: int, *, M: int = 1,
                      degrees: Sequence[int] = ()) -> ChernData:
    """Chern data of the ideal sheaf I_Y of a subvariety Y of P^N.

    Shapes: ``points`` (M reduced points), ``line``, ``lines`` (M disjoint
    lines) and ``complete_intersection`` (given degrees, codimension >= 2).
    """
    if shape == "points":
        if M < 1 or N < 2:
            raise ValueError("points need M >= 1 and N >= 2")
        o_y = _ci_structure_series([1] * N, N) ** M
    elif shape == "line":
        if N < 3:
            raise ValueError("a line has codimension >= 2 only for N >= 3")
        o_y = _ci_structure_series([1] * (N - 1), N)
    elif shape == "lines":
        if N < 3 or M < 1:
            raise ValueError("disjoint lines need N >= 3 and M >= 1")
        o_y = _ci_structure_series([1] * (N - 1), N) ** M
    elif shape == "complete_intersection":
        degrees = [int(d) for d in degrees]
        if not 2 <= len(degrees) <= N or min(degrees) < 1:
            raise ValueError("complete intersection needs 2..N positive degrees")
        o_y = _ci_structure_series(degrees, N)
    else:
        raise ValueError(f"unsupported shape {shape!r}")
    return ChernData.from_series(o_y.inverse(), 1)


# --- descriptors ----------------------------------------------------------

@dataclass(frozen=True)
class H0Series:
    """Piecewise-polynomial h^0 F(t): piece k applies for min_t[k] <= t < min_t[k+1].

    Below the first piece the value is 0.
    """

    pieces: tuple[tuple[int, Polynomial], ...]

    def __post_init__(self):
        starts = [p[0] for p in self.pieces]
        if not starts or starts != sorted(set(starts)):
            raise ValueError("h0 pieces need strictly increasing thresholds")

    def __call__(self, t: int) -> int:
        value = Fraction(0)
        for start, poly in self.pieces:
            if t >= start:
                value = poly(t)
            else:
                break
        if value.denominator != 1 or value < 0:
            raise ValueError(f"h0 series gives {value} at t={t}")
        return value.numerator

    @property
    def tail(self) -> Polynomial:
        return self.pieces[-1][1]

    @property
    def tail_start(self) -> int:
        return self.pieces[-1][0]


@dataclass(frozen=True)
class Flags:
    reflexive: bool = False
    torsion_free: bool = True
    split: bool = False
    # hypotheses of the discriminant floors: a general plane section (the
    # sheaf itself when N = 2) is non-split and semistable / stable
    semistable: bool = False
    stable: bool = False


@dataclass(frozen=True)
class KnownCohomology:
    """True h^i F (twist 0), least vanishing twist and regularity."""

    h: tuple[int, ...]
    vanishing_threshold: int
    regularity: int


@dataclass(frozen=True)
class SheafDescriptor:
    name: str
    chern: ChernData
    splitting: SplittingType
    gst: Optional[GstMatrix] = None
    h0_series: Optional[H0Series] = None
    flags: Flags = field(default_factory=Flags)
    provenance: str = ""
    cohomology: Optional[KnownCohomology] = None

    def __post_init__(self):
        b = SplittingType.of(self.splitting)
        object.__setattr__(self, "splitting", b)
        if self.chern.rank != len(b):
            raise ValueError(f"{self.name}: rank {self.chern.rank} != len(b) {len(b)}")
        if self.chern.c1 != b.c1:
            raise ValueError(f"{self.name}: c1 {self.chern.c1} != sum(b) {b.c1}")
        if self.gst is not None:
            if self.gst.ambient_dim != self.chern.ambient_dim:
                raise ValueError(f"{self.name}: gst has wrong number of rows")
            if self.gst.splitting != b:
                raise ValueError(f"{self.name}: gst row a_1 must equal the splitting type")
        if self.cohomology is not None and len(self.cohomology.h) != self.chern.ambient_dim + 1:
            raise ValueError(f"{self.name}: cohomology needs h^0..h^N")

    @property
    def ambient_dim(self) -> int:
        return self.chern.ambient_dim

    @property
    def rank(self) -> int:
        return self.chern.rank


# --- JSON format ----------------------------------------------------------

def descriptor_to_dict(d: SheafDescriptor) -> dict:
    out = {
        "name": d.name,
        "ambient_dim": d.ambient_dim,
        "rank": d.rank,
        "chern": [encode_int(c) for c in d.chern.classes],
        "splitting": [encode_int(x) for x in d.splitting],
        "gst": None if d.gst is None else [
            None if r is None else [encode_int(x) for x in r] for r in d.gst.rows
        ],
        "h0_series": None if d.h0_series is None else [
            {"min_t": encode_int(s), "coefficients": [encode_rational(c) for c in p.coeffs]}
            for s, p in d.h0_series.pieces
        ],
        "flags": {
            "reflexive": d.flags.reflexive,
            "torsion_free": d.flags.torsion_free,
            "split": d.flags.split,
            "semistable": d.flags.semistable,
            "stable": d.flags.stable,
        },
        "provenance": d.provenance,
        "cohomology": None if d.cohomology is None else {
            "h": [encode_int(x) for x in d.cohomology.h],
            "vanishing_threshold": encode_int(d.cohomology.vanishing_threshold),
            "regularity": encode_int(d.cohomology.regularity),
        },
    }
    return out


def descriptor_from_dict(obj: dict) -> SheafDescriptor:
    N = decode_int(obj["ambient_dim"])
    n = decode_int(obj["rank"])
    chern = ChernData(N, n, tuple(decode_int(c) for c in obj["chern"]))
    b = SplittingType(tuple(decode_int(x) for x in obj["splitting"]))
    gst = obj.get("gst")
    if gst is not None:
        gst = GstMatrix(N, tuple(
            None if r is None else SplittingType(tuple(decode_int(x) for x in r)) for r in gst
        ))
    h0 = obj.get("h0_series")
    if h0 is not None:
        h0 = H0Series(tuple(
            (decode_int(p["min_t"]), Polynomial(decode_rational(c) for c in p["coefficients"]))
            for p in h0
        ))
    flags = Flags(**{k: bool(v) for k, v in obj.get("flags", {}).items()})
    coh = obj.get("cohomology")
    if coh is not None:
        coh = KnownCohomology(
            tuple(decode_int(x) for x in coh["h"]),
            decode_int(coh["vanishing_threshold"]),
            decode_int(coh["regularity"]),
        )
    return SheafDescriptor(obj["name"], chern, b, gst, h0, flags,
                           obj.get("provenance", ""), coh)


def dump_catalog(descriptors: Iterable[SheafDescriptor]) -> str:
    doc = {
        "format": CATALOG_FORMAT,
        "version": 1,
        "descriptors": [descriptor_to_dict(d) for d in descriptors],
    }
    return dumps(doc)


def load_catalog(text: str) -> list[SheafDescriptor]:
    doc = json.loads(text)
    if isinstance(doc, dict) and "descriptors" in doc:
        items = doc["descriptors"]
    elif isinstance(doc, list):
        items = doc
    elif isinstance(doc, dict):
        items = [doc]
    else:
        raise ValueError("catalog must be an object or a list of descriptors")
    return [descriptor_from_dict(o) for o in items]


def load_catalog_file(path) -> list[SheafDescriptor]:
    return load_catalog(Path(path).read_text())


_BUILTIN: Optional[tuple[SheafDescriptor, ...]] = None


def builtin_catalog() -> list[SheafDescriptor]:
    """The shipped catalog (parsed from the embedded JSON document)."""
    global _BUILTIN
    if _BUILTIN is None:
        text = resources.files("chernbounds").joinpath("data/builtin_catalog.json").read_text()
        _BUILTIN = tuple(load_catalog(text))
    return list(_BUILTIN)


def find(name: str, catalog: Optional[Sequence[SheafDescriptor]] = None) -> SheafDescriptor:
    for d in catalog if catalog is not None else builtin_catalog():
        if d.name == name:
            return d
    raise KeyError(name)


# --- catalog construction -------------------------------------------------

def _pieces(h: Callable[[int], int], poly: Polynomial, lo: int, start: int,
            check: int = 6) -> H0Series:
    """h vanishes below ``lo`` and agrees with ``poly`` from ``start`` on."""
    for t in range(start, start + check):
        if poly(t) != h(t):
            raise AssertionError(f"closed form disagrees at t={t}: {poly(t)} vs {h(t)}")
    pieces: list = []
    for t in range(lo, start):
        v = h(t)
        if (not pieces and v == 0) or (pieces and pieces[-1][1] == v):
            continue
        pieces.append((t, Polynomial.constant(v)))
    pieces.append((start, poly))
    return H0Series(tuple(pieces))


def _line_terms(terms: Sequence[tuple[int, int]], N: int) -> H0Series:
    """h^0 of sum_k coef_k * h^0 O_{P^N}(t + shift_k), exact for every t."""
    def h(t):
        return sum(c * h0_line_bundle(t + s, N) for c, s in terms)

    poly = Polynomial()
    for c, s in terms:
        poly = poly + line_poly(N, s) * c
    start = max(-N - s for _, s in terms)
    lo = min(-s for _, s in terms)
    return _pieces(h, poly, lo, start)


def _split_cohomology(b: SplittingType, N: int) -> KnownCohomology:
    h = [B.h0_upper(b, N)] + [0] * (N - 1) + [B.hN_upper(b, N)]
    return KnownCohomology(tuple(h), max(b[0] + 1, -b[-1] - N), -b[-1])


def _split_descriptor(b: Sequence[int], N: int) -> SheafDescriptor:
    b = SplittingType(tuple(b))
    name = f"split_[{','.join(str(x) for x in b)}]_P{N}"
    return SheafDescriptor(
        name=name,
        chern=split_chern(b, N),
        splitting=b,
        gst=GstMatrix(N, (b,) * N),
        h0_series=_line_terms([(1, x) for x in b], N),
        flags=Flags(reflexive=True, torsion_free=True, split=True),
        provenance="split bundle O(b); classes are elementary symmetric functions of b",
        cohomology=_split_cohomology(b, N),
    )


def _null_correlation() -> SheafDescriptor:
    ideal = chern_from_koszul("lines", 3, M=2)
    chern = whitney(ChernData(3, 1, (-1, 0, 0)), twist_numeric(ideal, 1))
    poly = line_poly(3, -1) + line_poly(3, 1) - Polynomial([4, 2])
    return SheafDescriptor(
        name="null_correlation",
        chern=chern,
        splitting=SplittingType((0, 0)),
        gst=GstMatrix.from_rows([(0, 0), (0, -1), (-1, -1)]),
        h0_series=H0Series(((0, poly),)),
        flags=Flags(reflexive=True, torsion_free=True, semistable=True),
        provenance=(
            "normalized null-correlation bundle on P^3: 0 -> O(-1) -> F -> I_Y(1) -> 0 "
            "with Y two disjoint lines; h^0 F(t) = h^0 O(t-1) + h^0 I_Y(t+1) for t >= 0; "
            "plane section is strictly semistable"
        ),
        cohomology=KnownCohomology((0, 0, 0, 0), 2, 1),
    )


def _null_correlation_plane() -> SheafDescriptor:
    poly = line_poly(2, 0) * 2 - 1
    return SheafDescriptor(
        name="null_correlation_plane",
        chern=ChernData(2, 2, (0, 1)),
        splitting=SplittingType((0, 0)),
        gst=GstMatrix.from_rows([(0, 0), (0, -1)]),
        h0_series=H0Series(((0, poly),)),
        flags=Flags(reflexive=True, torsion_free=True, semistable=True),
        provenance=(
            "general plane section of the null-correlation bundle: "
            "0 -> O -> F -> I_p -> 0 on P^2; h^1 F(k) = 1 exactly for k in {-2, -1}"
        ),
        cohomology=KnownCohomology((1, 0, 0), 3, 1),
    )


def _example2(n: int, k: int) -> SheafDescriptor:
    line = chern_from_koszul("line", 3)
    single = whitney(ChernData.trivial(n - 1, 3), line) if n > 1 else line
    chern = single
    for _ in range(k - 1):
        chern = whitney(chern, single)
    rank = n * k
    zeros = (0,) * rank
    dropped = (0,) * (rank - k) + (-1,) * k
    poly = (line_poly(3, 0) * n - Polynomial([1, 1])) * k
    return SheafDescriptor(
        name=f"example2_n={n}_k={k}",
        chern=chern,
        splitting=SplittingType(zeros),
        gst=GstMatrix.from_rows([zeros, dropped, dropped]),
        h0_series=H0Series(((0, poly),)),
        flags=Flags(reflexive=n >= 2, torsion_free=True),
        provenance=(
            f"direct sum of {k} copies of F with 0 -> O^{n - 1} -> F -> I_Y -> 0, Y a line "
            "in P^3; the trivial part has rank n-1 so that F has rank n"
        ),
    )


def _extension(r: int, b_prime: Sequence[int]) -> SheafDescriptor:
    b_prime = tuple(b_prime)
    ideal = chern_from_koszul("complete_intersection", 3, degrees=(r, 1))
    chern = whitney(split_chern(b_prime, 3), ideal)
    b = SplittingType.sorted_from(b_prime + (0,))
    # h^0 I_Y(t) from the Koszul complex 0 -> O(-r-1) -> O(-1) + O(-r) -> I_Y
    terms = [(1, x) for x in b_prime] + [(1, -1), (1, -r), (-1, -r - 1)]
    return SheafDescriptor(
        name=f"extension_r={r}_b'=[{','.join(map(str, b_prime))}]",
        chern=chern,
        splitting=b,
        h0_series=_line_terms(terms, 3),
        flags=Flags(reflexive=True, torsion_free=True),
        provenance=(
            f"0 -> O(b') -> F -> I_Y -> 0 with Y a complete intersection ({r},1) in P^3; "
            "c2 exceeds the split value by deg Y"
        ),
    )


def _wide_window(b: int) -> SheafDescriptor:
    ideal = twist_numeric(chern_from_koszul("line", 3), -b)
    chern = whitney(ChernData(3, 1, (b, 0, 0)), ideal)
    # h^0 I_L(m) = 2 h^0 O(m-1) - h^0 O(m-2)
    h0 = _line_terms([(1, b), (2, -b - 1), (-1, -b - 2)], 3)
    return SheafDescriptor(
        name=f"wide_window_b={b}",
        chern=chern,
        splitting=SplittingType((b, -b)),
        gst=GstMatrix.from_rows([(b, -b), (b, -b - 1), None]),
        h0_series=h0,
        flags=Flags(reflexive=True, torsion_free=True),
        provenance=(
            "0 -> O(b) -> F -> I_Y(-b) -> 0 with Y a line in P^3; plane gst row "
            "[b, -b-1] is the row for which the c2 floor is attained, a_3 unknown"
        ),
    )


def _points(M: int, N: int, n: int) -> SheafDescriptor:
    chern = whitney(ChernData.trivial(n - 1, N), chern_from_koszul("points", N, M=M)) \
        if n > 1 else chern_from_koszul("points", N, M=M)

    def ideal_h0(t):
        return max(0, h0_line_bundle(t, N) - M)

    def h(t):
        return (n - 1) * h0_line_bundle(t, N) + ideal_h0(t)

    first = 0
    while h0_line_bundle(first, N) < M:
        first += 1
    poly = line_poly(N, 0) * n - M
    sec = 0
    while h0_line_bundle(sec, N) <= M:
        sec += 1
    zeros = (0,) * n
    top = (0,) * (n - 1) + (-sec,)
    rows = [zeros] * (N - 1) + [top]
    suffix = "" if n == 1 else f"_n={n}"
    return SheafDescriptor(
        name=f"points_M={M}_P{N}{suffix}",
        chern=chern,
        splitting=SplittingType(zeros),
        gst=GstMatrix.from_rows(rows),
        h0_series=_pieces(h, poly, 0, first),
        flags=Flags(reflexive=False, torsion_free=True, semistable=(N == 2),
                    stable=(N == 2 and n == 1)),
        provenance=(
            f"I_Y + O^{n - 1} with Y a set of {M} general points of P^{N}; "
            "c_N = (-1)^N M (N-1)! from the Koszul complex of each point"
        ),
    )


def build_catalog() -> list[SheafDescriptor]:
    """Construct every built-in descriptor from first principles."""
    out = [_null_correlation(), _null_correlation_plane()]
    out += [_example2(n, k) for n in (1, 2, 3) for k in range(1, 6)]
    for r in (1, 2, 3):
        for bp in ((0,), (1,), (2,), (1, 0), (1, 1)):
            out.append(_extension(r, bp))
    out += [_wide_window(b) for b in range(1, 6)]
    out += [_points(M, N, n) for N in (2, 3, 4) for n in (1, 2) for M in range(1, 11)]
    for N in (2, 3, 4):
        for n in (1, 2, 3):
            for b in _nonincreasing(n, 3, -3):
                out.append(_split_descriptor(b, N))
    return out


def _nonincreasing(length, hi, lo):
    if length == 0:
        yield ()
        return
    for x in range(hi, lo - 1, -1):
        for rest in _nonincreasing(length - 1, x, lo):
            yield (x,) + rest


# --- verification ---------------------------------------------------------

H0_TWISTS = range(-2, 6)
RIGROSSA_MAX_T = 20


@dataclass(frozen=True)
class VerificationReport:
    name: str
    reports: tuple[B.BoundReport, ...]

    @property
    def overall(self) -> str:
        return "fail" if any(r.verdict == B.VIOLATED for r in self.reports) else "pass"

    @property
    def sharp(self) -> list[str]:
        """Names of inequalities met with equality somewhere."""
        return sorted({r.bound_name for r in self.reports
                       if r.verdict == B.EQUALITY and r.direction != B.EQUAL})

    def violations(self) -> list[B.BoundReport]:
        return [r for r in self.reports if r.verdict == B.VIOLATED]


def _equal(name, expected, actual, params=None, note=""):
    return B.BoundReport.compare(name, expected, actual, B.EQUAL, params, note)


def verify(d: SheafDescriptor) -> VerificationReport:
    """Run every bound the descriptor's data permits."""
    C, b, N, n = d.chern, d.splitting, d.ambient_dim, d.rank
    out: list[B.BoundReport] = []
    h0 = d.h0_series
    gst = d.gst

    chi = euler_char(C)
    out.append(_equal("chi_integral", 1, chi.denominator, note=f"chi = {chi}"))
    if h0 is not None:
        out.append(_equal("chi_consistency", euler_char_poly(C), h0.tail,
                          note="h0 tail must equal chi(F(t))"))

    if h0 is not None:
        for t in H0_TWISTS:
            out.append(B.BoundReport.compare(
                "h0_upper", B.h0_upper(b + t, N), h0(t), B.UPPER, {"t": t}))
        if gst is not None and gst.complete():
            for t in H0_TWISTS:
                diff = B.h0_upper(b + t, N) - h0(t)
                out.append(B.BoundReport.compare(
                    "grossa", B.grossa_rhs(gst.twist(t)), diff, B.LOWER, {"t": t}))
            low = min(min(r) for r in gst.rows)
            for t in range(max(1, -low), RIGROSSA_MAX_T + 1):
                diff = B.h0_upper(b + t, N) - h0(t)
                out.append(B.rigrossa_rhs(gst, t, oracle=diff))
        plane = gst.plane_row if gst is not None else None
        if plane is not None:
            t0 = -plane[-1]
            for t in range(t0, t0 + 4):
                out.append(B.BoundReport.compare(
                    "menogrande2", B.menogrande2_rhs(b + t, plane + t, N), h0(t),
                    B.UPPER, {"t": t}))
                out.append(B.BoundReport.compare(
                    "menogrande", B.menogrande_rhs(b + t, plane + t, N), h0(t),
                    B.UPPER, {"t": t}))

    if N >= 2:
        # the strict floor needs a non-split plane section: true for non-split
        # sheaves on P^2 and for non-split reflexive sheaves
        strict = not d.flags.split and (N == 2 or d.flags.reflexive)
        out.append(B.BoundReport.compare(
            "c2_split_floor", b.e2 + (1 if strict else 0), C.c2, B.LOWER))
        plane = gst.plane_row if gst is not None else None
        if plane is not None:
            out.append(B.c2_lower(b, plane, oracle=C.c2))
        if strict and n >= 2:
            window = B.negative_c2_window(C, b)
            out.append(B.BoundReport.compare(
                "negative_c2_window", B.window_size_bound(b), len(window), B.UPPER,
                {"window": sorted(window)}))
        delta = discriminant(C)
        if no_gap(b):
            out.append(B.BoundReport.compare(
                "delta_nogap", B.delta_lower_nogap(n, C.c1), delta, B.LOWER))
            out.append(B.BoundReport.compare(
                "delta_uniform", B.delta_lower_uniform(n), delta, B.LOWER))
        if not d.flags.split:
            if d.flags.semistable:
                out.append(B.BoundReport.compare(
                    "delta_semistable", B.semistable_delta_floor(n, False), delta, B.LOWER))
            if d.flags.stable:
                out.append(B.BoundReport.compare(
                    "delta_stable", B.semistable_delta_floor(n, True), delta, B.LOWER))

    for s in range(3, min(n, N) + 1):
        lam = B.lambda_s(C, b, s)
        predicted = B.lambda_leading_prediction(C, b, s)
        actual = lam.coeff(s - 2) if lam.degree <= s - 2 else f"degree {lam.degree}"
        out.append(_equal("lambda_leading", predicted, actual,
                          {"s": s, "polynomial": str(lam)}))
    for s in range(n + 1, N + 1):
        tail = high_chern_tail(C, s)
        expected = (-1) ** (s - n - 1) * C.c(n + 1)
        top = s - n - 1
        actual = tail.coeff(top) if tail.degree <= top else f"degree {tail.degree}"
        out.append(_equal("high_chern_tail", expected, actual, {"s": s}))

    if gst is not None and gst.rows[-1] is not None:
        out.append(B.louso_check(gst.gst, C.c1, split=d.flags.split))
        h0_values = {t: h0(t) for t in H0_TWISTS} if h0 is not None else None
        out.append(B.split_predicates(b, gst, N, h0_values, split_flag=d.flags.split))

    if d.flags.reflexive and N >= 2:
        cb = B.cohomology_bounds(n, N, C.c1, C.c2, b)
        for s, bound in sorted(cb.chern_bounds.items()):
            out.append(B.BoundReport.compare("chern_bound", bound, abs(C.c(s)), B.UPPER, {"s": s}))
        if h0 is not None:
            out.append(B.BoundReport.compare("P_bound", cb.P(0), h0(0), B.UPPER, {"i": 0}))
        if d.cohomology is not None:
            for i, hi in enumerate(d.cohomology.h):
                out.append(B.BoundReport.compare("P_bound", cb.P(i), hi, B.UPPER, {"i": i}))
            out.append(B.BoundReport.compare(
                "Q_bound", cb.Q, d.cohomology.vanishing_threshold, B.UPPER))
            reg, _ = B.regularity_bound(cb, N)
            out.append(B.BoundReport.compare("regularity_bound", reg, d.cohomology.regularity, B.UPPER))
    return VerificationReport(d.name, tuple(out))


def verify_all(descriptors: Optional[Iterable[SheafDescriptor]] = None) -> list[VerificationReport]:
    return [verify(d) for d in (builtin_catalog() if descriptors is None else descriptors)]


def report_to_dict(rep: VerificationReport) -> dict:
    return {
        "name": rep.name,
        "overall": rep.overall,
        "sharp": rep.sharp,
        "reports": [
            {
                "bound": r.bound_name,
                "bound_value": r.bound_value,
                "oracle_value": r.oracle_value,
                "verdict": r.verdict,
                "direction": r.direction,
                "params": r.params,
                "note": r.note,
            }
            for r in rep.reports
        ],
    }
