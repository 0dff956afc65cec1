"""Exact Chern-class arithmetic on P^N and numeric bounds for torsion-free sheaves."""
from .bounds import BoundReport, CohomologyBounds, cohomology_bounds, regularity_bound
from .catalog import SheafDescriptor, VerificationReport, builtin_catalog, chern_from_koszul, verify
from .chern import (
    ChernData,
    TwistedChern,
    discriminant,
    dual,
    high_chern_tail,
    restrict_hyperplane,
    split_chern,
    twist_numeric,
    twist_symbolic,
    whitney,
    whitney_quotient,
)
from .exact_arith import Polynomial, Rational, TruncatedSeries, binom_poly, h0_line_bundle
from .riemann_roch import chern_character, euler_char, euler_char_poly, todd_class
from .splitting import GstMatrix, SplittingType, extremal_nogap_sequence, no_gap

__version__ = "0.1.0"
