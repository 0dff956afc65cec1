from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chernbounds.chern import (
    ChernData,
    discriminant,
    dual,
    elementary_symmetric,
    high_chern_tail,
    restrict_hyperplane,
    restrict_to,
    split_chern,
    twist_numeric,
    twist_symbolic,
    whitney,
    whitney_quotient,
)
from chernbounds.exact_arith import Polynomial, TruncatedSeries


@st.composite
def chern_data(draw, N=None, rank=None):
    N = draw(st.integers(1, 6)) if N is None else N
    rank = draw(st.integers(1, 6)) if rank is None else rank
    classes = draw(st.lists(st.integers(-30, 30), min_size=N, max_size=N))
    return ChernData(N, rank, tuple(classes))


def C(N, n, *classes):
    return ChernData(N, n, tuple(classes))


class TestWhitney:
    def test_null_correlation(self):
        assert whitney(C(3, 1, -1, 0, 0), C(3, 1, 1, 2, 2)) == C(3, 2, 0, 1, 0)

    def test_trivial_factor(self):
        quot = C(3, 1, 0, 1, 2)
        assert whitney(ChernData.trivial(1, 3), quot) == C(3, 2, 0, 1, 2)
        assert whitney(ChernData.trivial(4, 3), quot) == C(3, 5, 0, 1, 2)

    def test_ambient_mismatch(self):
        with pytest.raises(ValueError):
            whitney(C(2, 1, 0, 0), C(3, 1, 0, 0, 0))

    def test_quotient_examples(self):
        assert whitney_quotient(C(2, 2, 0, -1), C(2, 1, 1, 0)) == C(2, 1, -1, 0)
        assert whitney_quotient(C(3, 2, 0, 1, 0), C(3, 1, -1, 0, 0)) == C(3, 1, 1, 2, 2)
        x = C(3, 3, 1, 2, 3)
        assert whitney_quotient(x, ChernData.trivial(1, 3)) == C(3, 2, 1, 2, 3)

    def test_quotient_rank(self):
        with pytest.raises(ValueError):
            whitney_quotient(C(2, 1, 0, 1), C(2, 1, 0, 0))

    @given(st.integers(1, 6).flatmap(lambda N: st.tuples(chern_data(N), chern_data(N))))
    def test_quotient_inverts_product(self, pair):
        sub, quot = pair
        assert whitney_quotient(whitney(sub, quot), sub) == quot


class TestSplit:
    def test_examples(self):
        assert split_chern([0, 0, 0], 3) == C(3, 3, 0, 0, 0)
        assert split_chern([1, -1], 2) == C(2, 2, 0, -1)
        assert split_chern([1, 1, 1], 3) == C(3, 3, 3, 3, 1)

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.integers(1, 6))
    def test_product_of_line_classes(self, b, N):
        total = TruncatedSeries.one(N)
        for x in b:
            total = total * TruncatedSeries([1, x], N)
        assert split_chern(b, N).chern_polynomial() == total

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.integers(2, 6))
    def test_restriction_truncates(self, b, N):
        assert restrict_hyperplane(split_chern(b, N)) == split_chern(b, N - 1)


class TestTwist:
    def test_wide_window_value(self):
        assert twist_numeric(C(2, 2, 0, -3), 1).c2 == -2

    def test_rank_one(self):
        assert twist_numeric(C(3, 1, 0, 2, 4), 1) == C(3, 1, 1, 2, 2)

    @given(chern_data())
    def test_zero_twist(self, c):
        assert twist_numeric(c, 0) == c

    def test_symbolic_examples(self):
        T = twist_symbolic(C(3, 2, 0, 1, 0))
        assert T.class_poly(2) == Polynomial([1, 0, 1])
        assert T.evaluate(0) == C(3, 2, 0, 1, 0)
        c2 = twist_symbolic(C(2, 2, 0, -3)).class_poly(2)
        assert [t for t in range(-10, 11) if c2(t) < 0] == [-1, 0, 1]
        assert twist_symbolic(split_chern([0, 0, 0], 3)).class_poly(3) == Polynomial([0, 0, 0, 1])

    @given(chern_data(), st.integers(-10, 10), st.integers(-10, 10))
    def test_composition(self, c, l, m):
        assert twist_numeric(twist_numeric(c, l), m) == twist_numeric(c, l + m)

    @given(chern_data(), st.integers(-10, 10))
    def test_symbolic_matches_numeric(self, c, l):
        assert twist_symbolic(c).evaluate(l) == twist_numeric(c, l)

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=5), st.integers(1, 5))
    def test_split_twist_is_elementary_symmetric(self, b, N):
        T = twist_symbolic(split_chern(b, N))
        for i in range(1, N + 1):
            for t in range(-3, 4):
                assert T.class_poly(i)(t) == elementary_symmetric([x + t for x in b], i)


class TestDualRestrictDiscriminant:
    def test_dual(self):
        assert dual(C(3, 2, 0, 1, 0)) == C(3, 2, 0, 1, 0)
        assert dual(C(3, 2, 2, 3, 4)) == C(3, 2, -2, 3, -4)

    @given(chern_data())
    def test_dual_involution(self, c):
        assert dual(dual(c)) == c

    def test_restrict(self):
        assert restrict_hyperplane(C(3, 2, 0, 1, 0)) == C(2, 2, 0, 1)
        c = C(4, 2, 1, 2, 3, 4)
        assert restrict_to(c, 2) == restrict_hyperplane(restrict_hyperplane(c))
        with pytest.raises(ValueError):
            restrict_hyperplane(C(1, 1, 3))

    def test_discriminant(self):
        assert discriminant(C(3, 2, 0, 1, 0)) == 4
        for a in range(-3, 4):
            assert discriminant(split_chern([a, a], 3)) == 0
        with pytest.raises(ValueError):
            discriminant(C(1, 2, 0))

    @given(st.integers(2, 6).flatmap(chern_data), st.integers(-8, 8))
    def test_discriminant_invariance(self, c, l):
        assert discriminant(dual(c)) == discriminant(c)
        assert discriminant(twist_numeric(c, l)) == discriminant(c)


class TestHighChernTail:
    def test_points_on_plane(self):
        assert high_chern_tail(C(2, 1, 0, 5), 2) == Polynomial([5])

    def test_rank_one_on_p3(self):
        assert high_chern_tail(C(3, 1, 0, 0, 12), 3) == Polynomial([12])

    def test_vanishing_next_class(self):
        c = C(4, 3, 1, 2, 3, 0)
        assert high_chern_tail(c, 4).is_zero

    def test_range(self):
        with pytest.raises(ValueError):
            high_chern_tail(C(3, 2, 0, 1, 0), 2)
        with pytest.raises(ValueError):
            high_chern_tail(C(3, 2, 0, 1, 0), 4)

    @given(st.integers(1, 5).flatmap(lambda n: chern_data(6, n)))
    def test_leading_term(self, c):
        n, N = c.rank, c.ambient_dim
        for s in range(n + 1, N + 1):
            tail = high_chern_tail(c, s)
            assert tail.degree <= s - n - 1
            assert tail.coeff(s - n - 1) == (-1) ** (s - n - 1) * c.c(n + 1)


def test_from_series_rejects_fractions():
    with pytest.raises(ValueError):
        ChernData.from_series(TruncatedSeries([1, Fraction(1, 2)], 1), 1)


def test_validation():
    with pytest.raises(ValueError):
        ChernData(3, 1, (0, 1))
    with pytest.raises(ValueError):
        ChernData(3, 0, (0, 0, 0))
