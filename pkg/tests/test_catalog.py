import json
from math import factorial

import pytest

from chernbounds import bounds as B
from chernbounds import catalog as K
from chernbounds.chern import ChernData, split_chern, whitney
from chernbounds.exact_arith import Polynomial, h0_line_bundle
from chernbounds.riemann_roch import euler_char, euler_char_poly
from chernbounds.splitting import GstMatrix, SplittingType


@pytest.fixture(scope="module")
def catalog():
    return K.builtin_catalog()


class TestKoszul:
    @pytest.mark.parametrize("M", range(1, 11))
    def test_points_on_plane(self, M):
        assert K.chern_from_koszul("points", 2, M=M) == ChernData(2, 1, (0, M))

    def test_line(self):
        assert K.chern_from_koszul("line", 3) == ChernData(3, 1, (0, 1, 2))

    def test_two_lines(self):
        assert K.chern_from_koszul("lines", 3, M=2) == ChernData(3, 1, (0, 2, 4))

    @pytest.mark.parametrize("r", range(1, 6))
    def test_complete_intersection(self, r):
        C = K.chern_from_koszul("complete_intersection", 3, degrees=(r, 1))
        assert C.c2 == r and C.c1 == 0
        assert C.c(3) == r * (r + 1)

    @pytest.mark.parametrize("N", [2, 3, 4])
    def test_points_lower_classes_vanish(self, N):
        for M in range(1, 11):
            C = K.chern_from_koszul("points", N, M=M)
            assert all(C.c(i) == 0 for i in range(1, N))
            assert abs(C.c(N)) == M * factorial(N - 1)

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_point_ideal_has_zero_chi(self, N):
        # chi(I_p) = chi(O) - chi(O_p) = 0 fixes the sign of c_N
        C = K.chern_from_koszul("points", N, M=1)
        assert euler_char(C) == 0
        assert C.c(N) == (-1) ** N * factorial(N - 1)

    def test_unsupported(self):
        with pytest.raises(ValueError):
            K.chern_from_koszul("conic", 3)
        with pytest.raises(ValueError):
            K.chern_from_koszul("line", 2)
        with pytest.raises(ValueError):
            K.chern_from_koszul("complete_intersection", 3, degrees=(2,))


class TestDescriptor:
    def test_rejects_inconsistent(self):
        with pytest.raises(ValueError):
            K.SheafDescriptor("x", ChernData(2, 2, (1, 0)), SplittingType((0, 0)))
        with pytest.raises(ValueError):
            K.SheafDescriptor("x", ChernData(2, 1, (0, 0)), SplittingType((0, 0)))
        with pytest.raises(ValueError):
            K.SheafDescriptor("x", ChernData(2, 2, (0, 0)), SplittingType((0, 0)),
                              gst=GstMatrix.from_rows([[1, -1], [0, -1]]))

    def test_h0_series_pieces(self):
        h = K.H0Series(((0, Polynomial([1])), (2, Polynomial([0, 1]))))
        assert [h(t) for t in range(-1, 5)] == [0, 1, 1, 2, 3, 4]
        with pytest.raises(ValueError):
            K.H0Series(((2, Polynomial([1])), (0, Polynomial([1]))))


class TestBuiltin:
    def test_required_entries(self, catalog):
        nc = K.find("null_correlation", catalog)
        assert nc.chern.classes == (0, 1, 0) and list(nc.splitting) == [0, 0]
        assert [list(r) for r in nc.gst.rows] == [[0, 0], [0, -1], [-1, -1]]
        assert K.find("points_M=5_P2", catalog).chern.classes == (0, 5)
        s = K.find("split_[2,0,-1]_P3", catalog)
        assert s.chern.classes == (1, -2, 0) and s.flags.split
        for b in range(1, 6):
            d = K.find(f"wide_window_b={b}", catalog)
            assert d.chern.classes[:2] == (0, 1 - b * b)
        for k in range(1, 6):
            assert K.find(f"example2_n=2_k={k}", catalog).chern.classes == (0, k, 2 * k)

    def test_extension_c2(self, catalog):
        for d in catalog:
            if d.name.startswith("extension_"):
                r = int(d.name.split("_")[1].split("=")[1])
                assert d.chern.c2 == d.splitting.e2 + r

    def test_builtin_matches_construction(self, catalog):
        assert K.dump_catalog(catalog) == K.dump_catalog(K.build_catalog())

    def test_roundtrip_bit_exact(self, catalog):
        text = K.dump_catalog(catalog)
        assert K.dump_catalog(K.load_catalog(text)) == text

    def test_names_unique(self, catalog):
        names = [d.name for d in catalog]
        assert len(names) == len(set(names))

    def test_bigint_encoding(self):
        big = 3**60
        d = K.SheafDescriptor("big", ChernData(2, 1, (0, big)), SplittingType((0,)))
        text = K.dump_catalog([d])
        assert '"format": "bigint"' in text
        assert K.load_catalog(text)[0].chern.c2 == big

    def test_chi_consistency(self, catalog):
        for d in catalog:
            if d.h0_series is not None:
                assert euler_char(d.chern).denominator == 1
                for t in range(d.h0_series.tail_start + 5, d.h0_series.tail_start + 8):
                    assert d.h0_series(t) == euler_char_poly(d.chern)(t)

    def test_h0_below_split(self, catalog):
        for d in catalog:
            if d.h0_series is None:
                continue
            for t in range(-min(d.splitting), -min(d.splitting) + 10):
                assert d.h0_series(t) <= B.h0_upper(d.splitting + t, d.ambient_dim)


class TestVerify:
    def test_everything_passes(self, catalog):
        failures = [r.name for r in K.verify_all(catalog) if r.overall != "pass"]
        assert failures == []

    def test_null_correlation(self, catalog):
        r = K.verify(K.find("null_correlation", catalog))
        assert r.overall == "pass"
        assert {"rigrossa", "c2_lower"} <= set(r.sharp)
        rig = [x for x in r.reports if x.bound_name == "rigrossa"]
        assert all(x.verdict == B.EQUALITY for x in rig)

    def test_split(self, catalog):
        r = K.verify(K.find("split_[2,0,-1]_P3", catalog))
        assert r.overall == "pass" and "h0_upper" in r.sharp
        h0 = [x for x in r.reports if x.bound_name == "h0_upper"]
        assert all(x.verdict == B.EQUALITY for x in h0)
        lam = [x for x in r.reports if x.bound_name == "lambda_leading"]
        assert lam and all(x.oracle_value == 0 for x in lam)

    def test_wide_window(self, catalog):
        r = K.verify(K.find("wide_window_b=2", catalog))
        win = [x for x in r.reports if x.bound_name == "negative_c2_window"]
        assert win[0].verdict == B.EQUALITY and win[0].params["window"] == [-1, 0, 1]

    def test_known_cohomology_is_dominated(self, catalog):
        checked = 0
        for d in catalog:
            if d.cohomology is None:
                continue
            r = K.verify(d)
            reports = [x for x in r.reports if x.bound_name in ("P_bound", "Q_bound", "regularity_bound")]
            assert reports and all(x.verdict != B.VIOLATED for x in reports)
            checked += 1
        assert checked > 100

    def test_violation_detected(self):
        # claims more sections than O(b) allows
        bad = K.SheafDescriptor(
            "bad", split_chern([0, 0], 2), SplittingType((0, 0)),
            h0_series=K.H0Series(((0, Polynomial([5])),)))
        r = K.verify(bad)
        assert r.overall == "fail"
        assert any(x.bound_name == "h0_upper" for x in r.violations())

    def test_missing_data_is_not_a_failure(self):
        d = K.SheafDescriptor("bare", ChernData(3, 2, (0, 3, 0)), SplittingType((0, 0)))
        assert K.verify(d).overall == "pass"


def test_report_json(catalog):
    from chernbounds.jsonio import dumps
    text = dumps(K.report_to_dict(K.verify(K.find("null_correlation", catalog))))
    assert json.loads(text)["overall"] == "pass"
