import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccdrobust.design import (
    PointClass,
    canonical_probe_points,
    design_from_csv,
    design_to_csv,
    gen_ccd,
)


class TestGenCcd:
    def test_candidate_ccd_sizes(self):
        # the four candidate designs: (k, n)
        for k, n in [(2, 12), (3, 18), (4, 28), (5, 46)]:
            d = gen_ccd(k, 1.0, 4)
            assert d.n == n == 2 ** k + 2 * k + 4

    def test_k2_class_counts(self):
        d = gen_ccd(2, 1.0, 4)
        assert d.class_count(PointClass.FACTORIAL) == 4
        assert d.class_count(PointClass.AXIAL) == 4
        assert d.class_count(PointClass.CENTER) == 4

    def test_k5_table_row(self):
        d = gen_ccd(5, 2.378, 4)
        assert d.n == 46
        assert d.class_count(PointClass.FACTORIAL) == 32
        assert d.class_count(PointClass.AXIAL) == 10

    def test_axial_rows_k2(self):
        d = gen_ccd(2, 1.414, 1)
        assert d.n == 9
        axial = [d.points[i].coords for i in d.rows_of_class(PointClass.AXIAL)]
        assert axial == [(-1.414, 0.0), (1.414, 0.0), (0.0, -1.414), (0.0, 1.414)]

    @pytest.mark.parametrize("k,alpha,n0", [(1, 1.0, 4), (2, 0.0, 4),
                                            (2, -1.0, 4), (2, 1.0, 0)])
    def test_rejects_bad_inputs(self, k, alpha, n0):
        with pytest.raises(ValueError):
            gen_ccd(k, alpha, n0)

    def test_point_class_invariants(self):
        d = gen_ccd(3, 1.732, 4)
        for pt in d.points:
            if pt.point_class is PointClass.FACTORIAL:
                assert all(c in (-1.0, 1.0) for c in pt.coords)
            elif pt.point_class is PointClass.AXIAL:
                nz = [c for c in pt.coords if c != 0.0]
                assert len(nz) == 1 and abs(nz[0]) == 1.732
            else:
                assert all(c == 0.0 for c in pt.coords)

    def test_deterministic_regeneration(self):
        a = gen_ccd(4, 2.0, 4)
        b = gen_ccd(4, 2.0, 4)
        assert a.points == b.points
        assert design_to_csv(a) == design_to_csv(b)


class TestMomentInvariants:
    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_odd_moments_vanish(self, k):
        X = gen_ccd(k, 1.7, 3).coords()
        assert np.allclose(X.sum(axis=0), 0)
        assert np.allclose((X ** 3).sum(axis=0), 0)
        for i in range(k):
            for j in range(i + 1, k):
                assert (X[:, i] * X[:, j]).sum() == pytest.approx(0, abs=1e-12)

    @pytest.mark.parametrize("k,alpha", [(2, 1.0), (3, 1.681), (4, 2.0), (5, 2.378)])
    def test_pure_second_moment(self, k, alpha):
        X = gen_ccd(k, alpha, 4).coords()
        expected = 2 ** k + 2 * alpha ** 2
        assert np.allclose((X ** 2).sum(axis=0), expected)


class TestCanonicalProbePoints:
    def test_k2(self):
        f, a, c = canonical_probe_points(gen_ccd(2, 2.0, 4))
        assert f.coords == (1.0, 1.0)
        assert a.coords == (2.0, 0.0)
        assert c.coords == (0.0, 0.0)

    def test_k3(self):
        f, a, c = canonical_probe_points(gen_ccd(3, 1.732, 4))
        assert f.coords == (1.0, 1.0, 1.0)
        assert a.coords == (1.732, 0.0, 0.0)
        assert c.coords == (0.0, 0.0, 0.0)

    def test_k4_factorial_probe(self):
        f, _, _ = canonical_probe_points(gen_ccd(4, 2.0, 4))
        assert f.coords == (1.0,) * 4


class TestCsv:
    def test_header_and_rows(self):
        d = gen_ccd(2, 1.5, 2)
        lines = design_to_csv(d).splitlines()
        assert lines[0] == "x1,x2,class"
        assert len(lines) == 1 + d.n
        assert lines[1].endswith("factorial")

    def test_round_trip(self):
        d = gen_ccd(3, 1.681, 4)
        back = design_from_csv(design_to_csv(d))
        assert back.points == d.points
        assert back.alpha == d.alpha


@given(k=st.integers(2, 5), alpha=st.floats(0.5, 3.0), n0=st.integers(1, 6))
@settings(max_examples=30, deadline=None)
def test_generated_design_is_centered(k, alpha, n0):
    d = gen_ccd(k, alpha, n0)
    assert d.n == 2 ** k + 2 * k + n0
    assert np.allclose(d.coords().sum(axis=0), 0)
