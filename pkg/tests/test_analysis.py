import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitlab.analysis import (
    DeltaPoint,
    Histogram,
    RunningSums,
    chi_square_vs_normal,
    convergence_diagnostic,
    delta_value,
    normal_cdf,
    normal_pdf,
    running_delta,
    series_extrema,
)

PI_TEN = [1, 4, 1, 5, 9, 2, 6, 5, 3, 5]


class TestRunningDelta:
    def test_pi_first_ten(self):
        points = list(running_delta(PI_TEN, stride=1))
        assert [p.s for p in points] == [1, 5, 6, 11, 20, 22, 28, 33, 36, 41]
        final = points[-1]
        assert final.n == 10 and final.s == 41
        expected = (41 - 45) / math.sqrt(16.5 * 10 * math.log(math.log(10)))
        assert final.delta == pytest.approx(expected, rel=1e-12)
        assert final.delta == pytest.approx(-0.341, abs=1e-3)

    def test_undefined_below_three(self):
        points = list(running_delta(PI_TEN, stride=1))
        assert points[0].delta is None
        assert points[1].delta is None
        assert points[2].delta is not None

    def test_all_nines_positive(self):
        points = list(running_delta([9, 9, 9, 9], stride=1))
        assert points[-1].s == 36
        assert points[-1].delta > 0

    def test_stride_invariance(self):
        dense = {p.n: p for p in running_delta(PI_TEN, stride=1)}
        for stride in (2, 3, 5):
            for p in running_delta(PI_TEN, stride=stride):
                assert dense[p.n] == p

    def test_final_point_always_emitted(self):
        points = list(running_delta(PI_TEN, stride=7))
        assert [p.n for p in points] == [7, 10]

    def test_adaptive_stride(self):
        digits = [4] * 10300
        ns = [p.n for p in running_delta(digits, stride=None)]
        assert ns[:3] == [1, 2, 3]
        assert 10001 not in ns and 10100 in ns and ns[-1] == 10300

    def test_empty_stream(self):
        with pytest.raises(ValueError):
            list(running_delta([], stride=1))

    def test_bad_digit(self):
        with pytest.raises(ValueError):
            list(running_delta([3, 12], stride=1))

    def test_recomputation_matches(self):
        rng = random.Random(7)
        digits = [rng.randrange(10) for _ in range(500)]
        for p in running_delta(digits, stride=3):
            if p.delta is not None:
                assert p.delta == pytest.approx(
                    delta_value(p.n, p.s), rel=1e-12
                )


class TestRunningSums:
    def test_monotone_exact(self):
        acc = RunningSums(10)
        total = 0
        for d in PI_TEN:
            acc.push(d)
            total += d
            assert acc.s == total
        assert acc.n == 10

    def test_base_validation(self):
        with pytest.raises(ValueError):
            RunningSums(1)


class TestHistogram:
    def test_center_insert(self):
        h = Histogram()
        h.insert(0.0)
        assert h.total == 1
        assert h.counts[1 + 20] == 1  # bin [0, 0.2)

    def test_overflow_bins(self):
        h = Histogram()
        h.insert(100.0)
        h.insert(-100.0)
        assert h.counts[-1] == 1 and h.counts[0] == 1

    def test_count_conservation(self):
        rng = random.Random(3)
        h = Histogram()
        for _ in range(5000):
            h.insert(rng.gauss(0, 1))
        assert sum(h.counts) == h.total == 5000

    def test_non_finite_rejected(self):
        h = Histogram()
        with pytest.raises(ValueError):
            h.insert(float("nan"))
        with pytest.raises(ValueError):
            h.insert(float("inf"))

    def test_bad_range(self):
        with pytest.raises(ValueError):
            Histogram(lo=1.0, hi=1.0)


class TestNormalDensity:
    def test_at_zero(self):
        assert normal_pdf(0.0) == pytest.approx(0.3989422804, abs=1e-10)

    def test_at_one(self):
        assert normal_pdf(1.0) == pytest.approx(0.2419707245, abs=1e-10)

    @given(x=st.floats(-8, 8))
    def test_symmetry(self, x):
        assert normal_pdf(x) == pytest.approx(normal_pdf(-x), rel=1e-12)

    def test_integrates_to_one(self):
        # trapezoid rule over [-8, 8] with 10^5 intervals
        n = 10 ** 5
        width = 16 / n
        xs = [-8 + i * width for i in range(n + 1)]
        total = sum(normal_pdf(x) for x in xs) - 0.5 * (normal_pdf(-8.0) + normal_pdf(8.0))
        assert total * width == pytest.approx(1.0, abs=1e-6)


class TestNormalCdf:
    @given(x=st.floats(-8, 8))
    def test_against_stdlib_erf(self, x):
        exact = 0.5 * (1 + math.erf(x / math.sqrt(2)))
        assert normal_cdf(x) == pytest.approx(exact, abs=1e-7)

    def test_limits(self):
        assert normal_cdf(math.inf) == 1.0
        assert normal_cdf(-math.inf) == 0.0


class TestChiSquare:
    def test_near_expected_counts_give_small_statistic(self):
        h = Histogram()
        total = 10 ** 4
        expected = [
            total * (normal_cdf(hi) - normal_cdf(lo)) for lo, hi in h.edges()
        ]
        h.counts = [round(e) for e in expected]
        h.total = sum(h.counts)
        stat, df = chi_square_vs_normal(h)
        assert df > 10
        assert stat < df

    def test_synthetic_normal_sample(self):
        # sum of 48 uniforms, centered and scaled, is close enough to
        # standard normal that the test statistic stays near df
        rng = random.Random(12345)
        h = Histogram()
        for _ in range(10 ** 5):
            h.insert((sum(rng.random() for _ in range(48)) - 24.0) / 2.0)
        stat, df = chi_square_vs_normal(h)
        assert df - 4 * math.sqrt(2 * df) <= stat <= df + 4 * math.sqrt(2 * df)

    def test_degenerate_single_bin(self):
        h = Histogram(lo=-4.0, hi=4.0, bins=1)
        for _ in range(100):
            h.insert(0.0)
        stat, df = chi_square_vs_normal(h)
        assert df == 0
        assert stat == pytest.approx(0.0, abs=1e-6)

    def test_insufficient_data(self):
        h = Histogram()
        h.insert(0.0)
        with pytest.raises(ValueError):
            chi_square_vs_normal(h)


class TestSeriesExtrema:
    def test_constant_zero(self):
        points = [DeltaPoint(n, 0, 0.0) for n in range(3, 10)]
        assert series_extrema(points) == (0.0, 0.0, 0)

    def test_mixed(self):
        points = [
            DeltaPoint(3, 0, -2.0),
            DeltaPoint(4, 0, 0.5),
            DeltaPoint(5, 0, 1.5),
        ]
        assert series_extrema(points) == (-2.0, 1.5, 2)

    def test_from_n_filters(self):
        points = [DeltaPoint(3, 0, -2.0), DeltaPoint(100, 0, 0.5)]
        assert series_extrema(points, from_n=50) == (0.5, 0.5, 0)

    def test_empty_range(self):
        with pytest.raises(ValueError):
            series_extrema([DeltaPoint(1, 0, None)], from_n=0)


class TestConvergenceDiagnostic:
    def test_short_series_is_none(self):
        points = [DeltaPoint(n, 0, 0.1) for n in range(3, 50)]
        assert convergence_diagnostic(points, 49) is None

    def test_windows(self):
        points = [
            DeltaPoint(n, 0, 1.0 if n < 10 ** 4 else 0.25)
            for n in range(3, 10 ** 5 + 1, 7)
        ]
        early, late = convergence_diagnostic(points, 10 ** 5)
        assert early == pytest.approx(1.0)
        assert late == pytest.approx(0.25)
