import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circuit import DividerConfig, divider_currents, divider_output
from core.errors import CircuitError


def mesh_solve(v1, v2, r1, r2, r):
    """Generic linear solve of the two mesh equations"""
    matrix = np.array([[r1 + r, -r], [-r, r2 + r]])
    return np.linalg.solve(matrix, np.array([-v1, v2]))


class TestDividerCurrents:
    def test_no_sources(self):
        assert divider_currents(0.0, 0.0, DividerConfig(100.0, 1e4, 1e7)) == (0.0, 0.0)

    def test_unit_resistors(self):
        i1, i2 = divider_currents(0.0, 1.0, DividerConfig(1.0, 1.0, 1.0))
        assert i1 == pytest.approx(1 / 3)
        assert i2 == pytest.approx(2 / 3)

    def test_both_negative_when_first_input_dominates(self):
        v1, v2, r1, r2, r = 0.8, 0.3, 100.0, 1e4, 1e7
        i1, i2 = divider_currents(v1, v2, DividerConfig(r1, r2, r))
        assert i1 < 0 and i2 < 0
        delta = r * (r1 + r2) + r1 * r2
        assert i1 == pytest.approx((-v1 * (r + r2) + v2 * r) / delta, rel=1e-12)
        assert i2 == pytest.approx((v2 * (r + r1) - v1 * r) / delta, rel=1e-12)

    @pytest.mark.parametrize('v1,v2', [(-0.1, 0.5), (0.5, 1.2), (math.nan, 0.0), (0.0, math.inf)])
    def test_rejects_out_of_range_voltage(self, v1, v2):
        with pytest.raises(CircuitError):
            divider_currents(v1, v2, DividerConfig(1.0, 1.0, 1.0))

    @pytest.mark.parametrize('r1,r2,r', [(0.0, 1.0, 1.0), (1.0, -5.0, 1.0), (1.0, 1.0, math.inf)])
    def test_rejects_bad_resistances(self, r1, r2, r):
        with pytest.raises(CircuitError):
            DividerConfig(r1, r2, r)


class TestDividerOutput:
    def test_equal_resistors_average(self):
        assert divider_output(1.0, 0.0, DividerConfig(1.0, 1.0, 1e9)) == pytest.approx(0.5, abs=1e-8)

    def test_asymmetric_example(self):
        v = divider_output(0.8, 0.3, DividerConfig(100.0, 1e4, 1e7))
        assert v == pytest.approx(8030.0 / 10100.1, rel=1e-12)
        assert v == pytest.approx(0.795049, abs=1e-5)

    def test_matches_load_current(self):
        cfg = DividerConfig(250.0, 4000.0, 1e5)
        i1, i2 = divider_currents(0.9, 0.2, cfg)
        assert divider_output(0.9, 0.2, cfg) == pytest.approx(cfg.r_load * (i2 - i1), rel=1e-12)

    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0), st.floats(1.0, 1e4), st.floats(1.0, 1e4))
    def test_between_sources_for_large_load(self, v1, v2, r1, r2):
        v = divider_output(v1, v2, DividerConfig(r1, r2, 1e12))
        assert min(v1, v2) - 1e-6 <= v <= max(v1, v2) + 1e-9


def test_output_agrees_with_linear_solve():
    rng = np.random.Generator(np.random.PCG64(2024))
    count = 10_000
    volts = rng.uniform(0.0, 1.0, size=(count, 2))
    resistances = 10.0 ** rng.uniform(1.0, 4.0, size=(count, 3))

    expected = np.empty(count)
    actual = np.empty(count)
    for index in range(count):
        v1, v2 = volts[index]
        r1, r2, r = resistances[index]
        i1, i2 = mesh_solve(v1, v2, r1, r2, r)
        expected[index] = r * (i2 - i1)
        actual[index] = divider_output(v1, v2, DividerConfig(r1, r2, r))

    np.testing.assert_allclose(actual, expected, rtol=1e-12, atol=1e-15)
