import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import toepspec as ts


def complex_coeffs(max_deg=4):
    c = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
    return st.lists(c, min_size=0, max_size=max_deg + 1)


class TestFromParts:
    def test_single_analytic_term(self):
        s = ts.from_parts([0, 1], [])
        assert s[1] == 1 and s.coeffs == {1: 1}

    def test_conjugation_of_g(self):
        s = ts.from_parts([], [0, 1j])
        assert s[-1] == -1j

    def test_constant_merge(self):
        s = ts.from_parts([2], [3j])
        assert s[0] == 2 - 3j

    def test_empty_gives_zero_symbol(self):
        s = ts.from_parts([], [])
        assert s.is_zero and s.m == 0 and s.n == 0


class TestEvalBoundary:
    def test_zero_symbol(self):
        assert ts.HarmonicSymbol({}).eval_boundary(1.234) == 0


    def test_rotation(self):
        s = ts.HarmonicSymbol({1: 1})
        assert abs(s.eval_boundary(math.pi / 2) - 1j) < 1e-15

    def test_cosine_sum_at_zero(self):
        s = ts.HarmonicSymbol({1: 1, -1: 0.5})
        assert abs(s.eval_boundary(0.0) - 1.5) < 1e-15


class TestEvalDisk:
    def test_analytic_monomial(self):
        assert abs(ts.HarmonicSymbol({1: 1}).eval_disk(0.5) - 0.5) < 1e-15

    def test_conjugate_monomial(self):
        got = ts.HarmonicSymbol({-1: 1}).eval_disk(0.5j)
        assert abs(got - (-0.5j)) < 1e-15

    def test_center_returns_constant(self):
        s = ts.HarmonicSymbol({0: 2 + 1j, 1: 5, -3: 7})
        assert s.eval_disk(0) == 2 + 1j

    def test_outside_disk_rejected(self):
        with pytest.raises(ValueError):
            ts.HarmonicSymbol({1: 1}).eval_disk(1.0)


class TestNorms:
    def test_derivative_norm_constant(self):
        assert ts.HarmonicSymbol({0: 3 + 1j}).derivative_norm_sq() == 0

    def test_derivative_norm_single(self):
        assert ts.HarmonicSymbol({1: 1}).derivative_norm_sq() == 1

    def test_derivative_norm_mixed(self):
        assert ts.HarmonicSymbol({-2: 1, 1: 3}).derivative_norm_sq() == 13

    def test_wiener_zero(self):
        assert ts.HarmonicSymbol({}).wiener_norm() == 0

    def test_wiener_two_terms(self):
        assert ts.HarmonicSymbol({1: 1, -1: 0.5}).wiener_norm() == 1.5

    def test_wiener_complex_constant(self):
        assert abs(ts.HarmonicSymbol({0: 1 + 1j}).sup_bound() - math.sqrt(2)) < 1e-15


class TestSampleCurve:
    def test_circle_samples(self):
        c = ts.sample_curve(ts.HarmonicSymbol({1: 1}), 64)
        # quarter-turn subset reproduces the 4-point circle 1, i, -1, -i
        for k, expect in ((0, 1), (16, 1j), (32, -1), (48, -1j)):
            assert abs(c.points[k] - expect) < 1e-14

    def test_ellipse_vertices(self):
        c = ts.sample_curve(ts.HarmonicSymbol({1: 1, -1: 0.5}), 64)
        for k, expect in ((0, 1.5), (16, 0.5j), (32, -1.5), (48, -0.5j)):
            assert abs(c.points[k] - expect) < 1e-14

    def test_points_match_eval_boundary_exactly(self):
        s = ts.HarmonicSymbol({2: 0.3 + 1j, -1: 0.7})
        c = ts.sample_curve(s, 128)
        for k in (0, 1, 17, 127):
            assert c.points[k] == s.eval_boundary(2 * math.pi * k / 128)

    def test_too_few_samples_rejected(self):
        with pytest.raises(ValueError):
            ts.sample_curve(ts.HarmonicSymbol({1: 1}), 32)
        with pytest.raises(ValueError):
            ts.sample_curve(ts.HarmonicSymbol({5: 1}), 64)  # needs 16*(5+1)


class TestWindingNumber:
    def test_ellipse_center(self):
        c = ts.sample_curve(ts.HarmonicSymbol({1: 1, -1: 0.5}), 256)
        assert ts.winding_number(c, 0) == 1

    def test_outside_wiener_radius(self):
        c = ts.sample_curve(ts.HarmonicSymbol({1: 1, -1: 0.5}), 256)
        assert ts.winding_number(c, 2 + 2j) == 0

    def test_doubly_traversed_circle(self):
        c = ts.sample_curve(ts.HarmonicSymbol({2: 1}), 256)
        assert ts.winding_number(c, 0) == 2

    def test_on_curve_rejected(self):
        c = ts.sample_curve(ts.HarmonicSymbol({1: 1}), 256)
        with pytest.raises(ts.OnCurveError):
            ts.winding_number(c, c.points[3])


class TestCurveDiagnostics:
    def test_circle(self):
        d = ts.curve_diagnostics(ts.sample_curve(ts.HarmonicSymbol({1: 1}), 256))
        assert d.jordan and d.cusp_free

    def test_flat_segment_cusps(self):
        d = ts.curve_diagnostics(ts.sample_curve(ts.HarmonicSymbol({1: 1, -1: 1}), 256))
        assert not d.cusp_free and not d.jordan

    def test_double_circle_not_jordan(self):
        d = ts.curve_diagnostics(ts.sample_curve(ts.HarmonicSymbol({2: 1}), 256))
        assert not d.jordan

    def test_degenerate_rejected(self):
        with pytest.raises(ts.DegenerateCurveError):
            ts.curve_diagnostics(ts.sample_curve(ts.HarmonicSymbol({}), 64))


class TestInvariants:
    @given(st.lists(st.complex_numbers(max_magnitude=2.0), min_size=1, max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_real_valued_symbols_have_real_boundary(self, pos):
        coeffs = {0: 1.0}
        for j, v in enumerate(pos, start=1):
            coeffs[j] = v
            coeffs[-j] = v.conjugate()
        s = ts.HarmonicSymbol(coeffs)
        for theta in np.linspace(0, 2 * math.pi, 17):
            val = s.eval_boundary(theta)
            assert abs(val.imag) <= 1e-12 * max(s.wiener_norm(), 1.0)

    def test_radial_limit_bound(self):
        s = ts.HarmonicSymbol({2: 0.4 + 0.1j, -1: 0.8, 0: 1})
        theta = 0.9
        for r in (0.9, 0.99, 0.999):
            gap = abs(s.eval_disk(r * cmath.exp(1j * theta)) - s.eval_boundary(theta))
            bound = sum(abs(v) * (1 - r ** abs(j)) for j, v in s.coeffs.items())
            assert gap <= bound + 1e-12

    def test_winding_stable_under_refinement(self):
        s = ts.HarmonicSymbol({1: 1, -2: 0.4})
        for lam in (0.2 + 0.1j, 2.5, -1.8j):
            winds = set()
            for M in (128, 256, 512):
                c = ts.sample_curve(s, M)
                if ts.dist_to_spectrum(lam, c) == 0 and ts.winding_number(c, lam) == 0:
                    continue
                winds.add(ts.winding_number(c, lam))
            assert len(winds) == 1

    @given(complex_coeffs(3), complex_coeffs(3))
    @settings(max_examples=40, deadline=None)
    def test_derivative_zero_iff_constant(self, f, g):
        s = ts.from_parts(f, g)
        assert (s.derivative_norm_sq() == 0) == s.is_constant
