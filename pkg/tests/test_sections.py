import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import toepspec as ts
from oracles import brute_inner_series, random_symbol

PI_SQ_24 = math.pi ** 2 / 24


class TestHTSection:
    def test_shift_matrix(self):
        a = ts.ht_section(ts.HarmonicSymbol({1: 1}), 4).entries
        expect = np.diag(np.ones(3), -1)
        assert np.array_equal(a, expect)

    def test_entry_placement(self):
        s = ts.HarmonicSymbol({0: 5, 2: 7, -1: 3j})
        a = ts.ht_section(s, 5).entries
        for i in range(5):
            for j in range(5):
                want = {0: 5, 2: 7, -1: 3j}.get(i - j, 0)
                assert a[i, j] == want

    def test_constant_diagonal(self):
        a = ts.ht_section(ts.HarmonicSymbol({0: 2 + 1j}), 6).entries
        assert np.array_equal(a, (2 + 1j) * np.eye(6))

    def test_kind_and_order(self):
        sec = ts.ht_section(ts.HarmonicSymbol({1: 1}), 8)
        assert sec.kind is ts.SectionKind.HT and sec.order == 8

    def test_bad_order(self):
        with pytest.raises(ValueError):
            ts.ht_section(ts.HarmonicSymbol({1: 1}), 0)


class TestBTSection:
    def test_weight_formula_entrywise(self):
        s = ts.HarmonicSymbol({1: 1, -2: 0.5j, 0: 0.1})
        a = ts.bt_section(s, 12).entries
        for i in range(12):
            for j in range(12):
                w = math.sqrt((min(i, j) + 1) / (max(i, j) + 1))
                b = s.coeffs.get(i - j, 0)
                assert a[i, j] == pytest.approx(w * b, abs=1e-15)

    def test_bt_entry_matches_matrix(self):
        s = ts.HarmonicSymbol({2: 1 + 1j, -1: 0.3})
        a = ts.bt_section(s, 9).entries
        for i in (0, 3, 8):
            for j in (0, 5, 8):
                assert ts.bt_entry(s, i, j) == a[i, j]

    def test_diagonal_unweighted(self):
        s = ts.HarmonicSymbol({0: 4 - 2j, 1: 1})
        a = ts.bt_section(s, 7).entries
        assert np.allclose(np.diag(a), 4 - 2j)

    def test_shift_weights(self):
        a = ts.bt_section(ts.HarmonicSymbol({1: 1}), 5).entries
        for i in range(1, 5):
            assert a[i, i - 1] == pytest.approx(math.sqrt(i / (i + 1)), abs=1e-15)


class TestHSDifference:
    def test_truncated_shift_value(self):
        # single coefficient b_1 = 1: sum over the subdiagonal of (1 - w)^2
        s = ts.HarmonicSymbol({1: 1})
        got = ts.hs_difference_sq_truncated(s, 50)
        want = sum(
            (1 - math.sqrt(i / (i + 1))) ** 2 for i in range(1, 50)
        )
        assert got == pytest.approx(want, rel=1e-14)

    def test_truncated_equals_frobenius_gap(self):
        s = ts.HarmonicSymbol({2: 0.7, -1: 0.4j, 0: 1})
        n = 40
        gap = ts.ht_section(s, n).entries - ts.bt_section(s, n).entries
        assert ts.hs_difference_sq_truncated(s, n) == pytest.approx(
            np.linalg.norm(gap, "fro") ** 2, rel=1e-13
        )

    def test_series_vs_brute_force(self):
        s = ts.HarmonicSymbol({1: 1, -2: 0.5})
        res = ts.hs_difference_sq_series(s, tol=1e-10)
        brute = sum(
            abs(j * b) ** 2 * brute_inner_series(abs(j), 4_000_000)
            for j, b in s.coeffs.items()
        )
        assert abs(res.value - brute) <= 1e-6

    def test_series_dominates_truncation(self):
        s = ts.HarmonicSymbol({1: 0.9, -1: 0.4, 3: 0.2j})
        series = ts.hs_difference_sq_series(s, tol=1e-9).value
        prev = 0.0
        for n in (50, 200, 800):
            trunc = ts.hs_difference_sq_truncated(s, n)
            assert prev <= trunc <= series + 1e-9
            prev = trunc

    def test_series_zero_for_constant(self):
        res = ts.hs_difference_sq_series(ts.HarmonicSymbol({0: 3}), tol=1e-8)
        assert res.value == 0 and res.tail_bound == 0

    def test_tail_bound_honoured(self):
        s = ts.HarmonicSymbol({1: 1})
        res = ts.hs_difference_sq_series(s, tol=1e-9)
        assert 0 <= res.tail_bound <= 1e-9

    def test_bound_value(self):
        s = ts.HarmonicSymbol({1: 1, -2: 2})
        assert ts.hs_bound(s) == pytest.approx(PI_SQ_24 * 17, rel=1e-15)


class TestBoundInvariant:
    @given(st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=25, deadline=None)
    def test_series_below_bound(self, seed):
        s = random_symbol(np.random.default_rng(seed))
        if s.is_constant:
            return
        res = ts.hs_difference_sq_series(s, tol=1e-9)
        assert res.value <= ts.hs_bound(s) + 1e-9

    @given(st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=15, deadline=None)
    def test_truncated_below_series(self, seed):
        s = random_symbol(np.random.default_rng(seed))
        res = ts.hs_difference_sq_series(s, tol=1e-9)
        assert ts.hs_difference_sq_truncated(s, 300) <= res.value + 1e-9
