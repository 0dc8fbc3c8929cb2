"""Spectrum distances, the weighted eigenvalue-sum evaluator, and report
assembly.

The Hardy-Toeplitz spectrum of a continuous symbol is realized as
gamma union { lambda : winding(lambda) != 0 }; distances are measured to
that filled set.  The eigenvalue sum uses the exponent 3 + epsilon and is
reported together with its ratio to ||phi'||_2^2 (the empirical stand-in
for the non-constructive constant of the underlying bound).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import eigenvalues
from .sections import (
    bt_section,
    hs_bound,
    hs_difference_sq_series,
    hs_difference_sq_truncated,
)
from .spectra import (
    Component,
    DEFAULT_LADDER,
    DetectOptions,
    DiscreteCandidate,
    detect_discrete,
    points_at_distance,
    resolvent_growth_fit,
)
from .symbols import (
    CurveDiagnostics,
    DegenerateCurveError,
    HarmonicSymbol,
    OnCurveError,
    SymbolCurve,
    curve_diagnostics,
    sample_curve,
    winding_number,
)


def dist_to_spectrum(lam: complex, c: SymbolCurve) -> float:
    """Distance to the filled spectrum: zero on the curve or at nonzero
    winding, the polyline distance otherwise."""
    lam = complex(lam)
    try:
        wind = winding_number(c, lam)
    except OnCurveError:
        return 0.0
    if wind != 0:
        return 0.0
    return c.distance_to(lam)


def lt_sum(
    candidates: Sequence[DiscreteCandidate], c: SymbolCurve, epsilon: float
) -> float:
    """sum of dist(lambda, spectrum)^(3 + epsilon) over outer-component
    candidates."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    total = 0.0
    for cand in candidates:
        if cand.component is not Component.F0:
            continue
        total += dist_to_spectrum(cand.location, c) ** (3.0 + epsilon)
    return total


def weyl_diagnostic(
    s: HarmonicSymbol,
    N: int,
    delta: float | None = None,
    curve: SymbolCurve | None = None,
) -> float:
    """Fraction of Bergman-section eigenvalues inside or near the filled
    spectrum; a coarse accumulation indicator expected to approach 1."""
    N = int(N)
    if N < 16:
        raise ValueError(f"need N >= 16, got {N}")
    if delta is None:
        delta = 0.1 * s.wiener_norm()
    ev = eigenvalues(bt_section(s, N).entries).values
    if s.is_constant:
        # degenerate one-point curve: compare against b_0 directly
        b0 = s[0]
        return float(np.mean(np.abs(ev - b0) <= delta))
    if curve is None:
        curve = sample_curve(s, max(256, 16 * (s.m + s.n + 1)))
    inside = 0
    for lam in ev:
        if curve.distance_to(complex(lam)) <= delta:
            inside += 1
            continue
        if winding_number(curve, complex(lam)) != 0:
            inside += 1
    return inside / len(ev)


@dataclass(frozen=True)
class ReportOptions:
    ladder: tuple[int, ...] = DEFAULT_LADDER
    epsilon: float = 0.01
    series_tol: float = 1e-8
    curve_samples: int | None = None
    detect: DetectOptions = DetectOptions()
    fit_points: int = 16
    fit_dist_range: tuple[float, float] = (0.05, 0.5)
    fit_order: int | None = None
    weyl_order: int | None = None


@dataclass(frozen=True)
class SpectralReport:
    symbol_coeffs: dict[int, complex]
    derivative_norm_sq: float
    wiener_norm: float
    hs_truncated: float
    hs_series: float
    hs_series_tail_bound: float
    hs_bound: float
    candidates: tuple[DiscreteCandidate, ...]
    uncertified_candidates: tuple[DiscreteCandidate, ...]
    skipped_rungs: tuple[int, ...]
    lt_sum: float
    lt_sum_certified_only: float
    epsilon: float
    empirical_constant: float | None
    p_hat: float | None
    c_hat: float | None
    weyl_fraction: float | None
    diagnostics: CurveDiagnostics | None
    dist_error_bound: float
    ladder: tuple[int, ...]

    def to_dict(self) -> dict:
        def cand(c: DiscreteCandidate) -> dict:
            return {
                "location": [c.location.real, c.location.imag],
                "persistence_drift": c.persistence_drift,
                "certificate": c.certificate,
                "component": c.component.value,
            }

        diag = None
        if self.diagnostics is not None:
            diag = {
                "jordan": self.diagnostics.jordan,
                "cusp_free": self.diagnostics.cusp_free,
                "min_tangent_speed": self.diagnostics.min_tangent_speed,
                "min_self_distance": self.diagnostics.min_self_distance,
            }
        return {
            "symbol": {
                str(j): [v.real, v.imag] for j, v in sorted(self.symbol_coeffs.items())
            },
            "derivative_norm_sq": self.derivative_norm_sq,
            "wiener_norm": self.wiener_norm,
            "hs_truncated": self.hs_truncated,
            "hs_series": self.hs_series,
            "hs_series_tail_bound": self.hs_series_tail_bound,
            "hs_bound": self.hs_bound,
            "candidates": [cand(c) for c in self.candidates],
            "uncertified_candidates": [cand(c) for c in self.uncertified_candidates],
            "skipped_rungs": list(self.skipped_rungs),
            "lt_sum": self.lt_sum,
            "lt_sum_certified_only": self.lt_sum_certified_only,
            "epsilon": self.epsilon,
            "empirical_constant": self.empirical_constant,
            "p_hat": self.p_hat,
            "c_hat": self.c_hat,
            "weyl_fraction": self.weyl_fraction,
            "curve_diagnostics": diag,
            "dist_error_bound": self.dist_error_bound,
            "ladder": list(self.ladder),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def summary(self) -> str:
        rows = [
            ("||phi'||_2^2", f"{self.derivative_norm_sq:.12g}"),
            ("wiener norm", f"{self.wiener_norm:.12g}"),
            (f"HS truncated (N={self.ladder[-1]})", f"{self.hs_truncated:.12g}"),
            ("HS series", f"{self.hs_series:.12g}"),
            ("HS bound (pi^2/24)", f"{self.hs_bound:.12g}"),
            ("certified candidates", str(len(self.candidates))),
            ("uncertified candidates", str(len(self.uncertified_candidates))),
            (f"eigenvalue sum (eps={self.epsilon:g})", f"{self.lt_sum:.12g}"),
            ("sum, certified only", f"{self.lt_sum_certified_only:.12g}"),
            (
                "empirical constant",
                "n/a" if self.empirical_constant is None else f"{self.empirical_constant:.12g}",
            ),
            ("p_hat", "n/a" if self.p_hat is None else f"{self.p_hat:.6g}"),
            (
                "weyl fraction",
                "n/a" if self.weyl_fraction is None else f"{self.weyl_fraction:.6g}",
            ),
        ]
        if self.diagnostics is not None:
            rows.append(("jordan", str(self.diagnostics.jordan)))
            rows.append(("cusp free", str(self.diagnostics.cusp_free)))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _fit_p_hat(
    s: HarmonicSymbol,
    curve: SymbolCurve,
    opts: ReportOptions,
    n_max: int,
) -> tuple[float | None, float | None]:
    w = s.wiener_norm()
    if w == 0 or s.is_constant:
        return None, None
    lo, hi = opts.fit_dist_range
    dists = np.linspace(lo * w, hi * w, opts.fit_points)
    try:
        pts = points_at_distance(curve, dists)
        order = opts.fit_order if opts.fit_order is not None else min(400, n_max)
        fit = resolvent_growth_fit(s, pts, order, curve=curve)
    except (ValueError, ArithmeticError):
        return None, None
    return fit.p_hat, fit.c_hat


def build_report(s: HarmonicSymbol, opts: ReportOptions = ReportOptions()) -> SpectralReport:
    """Run diagnostics, Hilbert-Schmidt computations, detection, the
    eigenvalue sum, and the resolvent fit; deterministic end to end."""
    ladder = tuple(int(n) for n in opts.ladder)
    n_max = ladder[-1]
    detection = detect_discrete(s, ladder, opts.detect)
    curve = detection.curve
    try:
        diag = curve_diagnostics(curve)
    except DegenerateCurveError:
        diag = None

    hs_trunc = hs_difference_sq_truncated(s, n_max)
    series = hs_difference_sq_series(s, opts.series_tol)
    bound = hs_bound(s)

    all_cands = detection.candidates + detection.uncertified
    total = lt_sum(all_cands, curve, opts.epsilon)
    certified_only = lt_sum(detection.candidates, curve, opts.epsilon)
    dn2 = s.derivative_norm_sq()
    empirical = (total / dn2) if dn2 > 0 else None

    p_hat, c_hat = _fit_p_hat(s, curve, opts, n_max)

    weyl_n = opts.weyl_order if opts.weyl_order is not None else min(200, n_max)
    weyl = weyl_diagnostic(s, weyl_n, curve=curve) if weyl_n >= 16 else None

    second_deriv_sum = float(sum(j * j * abs(v) for j, v in s.coeffs.items()))
    m_curve = len(curve)
    dist_err = 2.0 * math.pi * second_deriv_sum / (m_curve * m_curve)

    return SpectralReport(
        symbol_coeffs=dict(s.coeffs),
        derivative_norm_sq=dn2,
        wiener_norm=s.wiener_norm(),
        hs_truncated=hs_trunc,
        hs_series=series.value,
        hs_series_tail_bound=series.tail_bound,
        hs_bound=bound,
        candidates=detection.candidates,
        uncertified_candidates=detection.uncertified,
        skipped_rungs=detection.skipped_rungs,
        lt_sum=total,
        lt_sum_certified_only=certified_only,
        epsilon=opts.epsilon,
        empirical_constant=empirical,
        p_hat=p_hat,
        c_hat=c_hat,
        weyl_fraction=weyl,
        diagnostics=diag,
        dist_error_bound=dist_err,
        ladder=ladder,
    )
