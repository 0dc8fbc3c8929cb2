"""Pseudospectra and discrete-eigenvalue detection for finite sections.

Eigenvalues of non-normal Toeplitz-like sections need not approximate the
operator spectrum (spectral pollution).  The detector therefore combines a
persistence ladder (candidates must re-appear, nearly unmoved, at every
section order) with a smallest-singular-value certificate at the largest
order, and classifies survivors against the symbol curve.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import eigenvalues, smallest_singular_value
from .sections import FiniteSection, bt_section, ht_section
from .symbols import HarmonicSymbol, SymbolCurve, sample_curve, winding_number

DEFAULT_LADDER = (200, 400, 800)


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle in the complex plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def is_empty(self) -> bool:
        return not (self.re_min < self.re_max and self.im_min < self.im_max)


@dataclass(frozen=True)
class PseudospectrumField:
    """sigma_min((A_N - lambda)) over a uniform rectangular grid.

    ``sigma_min[q, p]`` corresponds to the node re_values[p] + 1j im_values[q].
    """

    region: Rect
    nx: int
    ny: int
    sigma_min: np.ndarray
    section_order: int

    def re_values(self) -> np.ndarray:
        return np.linspace(self.region.re_min, self.region.re_max, self.nx)

    def im_values(self) -> np.ndarray:
        return np.linspace(self.region.im_min, self.region.im_max, self.ny)


def pseudospectrum(
    a: FiniteSection, region: Rect, nx: int, ny: int
) -> PseudospectrumField:
    """Evaluate sigma_min(A - lambda) on each node of the grid.

    Nodes are independent work units; results do not depend on evaluation
    order.
    """
    nx, ny = int(nx), int(ny)
    if nx < 2 or ny < 2:
        raise ValueError("grid resolution must be at least 2 x 2")
    if region.is_empty():
        raise ValueError(f"empty region: {region}")
    res = np.linspace(region.re_min, region.re_max, nx)
    ims = np.linspace(region.im_min, region.im_max, ny)
    sig = np.empty((ny, nx))
    for q, im in enumerate(ims):
        for p, re in enumerate(res):
            sig[q, p] = smallest_singular_value(a.entries, complex(re, im))
    return PseudospectrumField(
        region=region, nx=nx, ny=ny, sigma_min=sig, section_order=a.order
    )


class Component(enum.Enum):
    F0 = "F0"
    BOUNDED_HOLE = "boundedHole"
    NEAR_ESSENTIAL = "nearEssential"


@dataclass(frozen=True)
class DiscreteCandidate:
    location: complex
    persistence_drift: float
    certificate: float
    component: Component


@dataclass(frozen=True)
class DetectOptions:
    """Detection tolerances; ``None`` fields resolve to symbol-scaled defaults.

    delta_curve defaults to 0.05 * wiener_norm, drift_tol to
    1e-3 * wiener_norm, cert_tol to 1e-6 * ||A_{N_max}||_F.
    """

    delta_curve: float | None = None
    drift_tol: float | None = None
    cert_tol: float | None = None
    curve_samples: int | None = None
    max_sweeps: int = 40


@dataclass(frozen=True)
class DetectionResult(Sequence):
    """Certified candidates plus detection side notes; acts as a sequence of
    the certified candidates."""

    candidates: tuple[DiscreteCandidate, ...]
    uncertified: tuple[DiscreteCandidate, ...]
    skipped_rungs: tuple[int, ...]
    curve: SymbolCurve

    def __len__(self) -> int:
        return len(self.candidates)

    def __getitem__(self, i):
        return self.candidates[i]


def _resolve_options(
    s: HarmonicSymbol, opts: DetectOptions, n_max: int
) -> tuple[float, float, float, int]:
    w = s.wiener_norm()
    delta_curve = opts.delta_curve if opts.delta_curve is not None else 0.05 * w
    drift_tol = opts.drift_tol if opts.drift_tol is not None else 1e-3 * w
    if opts.cert_tol is not None:
        cert_tol = opts.cert_tol
    else:
        cert_tol = 1e-6 * bt_section(s, n_max).frobenius_norm()
    m_curve = (
        opts.curve_samples
        if opts.curve_samples is not None
        else max(256, 16 * (s.m + s.n + 1))
    )
    return delta_curve, drift_tol, cert_tol, m_curve


def _chain_ladder(
    rung_eigs: list[np.ndarray], drift_tol: float
) -> list[tuple[complex, float]]:
    """Greedy nearest-neighbor chaining across consecutive rungs.

    Returns (final location, max step drift) for chains spanning the whole
    ladder with every step below drift_tol.  Ties break on smaller index.
    """
    chains: list[tuple[complex, float]] = []
    first = rung_eigs[0]
    for start in first:
        loc = complex(start)
        drift = 0.0
        alive = True
        for later in rung_eigs[1:]:
            if len(later) == 0:
                alive = False
                break
            dists = np.abs(later - loc)
            idx = int(np.argmin(dists))
            step = float(dists[idx])
            if step >= drift_tol:
                alive = False
                break
            drift = max(drift, step)
            loc = complex(later[idx])
        if alive:
            chains.append((loc, drift))
    return chains


def detect_discrete(
    s: HarmonicSymbol,
    ladder: Sequence[int] = DEFAULT_LADDER,
    opts: DetectOptions = DetectOptions(),
) -> DetectionResult:
    """Detect candidate discrete eigenvalues of the Bergman-Toeplitz operator.

    Pipeline: eigensolve every ladder rung, drop eigenvalues within
    delta_curve of the symbol curve, chain survivors across rungs, certify
    the remaining chains by sigma_min at the largest order, classify.
    Deterministic for identical inputs.
    """
    ladder = [int(n) for n in ladder]
    if len(ladder) < 3 or any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise ValueError("ladder must be strictly increasing with length >= 3")
    n_max = ladder[-1]
    delta_curve, drift_tol, cert_tol, m_curve = _resolve_options(s, opts, n_max)
    curve = sample_curve(s, m_curve)

    rung_eigs: list[np.ndarray] = []
    skipped: list[int] = []
    top_section = None
    for n in ladder:
        section = bt_section(s, n)
        if n == n_max:
            top_section = section
        res = eigenvalues(section.entries, max_sweeps=opts.max_sweeps)
        if not res.converged:
            skipped.append(n)
            continue
        ev = res.values
        far = np.array([curve.distance_to(lam) >= delta_curve for lam in ev])
        rung_eigs.append(ev[far])
    if len(rung_eigs) < 3:
        return DetectionResult(
            candidates=(), uncertified=(), skipped_rungs=tuple(skipped), curve=curve
        )

    certified: list[DiscreteCandidate] = []
    uncertified: list[DiscreteCandidate] = []
    seen: set[complex] = set()
    for loc, drift in _chain_ladder(rung_eigs, drift_tol):
        if loc in seen:
            continue
        seen.add(loc)
        cert = smallest_singular_value(top_section.entries, loc)
        comp = classify(loc, curve, delta_curve)
        cand = DiscreteCandidate(
            location=loc, persistence_drift=drift, certificate=cert, component=comp
        )
        if cert < cert_tol:
            certified.append(cand)
        else:
            uncertified.append(cand)
    key = lambda c: (c.location.real, c.location.imag)
    return DetectionResult(
        candidates=tuple(sorted(certified, key=key)),
        uncertified=tuple(sorted(uncertified, key=key)),
        skipped_rungs=tuple(skipped),
        curve=curve,
    )


def _segment_hits_curve(a: complex, b: complex, curve: SymbolCurve, tol: float) -> bool:
    """Whether the segment a -> b passes within ``tol`` of the polyline."""
    p = curve.points
    q = np.roll(p, -1)
    # coarse sampling of the probe segment against the curve polyline
    n_probe = 4 * len(p)
    ts = np.linspace(0.0, 1.0, n_probe)
    probes = a + ts * (b - a)
    step = abs(b - a) / (n_probe - 1)
    for z in probes:
        if curve.distance_to(complex(z)) <= tol + 0.5 * step:
            return True
    return False


def classify(
    lam: complex, curve: SymbolCurve, delta_curve: float
) -> Component:
    """Classify a point against the symbol curve and its complement.

    nearEssential within delta_curve of the curve; F0 when winding is zero
    and a straight ray escapes to a radius beyond the curve without touching
    it (for Jordan curves winding zero alone suffices); boundedHole else.
    """
    lam = complex(lam)
    d = curve.distance_to(lam)
    if d < delta_curve:
        return Component.NEAR_ESSENTIAL
    wind = winding_number(curve, lam)
    if wind != 0:
        return Component.BOUNDED_HOLE
    escape_radius = 2.0 * curve.scale() + 1.0 + abs(lam)
    centroid = complex(np.mean(curve.points))
    base = lam - centroid
    base_angle = cmath.phase(base) if base != 0 else 0.0
    for k in range(16):
        angle = base_angle + 2.0 * math.pi * k / 16.0
        target = lam + escape_radius * complex(math.cos(angle), math.sin(angle))
        if not _segment_hits_curve(lam, target, curve, 0.25 * delta_curve):
            return Component.F0
    # every probe ray grazed the curve: fall back on winding for Jordan-like
    # curves, otherwise treat as a bounded winding-zero pocket
    from .symbols import curve_diagnostics

    try:
        if curve_diagnostics(curve).jordan:
            return Component.F0
    except ValueError:
        pass
    return Component.BOUNDED_HOLE


@dataclass(frozen=True)
class ResolventFit:
    p_hat: float
    c_hat: float


def resolvent_growth_fit(
    s: HarmonicSymbol,
    sample_points: Sequence[complex],
    N: int,
    curve: SymbolCurve | None = None,
) -> ResolventFit:
    """Least-squares fit of log ||R(z)|| = log c - p log dist(z, spectrum).

    ``||R(z)||`` is approximated by 1 / sigma_min(A_N - z) on the
    Hardy-Toeplitz section.  All samples must lie in the outer component
    with positive distance to the spectrum.
    """
    from .analysis import dist_to_spectrum

    pts = [complex(z) for z in sample_points]
    if len(pts) < 8:
        raise ValueError(f"need at least 8 sample points, got {len(pts)}")
    if curve is None:
        curve = sample_curve(s, max(256, 16 * (s.m + s.n + 1)))
    section = ht_section(s, N)
    log_d = []
    log_rnorm = []
    for z in pts:
        d = dist_to_spectrum(z, curve)
        if d <= 0:
            raise ValueError(f"sample point {z} is not outside the spectrum")
        if winding_number(curve, z) != 0:
            raise ValueError(f"sample point {z} is not in the outer component")
        sig = smallest_singular_value(section.entries, z)
        if sig <= 0:
            raise ValueError(f"singular section at sample point {z}")
        log_d.append(math.log(d))
        log_rnorm.append(-math.log(sig))
    x = np.array(log_d)
    y = np.array(log_rnorm)
    if float(np.ptp(x)) < 1e-12:
        raise ValueError("sample distances are degenerate (all equal)")
    slope, intercept = np.polyfit(x, y, 1)
    return ResolventFit(p_hat=-float(slope), c_hat=float(math.exp(intercept)))


def points_at_distance(
    curve: SymbolCurve,
    dists: Sequence[float],
    n_angles: int = 8,
) -> list[complex]:
    """Deterministic outer-component points at prescribed spectrum distances.

    For each target distance and each of ``n_angles`` directions from the
    curve centroid, bisect along the outward ray until the distance to the
    filled spectrum matches the target.
    """
    from .analysis import dist_to_spectrum

    centroid = complex(np.mean(curve.points))
    r_outer = float(np.max(np.abs(curve.points - centroid)))
    out: list[complex] = []
    for i, d in enumerate(dists):
        d = float(d)
        angle = 2.0 * math.pi * i / max(1, len(dists)) + math.pi / (2 * n_angles)
        direction = complex(math.cos(angle), math.sin(angle))
        t_lo, t_hi = 0.0, r_outer + d + 1.0
        # dist along the ray is continuous and reaches d before t_hi
        for _ in range(80):
            t_mid = 0.5 * (t_lo + t_hi)
            z = centroid + t_mid * direction
            if dist_to_spectrum(z, curve) < d:
                t_lo = t_mid
            else:
                t_hi = t_mid
        out.append(centroid + t_hi * direction)
    return out
