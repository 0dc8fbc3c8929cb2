"""Harmonic symbols phi = conj(g) + f with trigonometric-polynomial parts.

A symbol is stored through its Fourier coefficients b_j, j in [-m, n]:
b_j = f_j for j >= 1, b_{-j} = conj(g_j) for j >= 1, and b_0 = f_0 + conj(g_0).
The module also provides the sampled boundary curve gamma = phi(T) together
with winding numbers and geometric (Jordan / cusp) diagnostics.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

# Relative tolerance separating "on the curve" from "off the curve".
ON_CURVE_RTOL = 1e-12
# Relative cusp tolerance: a curve is cusp-free when the slowest tangent is
# at least TAU_CUSP times the fastest one.
TAU_CUSP = 1e-6
# Relative tolerance for the segment-segment self-intersection test.
SELF_INTERSECT_RTOL = 1e-9


class OnCurveError(ValueError):
    """The query point lies on (or too close to) the sampled curve."""


class DegenerateCurveError(ValueError):
    """The sampled curve is degenerate (all points coincide)."""


@dataclass(frozen=True)
class HarmonicSymbol:
    """Trigonometric-polynomial harmonic symbol, immutable after construction.

    ``coeffs`` maps j -> b_j; entries outside [-m, n] are absent and read as 0.
    """

    coeffs: Mapping[int, complex]
    m: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self) -> None:
        clean = {int(j): complex(v) for j, v in self.coeffs.items() if v != 0}
        object.__setattr__(self, "coeffs", clean)
        neg = [-j for j in clean if j < 0]
        pos = [j for j in clean if j > 0]
        object.__setattr__(self, "m", max(neg) if neg else 0)
        object.__setattr__(self, "n", max(pos) if pos else 0)

    def __getitem__(self, j: int) -> complex:
        return self.coeffs.get(j, 0j)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return all(j == 0 for j in self.coeffs)

    def indices(self) -> list[int]:
        """Coefficient indices in increasing order."""
        return sorted(self.coeffs)

    def eval_boundary(self, theta: float) -> complex:
        """Boundary value sum_j b_j e^{ij theta}."""
        if not math.isfinite(theta):
            raise ValueError("theta must be finite")
        total = 0j
        for j in self.indices():
            total += self.coeffs[j] * cmath.exp(1j * j * theta)
        return total

    def eval_disk(self, z: complex) -> complex:
        """Harmonic extension at |z| < 1: sum_j b_j r^{|j|} e^{ij theta}."""
        z = complex(z)
        r = abs(z)
        if r >= 1.0:
            raise ValueError(f"eval_disk requires |z| < 1, got |z| = {r}")
        theta = cmath.phase(z) if r > 0 else 0.0
        total = 0j
        for j in self.indices():
            total += self.coeffs[j] * r ** abs(j) * cmath.exp(1j * j * theta)
        return total

    def boundary_tangent(self, theta: float) -> complex:
        """d phi / d theta = sum_j (ij) b_j e^{ij theta}."""
        total = 0j
        for j in self.indices():
            total += 1j * j * self.coeffs[j] * cmath.exp(1j * j * theta)
        return total

    def derivative_norm_sq(self) -> float:
        """||phi'||_2^2 = sum_l l^2 |b_l|^2 (probability Haar measure)."""
        return float(sum(j * j * abs(v) ** 2 for j, v in self.coeffs.items()))

    def wiener_norm(self) -> float:
        """sum_j |b_j|, the absolutely-convergent-series norm."""
        return float(sum(abs(v) for v in self.coeffs.values()))

    def sup_bound(self) -> float:
        """Upper bound for sup_theta |phi|; also an outer radius for the
        Hardy-Toeplitz spectrum."""
        return self.wiener_norm()


def from_parts(
    f_coeffs: Sequence[complex], g_coeffs: Sequence[complex]
) -> HarmonicSymbol:
    """Build the symbol phi = conj(g) + f from Taylor coefficients of f, g.

    Empty inputs give the zero symbol.  The constant terms merge:
    b_0 = f_0 + conj(g_0).
    """
    coeffs: dict[int, complex] = {}
    for k, fk in enumerate(f_coeffs):
        if fk != 0:
            coeffs[k] = coeffs.get(k, 0j) + complex(fk)
    for k, gk in enumerate(g_coeffs):
        if gk != 0:
            coeffs[-k] = coeffs.get(-k, 0j) + complex(gk).conjugate()
    return HarmonicSymbol(coeffs)


@dataclass(frozen=True)
class SymbolCurve:
    """Uniform-angle samples of the closed curve gamma = phi(T).

    ``points[k] = phi(e^{i theta_k})`` with theta_k = 2 pi k / M, and
    ``tangents[k] = dphi/dtheta(theta_k)``, both computed analytically.
    """

    points: np.ndarray
    tangents: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", np.asarray(self.points, dtype=complex))
        object.__setattr__(self, "tangents", np.asarray(self.tangents, dtype=complex))
        self.points.setflags(write=False)
        self.tangents.setflags(write=False)

    def __len__(self) -> int:
        return len(self.points)

    def scale(self) -> float:
        """Characteristic length used by relative tolerances."""
        s = float(np.max(np.abs(self.points))) if len(self.points) else 0.0
        return s if s > 0 else 1.0

    def distance_to(self, lam: complex) -> float:
        """Distance from ``lam`` to the sampled closed polyline."""
        p = self.points
        a = p
        b = np.roll(p, -1)
        return float(np.min(_point_segment_distances(complex(lam), a, b)))


def _point_segment_distances(
    lam: complex, a: np.ndarray, b: np.ndarray
) -> np.ndarray:
    """Distances from a point to each segment a[k] -> b[k], closed form."""
    d = b - a
    denom = (d.real**2 + d.imag**2)
    w = lam - a
    t = np.zeros_like(denom)
    nz = denom > 0
    t[nz] = (w.real[nz] * d.real[nz] + w.imag[nz] * d.imag[nz]) / denom[nz]
    t = np.clip(t, 0.0, 1.0)
    closest = a + t * d
    return np.abs(lam - closest)


def sample_curve(s: HarmonicSymbol, M: int) -> SymbolCurve:
    """Sample gamma = phi(T) at M uniform angles with analytic tangents.

    Requires M >= 64 and M >= 16 (m + n + 1) so the polyline resolves the
    highest frequency present.
    """
    M = int(M)
    min_m = max(64, 16 * (s.m + s.n + 1))
    if M < min_m:
        raise ValueError(f"M = {M} too small; need M >= {min_m}")
    thetas = [2.0 * math.pi * k / M for k in range(M)]
    points = np.array([s.eval_boundary(t) for t in thetas], dtype=complex)
    tangents = np.array([s.boundary_tangent(t) for t in thetas], dtype=complex)
    return SymbolCurve(points=points, tangents=tangents)


def winding_number(c: SymbolCurve, lam: complex) -> int:
    """Winding of the sampled polyline around ``lam``.

    Computed by summing wrapped argument increments; exact for the polyline.
    Raises OnCurveError when ``lam`` is within 1e-12 * scale of a sample.
    """
    lam = complex(lam)
    z = c.points - lam
    dist = c.distance_to(lam)
    if dist <= ON_CURVE_RTOL * c.scale():
        raise OnCurveError(f"point {lam} lies on the sampled curve")
    ratios = np.roll(z, -1) / z
    increments = np.angle(ratios)
    total = float(np.sum(increments)) / (2.0 * math.pi)
    return int(round(total))


@dataclass(frozen=True)
class CurveDiagnostics:
    jordan: bool
    cusp_free: bool
    min_tangent_speed: float
    min_self_distance: float


def _segment_pair_distances(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise distance matrix between closed-polyline segments.

    Entry (k, l) is the distance between segment k = [a_k, b_k] and segment
    l = [a_l, b_l].  Approximated by the minimum of the four endpoint-to-
    segment distances plus a proper crossing test; exact whenever segments
    either touch, cross, or attain their distance at an endpoint (always the
    case for non-parallel segments).
    """
    M = len(a)
    d = np.full((M, M), np.inf)
    # distance from each endpoint of segment k to segment l
    for ends in (a, b):
        for k in range(M):
            d[k] = np.minimum(d[k], _point_segment_distances(complex(ends[k]), a, b))
    dT = d.T
    d = np.minimum(d, dT)
    # proper crossings: distance 0
    cross = _segments_cross(a, b)
    d[cross] = 0.0
    return d


def _segments_cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix of proper interior crossings between segments."""
    d1 = b - a
    # orientation of (a_l, b_l) w.r.t. segment k: cross products
    def cross2(u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return u.real * v.imag - u.imag * v.real

    ak = a[:, None]
    dk = d1[:, None]
    al = a[None, :]
    bl = b[None, :]
    o1 = cross2(dk, al - ak)
    o2 = cross2(dk, bl - ak)
    dl = d1[None, :]
    o3 = cross2(dl, ak - al)
    o4 = cross2(dl, (ak + dk) - al)
    return (o1 * o2 < 0) & (o3 * o4 < 0)


def curve_diagnostics(c: SymbolCurve) -> CurveDiagnostics:
    """Jordan / cusp-free diagnostics of the sampled curve.

    cusp_free: min |tangent| > TAU_CUSP * max |tangent|.
    jordan: no two non-adjacent polyline segments come within
    SELF_INTERSECT_RTOL * scale of each other (O(M^2) pair test).
    """
    p = c.points
    if np.all(p == p[0]):
        raise DegenerateCurveError("all curve points coincide")
    speeds = np.abs(c.tangents)
    min_speed = float(np.min(speeds))
    max_speed = float(np.max(speeds))
    cusp_free = min_speed > TAU_CUSP * max_speed

    a = p
    b = np.roll(p, -1)
    M = len(p)
    d = _segment_pair_distances(a, b)
    # mask self and adjacent pairs (shared endpoints, cyclically)
    idx = np.arange(M)
    diff = np.abs(idx[:, None] - idx[None, :])
    adjacent = (diff <= 1) | (diff >= M - 1)
    d[adjacent] = np.inf
    min_self = float(np.min(d))
    tol = SELF_INTERSECT_RTOL * c.scale()
    jordan = min_self > tol
    return CurveDiagnostics(
        jordan=jordan,
        cusp_free=cusp_free,
        min_tangent_speed=min_speed,
        min_self_distance=min_self,
    )
