"""Finite sections of the Hardy- and Bergman-Toeplitz matrices.

In the monomial bases the Hardy-Toeplitz matrix is [b_{i-j}] and the
Bergman-Toeplitz matrix carries the extra weight
sqrt((min(i,j)+1)/(max(i,j)+1)).  The squared Frobenius norm of their
difference admits the exact double-series form evaluated here with a
certified truncation error.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .symbols import HarmonicSymbol


class SectionKind(enum.Enum):
    HT = "ht"
    BT = "bt"


@dataclass(frozen=True)
class FiniteSection:
    """Dense N x N corner of an operator matrix, immutable."""

    kind: SectionKind
    order: int
    entries: np.ndarray
    symbol: HarmonicSymbol

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", np.asarray(self.entries, dtype=complex))
        self.entries.setflags(write=False)

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))


def _coeff_by_offset(s: HarmonicSymbol, N: int) -> np.ndarray:
    """Array c with c[i - j + N - 1] = b_{i-j} for 0 <= i, j < N."""
    c = np.zeros(2 * N - 1, dtype=complex)
    for j, v in s.coeffs.items():
        if -(N - 1) <= j <= N - 1:
            c[j + N - 1] = v
    return c


def _offset_matrix(N: int) -> np.ndarray:
    i = np.arange(N)
    return i[:, None] - i[None, :]


def ht_section(s: HarmonicSymbol, N: int) -> FiniteSection:
    """N x N Hardy-Toeplitz section with entries b_{i-j}."""
    N = int(N)
    if N < 1:
        raise ValueError(f"section order must be >= 1, got {N}")
    c = _coeff_by_offset(s, N)
    entries = c[_offset_matrix(N) + N - 1]
    return FiniteSection(kind=SectionKind.HT, order=N, entries=entries, symbol=s)


def bt_entry(s: HarmonicSymbol, i: int, j: int) -> complex:
    """Single Bergman-Toeplitz entry sqrt((min(i,j)+1)/(max(i,j)+1)) b_{i-j}."""
    if i < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    b = s[i - j]
    if b == 0:
        return 0j
    w = math.sqrt((min(i, j) + 1) / (max(i, j) + 1))
    return w * b


def _bt_weights(N: int) -> np.ndarray:
    i = np.arange(1, N + 1, dtype=float)
    lo = np.minimum(i[:, None], i[None, :])
    hi = np.maximum(i[:, None], i[None, :])
    return np.sqrt(lo / hi)


def bt_section(s: HarmonicSymbol, N: int) -> FiniteSection:
    """N x N Bergman-Toeplitz section."""
    N = int(N)
    if N < 1:
        raise ValueError(f"section order must be >= 1, got {N}")
    c = _coeff_by_offset(s, N)
    entries = _bt_weights(N) * c[_offset_matrix(N) + N - 1]
    return FiniteSection(kind=SectionKind.BT, order=N, entries=entries, symbol=s)


def hs_difference_sq_truncated(s: HarmonicSymbol, N: int) -> float:
    """Frobenius sum sum_{0<=i,j<N} |tau_{i,j} - b_{i-j}|^2."""
    N = int(N)
    if N < 1:
        raise ValueError(f"section order must be >= 1, got {N}")
    c = np.abs(_coeff_by_offset(s, N)) ** 2
    mag_sq = c[_offset_matrix(N) + N - 1]
    w = _bt_weights(N)
    return float(np.sum(mag_sq * (1.0 - w) ** 2))


@dataclass(frozen=True)
class SeriesResult:
    value: float
    tail_bound: float


def _inner_term(k: np.ndarray, L: int) -> np.ndarray:
    """Term 1 / ((k+L+1) (sqrt(k+L+1) + sqrt(k+1))^2), vectorized in k."""
    kk = np.asarray(k, dtype=float)
    return 1.0 / ((kk + L + 1) * (np.sqrt(kk + L + 1) + np.sqrt(kk + 1)) ** 2)


def _inner_tail_integral(X: float, L: int) -> float:
    """integral_X^infty of the inner term, in closed form.

    With u = sqrt(x+1), v = sqrt(x+L+1) the antiderivative of
    1/((x+L+1)(sqrt(x+L+1)+sqrt(x+1))^2) = (2 - L/(x+L+1)
    - 2 sqrt((x+1)/(x+L+1))) / L^2 is
    (2x - L log(x+L+1) - 2 u v + 2 L log(u+v)) / L^2, with limit
    (2 L log 2 - L - 2) / L^2 at infinity.
    """
    u = math.sqrt(X + 1.0)
    v = math.sqrt(X + L + 1.0)
    limit = 2.0 * L * math.log(2.0) - L - 2.0
    at_x = 2.0 * X - L * math.log(X + L + 1.0) - 2.0 * u * v + 2.0 * L * math.log(u + v)
    return (limit - at_x) / (L * L)


def hs_difference_sq_series(s: HarmonicSymbol, tol: float) -> SeriesResult:
    """Exact-series value of ||T_bt - T_ht||_F^2 with certified tail bound.

    The series is sum_{l != 0} l^2 |b_l|^2 S(|l|) with
    S(L) = sum_k 1/((k+L+1)(sqrt(k+L+1)+sqrt(k+1))^2).  Each S(L) is summed
    directly up to K terms and completed with the closed-form integral of the
    (decreasing) term function; the omitted remainder per l is at most the
    first skipped term, so tail_bound < tol by the choice of K.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    weights = {
        abs(j): 0.0 for j in s.coeffs if j != 0
    }
    for j, v in s.coeffs.items():
        if j != 0:
            weights[abs(j)] += j * j * abs(v) ** 2
    total_weight = sum(weights.values())
    if total_weight == 0.0:
        return SeriesResult(value=0.0, tail_bound=0.0)

    # Sum - integral correction leaves an error <= t_{K+1} ~ 1/(4 K^2) per
    # inner series, so K ~ sqrt(W / (4 tol)) certifies the weighted total.
    K = max(1000, int(math.ceil(math.sqrt(total_weight / (4.0 * tol)))) + 10)
    value = 0.0
    tail_bound = 0.0
    ks = np.arange(K + 1, dtype=float)
    for L, w in sorted(weights.items()):
        partial = float(np.sum(_inner_term(ks, L)))
        correction = _inner_tail_integral(K + 1.0, L)
        value += w * (partial + correction)
        tail_bound += w * float(_inner_term(np.array([K + 1.0]), L)[0])
    return SeriesResult(value=value, tail_bound=tail_bound)


def hs_bound(s: HarmonicSymbol) -> float:
    """The proven bound (pi^2 / 24) ||phi'||_2^2."""
    return (math.pi**2 / 24.0) * s.derivative_norm_sq()
