"""Finite-section spectral toolkit for Hardy- and Bergman-Toeplitz operators
with harmonic trigonometric-polynomial symbols."""

from .symbols import (
    HarmonicSymbol,
    SymbolCurve,
    CurveDiagnostics,
    DegenerateCurveError,
    OnCurveError,
    from_parts,
    sample_curve,
    winding_number,
    curve_diagnostics,
)
from .sections import (
    FiniteSection,
    SectionKind,
    SeriesResult,
    ht_section,
    bt_entry,
    bt_section,
    hs_difference_sq_truncated,
    hs_difference_sq_series,
    hs_bound,
)
from .linalg import (
    EigenResult,
    SingularMatrixError,
    hessenberg,
    eigenvalues,
    lu_factor,
    lu_solve,
    smallest_singular_value,
    singular_values_jacobi,
)
from .spectra import (
    Rect,
    PseudospectrumField,
    Component,
    DiscreteCandidate,
    ResolventFit,
    DetectOptions,
    DetectionResult,
    pseudospectrum,
    detect_discrete,
    classify,
    resolvent_growth_fit,
    points_at_distance,
)
from .analysis import (
    SpectralReport,
    ReportOptions,
    dist_to_spectrum,
    lt_sum,
    weyl_diagnostic,
    build_report,
)

__all__ = [
    "HarmonicSymbol",
    "SymbolCurve",
    "CurveDiagnostics",
    "DegenerateCurveError",
    "OnCurveError",
    "from_parts",
    "sample_curve",
    "winding_number",
    "curve_diagnostics",
    "FiniteSection",
    "SectionKind",
    "SeriesResult",
    "ht_section",
    "bt_entry",
    "bt_section",
    "hs_difference_sq_truncated",
    "hs_difference_sq_series",
    "hs_bound",
    "EigenResult",
    "SingularMatrixError",
    "hessenberg",
    "eigenvalues",
    "lu_factor",
    "lu_solve",
    "smallest_singular_value",
    "singular_values_jacobi",
    "Rect",
    "PseudospectrumField",
    "Component",
    "DiscreteCandidate",
    "ResolventFit",
    "DetectOptions",
    "DetectionResult",
    "pseudospectrum",
    "detect_discrete",
    "classify",
    "resolvent_growth_fit",
    "points_at_distance",
    "SpectralReport",
    "ReportOptions",
    "dist_to_spectrum",
    "lt_sum",
    "weyl_diagnostic",
    "build_report",
]

__version__ = "0.1.0"
