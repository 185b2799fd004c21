"""Exact Stirling numbers, Bell numbers, falling-factorial basis changes and
truncated power series, with independent checks of the n-th derivative
formulas for f(ln x) and f(e^x)."""

from .basis import (
    Basis,
    PolyCoeffs,
    eval_falling_factorial,
    eval_poly,
    falling_to_power,
    power_to_falling,
)
from .egf import egf_bell, egf_stirling1, egf_stirling2, check_egf_against_triangle
from .errors import (
    CoefficientParseError,
    PrecisionError,
    RowCapExceeded,
    SeriesDomainError,
    StirlingkitError,
)
from .oracle import (
    CaseKind,
    SymbolicDerivative,
    TestFunction,
    derive_triangle_by_rewriting,
    rewrite_step,
    standard_corpus,
    verify_identity,
)
from .report import VerificationReport
from .series import TruncatedSeries
from .triangle import (
    BellPolynomial,
    Triangle,
    TriangleKind,
    bell_number,
    bell_polynomial,
    build_triangle,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
)

__version__ = "0.1.0"
