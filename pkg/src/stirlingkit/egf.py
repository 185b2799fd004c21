"""Exponential generating functions of the Stirling and Bell numbers.

``[log(1+x)]^k / k!`` generates column k of the signed first-kind triangle,
``(e^x - 1)^k / k!`` generates column k of the second-kind triangle and
``exp(e^x - 1)`` generates the Bell numbers. The last is the exponential of
e^x divided by e, with the irrational constant absorbed exactly.
"""

from __future__ import annotations

from math import factorial

from .partitions import count_set_partitions
from .report import VerificationReport
from .series import (
    TruncatedSeries,
    coefficient_times_factorial,
    expm1_series,
    log1p_series,
    series_exp,
    series_mul,
)
from .triangle import TriangleKind, bell_number, build_triangle

__all__ = [
    "egf_stirling1",
    "egf_stirling2",
    "egf_bell",
    "check_egf_against_triangle",
    "check_bell_routes",
]

# brute-force enumeration beyond this size is too slow for routine runs
BRUTE_FORCE_LIMIT = 10


def _column_egf(base: TruncatedSeries, k: int, order: int) -> TruncatedSeries:
    if k < 0:
        raise ValueError("k must be >= 0")
    if order < k:
        raise ValueError("order must be >= k")
    acc = TruncatedSeries.constant(1, order)
    for _ in range(k):
        acc = series_mul(acc, base)
    return acc / factorial(k)


def egf_stirling1(k: int, order: int) -> TruncatedSeries:
    """[log(1 + x)]^k / k! truncated to ``order``."""
    return _column_egf(log1p_series(order), k, order)


def egf_stirling2(k: int, order: int) -> TruncatedSeries:
    """(e^x - 1)^k / k! truncated to ``order``."""
    return _column_egf(expm1_series(order), k, order)


def egf_bell(order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    return series_exp(expm1_series(order))


def check_egf_against_triangle(kind: TriangleKind, n_max: int) -> VerificationReport:
    """n! [x^n] of the column-k EGF against the triangle, all 0 <= k <= n <= n_max."""
    kind = TriangleKind(kind)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    tri = build_triangle(kind, n_max)
    base = log1p_series(n_max) if kind is TriangleKind.FIRST_KIND_SIGNED else expm1_series(n_max)
    label = "log(1+x)^k/k!" if kind is TriangleKind.FIRST_KIND_SIGNED else "(e^x-1)^k/k!"
    report = VerificationReport(f"egf-{kind.value}", n_max, (label,))
    # column k's EGF is the (k-1)-th one times base / k
    col = TruncatedSeries.constant(1, n_max)
    for k in range(n_max + 1):
        if k:
            col = series_mul(col, base) / k
        for n in range(k, n_max + 1):
            report.add(label, (n, k), tri[n, k], coefficient_times_factorial(col, n))
    return report


def check_bell_routes(n_max: int) -> VerificationReport:
    """Bell numbers three ways: EGF coefficients, triangle row sums, brute force.

    Brute-force enumeration only covers n <= BRUTE_FORCE_LIMIT.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    series = egf_bell(n_max)
    report = VerificationReport("bell", n_max, ("egf", "brute-force"))
    for n in range(n_max + 1):
        row_sum = bell_number(n)
        report.add("egf", (n,), row_sum, coefficient_times_factorial(series, n))
        if n <= BRUTE_FORCE_LIMIT:
            report.add("brute-force", (n,), row_sum, count_set_partitions(n))
    return report
