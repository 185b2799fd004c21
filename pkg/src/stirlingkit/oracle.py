"""Two independent routes to the n-th derivatives of f(ln x) and f(e^x).

The rewrite engine iterates the per-term differentiation rules

    d/dx [f^(k)(t) / x^m] = (-m f^(k)(t) + f^(k+1)(t)) / x^(m+1),   t = ln x
    d/dx [t^k f^(k)(t)]   = k t^k f^(k)(t) + t^(k+1) f^(k+1)(t),    t = e^x

on abstract symbols f^(k) and collects the integer coefficients. The
composition oracle instead expands f(ln x) around x = 1 and f(e^x) around
x = 0 as truncated series and reads off derivatives, touching no Stirling
numbers at all. Closed formulas then weight f^(k) at the base point with
triangle entries, and :func:`verify_identity` compares the two.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import PrecisionError, RowCapExceeded
from .report import VerificationReport
from .series import (
    TruncatedSeries,
    coefficient_times_factorial,
    exp_series,
    expm1_series,
    log1p_series,
    series_compose,
    series_differentiate,
    series_exp,
    series_mul,
    series_pow_rational,
    series_reciprocal,
)
from .triangle import Triangle, TriangleKind, bell_polynomial, build_triangle, row_cap

__all__ = [
    "CaseKind",
    "SymbolicDerivative",
    "TestFunction",
    "rewrite_step",
    "derive_triangle_by_rewriting",
    "nth_derivative_log_case",
    "closed_formula_log_case",
    "nth_derivative_exp_case",
    "closed_formula_exp_case",
    "verify_identity",
    "standard_corpus",
    "all_ones_function",
    "check_bell_polynomial_identity",
    "check_rewrite_against_recurrence",
]


class CaseKind(enum.Enum):
    LOG = "log"  # f(ln x)
    EXP = "exp"  # f(e^x)

    @property
    def triangle_kind(self) -> TriangleKind:
        if self is CaseKind.LOG:
            return TriangleKind.FIRST_KIND_SIGNED
        return TriangleKind.SECOND_KIND


@dataclass(frozen=True)
class SymbolicDerivative:
    """sum_k terms[k] * f^(k)(t), times x^(-n) (log case) or t^k (exp case).

    The structural factors are implied by ``kind``, ``n`` and the key ``k``.
    """

    kind: CaseKind
    n: int
    terms: dict[int, int] = field(default_factory=dict)

    @classmethod
    def base(cls, kind: CaseKind) -> "SymbolicDerivative":
        """The undifferentiated function f(t) itself."""
        return cls(CaseKind(kind), 0, {0: 1})

    def coefficient(self, k: int) -> int:
        return self.terms.get(k, 0)

    def as_row(self) -> tuple[int, ...]:
        return tuple(self.coefficient(k) for k in range(self.n + 1))


def rewrite_step(d: SymbolicDerivative) -> SymbolicDerivative:
    """Differentiate once more with respect to x."""
    new: dict[int, int] = {}
    for k, c in d.terms.items():
        # log case: the term carries 1/x^n, so m = n; exp case: t^k, so the factor is k
        same = -d.n * c if d.kind is CaseKind.LOG else k * c
        new[k] = new.get(k, 0) + same
        new[k + 1] = new.get(k + 1, 0) + c
    return SymbolicDerivative(d.kind, d.n + 1, {k: c for k, c in sorted(new.items()) if c})


def derive_triangle_by_rewriting(kind: TriangleKind, n_max: int, cap: int | None = None) -> Triangle:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    cap = row_cap() if cap is None else cap
    if n_max > cap:
        raise RowCapExceeded(n_max, cap)
    kind = TriangleKind(kind)
    case = CaseKind.LOG if kind is TriangleKind.FIRST_KIND_SIGNED else CaseKind.EXP
    d = SymbolicDerivative.base(case)
    rows = [d.as_row()]
    for _ in range(n_max):
        d = rewrite_step(d)
        rows.append(d.as_row())
    return Triangle(kind, tuple(rows))


@dataclass(frozen=True)
class TestFunction:
    """A test function given by its Taylor series at the case's base point.

    Log case: coefficients in t around t = 0 (x = 1). Exp case:
    coefficients in (t - 1) around t = 1 (x = 0).
    """

    __test__ = False  # keep pytest from collecting this class

    label: str
    series: TruncatedSeries

    def derivative_at_base(self, k: int) -> Fraction:
        return coefficient_times_factorial(self.series, k)


def _require_order(f: TestFunction, n: int) -> None:
    if n < 0:
        raise ValueError("derivative order must be >= 0")
    if f.series.order < n:
        raise PrecisionError(f"{f.label}: series order {f.series.order} < requested derivative {n}")


def nth_derivative_log_case(f: TestFunction, n: int) -> Fraction:
    """d^n/dx^n f(ln x) at x = 1, via f(log(1 + u)) with x = 1 + u."""
    _require_order(f, n)
    g = series_compose(f.series.truncate(n), log1p_series(n))
    return coefficient_times_factorial(g, n)


def closed_formula_log_case(f: TestFunction, n: int) -> Fraction:
    """sum_k s(n, k) f^(k)(0); the 1/x^n prefactor is 1 at x = 1."""
    _require_order(f, n)
    tri = build_triangle(TriangleKind.FIRST_KIND_SIGNED, n)
    if n == 0:
        return f.derivative_at_base(0)
    return sum((tri[n, k] * f.derivative_at_base(k) for k in range(1, n + 1)), Fraction(0))


def nth_derivative_exp_case(f: TestFunction, n: int) -> Fraction:
    """d^n/dx^n f(e^x) at x = 0, via f(1 + (e^x - 1))."""
    _require_order(f, n)
    h = series_compose(f.series.truncate(n), expm1_series(n))
    return coefficient_times_factorial(h, n)


def closed_formula_exp_case(f: TestFunction, n: int) -> Fraction:
    """sum_k S(n, k) t^k f^(k)(t) at t = 1."""
    _require_order(f, n)
    tri = build_triangle(TriangleKind.SECOND_KIND, n)
    if n == 0:
        return f.derivative_at_base(0)
    return sum((tri[n, k] * f.derivative_at_base(k) for k in range(1, n + 1)), Fraction(0))


_ROUTES = {
    CaseKind.LOG: (nth_derivative_log_case, closed_formula_log_case),
    CaseKind.EXP: (nth_derivative_exp_case, closed_formula_exp_case),
}


def verify_identity(kind: CaseKind, corpus, n_max: int) -> VerificationReport:
    """Compare oracle and closed formula for every function and 1 <= n <= n_max."""
    kind = CaseKind(kind)
    corpus = list(corpus)
    for f in corpus:
        if f.series.order < n_max:
            raise PrecisionError(f"{f.label}: series order {f.series.order} < n_max {n_max}")
    oracle, closed = _ROUTES[kind]
    report = VerificationReport(f"oracle-{kind.value}", n_max, tuple(f.label for f in corpus))
    for f in corpus:
        for n in range(1, n_max + 1):
            report.add(f.label, (n,), oracle(f, n), closed(f, n))
    return report


def _geometric_half(order: int) -> TruncatedSeries:
    # 1 / (1 - t/2)
    return series_reciprocal(TruncatedSeries([1, Fraction(-1, 2)] + [0] * (order - 1)))


def _binomial_power(alpha, order: int) -> TruncatedSeries:
    one_plus_t = TruncatedSeries([1, 1] + [0] * (order - 1))
    return series_pow_rational(one_plus_t, alpha)


def _poly(coeffs, order: int) -> TruncatedSeries:
    coeffs = list(coeffs)
    return TruncatedSeries(coeffs + [0] * (order + 1 - len(coeffs)))


def standard_corpus(order: int = 20) -> list[TestFunction]:
    """Test functions expanded to ``order``, shared by both cases.

    In the exp case each series is read in powers of (t - 1).
    """
    if order < 6:
        raise ValueError("standard corpus needs order >= 6 to hold its degree-6 polynomials")
    corpus = [
        TestFunction("poly:t", _poly([0, 1], order)),
        TestFunction("poly:t^6", _poly([0, 0, 0, 0, 0, 0, 1], order)),
        TestFunction(
            "poly:mixed6",
            _poly([3, -2, Fraction(1, 2), 0, Fraction(-5, 3), 7, Fraction(2, 9)], order),
        ),
        TestFunction("exp", exp_series(order)),
    ]
    for alpha in (Fraction(-2), Fraction(-1, 2), Fraction(1, 3), Fraction(5)):
        label = f"(1+t)^{alpha}"
        corpus.append(TestFunction(label, _binomial_power(alpha, order)))
    corpus.append(TestFunction("1/(1-t/2)", _geometric_half(order)))
    return corpus


def all_ones_function(order: int) -> TestFunction:
    """f with every derivative at the base point equal to 1 (the exponential)."""
    return TestFunction("exp", exp_series(order))


def check_bell_polynomial_identity(n_max: int, order: int = 8) -> VerificationReport:
    """Series-level check of (e^{e^x})^(n) = e^{e^x} B_n(e^x) for 1 <= n <= n_max.

    The common factor e is divided out of both sides, leaving
    exp(e^x - 1)^(n) = exp(e^x - 1) * sum_k S(n, k) e^{kx}, which has rational
    coefficients. The two sides are compared coefficient by coefficient up to
    ``order``.
    """
    total = n_max + order
    base = series_exp(expm1_series(total))
    report = VerificationReport("bell-polynomial", n_max, ("d^n exp(e^x-1)",))
    deriv = base
    for n in range(1, n_max + 1):
        deriv = series_differentiate(deriv)
        lhs = deriv.truncate(order)
        poly = bell_polynomial(n)
        # B_n(e^x) = sum_k S(n,k) e^{kx}; coefficient of x^i is sum_k S(n,k) k^i / i!
        bn = TruncatedSeries(
            Fraction(sum(c * k**i for k, c in enumerate(poly.coeffs)), factorial(i))
            for i in range(order + 1)
        )
        rhs = series_mul(base.truncate(order), bn)
        for i in range(order + 1):
            report.add("d^n exp(e^x-1)", (n, i), lhs[i], rhs[i])
    return report


def check_rewrite_against_recurrence(n_max: int, cap: int | None = None) -> VerificationReport:
    """Entry-wise comparison of rewrite-engine and recurrence triangles, both kinds."""
    report = VerificationReport("rewrite", n_max, tuple(k.value for k in TriangleKind))
    for kind in TriangleKind:
        derived = derive_triangle_by_rewriting(kind, n_max, cap=cap)
        built = build_triangle(kind, n_max, cap=cap)
        for n in range(n_max + 1):
            for k in range(n + 1):
                report.add(kind.value, (n, k), built[n, k], derived[n, k])
    return report
