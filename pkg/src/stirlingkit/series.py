"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0 .. c_N`` and stands
for the series modulo ``x^(N+1)``. Binary operations return the smaller
operand order, differentiation drops one order, and nothing is ever padded
with zeros implicitly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable

from .errors import PrecisionError, SeriesDomainError
from .numerics import as_rational, format_rational

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_scale",
    "series_differentiate",
    "series_integrate",
    "series_reciprocal",
    "series_compose",
    "series_exp",
    "series_log1p",
    "series_pow_rational",
    "series_pow_int",
    "coefficient_times_factorial",
    "exp_series",
    "expm1_series",
    "log1p_series",
]


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        self._coeffs = cs

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([value] + [0] * order)

    @classmethod
    def variable(cls, order: int) -> "TruncatedSeries":
        """The series ``x`` itself."""
        if order < 1:
            return cls([0] * (order + 1))
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def from_egf(cls, values: Iterable) -> "TruncatedSeries":
        """Series whose n-th coefficient is ``values[n] / n!``."""
        return cls(Fraction(as_rational(v), factorial(i)) for i, v in enumerate(values))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, i):
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}])"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise PrecisionError(f"cannot raise order {self.order} to {order}")
        if order < 0:
            raise ValueError("order must be >= 0")
        return TruncatedSeries(self._coeffs[: order + 1])

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self._coeffs]}

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_add(self, other)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return TruncatedSeries((self._coeffs[0] + c,) + self._coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_sub(self, other)
        try:
            return self + (-as_rational(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        try:
            return series_scale(self, as_rational(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, series_reciprocal(other))
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        if c == 0:
            raise ZeroDivisionError("series division by zero scalar")
        return series_scale(self, 1 / c)

    def __pow__(self, k):
        if isinstance(k, int):
            return series_pow_int(self, k)
        return series_pow_rational(self, k)

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return series_compose(self, inner)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(a[i] + b[i] for i in range(n + 1))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(a[i] - b[i] for i in range(n + 1))


def series_scale(a: TruncatedSeries, c) -> TruncatedSeries:
    c = as_rational(c)
    return TruncatedSeries(c * v for v in a)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    # skip zero terms; sparse inputs (x^k, polynomials) are common here
    nz_a = [(i, v) for i, v in enumerate(ac[: n + 1]) if v]
    out = [Fraction(0)] * (n + 1)
    for i, v in nz_a:
        for j in range(n + 1 - i):
            w = bc[j]
            if w:
                out[i + j] += v * w
    return TruncatedSeries(out)


def series_differentiate(a: TruncatedSeries) -> TruncatedSeries:
    if a.order < 1:
        raise PrecisionError("cannot differentiate a series of order 0")
    return TruncatedSeries((i + 1) * a[i + 1] for i in range(a.order))


def series_integrate(a: TruncatedSeries, constant=0) -> TruncatedSeries:
    """Antiderivative with the given constant term; gains one order."""
    return TruncatedSeries([as_rational(constant)] + [a[i] / (i + 1) for i in range(len(a))])


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] == 0:
        raise SeriesDomainError("reciprocal needs a nonzero constant term")
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, a.order + 1):
        acc = sum((a[j] * out[n - j] for j in range(1, n + 1)), Fraction(0))
        out.append(-acc * inv0)
    return TruncatedSeries(out)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(x))`` by Horner's scheme; ``inner`` must vanish at 0."""
    if inner[0] != 0:
        raise SeriesDomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedSeries.constant(outer[n], n)
    for i in range(n - 1, -1, -1):
        acc = series_mul(acc, inner) + outer[i]
    return acc


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) from c_n = (1/n) sum_{j=1..n} j a_j c_{n-j}."""
    if a[0] != 0:
        raise SeriesDomainError("exp needs a zero constant term")
    c = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            if a[j]:
                acc += j * a[j] * c[n - j]
        c.append(acc / n)
    return TruncatedSeries(c)


def series_log1p(a: TruncatedSeries) -> TruncatedSeries:
    """log(1 + a), integrating a' / (1 + a)."""
    if a[0] != 0:
        raise SeriesDomainError("log1p needs a zero constant term")
    if a.order == 0:
        return TruncatedSeries([0])
    q = series_mul(series_differentiate(a), series_reciprocal(a + 1))
    return series_integrate(q)


def series_pow_int(a: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        return series_pow_int(series_reciprocal(a), -k)
    result = TruncatedSeries.constant(1, a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_pow_rational(a: TruncatedSeries, alpha) -> TruncatedSeries:
    """``a ** alpha`` as exp(alpha * log(a)); the constant term must be exactly 1."""
    alpha = as_rational(alpha)
    if a[0] != 1:
        raise SeriesDomainError("rational powers need constant term exactly 1")
    return series_exp(series_scale(series_log1p(a - 1), alpha))


def coefficient_times_factorial(a: TruncatedSeries, n: int) -> Fraction:
    """``n! * [x^n] a``, i.e. the n-th derivative at 0."""
    if n < 0 or n > a.order:
        raise IndexError(f"coefficient {n} outside series of order {a.order}")
    return factorial(n) * a[n]


def exp_series(order: int) -> TruncatedSeries:
    """exp(x) to the given order."""
    return TruncatedSeries(Fraction(1, factorial(i)) for i in range(order + 1))


def expm1_series(order: int) -> TruncatedSeries:
    """exp(x) - 1 to the given order."""
    return TruncatedSeries([0] + [Fraction(1, factorial(i)) for i in range(1, order + 1)])


def log1p_series(order: int) -> TruncatedSeries:
    """log(1 + x) = sum_{n>=1} (-1)^(n-1) x^n / n."""
    return TruncatedSeries([0] + [Fraction((-1) ** (i - 1), i) for i in range(1, order + 1)])
