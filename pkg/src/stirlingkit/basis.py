"""Power basis <-> falling-factorial basis conversion.

Falling factorials expand into powers through the signed first-kind
triangle, and powers expand into falling factorials through the second-kind
triangle; the two triangles are mutually inverse matrices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import CoefficientParseError
from .numerics import as_rational, format_rational, parse_rational
from .report import VerificationReport
from .triangle import TriangleKind, build_triangle

__all__ = [
    "Basis",
    "PolyCoeffs",
    "falling_to_power",
    "power_to_falling",
    "eval_falling_factorial",
    "eval_poly",
    "parse_coeffs",
    "format_coeffs",
    "check_inverse_matrix",
]


class Basis(enum.Enum):
    POWER = "power"
    FALLING_FACTORIAL = "falling"


@dataclass(frozen=True)
class PolyCoeffs:
    basis: Basis
    coeffs: tuple[Fraction, ...]

    def __init__(self, basis: Basis, coeffs: Iterable):
        cs = tuple(as_rational(c) for c in coeffs)
        if not cs:
            cs = (Fraction(0),)
        object.__setattr__(self, "basis", Basis(basis))
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, alpha) -> Fraction:
        return eval_poly(self, alpha)


def _change_basis(p: PolyCoeffs, kind: TriangleKind, target: Basis) -> PolyCoeffs:
    if p.is_zero():
        return PolyCoeffs(target, [0])
    n = p.degree_bound
    tri = build_triangle(kind, n)
    out = [Fraction(0)] * (n + 1)
    for i, c in enumerate(p.coeffs):
        if c:
            for k, v in enumerate(tri.row(i)):
                if v:
                    out[k] += c * v
    return PolyCoeffs(target, out)


def falling_to_power(p: PolyCoeffs) -> PolyCoeffs:
    if p.basis is not Basis.FALLING_FACTORIAL:
        raise ValueError("falling_to_power expects falling-factorial coefficients")
    return _change_basis(p, TriangleKind.FIRST_KIND_SIGNED, Basis.POWER)


def power_to_falling(p: PolyCoeffs) -> PolyCoeffs:
    if p.basis is not Basis.POWER:
        raise ValueError("power_to_falling expects power-basis coefficients")
    return _change_basis(p, TriangleKind.SECOND_KIND, Basis.FALLING_FACTORIAL)


def eval_falling_factorial(alpha, n: int) -> Fraction:
    """alpha (alpha - 1) ... (alpha - n + 1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    alpha = as_rational(alpha)
    acc = Fraction(1)
    for j in range(n):
        acc *= alpha - j
    return acc


def eval_poly(p: PolyCoeffs, alpha) -> Fraction:
    alpha = as_rational(alpha)
    acc = Fraction(0)
    if p.basis is Basis.POWER:
        for c in reversed(p.coeffs):
            acc = acc * alpha + c
    else:
        # nested form: c0 + a(c1 + (a-1)(c2 + (a-2)(...)))
        for j in range(len(p.coeffs) - 1, -1, -1):
            acc = acc * (alpha - j) + p.coeffs[j]
    return acc


def parse_coeffs(text: str) -> list[Fraction]:
    """Parse a comma-separated list of ``p`` / ``p/q`` tokens."""
    tokens = text.split(",")
    out = []
    for pos, tok in enumerate(tokens):
        try:
            out.append(parse_rational(tok))
        except ValueError as exc:
            raise CoefficientParseError(tok, pos, str(exc)) from None
    return out


def format_coeffs(p: PolyCoeffs) -> list[str]:
    return [format_rational(c) for c in p.coeffs]


def check_inverse_matrix(n_max: int) -> VerificationReport:
    """Check sum_j s(n,j) S(j,m) = delta(n,m) and the reverse product for n, m <= n_max."""
    s1 = build_triangle(TriangleKind.FIRST_KIND_SIGNED, n_max)
    s2 = build_triangle(TriangleKind.SECOND_KIND, n_max)
    report = VerificationReport("inverse", n_max, ("s1*S2", "S2*s1"))
    for n in range(n_max + 1):
        for m in range(n_max + 1):
            delta = int(n == m)
            fwd = sum(s1[n, j] * s2[j, m] for j in range(m, n + 1))
            bwd = sum(s2[n, j] * s1[j, m] for j in range(m, n + 1))
            report.add("s1*S2", (n, m), delta, fwd)
            report.add("S2*s1", (n, m), delta, bwd)
    return report
