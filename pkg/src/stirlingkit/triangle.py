"""Stirling triangles of both kinds, Bell numbers and Bell polynomials.

Rows are generated by the two-term recurrences

    s(n+1, k) = s(n, k-1) - n * s(n, k)
    S(n+1, k) = S(n, k-1) + k * S(n, k)

starting from the single row ``[1]``. Column 0 is zero for every row
except row 0, so both triangles are square lower-triangular matrices.
"""

from __future__ import annotations

import enum
import json
import os
import threading
from dataclasses import dataclass

from .errors import RowCapExceeded

__all__ = [
    "TriangleKind",
    "Triangle",
    "BellPolynomial",
    "DEFAULT_ROW_CAP",
    "ROW_CAP_ENV",
    "row_cap",
    "build_triangle",
    "stirling1_signed",
    "stirling1_unsigned",
    "stirling2",
    "bell_number",
    "bell_polynomial",
]

DEFAULT_ROW_CAP = 10000
ROW_CAP_ENV = "STIRLINGKIT_ROW_CAP"


class TriangleKind(enum.Enum):
    FIRST_KIND_SIGNED = "s1"
    SECOND_KIND = "s2"


@dataclass(frozen=True)
class Triangle:
    kind: TriangleKind
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < 0 or k < 0:
            raise IndexError("triangle indices must be non-negative")
        if k > n:
            return 0
        if n > self.n_max:
            raise IndexError(f"row {n} beyond n_max={self.n_max}")
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def truncated(self, n_max: int) -> "Triangle":
        if n_max > self.n_max:
            raise IndexError(f"row {n_max} beyond n_max={self.n_max}")
        return Triangle(self.kind, self.rows[: n_max + 1])

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in r) for r in self.rows)

    def to_json(self) -> str:
        return json.dumps([[str(v) for v in r] for r in self.rows])

    @classmethod
    def from_json(cls, kind: TriangleKind, text: str) -> "Triangle":
        data = json.loads(text)
        return cls(kind, tuple(tuple(int(v) for v in r) for r in data))


def row_cap() -> int:
    """Row cap from the environment, falling back to DEFAULT_ROW_CAP."""
    raw = os.environ.get(ROW_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_ROW_CAP
    cap = int(raw)
    if cap < 0:
        raise ValueError(f"{ROW_CAP_ENV} must be non-negative")
    return cap


def _next_row(kind: TriangleKind, prev: tuple[int, ...]) -> tuple[int, ...]:
    n = len(prev) - 1
    row = [0] * (n + 2)
    if kind is TriangleKind.FIRST_KIND_SIGNED:
        for k in range(1, n + 2):
            up = prev[k] if k <= n else 0
            row[k] = prev[k - 1] - n * up
    else:
        for k in range(1, n + 2):
            up = prev[k] if k <= n else 0
            row[k] = prev[k - 1] + k * up
    return tuple(row)


# Largest triangle built so far, per kind. Shorter requests are slices of it.
_cache: dict[TriangleKind, tuple[tuple[int, ...], ...]] = {}
_cache_lock = threading.Lock()


def build_triangle(kind: TriangleKind, n_max: int, cap: int | None = None) -> Triangle:
    """Rows ``0..n_max`` of the requested triangle, memoized per kind."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    cap = row_cap() if cap is None else cap
    if n_max > cap:
        raise RowCapExceeded(n_max, cap)
    kind = TriangleKind(kind)
    rows = _cache.get(kind)
    if rows is None or len(rows) <= n_max:
        with _cache_lock:
            rows = _cache.get(kind, ((1,),))
            if len(rows) <= n_max:
                grown = list(rows)
                while len(grown) <= n_max:
                    grown.append(_next_row(kind, grown[-1]))
                rows = tuple(grown)
                _cache[kind] = rows
    return Triangle(kind, rows[: n_max + 1])


def _entry(kind: TriangleKind, n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    if k > n:
        return 0
    return build_triangle(kind, n)[n, k]


def stirling1_signed(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k); 0 outside the triangle."""
    return _entry(TriangleKind.FIRST_KIND_SIGNED, n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    return abs(stirling1_signed(n, k))


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k); 0 outside the triangle."""
    return _entry(TriangleKind.SECOND_KIND, n, k)


def bell_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(build_triangle(TriangleKind.SECOND_KIND, n).row(n))


@dataclass(frozen=True)
class BellPolynomial:
    """B_n(x) = sum_k S(n, k) x^k, with the k = 0 slot kept for n = 0."""

    n: int
    coeffs: tuple[int, ...]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def bell_polynomial(n: int) -> BellPolynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    return BellPolynomial(n, build_triangle(TriangleKind.SECOND_KIND, n).row(n))
