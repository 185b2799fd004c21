"""Brute-force set-partition enumeration, used as a counting oracle."""

from __future__ import annotations

from typing import Iterator


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All a_0..a_{n-1} with a_0 = 0 and a_i <= 1 + max(a_0..a_{i-1}).

    Each string labels element i with block a_i, giving a bijection with
    the set partitions of an n-element set.
    """
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int], top: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            prefix.append(b)
            yield from extend(prefix, max(top, b))
            prefix.pop()

    yield from extend([0], 0)


def count_set_partitions(n: int, blocks: int | None = None) -> int:
    """Number of partitions of {1..n}, optionally with exactly ``blocks`` blocks."""
    if n < 0:
        raise ValueError("n must be >= 0")
    count = 0
    for rgs in restricted_growth_strings(n):
        used = (max(rgs) + 1) if rgs else 0
        if blocks is None or used == blocks:
            count += 1
    return count
