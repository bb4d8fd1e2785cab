"""Shared brute-force oracles, kept independent of the package internals.

Each oracle builds a plain dict by running the defining recurrence
forward from the seeds and its inversion backward, with no shared code
path into tribokit.
"""
from __future__ import annotations


def _table(seeds, forward, backward, lo: int, hi: int) -> dict[int, int]:
    values = {0: seeds[0], 1: seeds[1], 2: seeds[2]}
    for n in range(3, hi + 1):
        values[n] = forward(values[n - 1], values[n - 2], values[n - 3])
    for n in range(-1, lo - 1, -1):
        values[n] = backward(values[n + 3], values[n + 2], values[n + 1])
    return {k: v for k, v in values.items() if lo <= k <= hi}


def oracle_t(lo: int, hi: int) -> dict[int, int]:
    return _table(
        (0, 1, 1),
        lambda a, b, c: a + b + c,
        lambda up3, up2, up1: up3 - up2 - up1,
        lo, hi,
    )


def oracle_s(lo: int, hi: int) -> dict[int, int]:
    return _table(
        (3, 1, 3),
        lambda a, b, c: a + b + c,
        lambda up3, up2, up1: up3 - up2 - up1,
        lo, hi,
    )


def oracle_c(lo: int, hi: int) -> dict[int, int]:
    return _table(
        (3, -1, -1),
        lambda a, b, c: -a - b + c,
        lambda up3, up2, up1: up3 + up2 + up1,
        lo, hi,
    )
