"""Weak compositions and exact multinomial helpers.

Everything here is plain integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Iterator, Sequence


def weak_compositions(
    total: int,
    parts: int,
    support_mask: Sequence[bool] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every weak composition of `total` into `parts` parts, once each.

    Positions where `support_mask` is False are forced to zero.  Compositions
    come out in colexicographic order (last coordinate varies slowest).
    """
    if total < 0 or parts < 0:
        raise ValueError("total and parts must be nonnegative")
    if support_mask is not None and len(support_mask) != parts:
        raise ValueError("support_mask length must equal parts")

    def gen(t: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            if t == 0:
                yield ()
            return
        allowed = True if support_mask is None else support_mask[k - 1]
        last_range = range(t + 1) if allowed else range(1)
        for last in last_range:
            for rest in gen(t - last, k - 1):
                yield rest + (last,)

    return gen(total, parts)


def multinomial(total: int, parts: Sequence[int]) -> int:
    """multinomial(n; i_1,...,i_k) with sum(parts) == total."""
    if sum(parts) != total:
        raise ValueError("parts must sum to total")
    out = factorial(total)
    for p in parts:
        out //= factorial(p)
    return out


def binomial(x: int, k: int) -> int:
    """Generalized binomial coefficient binom(x, k) for any integer x, k >= 0.

    Falling-factorial definition, so negative tops are fine:
    binom(-1, 2) == 1.
    """
    if k < 0:
        return 0
    if x >= 0:
        return comb(x, k)
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


def compositions_weight(value: int, slots: int) -> int:
    """Number of ways to write `value` as an ordered sum of `slots` >= 0 parts.

    Zero slots admit only value 0.
    """
    if value < 0:
        return 0
    if slots == 0:
        return 1 if value == 0 else 0
    return comb(value + slots - 1, slots - 1)
