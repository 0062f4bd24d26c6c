"""Baskets with a prescribed value of B.

For a C point B = sum(b_i) + (a + a')/n, so every coefficient string whose sum is below
B0 is a candidate; for a D point B >= 6 + sum(b_i)/2. Baskets are then the multisets of
candidates whose B values add up to B0 exactly.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from mixedsurf.singularities import Basket, Flavor, SingularityClass, hj_evaluate, make_class

logger = logging.getLogger(__name__)


def target_B(pg: int, q: int, k2: int) -> Fraction:
    """B(basket) forced by the invariants: 24 chi - 3 K^2."""
    return Fraction(24 * (1 - q + pg) - 3 * k2)


def _strings(total: int) -> Iterator[tuple[int, ...]]:
    """All non-empty sequences of integers >= 2 with sum at most ``total``."""
    stack: list[tuple[int, ...]] = [(b,) for b in range(2, total + 1)]
    while stack:
        s = stack.pop()
        yield s
        room = total - sum(s)
        stack.extend(s + (b,) for b in range(2, room + 1))


@lru_cache(maxsize=32)
def candidate_classes(bound: Fraction) -> tuple[SingularityClass, ...]:
    """Every C or D class with B <= bound, ascending by (B, key)."""
    found: dict[tuple[str, int, int], SingularityClass] = {}
    for s in _strings(int(bound)):
        n, a = hj_evaluate(s)
        c = make_class(Flavor.C, n, a)
        if c.B <= bound:
            found.setdefault(c.key, c)
    # palindromic odd-length strings with an even middle: half + [2b] + reversed(half)
    half_budget = int(2 * (bound - 6))
    halves: list[tuple[int, ...]] = [()]
    if half_budget >= 4:
        halves += [h for h in _strings(half_budget // 2) if 2 * sum(h) + 2 <= half_budget]
    for half in halves:
        for middle in range(2, half_budget - 2 * sum(half) + 1, 2):
            n, a = hj_evaluate(half + (middle,) + half[::-1])
            c = make_class(Flavor.D, n, a)
            if c.B <= bound:
                found.setdefault(c.key, c)
    classes = sorted(found.values(), key=lambda c: (c.B, c.key))
    logger.debug("%d singularity classes with B <= %s", len(classes), bound)
    return tuple(classes)


def _admissible(basket: Basket, pg: int) -> bool:
    d = basket.d
    return d % 2 == 0 and d // 2 <= pg + 1 and basket.is_integral()


def enumerate_baskets(B0: Fraction | int, pg: int) -> list[Basket]:
    """All baskets with B = B0 that pass integrality and the D-count bound."""
    B0 = Fraction(B0)
    if B0 < 0:
        return []
    if B0 == 0:
        return [Basket()]
    classes = candidate_classes(B0)
    by_value: dict[Fraction, list[int]] = {}
    for i, c in enumerate(classes):
        by_value.setdefault(c.B, []).append(i)
    baskets: list[Basket] = []

    def close(start: int, remaining: Fraction, chosen: list[SingularityClass]) -> None:
        for i in by_value.get(remaining, []):
            if i >= start:
                basket = Basket.from_classes(chosen + [classes[i]])
                if _admissible(basket, pg):
                    baskets.append(basket)

    def extend(start: int, remaining: Fraction, chosen: list[SingularityClass]) -> None:
        close(start, remaining, chosen)
        for i in range(start, len(classes)):
            c = classes[i]
            if c.B + c.B > remaining:
                break
            chosen.append(c)
            extend(i, remaining - c.B, chosen)
            chosen.pop()

    extend(0, B0, [])
    baskets.sort(key=lambda b: (len(b), b.text))
    logger.info("B0 = %s, pg = %d: %d baskets", B0, pg, len(baskets))
    return baskets
