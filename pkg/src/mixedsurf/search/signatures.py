"""Signatures compatible with a basket.

For a basket and target invariants, ``beta = g(C) - 1`` and ``Theta`` satisfy
``3 * beta * Theta = 12 chi + k - e``. Each positive integer beta fixes Theta, and the
branch orders m_i are then the multisets with ``sum(1 - 1/m_i) = Theta + 2 - 2q`` that pass
the arithmetic bounds on r and m_i.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from mixedsurf.singularities import Basket

logger = logging.getLogger(__name__)

# smallest positive value of -2 + sum(1 - 1/m_i), reached at (2, 3, 7)
THETA_MIN_GENUS_ZERO = Fraction(1, 42)


def theta(q: int, orders: Sequence[int]) -> Fraction:
    return 2 * q - 2 + sum((1 - Fraction(1, m) for m in orders), Fraction(0))


def signature_text(q: int, orders: Sequence[int]) -> str:
    """Canonical rendering ``"q;m1,m2,..."``, ``"q;-"`` without branch points."""
    return f"{q};" + (",".join(str(m) for m in orders) if orders else "-")


def parse_signature(text: str) -> tuple[int, tuple[int, ...]]:
    head, _, tail = text.partition(";")
    q = int(head)
    tail = tail.strip()
    if tail in ("", "-"):
        return q, ()
    return q, tuple(sorted(int(m) for m in tail.split(",")))


@dataclass(frozen=True)
class SearchBranch:
    """A (basket, signature) pair with the group orders it forces."""

    pg: int
    q: int
    k2: int
    basket: Basket
    orders: tuple[int, ...]
    theta: Fraction
    beta: int

    @property
    def chi(self) -> int:
        return 1 - self.q + self.pg

    @property
    def order_g0(self) -> int:
        return int(2 * self.beta / self.theta)

    @property
    def order_g(self) -> int:
        return 2 * self.order_g0

    @property
    def genus(self) -> int:
        return self.beta + 1

    @property
    def r(self) -> int:
        return len(self.orders)

    @property
    def signature(self) -> str:
        return signature_text(self.q, self.orders)

    def k2_check(self) -> Fraction:
        """8 beta^2 / |G| - k(basket); equals K^2 on every emitted branch."""
        return Fraction(8 * self.beta**2, self.order_g) - self.basket.k


def _numerator(basket: Basket, pg: int, q: int) -> Fraction:
    return 12 * (1 - q + pg) + basket.k - basket.e


def _beta_max(numerator: Fraction, q: int) -> int:
    if q >= 2:
        lowest = Fraction(2 * q - 2)
    elif q == 1:
        lowest = Fraction(1, 2)
    else:
        lowest = THETA_MIN_GENUS_ZERO
    return math.floor(numerator / (3 * lowest))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _multisets(
    allowed: Sequence[int], total: Fraction, max_len: int
) -> list[tuple[int, ...]]:
    """Ascending tuples from ``allowed`` with sum(1 - 1/m) == total and length <= max_len."""
    out: list[tuple[int, ...]] = []

    def walk(start: int, remaining: Fraction, chosen: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(chosen))
            return
        # each entry adds at least 1/2 and less than 1
        if remaining < Fraction(1, 2) or remaining >= max_len - len(chosen):
            return
        for i in range(start, len(allowed)):
            step = 1 - Fraction(1, allowed[i])
            if step > remaining:
                break
            chosen.append(allowed[i])
            walk(i, remaining - step, chosen)
            chosen.pop()

    walk(0, total, [])
    return out


def _passes_bounds(
    orders: tuple[int, ...], basket: Basket, q: int, beta: int, th: Fraction
) -> bool:
    r = len(orders)
    index = basket.index
    if r > 2 * th + 4 * (1 - q):
        return False
    slack = max(Fraction(1, 6), Fraction(r - 3 + 4 * q, 2))
    big_bound = (2 * index * beta * th + 1) / slack
    small_bound = (beta * th + 1) / slack
    exceptions = 0
    for m in orders:
        if m > 4 * beta + 6 or (2 * beta * index) % m or m > big_bound:
            return False
        if m > small_bound or beta % m:
            exceptions += 1
    if exceptions > basket.c_count + Fraction(basket.d, 2):
        return False
    return all(any(m % n == 0 for m in orders) for n in basket.orders)


def enumerate_signatures(basket: Basket, pg: int, q: int, k2: int) -> list[SearchBranch]:
    """Every branch (signature, beta) for the basket, in canonical order."""
    numerator = _numerator(basket, pg, q)
    if numerator <= 0:
        return []
    branches: list[SearchBranch] = []
    for beta in range(1, _beta_max(numerator, q) + 1):
        th = numerator / (3 * beta)
        if (2 * beta) % th != 0:
            continue
        total = th + 2 - 2 * q
        if total < 0:
            continue
        max_len = math.floor(2 * th + 4 * (1 - q))
        if max_len < 0:
            continue
        allowed = [m for m in _divisors(2 * beta * basket.index) if 2 <= m <= 4 * beta + 6]
        for orders in _multisets(allowed, total, max_len):
            if _passes_bounds(orders, basket, q, beta, th):
                branches.append(SearchBranch(pg, q, k2, basket, orders, th, beta))
    branches.sort(key=lambda b: (b.order_g0, b.r, b.orders))
    logger.debug("basket %s: %d branches", basket, len(branches))
    return branches
