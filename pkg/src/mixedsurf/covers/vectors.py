"""Generating vectors of a finite group for a given signature."""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from mixedsurf.core.errors import NonIntegralGenus
from mixedsurf.groups import FiniteGroup, generated_subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GeneratingVector:
    """(d1, e1, ..., dq, eq; h1, ..., hr) with prod [di, ei] * h1 ... hr = 1.

    Vectors compare lexicographically on their entries, genus part first.
    """

    q: int
    genus_part: tuple[int, ...]
    tail: tuple[int, ...]
    group: FiniteGroup = field(compare=False, hash=False, repr=False)

    @property
    def entries(self) -> tuple[int, ...]:
        return self.genus_part + self.tail

    @property
    def orders(self) -> tuple[int, ...]:
        """Orders of the tail entries, in vector order."""
        return tuple(self.group.element_orders[h] for h in self.tail)

    @property
    def signature_orders(self) -> tuple[int, ...]:
        return tuple(sorted(self.orders))

    def pairs(self) -> list[tuple[int, int]]:
        return [(self.genus_part[2 * j], self.genus_part[2 * j + 1]) for j in range(self.q)]

    def relation_holds(self) -> bool:
        return relation_product(self.group, self.genus_part, self.tail) == 0

    def generates(self) -> bool:
        return generated_subgroup(self.group, self.entries).order == self.group.order

    def is_valid(self) -> bool:
        return self.relation_holds() and self.generates()

    def mapped(self, images: Sequence[int]) -> "GeneratingVector":
        """Apply an automorphism of the group, given by its image list."""
        return GeneratingVector(
            self.q,
            tuple(images[x] for x in self.genus_part),
            tuple(images[x] for x in self.tail),
            self.group,
        )

    def __str__(self) -> str:
        genus = ",".join(str(x) for x in self.genus_part)
        tail = ",".join(str(x) for x in self.tail)
        return f"({genus}; {tail})"


def relation_product(group: FiniteGroup, genus_part: Sequence[int], tail: Sequence[int]) -> int:
    """prod_j [d_j, e_j] * h_1 ... h_r."""
    result = 0
    for j in range(0, len(genus_part), 2):
        result = group.mul[result][group.commutator(genus_part[j], genus_part[j + 1])]
    for h in tail:
        result = group.mul[result][h]
    return result


def genus_of_cover(order: int, q: int, orders: Sequence[int]) -> int:
    """Genus g of a G-cover of a genus-q curve branched with the given orders."""
    two_g_minus_two = order * (2 * q - 2 + sum((1 - Fraction(1, m) for m in orders), Fraction(0)))
    if two_g_minus_two.denominator != 1 or two_g_minus_two.numerator % 2:
        raise NonIntegralGenus(
            f"2g - 2 = {two_g_minus_two} for |G| = {order}, signature ({q}; {list(orders)})"
        )
    return int(two_g_minus_two) // 2 + 1


def _free_slots(group: FiniteGroup, q: int, orders: Sequence[int]) -> list[list[int]]:
    """Candidate values for every slot except the last tail entry."""
    slots: list[list[int]] = [list(range(group.order)) for _ in range(2 * q)]
    slots += [group.elements_of_order(m) for m in orders[:-1]]
    return slots


def _seeded(group: FiniteGroup, slots: list[list[int]], q: int, r: int) -> list[list[int]]:
    # the first tail slot, or the first genus slot when h1 is forced by the relation
    seed = 2 * q if r >= 2 else 0
    if slots and seed < len(slots):
        slots = list(slots)
        slots[seed] = group.class_representatives(slots[seed])
    return slots


def _search(group: FiniteGroup, q: int, orders: Sequence[int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    r = len(orders)
    slots = _seeded(group, _free_slots(group, q, orders), q, r)
    order_of = group.element_orders
    for choice in itertools.product(*slots):
        genus_part = choice[: 2 * q]
        head = choice[2 * q:]
        partial = relation_product(group, genus_part, head)
        if r == 0:
            if partial != 0:
                continue
            yield genus_part, ()
            continue
        last = group.inverse[partial]
        if order_of[last] != orders[-1]:
            continue
        yield genus_part, head + (last,)


def enumerate_generating_vectors(
    group: FiniteGroup, q: int, orders: Sequence[int]
) -> list[GeneratingVector]:
    """Every generating vector of ``group`` of signature (q; orders), sorted.

    Tail entry i has order ``orders[i]``. Returns an empty list when the cover would have
    genus below 2.
    """
    orders = tuple(orders)
    try:
        genus = genus_of_cover(group.order, q, orders)
    except NonIntegralGenus:
        return []
    if genus < 2:
        return []
    if q == 0 and len(orders) < 2:
        return []
    found: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    conjugators = [
        tuple(group.conjugate(x, t) for x in range(group.order)) for t in range(group.order)
    ]
    for genus_part, tail in _search(group, q, orders):
        if generated_subgroup(group, genus_part + tail).order != group.order:
            continue
        for images in conjugators:
            found.add((tuple(images[x] for x in genus_part), tuple(images[x] for x in tail)))
    vectors = sorted(GeneratingVector(q, gp, tl, group) for gp, tl in found)
    logger.debug(
        "%s, signature (%d; %s): %d generating vectors",
        group.label or group.order, q, ",".join(map(str, orders)) or "-", len(vectors),
    )
    return vectors


def vector_from_entries(
    group: FiniteGroup, q: int, entries: Iterable[int]
) -> GeneratingVector:
    entries = tuple(entries)
    return GeneratingVector(q, entries[: 2 * q], entries[2 * q:], group)
