"""Baskets: multisets of singularity classes with aggregate invariants."""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from mixedsurf.core.errors import OutOfRange

from .classes import Flavor, SingularityClass, parse_class, resolution_graph

EMPTY_BASKET = "-"


@dataclass(frozen=True)
class Basket:
    """Classes with multiplicities, sorted by (flavor, n, a)."""

    items: tuple[tuple[SingularityClass, int], ...] = ()

    @classmethod
    def from_classes(cls, classes: Iterable[SingularityClass]) -> "Basket":
        return cls.from_counts(Counter(classes))

    @classmethod
    def from_counts(cls, counts: Mapping[SingularityClass, int]) -> "Basket":
        items = tuple(sorted(((c, m) for c, m in counts.items() if m > 0), key=lambda cm: cm[0].key))
        return cls(items)

    def __iter__(self) -> Iterator[SingularityClass]:
        for c, mult in self.items:
            for _ in range(mult):
                yield c

    def __len__(self) -> int:
        return sum(m for _, m in self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def counts(self) -> dict[SingularityClass, int]:
        return dict(self.items)

    def add(self, other: "Basket") -> "Basket":
        total = Counter(self.counts())
        total.update(other.counts())
        return Basket.from_counts(total)

    @property
    def k(self) -> Fraction:
        return sum((c.k * m for c, m in self.items), Fraction(0))

    @property
    def e(self) -> Fraction:
        return sum((c.e * m for c, m in self.items), Fraction(0))

    @property
    def B(self) -> Fraction:
        return sum((c.B * m for c, m in self.items), Fraction(0))

    @property
    def index(self) -> int:
        return math.lcm(1, *(c.index for c, _ in self.items))

    @property
    def d(self) -> int:
        """Number of D points."""
        return sum(m for c, m in self.items if c.flavor is Flavor.D)

    @property
    def c_count(self) -> int:
        return sum(m for c, m in self.items if c.flavor is Flavor.C)

    @property
    def orders(self) -> set[int]:
        """The local orders n occurring in the basket."""
        return {c.n for c, _ in self.items}

    def integrality_sum(self) -> Fraction:
        """Sum over C points of (a + a')/n plus sum over D points of a/n."""
        total = Fraction(0)
        for c, m in self.items:
            if c.flavor is Flavor.C:
                total += m * Fraction(c.a + c.a_dual, c.n)
            else:
                total += m * Fraction(c.a, c.n)
        return total

    def is_integral(self) -> bool:
        return self.integrality_sum().denominator == 1

    def self_intersections(self) -> list[int]:
        """Self-intersection of every exceptional curve of the minimal resolution."""
        out: list[int] = []
        for c, m in self.items:
            out.extend(resolution_graph(c).nodes * m)
        return out

    @cached_property
    def text(self) -> str:
        if not self.items:
            return EMPTY_BASKET
        return ";".join(str(c) if m == 1 else f"{m}x{c}" for c, m in self.items)

    def __str__(self) -> str:
        return self.text


_ITEM = re.compile(r"^\s*(?:(\d+)\s*x\s*)?(.+?)\s*$")


def parse_basket(text: str) -> Basket:
    """Inverse of the canonical rendering, e.g. ``"2xC(2,1);2xD(2,1)"``."""
    text = text.strip()
    if text in ("", EMPTY_BASKET):
        return Basket()
    counts: Counter[SingularityClass] = Counter()
    for part in text.split(";"):
        match = _ITEM.match(part)
        if not match:
            raise OutOfRange(f"bad basket item {part!r}")
        counts[parse_class(match.group(2))] += int(match.group(1) or 1)
    return Basket.from_counts(counts)
