"""Singularity classes C(n,a) and D(n,a) with their correction terms.

A D(n,a) point is the quotient of a C(n,a) point by the involution exchanging the two
curve factors. Its resolution graph is the first half of the C(n,a) chain attached to a
central curve carrying two extra (-2)-leaves.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from mixedsurf.core.errors import DTypeInadmissible, OutOfRange

from .hj import HJFraction, dual_residue, hj_evaluate, hj_expand


class Flavor(str, Enum):
    C = "C"
    D = "D"


@dataclass(frozen=True, order=True)
class SingularityClass:
    """One analytic type of quotient singularity with its exact invariants."""

    sort_key: tuple[str, int, int] = field(init=False, repr=False)
    flavor: Flavor
    n: int
    a: int
    a_dual: int
    coefficients: tuple[int, ...]
    k: Fraction
    e: Fraction
    B: Fraction
    index: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "sort_key", (self.flavor.value, self.n, self.a))

    @property
    def key(self) -> tuple[str, int, int]:
        return self.sort_key

    @property
    def length(self) -> int:
        return len(self.coefficients)

    @property
    def m(self) -> Optional[int]:
        """Half-length of the palindromic expansion (D only)."""
        return self.length // 2 if self.flavor is Flavor.D else None

    @property
    def center(self) -> Optional[int]:
        """Middle coefficient 2b of the expansion (D only)."""
        return self.coefficients[self.length // 2] if self.flavor is Flavor.D else None

    @property
    def is_smooth(self) -> bool:
        return self.n == 1

    def __str__(self) -> str:
        return f"{self.flavor.value}({self.n},{self.a})"


def _cyclic_terms(n: int, a: int, coefficients: tuple[int, ...]) -> tuple[Fraction, Fraction, Fraction]:
    a_dual = dual_residue(n, a)
    k = -2 + Fraction(2 + a + a_dual, n) + sum(b - 2 for b in coefficients)
    e = len(coefficients) + 1 - Fraction(1, n)
    return k, e, 2 * e + k


def d_admissibility_failures(n: int, a: int) -> list[str]:
    """Which of the D-type conditions fail for (n, a); empty when admissible."""
    failures = []
    if (a * a) % n != 1 % n:
        failures.append("a^2 != 1 mod n")
    if n % 2:
        failures.append("n odd")
    coefficients = hj_expand(n, a).coefficients
    if len(coefficients) % 2 == 0:
        failures.append("expansion length even")
    elif coefficients[len(coefficients) // 2] % 2:
        failures.append(f"middle coefficient {coefficients[len(coefficients) // 2]} odd")
    return failures


def make_class(flavor: Flavor | str, n: int, a: int) -> SingularityClass:
    """Build a class with all derived fields.

    C classes are stored with the canonical residue min(a, a'); D classes need a = a'.
    """
    flavor = Flavor(flavor)
    expansion: HJFraction = hj_expand(n, a)
    a_dual = dual_residue(n, a)
    if flavor is Flavor.C:
        if a_dual < a:
            a, a_dual = a_dual, a
            expansion = hj_expand(n, a)
        k, e, B = _cyclic_terms(n, a, expansion.coefficients)
    else:
        failures = d_admissibility_failures(n, a)
        if failures:
            raise DTypeInadmissible(n, a, failures)
        kc, ec, Bc = _cyclic_terms(n, a, expansion.coefficients)
        k, e, B = kc / 2, ec / 2 + 3, Bc / 2 + 6
    index = n // math.gcd(n, a + 1)
    return SingularityClass(
        flavor=flavor,
        n=n,
        a=a,
        a_dual=a_dual,
        coefficients=expansion.coefficients,
        k=k,
        e=e,
        B=B,
        index=index,
    )


_CLASS = re.compile(r"^\s*([CD])\s*(?:\(|_?\{|_)?\s*(\d+)\s*,\s*(\d+)\s*[)}]?\s*$")


def parse_class(text: str) -> SingularityClass:
    """Inverse of the canonical rendering, e.g. ``"C(8,3)"`` or ``"D(4,3)"``."""
    match = _CLASS.match(text)
    if not match:
        raise OutOfRange(f"not a singularity class: {text!r}")
    return make_class(match.group(1), int(match.group(2)), int(match.group(3)))


# Resolution graphs


@dataclass(frozen=True)
class ResolutionGraph:
    """Self-intersections of the exceptional curves and their adjacencies."""

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    shape: str

    def degree(self, node: int) -> int:
        return sum(node in edge for edge in self.edges)


def resolution_graph(cls: SingularityClass) -> ResolutionGraph:
    if cls.flavor is Flavor.C:
        nodes = tuple(-b for b in cls.coefficients)
        edges = tuple((i, i + 1) for i in range(len(nodes) - 1))
        return ResolutionGraph(nodes, edges, "chain")
    m = cls.m or 0
    chain = [-b for b in cls.coefficients[:m]]
    center = -(cls.coefficients[m] // 2 + 1)
    nodes = tuple(chain + [center, -2, -2])
    edges = [(i, i + 1) for i in range(m - 1)]
    if m:
        edges.append((m - 1, m))
    edges += [(m, m + 1), (m, m + 2)]
    return ResolutionGraph(nodes, tuple(edges), "star")


# Quotient group descriptor of a D point


class DCase(str, Enum):
    CYCLIC = "xi_zero"
    XI_ODD = "xi_odd"
    XI_EVEN = "xi_even"


@dataclass(frozen=True)
class DDescriptor:
    """Parameters naming the local group of a D(n,a) point.

    With n/a = [b1..bm, 2b, bm..b1] and p/q = [b1..bm] (1/0 for m = 0), xi = b p - q.
    """

    n: int
    a: int
    case: DCase
    p: int
    q: int
    b: int
    xi: int
    rdp: Optional[str] = None
    cyclic_equivalent: Optional[tuple[int, int]] = None


def d_group_descriptor(n: int, a: int) -> DDescriptor:
    cls = make_class(Flavor.D, n, a)
    m = cls.m or 0
    b = cls.coefficients[m] // 2
    if m:
        p, q = hj_evaluate(cls.coefficients[:m])
    else:
        p, q = 1, 0
    xi = b * p - q
    if xi == 0:
        case = DCase.CYCLIC
    else:
        case = DCase.XI_ODD if xi % 2 else DCase.XI_EVEN
    rdp = None
    if a == n - 1:
        rdp = "A3" if n == 2 else f"D{n // 2 + 2}"
    cyclic_equivalent = (2 * n, n + 1) if a == 1 else None
    return DDescriptor(n, a, case, p, q, b, xi, rdp, cyclic_equivalent)
