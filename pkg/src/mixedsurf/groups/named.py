"""Named groups: cyclic, dihedral, dicyclic, metacyclic, alternating, symmetric, products.

Notation follows the tables this package reproduces: ``Zn`` cyclic, ``Dn`` dihedral of
order 2n, ``BDn`` dicyclic of order 4n, ``D_{p,q,r} = <x, y | x^p = y^q = 1, x y x^-1 = y^r>``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from mixedsurf.core.errors import InconsistentPresentation

from .core import FiniteGroup, build_group, direct_product, from_table


class GroupKind(str, Enum):
    """Kinds of named group."""
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    DICYCLIC = "dicyclic"
    METACYCLIC = "metacyclic"
    ALTERNATING = "alternating"
    SYMMETRIC = "symmetric"
    DIRECT_PRODUCT = "direct_product"
    SEMIDIRECT_CYCLIC = "semidirect_cyclic"


@dataclass(frozen=True)
class NamedGroupDescriptor:
    """A group named by its presentation family and parameters."""

    kind: GroupKind
    params: tuple[int, ...] = ()
    factors: tuple["NamedGroupDescriptor", ...] = ()

    @classmethod
    def cyclic(cls, n: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.CYCLIC, (n,))

    @classmethod
    def dihedral(cls, n: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.DIHEDRAL, (n,))

    @classmethod
    def dicyclic(cls, n: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.DICYCLIC, (n,))

    @classmethod
    def metacyclic(cls, p: int, q: int, r: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.METACYCLIC, (p, q, r))

    @classmethod
    def semidirect_cyclic(cls, p: int, q: int, r: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.SEMIDIRECT_CYCLIC, (p, q, r))

    @classmethod
    def alternating(cls, n: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.ALTERNATING, (n,))

    @classmethod
    def symmetric(cls, n: int) -> "NamedGroupDescriptor":
        return cls(GroupKind.SYMMETRIC, (n,))

    @classmethod
    def product(cls, *factors: "NamedGroupDescriptor") -> "NamedGroupDescriptor":
        return cls(GroupKind.DIRECT_PRODUCT, (), tuple(factors))

    @property
    def order(self) -> int:
        k, p = self.kind, self.params
        if k is GroupKind.CYCLIC:
            return p[0]
        if k is GroupKind.DIHEDRAL:
            return 2 * p[0]
        if k is GroupKind.DICYCLIC:
            return 4 * p[0]
        if k in (GroupKind.METACYCLIC, GroupKind.SEMIDIRECT_CYCLIC):
            return p[0] * p[1]
        if k is GroupKind.ALTERNATING:
            return max(1, math.factorial(p[0]) // 2)
        if k is GroupKind.SYMMETRIC:
            return math.factorial(p[0])
        return reduce(lambda acc, f: acc * f.order, self.factors, 1)

    @property
    def name(self) -> str:
        k, p = self.kind, self.params
        if k is GroupKind.CYCLIC:
            return f"Z{p[0]}"
        if k is GroupKind.DIHEDRAL:
            return f"D{p[0]}"
        if k is GroupKind.DICYCLIC:
            return f"BD{p[0]}"
        if k is GroupKind.METACYCLIC:
            return f"D_{{{p[0]},{p[1]},{p[2]}}}"
        if k is GroupKind.SEMIDIRECT_CYCLIC:
            return f"Z{p[1]}:Z{p[0]}"
        if k is GroupKind.ALTERNATING:
            return f"A{p[0]}"
        if k is GroupKind.SYMMETRIC:
            return f"S{p[0]}"
        return "x".join(f.name for f in self.factors)

    def check(self) -> None:
        """Raise InconsistentPresentation unless the parameters define a group."""
        k, p = self.kind, self.params
        if k is GroupKind.DIRECT_PRODUCT:
            if not self.factors:
                raise InconsistentPresentation("direct product needs at least one factor")
            for f in self.factors:
                f.check()
            return
        if any(v < 0 for v in p):
            raise InconsistentPresentation(f"{self.name}: negative parameter")
        if k in (GroupKind.METACYCLIC, GroupKind.SEMIDIRECT_CYCLIC):
            x_order, y_order, r = p
            if x_order < 1 or y_order < 1:
                raise InconsistentPresentation(f"{self.name}: orders must be positive")
            if math.gcd(r, y_order) != 1:
                raise InconsistentPresentation(f"{self.name}: gcd(r, q) must be 1")
            if pow(r, x_order, y_order) != 1 % y_order:
                raise InconsistentPresentation(f"{self.name}: r^p must be 1 mod q")
        elif p[0] < 1:
            raise InconsistentPresentation(f"{self.name}: parameter must be positive")


def parse_descriptor(text: str) -> NamedGroupDescriptor:
    """Parse names such as ``Z4``, ``D4``, ``BD3``, ``D_{2,8,5}``, ``A4xZ2`` or ``Z2^3``."""
    parts = _split_product(text.strip())
    if len(parts) > 1:
        return NamedGroupDescriptor.product(*(parse_descriptor(p) for p in parts))
    token = parts[0]
    power = re.fullmatch(r"(.+)\^(\d+)", token)
    if power:
        base = parse_descriptor(power.group(1))
        return NamedGroupDescriptor.product(*([base] * int(power.group(2))))
    meta = re.fullmatch(r"D_\{?(\d+),(\d+),(\d+)\}?", token)
    if meta:
        p, q, r = (int(v) for v in meta.groups())
        return NamedGroupDescriptor.metacyclic(p, q, r)
    semi = re.fullmatch(r"Z(\d+):Z(\d+)", token)
    if semi:
        q, p = int(semi.group(1)), int(semi.group(2))
        raise InconsistentPresentation(f"{token}: give the action as D_{{{p},{q},r}}")
    simple = re.fullmatch(r"(Z|C|D|BD|Q|A|S)(\d+)", token)
    if not simple:
        raise InconsistentPresentation(f"cannot parse group name {text!r}")
    kind, n = simple.group(1), int(simple.group(2))
    if kind in ("Z", "C"):
        return NamedGroupDescriptor.cyclic(n)
    if kind == "D":
        return NamedGroupDescriptor.dihedral(n)
    if kind == "BD":
        return NamedGroupDescriptor.dicyclic(n)
    if kind == "Q":
        if n % 4:
            raise InconsistentPresentation(f"Q{n}: order must be a multiple of 4")
        return NamedGroupDescriptor.dicyclic(n // 4)
    if kind == "A":
        return NamedGroupDescriptor.alternating(n)
    return NamedGroupDescriptor.symmetric(n)


def _split_product(text: str) -> list[str]:
    parts, depth, current = [], 0, ""
    for ch in text:
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += ch
    parts.append(current)
    return [p for p in parts if p]


def _metacyclic_table(p: int, q: int, r: int) -> np.ndarray:
    s = pow(r, -1, q) if q > 1 else 0
    i, j, k, l = np.meshgrid(np.arange(p), np.arange(q), np.arange(p), np.arange(q), indexing="ij")
    s_pow = np.asarray([pow(s, e, q) if q > 1 else 0 for e in range(p)], dtype=np.int64)
    x_part = (i + k) % p
    y_part = (j * s_pow[k] + l) % q
    return (x_part * q + y_part).reshape(p * q, p * q)


def _dicyclic_table(n: int) -> np.ndarray:
    m = 2 * n
    i, j, k, l = np.meshgrid(np.arange(2), np.arange(m), np.arange(2), np.arange(m), indexing="ij")
    y_part = np.where(k == 1, -j, j) + l + np.where(i + k == 2, n, 0)
    return (((i + k) % 2) * m + y_part % m).reshape(2 * m, 2 * m)


def _cycle(points: list[int], degree: int) -> list[int]:
    perm = list(range(1, degree + 1))
    for a, b in zip(points, points[1:] + points[:1]):
        perm[a - 1] = b
    return perm


def construct_named(descriptor: NamedGroupDescriptor) -> FiniteGroup:
    """Realize a named group.

    The returned generators follow the presentation: (x, y) for metacyclic, dihedral and
    dicyclic groups, the factor generators in order for products.
    """
    descriptor.check()
    k, p = descriptor.kind, descriptor.params
    label = descriptor.name
    if k is GroupKind.CYCLIC:
        n = p[0]
        ar = np.arange(n)
        return from_table((ar[:, None] + ar[None, :]) % n, [1] if n > 1 else [], label)
    if k is GroupKind.DIHEDRAL:
        n = p[0]
        return _from_xy(_metacyclic_table(2, n, n - 1 if n > 1 else 0), 2, n, label)
    if k in (GroupKind.METACYCLIC, GroupKind.SEMIDIRECT_CYCLIC):
        x_order, y_order, r = p
        return _from_xy(_metacyclic_table(x_order, y_order, r % y_order), x_order, y_order, label)
    if k is GroupKind.DICYCLIC:
        n = p[0]
        return _from_xy(_dicyclic_table(n), 2, 2 * n, label)
    if k is GroupKind.SYMMETRIC:
        n = p[0]
        if n < 2:
            return build_group([], label)
        gens = [_cycle([1, 2], n)] + ([_cycle(list(range(1, n + 1)), n)] if n > 2 else [])
        return build_group(gens, label)
    if k is GroupKind.ALTERNATING:
        n = p[0]
        if n < 3:
            return build_group([], label)
        gens = [_cycle([1, 2, 3], n)]
        if n > 3:
            long = list(range(1, n + 1)) if n % 2 else list(range(2, n + 1))
            gens.append(_cycle(long, n))
        return build_group(gens, label)
    groups = [construct_named(f) for f in descriptor.factors]
    result = groups[0]
    for g in groups[1:]:
        result = direct_product(result, g)
    result.label = label
    return result


def _from_xy(table: np.ndarray, x_order: int, y_order: int, label: str) -> FiniteGroup:
    # element x^i y^j sits at i * y_order + j
    x = y_order if x_order > 1 else 0
    y = 1 if y_order > 1 else 0
    gens = [g for g in (x, y) if g]
    if not gens:
        return from_table(table, [], label, renumber=False)
    return from_table(table, gens, label)
