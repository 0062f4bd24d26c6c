"""Brute-force enumeration of all groups of order at most 16.

Used only to cross-check catalogues. Every group of order n <= 16 has a normal subgroup
of prime index, so each class arises from a group N of order n/p, a bijective
endomorphism alpha of N and an element t with alpha(t) = t and alpha^p = conjugation by t.
Here alpha is found by trying every image of N's generators, and each candidate table is
checked against the full group axioms before it is kept.
"""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache

import numpy as np

from mixedsurf.core.errors import OutOfRange

from .core import FiniteGroup, is_associative
from .isomorphism import find_isomorphism

logger = logging.getLogger(__name__)

ORACLE_MAX_ORDER = 16


def _prime_factors(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))]


def _extend_map(group: FiniteGroup, images: tuple[int, ...]) -> list[int] | None:
    """Extend generator images to a bijective endomorphism, or None."""
    mul = group.mul
    gens = group.generators
    img = [-1] * group.order
    img[0] = 0
    queue = [0]
    for x in queue:
        for g, y in zip(gens, images):
            v = mul[x][g]
            w = mul[img[x]][y]
            if img[v] == -1:
                img[v] = w
                queue.append(v)
            elif img[v] != w:
                return None
    if len(set(img)) != group.order:
        return None
    for x in range(group.order):
        for y in range(group.order):
            if img[mul[x][y]] != mul[img[x]][img[y]]:
                return None
    return img


def _automorphisms_brute(group: FiniteGroup) -> list[list[int]]:
    maps = []
    for images in itertools.product(range(group.order), repeat=len(group.generators)):
        img = _extend_map(group, images)
        if img is not None:
            maps.append(img)
    return maps


def _extension_rows(group: FiniteGroup, alpha: list[int], t: int, p: int) -> list[list[int]]:
    s = group.order
    mul = group.mul
    powers = [list(range(s))]
    for _ in range(1, p):
        powers.append([alpha[x] for x in powers[-1]])
    rows = []
    for i in range(p):
        for n1 in range(s):
            row = []
            for j in range(p):
                for n2 in range(s):
                    m = mul[n1][powers[i][n2]]
                    k = i + j
                    if k >= p:
                        m = mul[m][t]
                        k -= p
                    row.append(k * s + m)
            rows.append(row)
    return rows


def _is_latin(rows: list[list[int]]) -> bool:
    n = len(rows)
    full = set(range(n))
    return all(set(r) == full for r in rows) and all(
        {rows[i][j] for i in range(n)} == full for j in range(n)
    )


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[FiniteGroup, ...]:
    if n == 1:
        return (FiniteGroup(np.zeros((1, 1), dtype=np.int32), [], "Z1"),)
    found: list[FiniteGroup] = []
    for p in _prime_factors(n):
        for base in _enumerate(n // p):
            s = base.order
            inner = {
                tuple(base.conjugate(x, u) for x in range(s)): u for u in range(s)
            }
            conj_by = {u: tuple(base.conjugate(x, u) for x in range(s)) for u in range(s)}
            for alpha in _automorphisms_brute(base):
                alpha_p = list(range(s))
                for _ in range(p):
                    alpha_p = [alpha[x] for x in alpha_p]
                if tuple(alpha_p) not in inner:
                    continue
                for t in range(s):
                    if alpha[t] != t or conj_by[t] != tuple(alpha_p):
                        continue
                    rows = _extension_rows(base, alpha, t, p)
                    if not _is_latin(rows) or not is_associative(np.asarray(rows)):
                        continue
                    gens = list(base.generators) + [s]
                    group = FiniteGroup(np.asarray(rows), gens)
                    if any(find_isomorphism(group, other) for other in found):
                        continue
                    found.append(group)
    logger.debug("enumerated %d groups of order %d", len(found), n)
    return tuple(found)


def enumerate_small_groups(n: int) -> list[FiniteGroup]:
    """One group per isomorphism class of order n, for 1 <= n <= 16."""
    if not 1 <= n <= ORACLE_MAX_ORDER:
        raise OutOfRange(f"brute-force enumeration covers orders 1..{ORACLE_MAX_ORDER}, got {n}")
    return list(_enumerate(n))
