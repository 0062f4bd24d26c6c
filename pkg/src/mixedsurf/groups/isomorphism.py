"""Isomorphism testing and automorphism enumeration by backtracking.

A small generating set of the source is mapped onto tuples of the target with matching
element order and class size; every partial assignment is extended to the subgroup it
generates, and the branch is cut as soon as that extension stops being a well-defined
injective homomorphism.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Callable, Iterator, Optional, Sequence

from .core import (
    FiniteGroup,
    GroupMap,
    center,
    derived_subgroup,
    small_generating_set,
)

logger = logging.getLogger(__name__)

Fingerprint = tuple[object, ...]


class AutomorphismCapExceeded(Exception):
    """Raised internally when automorphism enumeration passes its cap."""


def fingerprint(group: FiniteGroup) -> Fingerprint:
    """Isomorphism invariants: equal fingerprints are necessary for isomorphism."""
    cached = group.__dict__.get("_cached_fingerprint")
    if cached is not None:
        return cached
    orders = group.element_orders
    sizes = group.class_size
    fp = (
        group.order,
        tuple(sorted(Counter(orders).items())),
        tuple(sorted(Counter(len(c) for c in group.conjugacy_classes).items())),
        center(group).order,
        derived_subgroup(group).order,
        tuple(sorted(Counter(zip(orders, sizes)).items())),
        _power_map_profile(group),
    )
    group.__dict__["_cached_fingerprint"] = fp
    return fp


def _power_map_profile(group: FiniteGroup) -> tuple[tuple[tuple[int, int], int], ...]:
    """Counts of (order of x, order of x^2) pairs."""
    orders = group.element_orders
    mul = group.mul
    return tuple(sorted(Counter((orders[x], orders[mul[x][x]]) for x in range(group.order)).items()))


def _local_type(group: FiniteGroup, x: int) -> tuple[int, int]:
    return group.element_orders[x], group.class_size[x]


def _search(
    source: FiniteGroup,
    target: FiniteGroup,
    gens: Sequence[int],
    candidates: Sequence[Sequence[int]],
    accept: Callable[[list[int]], bool],
) -> bool:
    """Depth-first search over generator images; stops when ``accept`` returns True."""
    n = source.order
    smul = source.mul
    tmul = target.mul
    k = len(gens)

    def extend(level: int, img: list[int], used: list[bool], members: list[int]) -> bool:
        if level == k:
            return accept(img)
        g = gens[level]
        for y in candidates[level]:
            if used[y] and img[g] != y:
                continue
            new_img = img[:]
            new_used = used[:]
            new_members = members[:]
            gen_images = [new_img[gens[j]] for j in range(level)] + [y]
            ok = True
            if new_img[g] == -1:
                new_img[g] = y
                new_used[y] = True
                new_members.append(g)
            elif new_img[g] != y:
                continue
            queue = list(new_members)
            head = 0
            old_count = len(members)
            while head < len(queue) and ok:
                u = queue[head]
                is_old = head < old_count
                head += 1
                first = level if is_old else 0
                for j in range(first, level + 1):
                    v = smul[u][gens[j]]
                    w = tmul[new_img[u]][gen_images[j]]
                    if new_img[v] == -1:
                        if new_used[w]:
                            ok = False
                            break
                        new_img[v] = w
                        new_used[w] = True
                        queue.append(v)
                    elif new_img[v] != w:
                        ok = False
                        break
            if not ok:
                continue
            if extend(level + 1, new_img, new_used, queue):
                return True
        return False

    img = [-1] * n
    used = [False] * target.order
    img[0] = 0
    used[0] = True
    return extend(0, img, used, [0])


def find_isomorphism(
    source: FiniteGroup,
    target: FiniteGroup,
    respect: Optional[tuple[frozenset[int], frozenset[int]]] = None,
) -> Optional[GroupMap]:
    """Return an isomorphism ``source -> target`` or None.

    With ``respect = (A, B)`` only isomorphisms mapping the set A onto B are returned.
    """
    if source.order != target.order:
        return None
    if fingerprint(source) != fingerprint(target):
        return None
    gens = small_generating_set(source)
    by_type: dict[tuple[int, int], list[int]] = {}
    for y in range(target.order):
        by_type.setdefault(_local_type(target, y), []).append(y)
    candidates = []
    for g in gens:
        pool = by_type.get(_local_type(source, g), [])
        if respect is not None:
            a, b = respect
            pool = [y for y in pool if (g in a) == (y in b)]
        candidates.append(pool)

    found: list[list[int]] = []

    def accept(img: list[int]) -> bool:
        if respect is not None:
            a, b = respect
            if any(img[x] not in b for x in a):
                return False
        found.append(img)
        return True

    if _search(source, target, gens, candidates, accept):
        return GroupMap(source, target, tuple(found[0]))
    return None


def is_isomorphic(source: FiniteGroup, target: FiniteGroup) -> Optional[GroupMap]:
    """Isomorphism between the groups when one exists."""
    return find_isomorphism(source, target)


def automorphisms(group: FiniteGroup, cap: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield every automorphism as an image tuple.

    Raises AutomorphismCapExceeded once more than ``cap`` maps have been produced.
    """
    gens = small_generating_set(group)
    candidates = [
        [y for y in range(group.order) if _local_type(group, y) == _local_type(group, g)]
        for g in gens
    ]
    maps: list[tuple[int, ...]] = []

    def accept(img: list[int]) -> bool:
        maps.append(tuple(img))
        if cap is not None and len(maps) > cap:
            raise AutomorphismCapExceeded(f"more than {cap} automorphisms")
        return False

    _search(group, group, gens, candidates, accept)
    logger.debug("group %s has %d automorphisms", group.label, len(maps))
    yield from maps
