"""Build catalogues of solvable groups as cyclic extensions.

Every solvable group G of order n has a normal subgroup N of prime index p, and is then
determined by ``alpha`` (conjugation by a lift x of a generator of G/N, an automorphism of
N) and ``t = x^p`` in N, subject to ``alpha(t) = t`` and ``alpha^p = conjugation by t``.
Enumerating these data over a complete list of groups of order n/p yields every solvable
group of order n.
"""
from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np

from mixedsurf.core.errors import OutOfRange

from .catalogue import Catalogue, CatalogueEntry
from .core import FiniteGroup
from .isomorphism import AutomorphismCapExceeded, automorphisms, find_isomorphism, fingerprint
from .named import NamedGroupDescriptor, construct_named
from .naming import name_group

logger = logging.getLogger(__name__)

# Number of groups of order n (OEIS A000001), n = 1..50.
KNOWN_GROUP_COUNTS: dict[int, int] = dict(
    enumerate(
        [
            1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5,
            2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51, 1, 2, 1, 14, 1, 2, 2, 14,
            1, 6, 1, 4, 2, 2, 1, 52, 2, 5,
        ],
        start=1,
    )
)

# Orders of the minimal simple groups up to the order cap; a group whose order none of
# these divides is solvable.
MINIMAL_SIMPLE_ORDERS = (60, 168, 360, 504, 660, 1092)


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _compose(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(outer[i] for i in inner)


def _map_power(alpha: tuple[int, ...], k: int) -> tuple[int, ...]:
    result = tuple(range(len(alpha)))
    for _ in range(k):
        result = _compose(alpha, result)
    return result


def inner_automorphisms(group: FiniteGroup) -> dict[tuple[int, ...], list[int]]:
    """Each inner automorphism with the elements inducing it."""
    inner: dict[tuple[int, ...], list[int]] = {}
    for s in range(group.order):
        img = tuple(group.conjugate(n, s) for n in range(group.order))
        inner.setdefault(img, []).append(s)
    return inner


def extension_table(base: FiniteGroup, alpha: tuple[int, ...], t: int, p: int) -> np.ndarray:
    """Table of <N, x | x n x^-1 = alpha(n), x^p = t>, element n x^i at ``i * |N| + n``."""
    s = base.order
    table = base.table.astype(np.int64)
    powers = np.empty((p, s), dtype=np.int64)
    powers[0] = np.arange(s)
    alpha_arr = np.asarray(alpha, dtype=np.int64)
    for i in range(1, p):
        powers[i] = alpha_arr[powers[i - 1]]
    i, n1, j, n2 = np.meshgrid(np.arange(p), np.arange(s), np.arange(p), np.arange(s), indexing="ij")
    m = table[n1, powers[i, n2]]
    carry = (i + j) >= p
    m = np.where(carry, table[m, t], m)
    return (((i + j) % p) * s + m).reshape(p * s, p * s)


def cyclic_extensions(
    base: FiniteGroup,
    p: int,
    automorphism_cap: Optional[int] = None,
) -> list[FiniteGroup]:
    """Pairwise non-isomorphic groups G with a normal subgroup ``base`` of prime index p.

    In every returned group the elements ``0..|base|-1`` are ``base`` itself, numbered as in
    ``base``, and element ``|base|`` is the lift x.
    """
    if prime_divisors(p) != [p]:
        raise OutOfRange(f"{p} is not a prime")
    s = base.order
    inner = inner_automorphisms(base)
    seen: set[tuple[int, ...]] = set()
    found: list[FiniteGroup] = []
    buckets: dict[object, list[FiniteGroup]] = {}
    candidates = 0
    for alpha in automorphisms(base, cap=automorphism_cap):
        if alpha in seen:
            continue
        # alpha and inn(s) o alpha give isomorphic extensions
        for inn in inner:
            seen.add(_compose(inn, alpha))
        alpha_p = _map_power(alpha, p)
        for t in inner.get(alpha_p, []):
            if alpha[t] != t:
                continue
            candidates += 1
            gens = list(base.generators) + [s]
            group = FiniteGroup(extension_table(base, alpha, t, p), gens)
            fp = fingerprint(group)
            bucket = buckets.setdefault(fp, [])
            if any(find_isomorphism(group, other) for other in bucket):
                continue
            bucket.append(group)
            found.append(group)
    logger.debug(
        "order %d over %s by %d: %d candidates, %d classes",
        s * p, base.label or s, p, candidates, len(found),
    )
    return found


def abelian_groups(n: int) -> list[FiniteGroup]:
    """All abelian groups of order n, one per invariant-factor list."""
    factorizations: list[list[int]] = [[]]
    for p in prime_divisors(n):
        e, m = 0, n
        while m % p == 0:
            m //= p
            e += 1
        parts = [[p**k for k in part] for part in _partitions(e)]
        factorizations = [f + part for f in factorizations for part in parts]
    groups = []
    for factors in factorizations:
        if not factors:
            groups.append(construct_named(NamedGroupDescriptor.cyclic(1)))
            continue
        descriptor = NamedGroupDescriptor.product(
            *(NamedGroupDescriptor.cyclic(f) for f in sorted(factors))
        ) if len(factors) > 1 else NamedGroupDescriptor.cyclic(factors[0])
        groups.append(construct_named(descriptor))
    return groups


def _partitions(e: int, largest: Optional[int] = None) -> list[list[int]]:
    largest = e if largest is None else largest
    if e == 0:
        return [[]]
    out = []
    for first in range(min(e, largest), 0, -1):
        for rest in _partitions(e - first, first):
            out.append([first] + rest)
    return out


def _sort_key(group: FiniteGroup) -> tuple[object, ...]:
    return (not group.is_abelian, fingerprint(group))


def build_catalogue(
    max_order: int,
    automorphism_cap: Optional[int] = None,
    on_order: Optional[Callable[[int, int, bool], None]] = None,
) -> Catalogue:
    """All groups of orders 1..max_order reachable as iterated cyclic extensions.

    An order is declared complete when every order n/p it was built from is complete, no
    automorphism enumeration was abandoned, n admits no non-solvable group, and the count
    agrees with :data:`KNOWN_GROUP_COUNTS` where that table has an entry.
    """
    cat = Catalogue(
        provenance=(
            f"built by mixedsurf as cyclic extensions, orders 1..{max_order}; "
            "counts cross-checked against OEIS A000001"
        )
    )
    for n in range(1, max_order + 1):
        primes = prime_divisors(n)
        groups = abelian_groups(n)
        complete = not any(n % m == 0 for m in MINIMAL_SIMPLE_ORDERS)
        buckets: dict[object, list[FiniteGroup]] = {}
        for g in groups:
            buckets.setdefault(fingerprint(g), []).append(g)
        if n > 1 and primes != [n]:
            for p in primes:
                if not cat.is_complete(n // p):
                    complete = False
                for entry in cat.entries.get(n // p, []):
                    try:
                        extensions = cyclic_extensions(entry.group, p, automorphism_cap)
                    except AutomorphismCapExceeded:
                        logger.warning(
                            "order %d: Aut(%s) passes the cap %s, order left incomplete",
                            n, entry.label, automorphism_cap,
                        )
                        complete = False
                        continue
                    for g in extensions:
                        bucket = buckets.setdefault(fingerprint(g), [])
                        if any(find_isomorphism(g, other) for other in bucket):
                            continue
                        bucket.append(g)
                        groups.append(g)
        groups.sort(key=_sort_key)
        expected = KNOWN_GROUP_COUNTS.get(n)
        if expected is not None and expected != len(groups):
            logger.warning("order %d: built %d groups, expected %d", n, len(groups), expected)
            complete = False
        for k, g in enumerate(groups, start=1):
            _add_unchecked(cat, name_group(g) or f"G{n}#{k}", g)
        if expected is not None:
            cat.counts[n] = expected
        if complete:
            cat.complete_orders.add(n)
        logger.info("order %d: %d groups%s", n, len(groups), "" if complete else " (incomplete)")
        if on_order is not None:
            on_order(n, len(groups), complete)
    return cat


def _add_unchecked(cat: Catalogue, label: str, group: FiniteGroup) -> None:
    # classes are already pairwise non-isomorphic
    group.label = label
    cat.entries.setdefault(group.order, []).append(CatalogueEntry(label, group))


__all__ = [
    "KNOWN_GROUP_COUNTS",
    "abelian_groups",
    "build_catalogue",
    "cyclic_extensions",
    "extension_table",
    "prime_divisors",
]
