"""Human-readable names for catalogue groups."""
from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Optional

from .core import FiniteGroup
from .isomorphism import find_isomorphism, fingerprint
from .named import GroupKind, NamedGroupDescriptor, construct_named


def abelian_invariants(group: FiniteGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... of an abelian group (empty for the trivial group)."""
    orders = group.element_orders
    by_prime: dict[int, list[int]] = {}
    n = group.order
    for p in _primes(n):
        # c[k] = log_p #{x : x^(p^k) = 1}
        c = [0]
        k = 1
        while True:
            count = sum(1 for o in orders if (p**k) % o == 0 and _is_p_power(o, p))
            c.append(round(math.log(count, p)))
            if c[-1] == c[-2]:
                break
            k += 1
        parts_at_least = [c[i] - c[i - 1] for i in range(1, len(c))]
        exps = []
        for i, cnt in enumerate(parts_at_least, start=1):
            nxt = parts_at_least[i] if i < len(parts_at_least) else 0
            exps.extend([i] * (cnt - nxt))
        by_prime[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for p, exps in by_prime.items():
        for idx, e in enumerate(exps):
            factors[width - 1 - idx] *= p**e
    return factors


def _is_p_power(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def _primes(n: int) -> list[int]:
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


def abelian_name(factors: list[int]) -> str:
    """``[2, 2, 4]`` -> ``Z2^2xZ4``."""
    if not factors:
        return "Z1"
    parts = []
    for f, k in sorted(Counter(factors).items()):
        parts.append(f"Z{f}" if k == 1 else f"Z{f}^{k}")
    return "x".join(parts)


def _candidates(n: int) -> list[NamedGroupDescriptor]:
    """Named non-abelian descriptors of order n, most familiar first."""
    out: list[NamedGroupDescriptor] = []
    base: list[NamedGroupDescriptor] = []
    for m in range(3, n // 2 + 1):
        base.append(NamedGroupDescriptor.dihedral(m))
    for m in range(2, n // 4 + 1):
        base.append(NamedGroupDescriptor.dicyclic(m))
    for k in (4, 5):
        base.append(NamedGroupDescriptor.alternating(k))
    base.append(NamedGroupDescriptor.symmetric(4))
    for p in range(2, n + 1):
        for q in range(3, n // 2 + 1):
            if p * q > n or n % (p * q):
                continue
            for r in range(2, q - 1 if p == 2 else q):
                if math.gcd(r, q) == 1 and pow(r, p, q) == 1:
                    base.append(NamedGroupDescriptor.metacyclic(p, q, r))
    base = [d for d in base if n % d.order == 0]
    out.extend(d for d in base if d.order == n)
    for d in base:
        k = n // d.order
        if k < 2:
            continue
        out.append(NamedGroupDescriptor.product(d, NamedGroupDescriptor.cyclic(k)))
        if k % 4 == 0:
            out.append(NamedGroupDescriptor.product(
                d, NamedGroupDescriptor.cyclic(2), NamedGroupDescriptor.cyclic(k // 2)
            ))
        if k == 8:
            out.append(NamedGroupDescriptor.product(d, *[NamedGroupDescriptor.cyclic(2)] * 3))
    return out


@lru_cache(maxsize=64)
def _named_groups(n: int) -> tuple[tuple[str, FiniteGroup], ...]:
    named = []
    for d in _candidates(n):
        g = construct_named(d)
        named.append((_display(d), g))
    return tuple(named)


def _display(d: NamedGroupDescriptor) -> str:
    if d.name == "D3":
        return "S3"
    if d.name == "BD2":
        return "Q8"
    if d.kind is GroupKind.DIRECT_PRODUCT:
        names = [_display(f) for f in d.factors]
        head, tail = names[0], names[1:]
        cyclic = sorted(int(t[1:]) for t in tail)
        return "x".join([head, abelian_name(cyclic)])
    return d.name


def name_group(group: FiniteGroup) -> Optional[str]:
    """A conventional name when the group is recognised, else None."""
    if group.is_abelian:
        return abelian_name(abelian_invariants(group))
    fp = fingerprint(group)
    for label, candidate in _named_groups(group.order):
        if fingerprint(candidate) == fp and find_isomorphism(group, candidate) is not None:
            return label
    return None
