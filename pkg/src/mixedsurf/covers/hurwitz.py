"""Reduction of generating vectors modulo Hurwitz moves.

Moves used, each an automorphism of the orbifold fundamental group that sends every
branch loop to a conjugate of a branch loop and the surface relator to a conjugate of
itself:

* braid moves ``(h_i, h_i+1) -> (h_i h_i+1 h_i^-1, h_i)`` on the tail;
* handle moves ``(d, e) -> (d, e d)`` and ``(d, e) -> (d e, e)`` on every handle;
* pushing h1 through the last handle:
  ``(d, e; h1, ..., hr) -> (d, h1^-1 e; h2, ..., hr, Y^-1 (d h1 d^-1) Y)`` with
  ``Y = [d, h1^-1 e] h2 ... hr``;
* for two handles, exchanging them and sliding the second handle over the first;
* simultaneous conjugation by the elements of G, acting on G0 through conjugation;
* automorphisms of G mapping G0 onto itself, restricted to G0.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterator, Optional, Sequence

from mixedsurf.core.errors import MixedContextMissing
from mixedsurf.groups import FiniteGroup

from .vectors import GeneratingVector

if TYPE_CHECKING:
    from mixedsurf.extensions import MixedExtension

logger = logging.getLogger(__name__)

Key = tuple[tuple[int, ...], tuple[int, ...]]
Move = Callable[[FiniteGroup, Key], Iterator[Key]]


@dataclass(frozen=True)
class HurwitzOrbit:
    """An orbit of generating vectors under Hurwitz moves.

    ``size`` counts the orbit members whose tail orders are ascending, that is the
    enumerated vectors the orbit contains.
    """

    representative: GeneratingVector
    size: int
    total_size: int


def _braid_moves(group: FiniteGroup, key: Key) -> Iterator[Key]:
    genus, tail = key
    mul = group.mul
    for i in range(len(tail) - 1):
        a, b = tail[i], tail[i + 1]
        new = list(tail)
        new[i] = mul[mul[a][b]][group.inverse[a]]
        new[i + 1] = a
        yield genus, tuple(new)


def _handle_moves(group: FiniteGroup, key: Key) -> Iterator[Key]:
    genus, tail = key
    mul = group.mul
    for j in range(0, len(genus), 2):
        d, e = genus[j], genus[j + 1]
        for nd, ne in ((d, mul[e][d]), (mul[d][e], e)):
            new = list(genus)
            new[j], new[j + 1] = nd, ne
            yield tuple(new), tail


def _push_through_handle(group: FiniteGroup, key: Key) -> Iterator[Key]:
    genus, tail = key
    if not genus or not tail:
        return
    mul, inv = group.mul, group.inverse
    d, e = genus[-2], genus[-1]
    h1 = tail[0]
    new_e = mul[inv[h1]][e]
    z = group.conjugate(h1, d)
    y = group.commutator(d, new_e)
    for h in tail[1:]:
        y = mul[y][h]
    last = mul[mul[inv[y]][z]][y]
    yield genus[:-1] + (new_e,), tail[1:] + (last,)


def _two_handle_moves(group: FiniteGroup, key: Key) -> Iterator[Key]:
    genus, tail = key
    if len(genus) != 4:
        return
    mul, inv = group.mul, group.inverse
    a1, b1, a2, b2 = genus
    c = group.commutator(a2, b2)
    ci = inv[c]
    yield (a2, b2, mul[mul[ci][a1]][c], mul[mul[ci][b1]][c]), tail
    # slide: (a1, a2^-1 b1, b2 a2^-1 b2^-1, a1 b2^-1), tail conjugated by z = a1 a2 a1^-1
    z = group.conjugate(a2, a1)
    zi = inv[z]
    slid = (a1, mul[inv[a2]][b1], group.conjugate(inv[a2], b2), mul[a1][inv[b2]])
    yield slid, tuple(mul[mul[zi][h]][z] for h in tail)


MOVES: tuple[Move, ...] = (_braid_moves, _handle_moves, _push_through_handle, _two_handle_moves)


def _apply(images: Sequence[int], key: Key) -> Key:
    genus, tail = key
    return tuple(images[x] for x in genus), tuple(images[x] for x in tail)


def orbit(
    group: FiniteGroup, start: Key, conjugations: Sequence[Sequence[int]]
) -> set[Key]:
    """Closure of ``start`` under all moves and the given automorphisms."""
    seen = {start}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        neighbours = [_apply(images, key) for images in conjugations]
        for move in MOVES:
            neighbours.extend(move(group, key))
        for nxt in neighbours:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def _ascending(group: FiniteGroup, key: Key) -> bool:
    orders = [group.element_orders[h] for h in key[1]]
    return orders == sorted(orders)


def hurwitz_reduce(
    vectors: Sequence[GeneratingVector],
    extension: Optional["MixedExtension"],
) -> list[HurwitzOrbit]:
    """Split ``vectors`` into Hurwitz orbits, smallest representative first.

    ``extension`` supplies the action of G and of Aut(G, G0) on G0.
    """
    if extension is None:
        raise MixedContextMissing("Hurwitz reduction needs the extension group G")
    if not vectors:
        return []
    group = vectors[0].group
    q = vectors[0].q
    conjugations = extension.equivalence_actions()
    remaining = {(v.genus_part, v.tail) for v in vectors}
    orbits = []
    while remaining:
        start = min(remaining)
        members = orbit(group, start, conjugations)
        canonical = sorted(k for k in members if _ascending(group, k)) or sorted(members)
        remaining.difference_update(members)
        rep = GeneratingVector(q, canonical[0][0], canonical[0][1], group)
        orbits.append(HurwitzOrbit(rep, len(canonical), len(members)))
    orbits.sort(key=lambda o: o.representative)
    logger.debug("%d vectors reduce to %d orbits", len(vectors), len(orbits))
    return orbits


def hurwitz_equivalent(
    first: GeneratingVector, second: GeneratingVector, extension: "MixedExtension"
) -> bool:
    """Whether two vectors lie in the same orbit."""
    members = orbit(first.group, (first.genus_part, first.tail), extension.equivalence_actions())
    return (second.genus_part, second.tail) in members
