"""Unsplit degree-2 extensions 1 -> G0 -> G -> Z2 -> 1.

An index-2 subgroup H of G has a complement exactly when some element outside H is an
involution, so the unsplit extensions are the pairs (G, H) with no involution in G - H.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from mixedsurf.config import get_settings
from mixedsurf.core.errors import NotIndexTwo, OrderNotCovered, SplitExtension
from mixedsurf.groups import (
    AutomorphismCapExceeded,
    Catalogue,
    FiniteGroup,
    GroupMap,
    Subgroup,
    automorphisms,
    find_isomorphism,
    generated_subgroup,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MixedExtension:
    """G with an index-2 subgroup identified with G0 and a chosen tau' outside it.

    ``embedding[h]`` is the element of G corresponding to the element h of ``g0``.
    """

    group: FiniteGroup = field(repr=False)
    g0: FiniteGroup = field(repr=False)
    embedding: tuple[int, ...] = field(repr=False)
    tau_prime: int
    certificate: str = ""

    @cached_property
    def subgroup(self) -> Subgroup:
        return Subgroup(self.group, tuple(sorted(self.embedding)))

    @cached_property
    def _local(self) -> dict[int, int]:
        return {x: h for h, x in enumerate(self.embedding)}

    def to_g(self, h: int) -> int:
        return self.embedding[h]

    def from_g(self, x: int) -> int:
        return self._local[x]

    def conjugation_images(self, t: int) -> tuple[int, ...]:
        """h -> t h t^-1 on G0, for any t in G."""
        return tuple(self._local[self.group.conjugate(x, t)] for x in self.embedding)

    @cached_property
    def tau(self) -> int:
        """tau = tau'^2 as an element of G0."""
        return self._local[self.group.mul[self.tau_prime][self.tau_prime]]

    @cached_property
    def phi(self) -> GroupMap:
        """Conjugation by tau' on G0."""
        return GroupMap(self.g0, self.g0, self.conjugation_images(self.tau_prime))

    def conjugation_actions(self) -> list[tuple[int, ...]]:
        """Conjugation by the generators of G and by tau', as maps of G0."""
        actions = []
        for t in dict.fromkeys(list(self.group.generators) + [self.tau_prime]):
            images = self.conjugation_images(t)
            if images not in actions:
                actions.append(images)
        return actions

    @cached_property
    def stabilizer_actions(self) -> tuple[tuple[int, ...], ...]:
        """Automorphisms of G mapping G0 onto itself, restricted to G0.

        Only maps needed to generate the restricted group beyond the conjugation actions
        are kept. Empty when Aut(G) passes the configured automorphism cap.
        """
        cap = get_settings().automorphism_cap
        inside = self.subgroup.member_set
        restricted: list[tuple[int, ...]] = []
        try:
            for alpha in automorphisms(self.group, cap):
                if all(alpha[x] in inside for x in self.embedding):
                    restricted.append(tuple(self._local[alpha[x]] for x in self.embedding))
        except AutomorphismCapExceeded:
            logger.warning(
                "Aut(%s) passes the cap %d; vectors identified by conjugation only",
                self.label or self.group.order, cap,
            )
            return ()
        return tuple(_extra_generators(self.conjugation_actions(), restricted, self.g0.order))

    def equivalence_actions(self) -> list[tuple[int, ...]]:
        """Maps of G0 identifying generating vectors of isomorphic surfaces."""
        return self.conjugation_actions() + list(self.stabilizer_actions)

    def outside(self) -> list[int]:
        """The elements of G - G0, ascending."""
        inside = self.subgroup.member_set
        return [x for x in range(self.group.order) if x not in inside]

    def with_tau_prime(self, tau_prime: int) -> "MixedExtension":
        if tau_prime in self.subgroup:
            raise ValueError(f"tau' = {tau_prime} lies in G0")
        return MixedExtension(self.group, self.g0, self.embedding, tau_prime, self.certificate)

    @property
    def label(self) -> str:
        return self.group.label


def _closure(generators: Sequence[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    identity = tuple(range(n))
    seen = {identity}
    queue = [identity]
    for m in queue:
        for g in generators:
            c = tuple(g[x] for x in m)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def _extra_generators(
    base: Sequence[tuple[int, ...]], candidates: Sequence[tuple[int, ...]], n: int
) -> list[tuple[int, ...]]:
    """Candidates not already generated by ``base`` and the earlier picks."""
    generators = list(base)
    closure = _closure(generators, n)
    extra = []
    for m in candidates:
        if m in closure:
            continue
        generators.append(m)
        extra.append(m)
        closure = _closure(generators, n)
    return extra


def _homomorphism_to_z2(group: FiniteGroup, signs: Sequence[int]) -> Optional[list[int]]:
    values = [-1] * group.order
    values[0] = 0
    queue = [0]
    for x in queue:
        for g, s in zip(group.generators, signs):
            y = group.mul[x][g]
            v = values[x] ^ s
            if values[y] == -1:
                values[y] = v
                queue.append(y)
            elif values[y] != v:
                return None
    return values


def index_two_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """Kernels of the surjections G -> Z2, ordered by member tuple."""
    kernels: set[tuple[int, ...]] = set()
    for signs in itertools.product((0, 1), repeat=len(group.generators)):
        if not any(signs):
            continue
        values = _homomorphism_to_z2(group, signs)
        if values is None:
            continue
        kernels.add(tuple(x for x, v in enumerate(values) if v == 0))
    return [Subgroup(group, k) for k in sorted(kernels)]


def _check_index_two(group: FiniteGroup, sub: Subgroup) -> None:
    if 2 * sub.order != group.order:
        raise NotIndexTwo(f"subgroup of order {sub.order} in a group of order {group.order}")
    if generated_subgroup(group, sub.members).order != sub.order:
        raise NotIndexTwo("member set is not a subgroup")


def unsplit_test(group: FiniteGroup, sub: Subgroup) -> bool:
    """True iff every element of G outside the index-2 subgroup has order > 2."""
    _check_index_two(group, sub)
    orders = group.element_orders
    return all(orders[x] != 2 for x in range(group.order) if x not in sub)


def has_complement(group: FiniteGroup, sub: Subgroup) -> bool:
    """Search the order-2 subgroups for one meeting ``sub`` trivially."""
    _check_index_two(group, sub)
    for x in range(1, group.order):
        cyclic = generated_subgroup(group, [x])
        if cyclic.order == 2 and not (cyclic.member_set - {0}) & sub.member_set:
            return True
    return False


def make_extension(
    group: FiniteGroup,
    sub: Subgroup,
    tau_prime: Optional[int] = None,
    g0: Optional[FiniteGroup] = None,
    certificate: str = "",
) -> MixedExtension:
    """Build the extension data for an index-2 subgroup.

    Without ``g0`` the subgroup itself, numbered by member position, plays G0. Raises
    SplitExtension when some element outside the subgroup is an involution.
    """
    if not unsplit_test(group, sub):
        raise SplitExtension(f"{group.label or 'G'} splits over the given subgroup")
    if g0 is None:
        g0 = sub.as_group()
        embedding = sub.members
    else:
        iso = find_isomorphism(g0, sub.as_group())
        if iso is None:
            raise NotIndexTwo("the subgroup is not isomorphic to G0")
        embedding = tuple(sub.members[iso(h)] for h in range(g0.order))
    if tau_prime is None:
        tau_prime = next(x for x in range(group.order) if x not in sub)
    elif tau_prime in sub:
        raise ValueError(f"tau' = {tau_prime} lies in the subgroup")
    return MixedExtension(group, g0, tuple(embedding), tau_prime, certificate)


def _equivalent(group: FiniteGroup, first: Subgroup, second: Subgroup) -> bool:
    """Some automorphism of G carries one subgroup onto the other."""
    if first.members == second.members:
        return True
    return find_isomorphism(group, group, respect=(first.member_set, second.member_set)) is not None


def enumerate_unsplit_extensions(g0: FiniteGroup, catalogue: Catalogue) -> list[MixedExtension]:
    """One extension per class of (G, embedded G0) over the catalogue groups of order 2|G0|."""
    order = 2 * g0.order
    entries, complete = catalogue.groups_of_order(order)
    if not complete:
        raise OrderNotCovered(order)
    found: list[MixedExtension] = []
    for entry in entries:
        group = entry.group
        kept: list[Subgroup] = []
        for k, sub in enumerate(index_two_subgroups(group)):
            if not unsplit_test(group, sub):
                continue
            if find_isomorphism(g0, sub.as_group()) is None:
                continue
            if any(_equivalent(group, other, sub) for other in kept):
                continue
            kept.append(sub)
            found.append(make_extension(group, sub, g0=g0, certificate=f"{entry.label}/H{k}"))
    logger.debug("%s: %d unsplit extensions of order %d", g0.label or g0.order, len(found), order)
    return found


def mixed_action_data(ext: MixedExtension) -> tuple[int, GroupMap]:
    """(tau, phi): tau' squared and conjugation by tau', both on G0."""
    return ext.tau, ext.phi
