"""Finite groups stored as dense multiplication tables.

Elements are the integers ``0..order-1`` with ``0`` the identity. Groups built from
permutations or tables are renumbered by a breadth-first closure from their generators,
multiplying on the right, so numbering is reproducible.
"""
from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from mixedsurf.config import GROUP_ORDER_CAP
from mixedsurf.core.errors import (
    DoesNotNormalize,
    InvalidPermutation,
    NotASubgroup,
    OrderCapExceeded,
)

logger = logging.getLogger(__name__)

Permutation = tuple[int, ...]


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[x, y]`` is the index of ``x * y``. ``permutations`` is kept only for groups
    built from permutation generators and is used for catalogue and analyze I/O.
    """

    def __init__(
        self,
        table: np.ndarray,
        generators: Sequence[int],
        label: str = "",
        permutations: Optional[Sequence[Permutation]] = None,
    ):
        table = np.ascontiguousarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise ValueError("multiplication table must be a non-empty square array")
        table.setflags(write=False)
        self.table = table
        self.order = int(table.shape[0])
        self.mul: list[list[int]] = table.tolist()
        self.inverse: list[int] = np.argmax(table == 0, axis=1).tolist()
        self.generators: tuple[int, ...] = tuple(int(g) for g in generators if g != 0)
        self.label = label
        self.permutations: Optional[tuple[Permutation, ...]] = (
            tuple(permutations) if permutations is not None else None
        )

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, label={self.label!r})"

    def __getstate__(self) -> dict[str, object]:
        state = self.__dict__.copy()
        # mul and inverse are rebuilt from the table
        state.pop("mul", None)
        state.pop("inverse", None)
        for key in [k for k in state if k.startswith("_cached_")]:
            state.pop(key)
        return state

    def __setstate__(self, state: dict[str, object]) -> None:
        self.__dict__.update(state)
        self.mul = self.table.tolist()
        self.inverse = np.argmax(self.table == 0, axis=1).tolist()

    # Element arithmetic

    def multiply(self, x: int, y: int) -> int:
        """Return x * y."""
        return self.mul[x][y]

    def invert(self, x: int) -> int:
        """Return x^-1."""
        return self.inverse[x]

    def power(self, x: int, k: int) -> int:
        """Return x^k for any integer k."""
        if k < 0:
            x, k = self.inverse[x], -k
        result = 0
        base = x
        while k:
            if k & 1:
                result = self.mul[result][base]
            base = self.mul[base][base]
            k >>= 1
        return result

    def conjugate(self, x: int, t: int) -> int:
        """Return t * x * t^-1."""
        return self.mul[self.mul[t][x]][self.inverse[t]]

    def commutator(self, x: int, y: int) -> int:
        """Return [x, y] = x y x^-1 y^-1."""
        m = self.mul
        return m[m[m[x][y]][self.inverse[x]]][self.inverse[y]]

    def product(self, elements: Iterable[int]) -> int:
        """Return the ordered product of the given elements."""
        result = 0
        for x in elements:
            result = self.mul[result][x]
        return result

    # Cached structure

    @property
    def element_orders(self) -> list[int]:
        """Order of every element, indexed by element."""
        orders = self.__dict__.get("_cached_orders")
        if orders is None:
            orders = [0] * self.order
            for x in range(self.order):
                if orders[x]:
                    continue
                k, y = 1, x
                while y != 0:
                    y = self.mul[y][x]
                    k += 1
                orders[x] = k
            self.__dict__["_cached_orders"] = orders
        return orders

    def elements_of_order(self, m: int) -> list[int]:
        """All elements of order exactly m, ascending."""
        return [x for x, o in enumerate(self.element_orders) if o == m]

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Conjugacy classes, each sorted, listed by smallest member."""
        classes = self.__dict__.get("_cached_classes")
        if classes is None:
            inv = np.asarray(self.inverse, dtype=np.int64)
            seen = np.zeros(self.order, dtype=bool)
            classes = []
            for x in range(self.order):
                if seen[x]:
                    continue
                conj = np.unique(self.table[self.table[:, x], inv])
                seen[conj] = True
                classes.append(tuple(int(c) for c in conj))
            self.__dict__["_cached_classes"] = classes
        return classes

    @property
    def class_size(self) -> list[int]:
        """Size of the conjugacy class of every element."""
        sizes = self.__dict__.get("_cached_class_size")
        if sizes is None:
            sizes = [0] * self.order
            for cls in self.conjugacy_classes:
                for x in cls:
                    sizes[x] = len(cls)
            self.__dict__["_cached_class_size"] = sizes
        return sizes

    def class_representatives(self, elements: Iterable[int]) -> list[int]:
        """Smallest member of each conjugacy class meeting ``elements``."""
        wanted = set(elements)
        return [cls[0] for cls in self.conjugacy_classes if wanted.intersection(cls)]


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by its sorted member list."""

    parent: FiniteGroup = field(repr=False, compare=False)
    members: tuple[int, ...]

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: object) -> bool:
        return x in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def local_index(self) -> dict[int, int]:
        """Position of each member in ``members``; the numbering of :meth:`as_group`."""
        return {x: k for k, x in enumerate(self.members)}

    def as_group(self, label: str = "") -> FiniteGroup:
        """The subgroup as a standalone group numbered by member position."""
        local = self.local_index
        mul = self.parent.mul
        rows = [[local[mul[a][b]] for b in self.members] for a in self.members]
        table = np.asarray(rows, dtype=np.int32)
        gens = small_generating_set_from_table(table)
        return FiniteGroup(table, gens, label=label or f"subgroup of {self.parent.label}")


@dataclass(frozen=True)
class GroupMap:
    """A map between groups given by the image of every source element."""

    source: FiniteGroup = field(repr=False, compare=False)
    target: FiniteGroup = field(repr=False, compare=False)
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_homomorphism(self) -> bool:
        img = np.asarray(self.images, dtype=np.int64)
        lhs = img[self.source.table]
        rhs = self.target.table[img[:, None], img[None, :]]
        return bool(np.array_equal(lhs, rhs))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.images)) == self.target.order

    def compose(self, first: "GroupMap") -> "GroupMap":
        """Return ``self o first``."""
        return GroupMap(first.source, self.target, tuple(self.images[y] for y in first.images))

    def inverse(self) -> "GroupMap":
        if not self.is_bijective():
            raise ValueError("only bijective maps can be inverted")
        inv = [0] * self.target.order
        for x, y in enumerate(self.images):
            inv[y] = x
        return GroupMap(self.target, self.source, tuple(inv))

    @classmethod
    def identity(cls, group: FiniteGroup) -> "GroupMap":
        return cls(group, group, tuple(range(group.order)))


# Construction


def _bfs_numbering(mul: Sequence[Sequence[int]], identity: int, gens: Sequence[int]) -> list[int]:
    """Old indices in breadth-first order from ``identity`` under right multiplication."""
    order = [identity]
    seen = {identity}
    queue = deque(order)
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul[x][g]
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def from_table(
    table: np.ndarray | Sequence[Sequence[int]],
    generators: Optional[Sequence[int]] = None,
    label: str = "",
    renumber: bool = True,
) -> FiniteGroup:
    """Build a group from a multiplication table whose identity may sit anywhere.

    With ``renumber`` the elements are renumbered breadth-first from ``generators``.
    """
    arr = np.asarray(table, dtype=np.int64)
    n = arr.shape[0]
    identity_rows = np.flatnonzero((arr == np.arange(n)[None, :]).all(axis=1))
    if len(identity_rows) != 1:
        raise ValueError("table has no unique identity")
    e = int(identity_rows[0])
    if generators is None:
        generators = small_generating_set_from_table(arr, identity=e)
    if not renumber:
        if e != 0:
            raise ValueError("identity must be element 0 when renumber=False")
        return FiniteGroup(arr, generators, label)
    mul = arr.tolist()
    order = _bfs_numbering(mul, e, generators)
    if len(order) != n:
        raise ValueError("generators do not generate the table")
    new = np.empty(n, dtype=np.int64)
    new[order] = np.arange(n)
    perm = np.asarray(order, dtype=np.int64)
    renumbered = new[arr[perm][:, perm]]
    return FiniteGroup(renumbered, [int(new[g]) for g in generators], label)


def _check_permutations(perms: Sequence[Sequence[int]]) -> list[Permutation]:
    degrees = {len(p) for p in perms}
    if len(degrees) > 1:
        raise InvalidPermutation(f"permutations of different degrees: {sorted(degrees)}")
    checked = []
    for p in perms:
        d = len(p)
        if sorted(p) != list(range(1, d + 1)):
            raise InvalidPermutation(f"not a permutation of 1..{d}: {list(p)}")
        checked.append(tuple(i - 1 for i in p))
    return checked


def build_group(
    permutation_generators: Sequence[Sequence[int]],
    label: str = "",
    cap: Optional[int] = None,
) -> FiniteGroup:
    """Close 1-based permutation generators into a group.

    The product is composition of functions: ``(x * y)(i) = x(y(i))``.
    """
    cap = GROUP_ORDER_CAP if cap is None else cap
    gens = _check_permutations(permutation_generators)
    degree = len(gens[0]) if gens else 1
    ident: Permutation = tuple(range(degree))
    elements: list[Permutation] = [ident]
    index = {ident: 0}
    parent = [0]
    via = [-1]
    right: list[list[int]] = [[] for _ in gens]
    k = 0
    while k < len(elements):
        e = elements[k]
        for gi, s in enumerate(gens):
            prod = tuple(e[i] for i in s)
            j = index.get(prod)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise OrderCapExceeded(f"group order exceeds cap {cap}")
                index[prod] = j
                elements.append(prod)
                parent.append(k)
                via.append(gi)
            right[gi].append(j)
        k += 1

    n = len(elements)
    right_arr = [np.asarray(r, dtype=np.int64) for r in right]
    table = np.empty((n, n), dtype=np.int64)
    table[:, 0] = np.arange(n)
    for j in range(1, n):
        table[:, j] = right_arr[via[j]][table[:, parent[j]]]
    generator_indices = sorted({index[s] for s in gens} - {0})
    logger.debug("built group of order %d from %d generators", n, len(gens))
    return FiniteGroup(table, generator_indices, label, permutations=elements)


def direct_product(a: FiniteGroup, b: FiniteGroup, label: str = "") -> FiniteGroup:
    """Direct product numbered ``i * |b| + j`` for the pair (i, j)."""
    nb = b.order
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(a.order * nb, a.order * nb)
    gens = [g * nb for g in a.generators] + list(b.generators)
    return FiniteGroup(table, gens, label or f"{a.label}x{b.label}")


def regular_permutations(group: FiniteGroup) -> list[list[int]]:
    """1-based left-regular permutations of the group's generators."""
    return [[int(v) + 1 for v in group.table[g]] for g in group.generators]


def permutation_generators(group: FiniteGroup) -> list[list[int]]:
    """1-based generator permutations, falling back to the regular representation."""
    if group.permutations is not None:
        return [[i + 1 for i in group.permutations[g]] for g in group.generators]
    return regular_permutations(group)


# Subgroups and cosets


def element_order(group: FiniteGroup, x: int) -> int:
    """Least k >= 1 with x^k = 1."""
    if not 0 <= x < group.order:
        raise IndexError(f"element {x} outside group of order {group.order}")
    return group.element_orders[x]


def generated_subgroup(group: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``seed``."""
    gens = sorted({int(s) for s in seed} - {0})
    members = {0}
    queue = deque([0])
    mul = group.mul
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul[x][g]
            if y not in members:
                members.add(y)
                queue.append(y)
    return Subgroup(group, tuple(sorted(members)))


def _assert_subgroup(group: FiniteGroup, sub: Subgroup) -> None:
    if sub.parent is not group:
        raise NotASubgroup("subgroup belongs to a different group")
    if 0 not in sub:
        raise NotASubgroup("subgroup does not contain the identity")
    members = np.asarray(sub.members, dtype=np.int64)
    products = group.table[np.ix_(members, members)]
    if not np.isin(products, members).all():
        raise NotASubgroup("member set is not closed under multiplication")


def left_cosets(group: FiniteGroup, sub: Subgroup) -> list[int]:
    """Minimal representative of every left coset gH, ascending."""
    _assert_subgroup(group, sub)
    covered = np.zeros(group.order, dtype=bool)
    members = np.asarray(sub.members, dtype=np.int64)
    reps = []
    for g in range(group.order):
        if covered[g]:
            continue
        reps.append(g)
        covered[group.table[g, members]] = True
    return reps


def coset_index(group: FiniteGroup, sub: Subgroup) -> list[int]:
    """Map every element to the position of its left coset in :func:`left_cosets`."""
    reps = left_cosets(group, sub)
    where = [0] * group.order
    for k, g in enumerate(reps):
        for h in sub.members:
            where[group.mul[g][h]] = k
    return where


def conjugation_map(group: FiniteGroup, t: int, sub: Subgroup) -> GroupMap:
    """h -> t h t^-1 on ``sub``, as a map of ``sub.as_group()``."""
    images = []
    local = sub.local_index
    for h in sub.members:
        c = group.conjugate(h, t)
        if c not in local:
            raise DoesNotNormalize(f"element {t} does not normalize the subgroup")
        images.append(local[c])
    sub_group = sub.as_group()
    return GroupMap(sub_group, sub_group, tuple(images))


def center(group: FiniteGroup) -> Subgroup:
    table = group.table
    central = np.flatnonzero((table == table.T).all(axis=1))
    return Subgroup(group, tuple(int(z) for z in central))


def derived_subgroup(group: FiniteGroup) -> Subgroup:
    table = group.table.astype(np.int64)
    inv = np.asarray(group.inverse, dtype=np.int64)
    xyx = table[table, inv[:, None]]
    commutators = np.unique(table[xyx, inv[None, :]])
    return generated_subgroup(group, commutators.tolist())


def small_generating_set_from_table(table: np.ndarray, identity: int = 0) -> list[int]:
    """Greedy generating set, preferring elements of large order."""
    mul = np.asarray(table).tolist()
    n = len(mul)
    orders = []
    for x in range(n):
        k, y = 1, x
        while y != identity:
            y = mul[y][x]
            k += 1
        orders.append(k)
    gens: list[int] = []
    members = {identity}
    for x in sorted(range(n), key=lambda z: (-orders[z], z)):
        if len(members) == n:
            break
        if x in members:
            continue
        gens.append(x)
        queue = deque(members)
        while queue:
            u = queue.popleft()
            for g in gens:
                v = mul[u][g]
                if v not in members:
                    members.add(v)
                    queue.append(v)
    return gens


def small_generating_set(group: FiniteGroup) -> list[int]:
    return small_generating_set_from_table(group.table)


# Axioms


def validate_group(group: FiniteGroup, samples: int = 2000, seed: int = 0) -> list[str]:
    """Return a list of axiom failures; empty when the table is a group.

    Identity and inverses are checked fully, associativity on random triples (all triples
    when there are fewer than ``samples``).
    """
    table = group.table.astype(np.int64)
    n = group.order
    problems = []
    ar = np.arange(n)
    if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
        problems.append("element 0 is not a two-sided identity")
    if not all(np.array_equal(np.sort(row), ar) for row in table):
        problems.append("rows are not permutations")
    if not all(np.array_equal(np.sort(col), ar) for col in table.T):
        problems.append("columns are not permutations")
    inv = np.asarray(group.inverse, dtype=np.int64)
    if not ((table[ar, inv] == 0).all() and (table[inv, ar] == 0).all()):
        problems.append("inverses are not two-sided")
    if n**3 <= samples:
        a, b, c = (m.ravel() for m in np.meshgrid(ar, ar, ar, indexing="ij"))
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
    if not np.array_equal(table[table[a, b], c], table[a, table[b, c]]):
        problems.append("multiplication is not associative")
    if generated_subgroup(group, group.generators).order != n:
        problems.append("generators do not generate the group")
    return problems


def is_associative(table: np.ndarray) -> bool:
    """Full associativity check, one row at a time."""
    t = np.asarray(table, dtype=np.int64)
    for a in range(t.shape[0]):
        if not np.array_equal(t[t[a]], t[a][t]):
            return False
    return True


def order_statistics(group: FiniteGroup) -> tuple[tuple[int, int], ...]:
    """Sorted (element order, count) pairs."""
    return tuple(sorted(Counter(group.element_orders).items()))
