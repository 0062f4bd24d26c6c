"""Singular points of Y = (C x C)/G0 and of X = (C x C)/G.

The points of C x C with nontrivial G0-stabilizer lie over pairs (p_i, p_j) of branch
points of C -> C/G0. Over such a pair the G0-orbits correspond to the K_i-orbits on
G0/K_j, where K_i = <h_i> acts by k . gK_j = phi(k) g K_j. For a representative g the
stabilizer is K_i meet phi^-1(g K_j g^-1), a cyclic group of order n generated by
h_i^(ord(h_i)/n), and it acts with type 1/n(1, a).

Two helpers compute this: :func:`singular_points_Y` from the formula, and
:func:`bruteforce_singularity_oracle` by materializing G0/K_i x G0/K_j.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from mixedsurf.config import get_settings
from mixedsurf.core.errors import (
    NotDiagonal,
    OracleCapExceeded,
    OracleMismatch,
    PairingParityError,
)
from mixedsurf.groups import Subgroup, coset_index, generated_subgroup, left_cosets
from mixedsurf.singularities import Basket, Flavor, make_class

from .data import MixedData

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class YPoint:
    """A singular point of Y over the branch pair (i, j), 0-based.

    ``rep`` is the minimal g with (K_i, g K_j) on the orbit. ``fixed`` is only ever set
    for diagonal points fixed by the involution of Y.
    """

    i: int
    j: int
    rep: int
    n: int
    a: int
    fixed: bool = False

    @property
    def diagonal(self) -> bool:
        return self.i == self.j

    @property
    def analytic_key(self) -> tuple[int, int]:
        """(n, min(a, a')); a point and its image under the involution share it."""
        a_dual = pow(self.a, -1, self.n)
        return self.n, min(self.a, a_dual)


class _BranchData:
    """Cyclic subgroups K_i and coset numberings shared by both paths."""

    def __init__(self, data: MixedData):
        self.data = data
        g0 = data.g0
        self.stabilizers: list[Subgroup] = [generated_subgroup(g0, [h]) for h in data.tail]
        self._cosets: dict[int, tuple[list[int], list[int]]] = {}

    def cosets(self, i: int) -> tuple[list[int], list[int]]:
        """(minimal coset representatives, element -> coset position) for G0/K_i."""
        if i not in self._cosets:
            g0, sub = self.data.g0, self.stabilizers[i]
            self._cosets[i] = (left_cosets(g0, sub), coset_index(g0, sub))
        return self._cosets[i]

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return self.data.phi


def _gamma(data: MixedData, h_j: int, x: int) -> int:
    """The exponent 1 <= gamma <= ord(h_j) with h_j^gamma = x."""
    g0 = data.g0
    m_j = g0.element_orders[h_j]
    y = h_j
    for gamma in range(1, m_j + 1):
        if y == x:
            return gamma
        y = g0.mul[y][h_j]
    raise OracleMismatch(f"element {x} is not a power of {h_j}")


def _local_type(data: MixedData, i: int, j: int, first: int, second: int, n: int) -> int:
    """The weight a of the point (first K_i, second K_j) with stabilizer order n."""
    g0 = data.g0
    h_i, h_j = data.tail[i], data.tail[j]
    phi = data.phi
    eta = g0.conjugate(g0.power(h_i, g0.element_orders[h_i] // n), first)
    # phi(eta) fixes second K_j, so second^-1 phi(eta) second lies in K_j
    x = g0.mul[g0.mul[g0.inverse[second]][phi[eta]]][second]
    gamma = _gamma(data, h_j, x)
    a, rest = divmod(n * gamma, g0.element_orders[h_j])
    if rest:
        raise OracleMismatch(f"non-integral weight at pair ({i}, {j})")
    return a


def _power_exponents(data: MixedData) -> list[dict[int, int]]:
    """For each tail entry h, the map h^u -> u with 0 <= u < ord(h)."""
    g0 = data.g0
    tables = []
    for h in data.tail:
        table, x = {}, 0
        for u in range(g0.element_orders[h]):
            table[x] = u
            x = g0.mul[x][h]
        tables.append(table)
    return tables


def _cell_weight(
    data: MixedData,
    exponents: list[dict[int, int]],
    i: int,
    j: int,
    first: int,
    second: int,
    stabilizer: list[int],
) -> int:
    """The weight a read off the stabilizer of the cell (first K_i, second K_j).

    The stabilizer element acting on the first factor as the rotation by 1/n is found
    among the stabilizer itself; its action on the second factor gives a.
    """
    g0 = data.g0
    mul, inv, phi = g0.mul, g0.inverse, data.phi
    n = len(stabilizer)
    m_i, m_j = g0.element_orders[data.tail[i]], g0.element_orders[data.tail[j]]
    for s in stabilizer:
        u = exponents[i].get(mul[mul[inv[first]][s]][first])
        if u is None:
            raise OracleMismatch(f"stabilizer element {s} leaves K_{i}")
        if u * n != m_i:
            continue
        v = exponents[j].get(mul[mul[inv[second]][phi[s]]][second])
        if v is None:
            raise OracleMismatch(f"phi({s}) leaves K_{j}")
        a, rest = divmod(v * n, m_j)
        if rest:
            raise OracleMismatch(f"non-integral weight at pair ({i}, {j})")
        return a
    raise OracleMismatch(f"stabilizer of order {n} at pair ({i}, {j}) is not generated by a rotation")


def fixed_point_test(data: MixedData, i: int, g: int, j: Optional[int] = None) -> bool:
    """Whether the involution of Y fixes the point of (K_i, g K_i).

    That happens iff some h in G0 has phi(h) tau h in K_i and phi(h) g in K_i. The second
    condition leaves the candidates h = phi^-1(k g^-1) for k in K_i.
    """
    if j is not None and j != i:
        raise NotDiagonal(f"pair ({i}, {j}) is off the diagonal")
    g0 = data.g0
    k_i = generated_subgroup(g0, [data.tail[i]]).member_set
    phi, phi_inv, tau = data.phi, data.phi_inverse, data.tau
    g_inv = g0.inverse[g]
    for k in k_i:
        h = phi_inv[g0.mul[k][g_inv]]
        if g0.mul[g0.mul[phi[h]][tau]][h] in k_i:
            return True
    return False


def singular_points_Y(data: MixedData, branch: Optional[_BranchData] = None) -> list[YPoint]:
    """Every singular point of Y with its type; diagonal points carry the fixed flag."""
    branch = branch or _BranchData(data)
    g0 = data.g0
    phi = branch.phi
    r = len(data.tail)
    points: list[YPoint] = []
    for i in range(r):
        k_i = branch.stabilizers[i].members
        if len(k_i) == 1:
            continue
        for j in range(r):
            if len(branch.stabilizers[j]) == 1:
                continue
            reps, where = branch.cosets(j)
            seen = [False] * len(reps)
            for c, g in enumerate(reps):
                if seen[c]:
                    continue
                orbit = {where[g0.mul[phi[k]][g]] for k in k_i}
                for o in orbit:
                    seen[o] = True
                n = sum(1 for k in k_i if where[g0.mul[phi[k]][g]] == c)
                if n == 1:
                    continue
                a = _local_type(data, i, j, 0, g, n)
                fixed = i == j and fixed_point_test(data, i, g)
                points.append(YPoint(i, j, g, n, a, fixed))
    logger.debug("%d singular points on Y", len(points))
    return points


def bruteforce_singularity_oracle(data: MixedData, cap: Optional[int] = None) -> list[YPoint]:
    """The singular points of Y found by acting on G0/K_i x G0/K_j directly.

    Raises OracleCapExceeded when the number of cells would pass ``cap``.
    """
    cap = get_settings().oracle_cap if cap is None else cap
    branch = _BranchData(data)
    g0 = data.g0
    phi, tau = branch.phi, data.tau
    r = len(data.tail)
    sizes = [g0.order // len(s) for s in branch.stabilizers]
    cells = sum(sizes[i] * sizes[j] for i in range(r) for j in range(r))
    if cells > cap:
        raise OracleCapExceeded(f"{cells} cells exceed the oracle cap {cap}")

    exponents = _power_exponents(data)
    points: list[YPoint] = []
    for i in range(r):
        reps_i, where_i = branch.cosets(i)
        for j in range(r):
            reps_j, where_j = branch.cosets(j)
            width = len(reps_j)

            def act(h: int, cell: int) -> int:
                x, y = divmod(cell, width)
                return where_i[g0.mul[h][reps_i[x]]] * width + where_j[g0.mul[phi[h]][reps_j[y]]]

            seen = [False] * (len(reps_i) * width)
            for cell in range(len(seen)):
                if seen[cell]:
                    continue
                orbit = {act(h, cell) for h in range(g0.order)}
                for o in orbit:
                    seen[o] = True
                stabilizer = [h for h in range(g0.order) if act(h, cell) == cell]
                n = len(stabilizer)
                if n == 1:
                    continue
                if n * len(orbit) != g0.order:
                    raise OracleMismatch(f"orbit-stabilizer fails at pair ({i}, {j})")
                # the orbit meets {K_i} x G0/K_j in a K_i-orbit; take its smallest coset
                rep = min(reps_j[o % width] for o in orbit if o // width == 0)
                first, second = reps_i[cell // width], reps_j[cell % width]
                a = _cell_weight(data, exponents, i, j, first, second, stabilizer)
                fixed = False
                if i == j:
                    fixed = any(
                        where_i[g0.mul[phi[h]][second]] == cell // width
                        and where_i[g0.mul[g0.mul[tau][h]][first]] == cell % width
                        for h in range(g0.order)
                    )
                points.append(YPoint(i, j, rep, n, a, fixed))
    return points


def compare_with_oracle(data: MixedData, cap: Optional[int] = None) -> list[YPoint]:
    """Run both paths; raise OracleMismatch unless they agree point for point."""
    fast = sorted(singular_points_Y(data))
    slow = sorted(bruteforce_singularity_oracle(data, cap))
    if fast != slow:
        missing = Counter(slow) - Counter(fast)
        extra = Counter(fast) - Counter(slow)
        raise OracleMismatch(
            f"fast path differs from the oracle: missing {sorted(missing)}, extra {sorted(extra)}"
        )
    return fast


def assemble_basket_X(data: MixedData, points: Optional[Sequence[YPoint]] = None) -> Basket:
    """The basket of X from the singular points of Y.

    Every fixed point gives a D point. The remaining points are swapped in pairs by the
    involution and each pair gives one C point.
    """
    if points is None:
        points = singular_points_Y(data)
    classes = []
    pending: Counter[tuple[int, int]] = Counter()
    for p in points:
        if p.fixed:
            classes.append(make_class(Flavor.D, p.n, p.a))
        else:
            pending[p.analytic_key] += 1
    for (n, a), count in sorted(pending.items()):
        if count % 2:
            raise PairingParityError(f"{count} non-fixed points of type 1/{n}(1,{a})")
        classes.extend([make_class(Flavor.C, n, a)] * (count // 2))
    basket = Basket.from_classes(classes)
    if 2 * basket.c_count + basket.d != len(points):
        raise PairingParityError("basket does not account for every point of Y")
    return basket
