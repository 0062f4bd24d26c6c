"""Albanese fibration of the surfaces with q = 1.

The Albanese map of S factors through the symmetric square of the elliptic curve C/G0;
its fibre genus is read off the monodromy image of the product cover.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from mixedsurf.core.errors import IntegralityViolation, WrongIrregularity
from mixedsurf.groups import FiniteGroup, Subgroup, direct_product, generated_subgroup

from .data import MixedData

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlbaneseData:
    image: Subgroup
    m_union: int
    deg_psi: int
    g_alb: int

    @property
    def image_order(self) -> int:
        return self.image.order


def _product(data: MixedData) -> FiniteGroup:
    return direct_product(data.g0, data.g0, label=f"{data.g0.label}^2")


def monodromy_image(data: MixedData, product: FiniteGroup | None = None) -> Subgroup:
    """The subgroup of G0 x G0 generated by (a, a^-1), (b, b^-1), (h_i, 1) and (1, h_i)."""
    if data.q != 1:
        raise WrongIrregularity(f"the Albanese fibre genus needs q = 1, got q = {data.q}")
    product = product or _product(data)
    g0 = data.g0
    width = g0.order
    a, b = data.vector.genus_part
    gens = [a * width + g0.inverse[a], b * width + g0.inverse[b]]
    for h in data.tail:
        gens += [h * width, h]
    return generated_subgroup(product, gens)


def twisted_union_size(data: MixedData, image: Subgroup) -> int:
    """|union of g.image over g in G| for g(x, y) = (gx, phi(g)y), tau'g(x, y) = (phi(g)y, tau g x)."""
    g0 = data.g0
    width = g0.order
    table = g0.table.astype(np.int64)
    members = np.asarray(image.members, dtype=np.int64)
    xs, ys = np.divmod(members, width)
    phi = np.asarray(data.phi, dtype=np.int64)
    covered = np.zeros(width * width, dtype=bool)
    for g in range(width):
        covered[table[g, xs] * width + table[phi[g], ys]] = True
        tg = table[data.tau, g]
        covered[table[phi[g], ys] * width + table[tg, xs]] = True
    return int(covered.sum())


def albanese_genus(data: MixedData) -> AlbaneseData:
    """Image, union size M, deg psi = |G0|^2 / M and g_alb = 1 + (g(C) - 1) M / |G0|^2."""
    image = monodromy_image(data)
    m_union = twisted_union_size(data, image)
    square = data.order_g0 ** 2
    if square % m_union:
        raise IntegralityViolation(f"deg psi = {square}/{m_union}")
    numerator = (data.genus - 1) * m_union
    if numerator % square:
        raise IntegralityViolation(f"g_alb - 1 = {numerator}/{square}")
    result = AlbaneseData(image, m_union, square // m_union, 1 + numerator // square)
    logger.debug("|image| = %d, M = %d, g_alb = %d", image.order, m_union, result.g_alb)
    return result
