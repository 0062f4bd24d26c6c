"""Numerical invariants of the minimal resolution S of X."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from mixedsurf.core.errors import IntegralityViolation, NoetherViolation
from mixedsurf.core.schemas import Minimality
from mixedsurf.singularities import Basket, Flavor, make_class

from .data import MixedData

# the one basket outside the {-2, -3} criterion whose resolution is known to be minimal
MINIMAL_EXCEPTION = Basket.from_counts({make_class(Flavor.C, 4, 1): 2, make_class(Flavor.C, 2, 1): 3})


@dataclass(frozen=True)
class SurfaceInvariants:
    k2: int
    e: int
    chi: int
    pg: int
    q: int
    d: int
    genus: int
    order_g: int
    minimal: Minimality
    pg_t: int
    k_contributions: dict[str, Fraction] = field(default_factory=dict, compare=False)

    @property
    def beta(self) -> int:
        return self.genus - 1


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityViolation(f"{what} = {value} is not an integer")
    return int(value)


def minimality(q: int, basket: Basket) -> Minimality:
    """Minimal when q >= 1, when every exceptional curve is a (-2)- or (-3)-curve, or for
    the basket 2xC(4,1);3xC(2,1); otherwise Unknown."""
    if q >= 1:
        return Minimality.MINIMAL
    if all(s in (-2, -3) for s in basket.self_intersections()):
        return Minimality.MINIMAL
    if basket == MINIMAL_EXCEPTION:
        return Minimality.MINIMAL
    return Minimality.UNKNOWN


def surface_invariants(data: MixedData, basket: Basket) -> SurfaceInvariants:
    """K^2, e, chi, p_g and q of S from the cover data and the basket of X."""
    order_g = data.order_g
    beta_sq = Fraction((data.genus - 1) ** 2, order_g)
    k2 = _integral(8 * beta_sq - basket.k, "K^2")
    e = _integral(4 * beta_sq + basket.e, "e")
    if (k2 + e) % 12:
        raise NoetherViolation(f"K^2 + e = {k2 + e} is not divisible by 12")
    chi = (k2 + e) // 12
    q = data.q
    pg = chi - 1 + q
    if basket.d % 2:
        raise IntegralityViolation(f"odd number {basket.d} of D points")
    pg_t = 2 * pg + 1 - basket.d // 2
    if pg_t < 0:
        raise IntegralityViolation(f"p_g(T) = {pg_t} is negative")
    contributions: dict[str, Fraction] = {}
    for cls, mult in basket.items:
        contributions[str(cls)] = cls.k * mult
    return SurfaceInvariants(
        k2=k2,
        e=e,
        chi=chi,
        pg=pg,
        q=q,
        d=basket.d,
        genus=data.genus,
        order_g=order_g,
        minimal=minimality(q, basket),
        pg_t=pg_t,
        k_contributions=contributions,
    )
