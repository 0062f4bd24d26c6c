"""The algebraic data of one mixed quasi-etale quotient."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from mixedsurf.core.errors import GenusBelowTwo, NotGenerating
from mixedsurf.covers import GeneratingVector, genus_of_cover
from mixedsurf.extensions import MixedExtension
from mixedsurf.groups import FiniteGroup
from mixedsurf.search import signature_text


@dataclass(frozen=True)
class MixedData:
    """A generating vector of G0 together with an unsplit extension G of G0.

    The vector's entries are elements of ``extension.g0``.
    """

    vector: GeneratingVector
    extension: MixedExtension

    @classmethod
    def build(cls, vector: GeneratingVector, extension: MixedExtension) -> "MixedData":
        """Validate and wrap; raises NotGenerating or GenusBelowTwo."""
        if vector.group is not extension.g0:
            raise NotGenerating("the vector does not live in the extension's G0")
        if not vector.relation_holds():
            raise NotGenerating("the product relation fails")
        if not vector.generates():
            raise NotGenerating("the vector does not generate G0")
        data = cls(vector, extension)
        if data.genus < 2:
            raise GenusBelowTwo(f"g(C) = {data.genus}")
        return data

    @property
    def g0(self) -> FiniteGroup:
        return self.extension.g0

    @property
    def group(self) -> FiniteGroup:
        return self.extension.group

    @property
    def q(self) -> int:
        return self.vector.q

    @property
    def tail(self) -> tuple[int, ...]:
        return self.vector.tail

    @property
    def orders(self) -> tuple[int, ...]:
        return self.vector.orders

    @property
    def signature(self) -> str:
        return signature_text(self.q, self.vector.signature_orders)

    @property
    def tau(self) -> int:
        return self.extension.tau

    @cached_property
    def phi(self) -> tuple[int, ...]:
        return self.extension.phi.images

    @cached_property
    def phi_inverse(self) -> tuple[int, ...]:
        return self.extension.phi.inverse().images

    @cached_property
    def genus(self) -> int:
        return genus_of_cover(self.g0.order, self.q, self.orders)

    @property
    def order_g0(self) -> int:
        return self.g0.order

    @property
    def order_g(self) -> int:
        return self.group.order

    def with_extension(self, extension: MixedExtension) -> "MixedData":
        return MixedData(self.vector, extension)

    def with_vector(self, vector: GeneratingVector) -> "MixedData":
        return MixedData(vector, self.extension)
