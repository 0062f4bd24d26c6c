"""Tests for generating vectors and Hurwitz reduction."""

import pytest

from mixedsurf.core.errors import MixedContextMissing, NonIntegralGenus
from mixedsurf.covers import (
    GeneratingVector,
    enumerate_generating_vectors,
    genus_of_cover,
    hurwitz_equivalent,
    hurwitz_reduce,
    relation_product,
    vector_from_entries,
)
from mixedsurf.config import reload_settings
from mixedsurf.extensions import make_extension
from mixedsurf.groups import NamedGroupDescriptor, build_group, construct_named, generated_subgroup


def _z2_squared_in_z2_z4():
    """G0 = <a^2, b> inside G = <a> x <b> = Z4 x Z2; no outside involution."""
    group = build_group([[2, 3, 4, 1, 5, 6], [1, 2, 3, 4, 6, 5]])
    a, b = group.generators
    x = group.power(a, 2)
    ext = make_extension(group, generated_subgroup(group, [x, b]))
    return ext, ext.from_g(x), ext.from_g(b), ext.from_g(group.mul[x][b])


class TestGenus:
    """Test the Riemann-Hurwitz genus."""

    @pytest.mark.parametrize(
        "order, q, orders, expected",
        [(2, 2, (), 3), (16, 0, (2, 2, 2, 4), 3), (2, 1, (2, 2), 2), (10, 1, (5,), 5), (3, 0, (3, 3), 0)],
    )
    def test_values(self, order, q, orders, expected):
        """2g - 2 = |G| (2q - 2 + sum(1 - 1/m))."""
        assert genus_of_cover(order, q, orders) == expected

    def test_non_integral(self):
        """An odd or fractional 2g - 2 is rejected."""
        with pytest.raises(NonIntegralGenus):
            genus_of_cover(4, 0, (4, 4, 4))
        with pytest.raises(NonIntegralGenus):
            genus_of_cover(3, 0, (2, 2, 2, 2, 2))


class TestGeneratingVectors:
    """Test generating vector enumeration."""

    def test_z2_genus_two(self, z2_in_z4):
        """Z2 with signature (2; -) has the 15 nonzero quadruples."""
        vectors = enumerate_generating_vectors(z2_in_z4.g0, 2, ())
        assert len(vectors) == 15
        assert all(v.is_valid() for v in vectors)
        assert vectors == sorted(vectors)

    def test_z2_one_two_two(self, z2_in_z4):
        """Z2 with (1; 2, 2): d and e are free, both tail entries are the involution."""
        vectors = enumerate_generating_vectors(z2_in_z4.g0, 1, (2, 2))
        assert len(vectors) == 4
        assert all(v.tail == (1, 1) for v in vectors)

    def test_z3_four_points(self):
        """Z3 with (0; 3, 3, 3, 3): three free entries whose sum is nonzero."""
        z3 = construct_named(NamedGroupDescriptor.cyclic(3))
        vectors = enumerate_generating_vectors(z3, 0, (3, 3, 3, 3))
        assert len(vectors) == 6
        for v in vectors:
            assert v.orders == (3, 3, 3, 3)
            assert relation_product(z3, v.genus_part, v.tail) == 0

    def test_low_genus_is_empty(self):
        """Covers of genus below 2 give no vectors."""
        z3 = construct_named(NamedGroupDescriptor.cyclic(3))
        assert enumerate_generating_vectors(z3, 0, (3, 3)) == []
        assert enumerate_generating_vectors(z3, 0, (3, 3, 3)) == []

    def test_non_integral_is_empty(self):
        """Signatures with fractional genus give no vectors."""
        z4 = construct_named(NamedGroupDescriptor.cyclic(4))
        assert enumerate_generating_vectors(z4, 0, (4, 4, 4)) == []

    def test_closed_under_conjugation(self):
        """Non-abelian groups: the list contains every conjugate of every vector."""
        s3 = construct_named(NamedGroupDescriptor.dihedral(3))
        vectors = enumerate_generating_vectors(s3, 0, (2, 2, 3, 3))
        keys = {(v.genus_part, v.tail) for v in vectors}
        assert vectors
        for v in vectors:
            for t in range(s3.order):
                image = tuple(s3.conjugate(x, t) for x in v.tail)
                assert ((), image) in keys

    def test_vector_from_entries(self, z2_in_z4):
        """A flat entry list splits after 2q entries."""
        v = vector_from_entries(z2_in_z4.g0, 1, [0, 1, 1, 1])
        assert v.genus_part == (0, 1)
        assert v.tail == (1, 1)
        assert v.pairs() == [(0, 1)]
        assert str(v) == "(0,1; 1,1)"


class TestHurwitz:
    """Test reduction modulo Hurwitz moves."""

    def test_genus_two_single_orbit(self, z2_in_z4):
        """All 15 vectors of Z2 of signature (2; -) form one orbit."""
        vectors = enumerate_generating_vectors(z2_in_z4.g0, 2, ())
        orbits = hurwitz_reduce(vectors, z2_in_z4)
        assert len(orbits) == 1
        assert orbits[0].size == 15
        assert orbits[0].representative == vectors[0]

    def test_one_two_two_single_orbit(self, z2_in_z4):
        """The four vectors of signature (1; 2, 2) form one orbit."""
        vectors = enumerate_generating_vectors(z2_in_z4.g0, 1, (2, 2))
        orbits = hurwitz_reduce(vectors, z2_in_z4)
        assert len(orbits) == 1
        assert orbits[0].size == 4

    def test_orbits_partition(self, z4_in_z8):
        """Orbit sizes add up to the number of enumerated vectors."""
        vectors = enumerate_generating_vectors(z4_in_z8.g0, 1, (2, 2))
        orbits = hurwitz_reduce(vectors, z4_in_z8)
        assert sum(o.size for o in orbits) == len(vectors)
        reps = [o.representative for o in orbits]
        assert reps == sorted(reps)

    def test_equivalent(self, z2_in_z4):
        """Two members of one orbit are equivalent."""
        vectors = enumerate_generating_vectors(z2_in_z4.g0, 2, ())
        assert hurwitz_equivalent(vectors[0], vectors[-1], z2_in_z4)

    def test_empty(self, z2_in_z4):
        """Nothing to reduce gives no orbits."""
        assert hurwitz_reduce([], z2_in_z4) == []

    def test_needs_extension(self, z2_in_z4):
        """Reduction without the extension group is refused."""
        vector = GeneratingVector(2, (1, 0, 0, 1), (), z2_in_z4.g0)
        with pytest.raises(MixedContextMissing):
            hurwitz_reduce([vector], None)

    def test_outer_automorphisms_join_orbits(self):
        """In Z4 x Z2 over Z2^2 the automorphism b -> a^2 b joins the tails (b, b) and (a^2 b, a^2 b)."""
        ext, x, y, xy = _z2_squared_in_z2_z4()
        assert ext.stabilizer_actions
        vectors = enumerate_generating_vectors(ext.g0, 1, (2, 2))
        orbits = hurwitz_reduce(vectors, ext)
        assert sorted(o.total_size for o in orbits) == [12, 24]
        by_tail = {v.tail[0]: v for v in vectors}
        assert hurwitz_equivalent(by_tail[y], by_tail[xy], ext)
        assert not hurwitz_equivalent(by_tail[x], by_tail[y], ext)

    def test_automorphism_cap_falls_back_to_conjugation(self, monkeypatch):
        """Past the automorphism cap only conjugation identifies vectors."""
        monkeypatch.setenv("MIXEDSURF_AUTOMORPHISM_CAP", "1")
        reload_settings()
        ext, *_ = _z2_squared_in_z2_z4()
        assert ext.stabilizer_actions == ()
        orbits = hurwitz_reduce(enumerate_generating_vectors(ext.g0, 1, (2, 2)), ext)
        assert sorted(o.total_size for o in orbits) == [12, 12, 12]
