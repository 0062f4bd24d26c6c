"""Tests for the basket and signature frontier."""

import math
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from mixedsurf.search import (
    candidate_classes,
    enumerate_baskets,
    enumerate_signatures,
    parse_signature,
    signature_text,
    target_B,
    theta,
)
from mixedsurf.search.signatures import _passes_bounds
from mixedsurf.singularities import Basket, parse_basket


class TestTargetB:
    """Test the value of B forced by (p_g, q, K^2)."""

    @pytest.mark.parametrize(
        "pg, q, k2, expected",
        [(0, 0, 1, 21), (1, 1, 2, 18), (2, 2, 8, 0), (1, 1, 6, 6)],
    )
    def test_values(self, pg, q, k2, expected):
        """B0 = 24 chi - 3 K^2."""
        assert target_B(pg, q, k2) == expected


class TestBaskets:
    """Test basket enumeration."""

    def test_k2_one_basket(self):
        """B0 = 21 with p_g = 0 admits 2xC(2,1);2xD(2,1)."""
        texts = [b.text for b in enumerate_baskets(21, 0)]
        assert "2xC(2,1);2xD(2,1)" in texts
        assert "C(8,3);C(8,5)" not in texts

    def test_k2_two_basket(self):
        """B0 = 18 with p_g = 1 admits C(2,1);2xD(2,1)."""
        assert "C(2,1);2xD(2,1)" in [b.text for b in enumerate_baskets(18, 1)]

    def test_every_basket_hits_target(self):
        """Every enumerated basket has B = B0, passes integrality and the D bound."""
        for basket in enumerate_baskets(15, 0):
            assert basket.B == 15
            assert basket.is_integral()
            assert basket.d % 2 == 0
            assert basket.d // 2 <= 1

    def test_c83_c85(self):
        """B0 = 15 admits C(8,3);C(8,5)."""
        assert "C(8,3);C(8,5)" in [b.text for b in enumerate_baskets(15, 0)]

    def test_zero_and_negative(self):
        """B0 = 0 gives only the empty basket; negative B0 gives none."""
        assert enumerate_baskets(0, 2) == [Basket()]
        assert enumerate_baskets(-3, 0) == []

    def test_no_duplicates(self):
        """Baskets are listed once each."""
        texts = [b.text for b in enumerate_baskets(18, 1)]
        assert len(texts) == len(set(texts))

    def test_candidate_classes_bound(self):
        """Candidate classes respect the bound and include the small D classes."""
        classes = candidate_classes(Fraction(8))
        assert all(c.B <= 8 for c in classes)
        keys = {c.key for c in classes}
        assert ("C", 2, 1) in keys
        assert ("D", 2, 1) in keys
        assert ("D", 4, 3) not in keys


class TestSignatures:
    """Test signature branches for a basket."""

    def test_k2_two_branch(self):
        """C(2,1);2xD(2,1) at (1,1,2) contains (1;2,2) with beta = 1 and |G0| = 2."""
        branches = enumerate_signatures(parse_basket("C(2,1);2xD(2,1)"), 1, 1, 2)
        match = [b for b in branches if b.signature == "1;2,2"]
        assert match
        branch = match[0]
        assert branch.theta == 1
        assert branch.beta == 1
        assert branch.order_g0 == 2
        assert branch.genus == 2

    def test_k2_one_sixteen(self):
        """2xC(2,1);2xD(2,1) at (0,0,1) contains (0;2,2,2,4) with |G| = 32."""
        branches = enumerate_signatures(parse_basket("2xC(2,1);2xD(2,1)"), 0, 0, 1)
        match = [b for b in branches if b.orders == (2, 2, 2, 4)]
        assert match
        branch = match[0]
        assert branch.theta == Fraction(1, 4)
        assert branch.beta == 2
        assert branch.order_g0 == 16
        assert branch.order_g == 32

    def test_empty_basket(self):
        """The empty basket at (2,2,8) gives exactly (2;-) with |G0| = 2 and g(C) = 3."""
        branches = enumerate_signatures(Basket(), 2, 2, 8)
        assert [b.signature for b in branches] == ["2;-"]
        assert branches[0].theta == 2
        assert branches[0].order_g0 == 2
        assert branches[0].genus == 3

    def test_k2_identity(self):
        """Every branch reproduces its K^2 and the Hurwitz relation."""
        basket = parse_basket("C(2,1);2xD(2,1)")
        for branch in enumerate_signatures(basket, 1, 1, 2):
            assert branch.k2_check() == 2
            assert 2 * (branch.genus - 1) == branch.order_g0 * branch.theta
            assert branch.theta == theta(branch.q, branch.orders)

    def test_canonical_order(self):
        """Branches are sorted by |G0|, then length, then orders."""
        branches = enumerate_signatures(parse_basket("2xC(2,1);2xD(2,1)"), 0, 0, 1)
        keys = [(b.order_g0, b.r, b.orders) for b in branches]
        assert keys == sorted(keys)

    def test_signature_text(self):
        """Signatures render as q;m1,...,mr with '-' for no branch points."""
        assert signature_text(0, (2, 2, 2, 4)) == "0;2,2,2,4"
        assert signature_text(2, ()) == "2;-"
        assert parse_signature("0;4,2,2,2") == (0, (2, 2, 2, 4))
        assert parse_signature("2;-") == (2, ())

    @pytest.mark.parametrize("k2", range(1, 9))
    def test_matches_exhaustive_scan(self, k2):
        """p_g = q = 2: the pruned enumeration equals a scan of every bounded multiset."""
        pg = q = 2
        for basket in enumerate_baskets(target_B(pg, q, k2), pg):
            numerator = 12 * (1 - q + pg) + basket.k - basket.e
            expected = set()
            beta_max = math.floor(numerator / (3 * (2 * q - 2))) if numerator > 0 else 0
            for beta in range(1, beta_max + 1):
                th = numerator / (3 * beta)
                if (2 * beta) % th:
                    continue
                for r in range(int(2 * th) + 1):
                    for orders in combinations_with_replacement(range(2, 4 * beta + 7), r):
                        if theta(q, orders) == th and _passes_bounds(orders, basket, q, beta, th):
                            expected.add((beta, orders))
            found = {(b.beta, b.orders) for b in enumerate_signatures(basket, pg, q, k2)}
            assert found == expected, basket.text
