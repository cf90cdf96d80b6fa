"""Tests for the symfn module."""

from __future__ import annotations

from fractions import Fraction

import pytest

from heisenberg.algebra import Tensor
from heisenberg.combinat import partitions
from heisenberg.errors import BasisMismatchError, TruncationError
from heisenberg.symfn import (
    SymElem,
    antipode_heisenberg_h,
    complete_series,
    coproduct,
    external,
    h,
    h_to_p,
    heisenberg,
    heisenberg_h,
    heisenberg_p,
    heisenberg_via_zelevinski,
    internal,
    internal_h,
    internal_p,
    iso_external_to_heisenberg,
    iso_external_to_heisenberg_inverse,
    iso_heisenberg_to_internal_truncated,
    one,
    p,
    p_ones_heisenberg,
    p_to_h,
)


def _sum(*elements):
    total = elements[0].like()
    for element in elements:
        total = total + element
    return total


class TestProducts:
    """Tests for the external and internal products."""

    def test_external(self):
        """Test concatenation of partitions."""
        assert external(h(2), h(1)) == h(2, 1)
        assert external(p(3, 2, 1, 1), p(2, 2, 1)) == p(3, 2, 2, 2, 1, 1, 1)
        assert external(one(), h(2, 1)) == h(2, 1)

    def test_external_basis_mismatch(self):
        """Test that h and p cannot be multiplied directly."""
        with pytest.raises(BasisMismatchError):
            external(h(1), p(1))

    @pytest.mark.parametrize(
        "left, right, expected",
        [
            ((2,), (2,), 2 * p(2)),
            ((2,), (1, 1), SymElem("p")),
            ((1, 1), (1, 1), 2 * p(1, 1)),
        ],
    )
    def test_internal_p(self, left, right, expected):
        """Test p_λ ∗ p_μ = δ z(λ) p_λ."""
        assert internal_p(p(*left), p(*right)) == expected

    def test_internal_h_unit(self):
        """Test that h_n is the unit of ∗ in degree n."""
        for lam in partitions(4):
            assert internal_h(h(4), SymElem("h", {lam: 1})) == SymElem("h", {lam: 1})

    def test_internal_dispatch(self):
        """Test that internal picks the product from the basis."""
        assert internal(p(2), p(2)) == internal_p(p(2), p(2))
        assert internal(h(1, 1), h(2)) == h(1, 1)


class TestHeisenbergProduct:
    """Tests for # on Λ."""

    def test_worked_example(self):
        """Test h_(2,1) # h_(3) against its six terms."""
        expected = _sum(h(2, 1), h(1, 1, 1, 1), h(2, 1, 1), h(2, 2, 1), h(2, 1, 1, 1), h(3, 2, 1))
        assert heisenberg_h(h(2, 1), h(3)) == expected

    def test_unit(self):
        """Test that 1 is the unit of #."""
        assert heisenberg_h(one(), h(2, 1)) == h(2, 1)
        assert heisenberg_p(p(2, 1), one("p")) == p(2, 1)

    def test_small_products(self):
        """Test h_1 # h_1, p_1 # p_1 and p_2 # p_2."""
        assert heisenberg_h(h(1), h(1)) == h(1) + h(1, 1)
        assert heisenberg_p(p(1), p(1)) == p(1) + p(1, 1)
        assert heisenberg_p(p(2), p(2)) == 2 * p(2) + p(2, 2)

    def test_p_vanishing_bottom(self):
        """Test that the degree-n part of p_λ # p_μ vanishes for λ ≠ μ."""
        assert heisenberg_p(p(2), p(1, 1)).component(2) == SymElem("p")

    def test_commutative(self):
        """Test that # is commutative on Λ."""
        for lam in partitions(3):
            for mu in partitions(2):
                f, g = SymElem("h", {lam: 1}), SymElem("h", {mu: 1})
                assert heisenberg_h(f, g) == heisenberg_h(g, f)

    def test_dispatch(self):
        """Test that heisenberg picks the formula from the basis."""
        assert heisenberg(p(1), p(1)) == heisenberg_p(p(1), p(1))
        with pytest.raises(BasisMismatchError):
            heisenberg_h(p(1), p(1))

    @pytest.mark.parametrize("u, v", [(1, 1), (2, 1), (2, 2), (3, 2)])
    def test_p_ones_closed_form(self, u, v):
        """Test p_(1^u) # p_(1^v) against the binomial formula."""
        assert heisenberg_p(p(*[1] * u), p(*[1] * v)) == p_ones_heisenberg(u, v)

    def test_zelevinski(self):
        """Test the Zelevinski identity against the matrix formula."""
        assert heisenberg_via_zelevinski(h(2, 1), h(3)) == heisenberg_h(h(2, 1), h(3))
        assert heisenberg_via_zelevinski(p(1, 1), p(1, 1)) == heisenberg_p(p(1, 1), p(1, 1))
        assert heisenberg_via_zelevinski(p(2, 1), one("p")) == p(2, 1)


class TestCoproduct:
    """Tests for Δ on Λ."""

    def test_h2(self):
        """Test Δ(h_2)."""
        expected = Tensor(h(), {((), (2,)): 1, ((1,), (1,)): 1, ((2,), ()): 1})
        assert coproduct(h(2)) == expected

    def test_p_primitive(self):
        """Test that p_n is primitive."""
        assert coproduct(p(3)) == Tensor(p(), {((), (3,)): 1, ((3,), ()): 1})

    def test_p21(self):
        """Test that Δ(p_(2,1)) has four terms."""
        assert len(coproduct(p(2, 1))) == 4


class TestBasisChange:
    """Tests for h_to_p and p_to_h."""

    def test_h1_and_h2(self):
        """Test h_1 = p_1 and h_2 = (p_11 + p_2)/2."""
        assert h_to_p(h(1)) == p(1)
        assert h_to_p(h(2)) == Fraction(1, 2) * p(1, 1) + Fraction(1, 2) * p(2)

    def test_round_trip(self):
        """Test h → p → h for |λ| ≤ 5."""
        for n in range(6):
            for lam in partitions(n):
                f = SymElem("h", {lam: 1})
                assert p_to_h(h_to_p(f)) == f

    def test_heisenberg_through_p(self):
        """Test that the p-basis formula agrees with the h-basis formula."""
        f, g = h(2, 1), h(2)
        assert p_to_h(heisenberg_p(h_to_p(f), h_to_p(g))) == heisenberg_h(f, g)


class TestIsomorphisms:
    """Tests for ψ, φ and the antipode."""

    def test_psi(self):
        """Test ψ(h_(1,1)) = h_1 # h_1 and its inverse."""
        assert iso_external_to_heisenberg(h(1, 1)) == h(1) + h(1, 1)
        assert iso_external_to_heisenberg_inverse(h(1) + h(1, 1)) == h(1, 1)

    def test_psi_multiplicative(self):
        """Test ψ(f ⋆ g) = ψ(f) # ψ(g)."""
        f, g = h(2), h(1, 1)
        psi = iso_external_to_heisenberg
        assert psi(external(f, g)) == heisenberg_h(psi(f), psi(g))

    def test_complete_series(self):
        """Test 1 + h_1 + h_2 + h_3."""
        assert complete_series(3) == one() + h(1) + h(2) + h(3)

    def test_phi(self):
        """Test φ(1) and φ(h_1) truncated."""
        assert iso_heisenberg_to_internal_truncated(one(), 3) == complete_series(3)
        assert iso_heisenberg_to_internal_truncated(h(1), 2) == h(1) + h(1, 1)

    def test_phi_needs_room(self):
        """Test that N below the input degree is refused."""
        with pytest.raises(TruncationError):
            iso_heisenberg_to_internal_truncated(h(3), 2)

    def test_phi_multiplicative(self):
        """Test φ(f # g) = φ(f) ∗ φ(g) up to degree 6."""
        phi = iso_heisenberg_to_internal_truncated
        f, g = h(2, 1), h(1)
        assert phi(heisenberg_h(f, g), 6) == internal(phi(f, 6), phi(g, 6)).truncate(6)

    def test_antipode(self):
        """Test S(h_1) = −h_1 and the antipode axiom on h_2."""
        assert antipode_heisenberg_h(h(1)) == -h(1)
        total = SymElem("h")
        for (a, b), coeff in coproduct(h(2)).items():
            total = total + coeff * heisenberg_h(antipode_heisenberg_h(h(*a)), h(*b))
        assert total == SymElem("h")
