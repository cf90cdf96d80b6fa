"""Tests for the permalg module."""

from __future__ import annotations

import pytest

from heisenberg.algebra import Tensor
from heisenberg.combinat import compositions, permutations
from heisenberg.nsymfn import X, heisenberg_X
from heisenberg.permalg import (
    PermElem,
    compose,
    compose_tensor,
    coproduct_perm,
    counit,
    embed_descents,
    heisenberg_perm,
    heisenberg_tensor,
    mr_product,
    perm,
    unit,
)


def _perms(*words: str) -> PermElem:
    total = PermElem()
    for word in words:
        total = total + perm(*(int(c) for c in word))
    return total


class TestProducts:
    """Tests for ∘, ⋆ and # on permutations."""

    def test_compose(self):
        """Test 231∘312 and the zero product across degrees."""
        assert compose(perm(2, 3, 1), perm(3, 1, 2)) == perm(1, 2, 3)
        assert compose(perm(2, 1), perm(1, 3, 2)) == PermElem()

    def test_mr_product(self):
        """Test 1⋆1 and the number of terms of 12⋆132."""
        assert mr_product(perm(1), perm(1)) == _perms("12", "21")
        assert len(mr_product(perm(1, 2), perm(1, 3, 2))) == 10

    def test_heisenberg_worked_example(self):
        """Test 12 # 132 degree by degree."""
        product = heisenberg_perm(perm(1, 2), perm(1, 3, 2))
        assert product.degrees() == [3, 4, 5]
        assert len(product.component(3)) == 3
        assert len(product.component(4)) == 12
        assert len(product.component(5)) == 10
        assert product.component(3) == _perms("132", "231", "321")
        middle = _perms("1234", "1243", "1324", "2134", "2143", "2314", "3124", "3142", "3214", "4123", "4132", "4213")
        assert product.component(4) == middle
        red = _perms("12354", "13254", "14253", "15243", "23154", "24153", "25143", "34152", "35142", "45132")
        assert product.component(5) == red

    def test_heisenberg_extremes(self):
        """Test that the top part is ⋆ and the diagonal part is ∘."""
        for sigma in permutations(2):
            for tau in permutations(2):
                f, g = PermElem({sigma: 1}), PermElem({tau: 1})
                product = heisenberg_perm(f, g)
                assert product.component(4) == mr_product(f, g)
                assert product.component(2) == compose(f, g)

    def test_unit(self):
        """Test that the empty permutation is the unit of # and ⋆."""
        f = perm(2, 1, 3)
        assert heisenberg_perm(unit(), f) == f
        assert heisenberg_perm(f, unit()) == f
        assert mr_product(unit(), f) == f
        assert counit(f + 3 * unit()) == 3

    def test_associative(self):
        """Test associativity of # on a small triple."""
        f, g, k = perm(1), perm(2, 1), perm(1)
        assert heisenberg_perm(heisenberg_perm(f, g), k) == heisenberg_perm(f, heisenberg_perm(g, k))


class TestCoproduct:
    """Tests for Δ on permutations."""

    def test_52413(self):
        """Test the six terms of Δ(52413)."""
        pairs = [
            ((), (5, 2, 4, 1, 3)),
            ((1,), (4, 1, 3, 2)),
            ((2, 1), (3, 2, 1)),
            ((2, 1, 3), (2, 1)),
            ((2, 4, 1, 3), (1,)),
            ((5, 2, 4, 1, 3), ()),
        ]
        expected = Tensor(PermElem(), {pair: 1 for pair in pairs})
        assert coproduct_perm(perm(5, 2, 4, 1, 3)) == expected

    def test_compatible_with_heisenberg(self):
        """Test Δ(σ # τ) = Δ(σ) # Δ(τ)."""
        f, g = perm(2, 1), perm(1)
        assert coproduct_perm(heisenberg_perm(f, g)) == heisenberg_tensor(coproduct_perm(f), coproduct_perm(g))

    def test_not_compatible_with_composition(self):
        """Test that Δ does not respect ∘ for σ=213, τ=132."""
        sigma, tau = perm(2, 1, 3), perm(1, 3, 2)
        assert coproduct_perm(compose(sigma, tau)) != compose_tensor(coproduct_perm(sigma), coproduct_perm(tau))


class TestEmbedding:
    """Tests for X_α ↦ sum of permutations with small descent sets."""

    def test_x21(self):
        """Test the image of X_21."""
        assert embed_descents(X(2, 1)) == _perms("123", "132", "231")

    def test_sizes(self):
        """Test that X_(1^n) maps to the sum of all of S_n."""
        assert len(embed_descents(X(1, 1, 1))) == 6
        assert embed_descents(X(3)) == perm(1, 2, 3)

    @pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1, 2))])
    def test_morphism(self, alpha, beta):
        """Test that the embedding sends # on Σ to # on permutations."""
        left = embed_descents(heisenberg_X(X(*alpha), X(*beta)))
        right = heisenberg_perm(embed_descents(X(*alpha)), embed_descents(X(*beta)))
        assert left == right

    def test_descent_classes_partition(self):
        """Test that the classes of compositions of 4 cover S_4 once."""
        covered = PermElem()
        for alpha in compositions(4):
            covered = covered + PermElem({sigma: 1 for sigma in permutations(4) if sigma.descent_composition() == alpha})
        assert covered == PermElem({sigma: 1 for sigma in permutations(4)})
