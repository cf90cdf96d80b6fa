"""The graded space kS∞ spanned by permutations of every degree.

Products:

* ``compose``: (στ)(i) = σ(τ(i)) within one degree, zero across degrees
* ``mr_product``: the Malvenuto–Reutenauer shuffle product
* ``heisenberg_perm``: the Heisenberg product, top component ``mr_product``
  and degree-diagonal component ``compose``
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import lru_cache
from typing import Hashable

from heisenberg.algebra import Element, Tensor, bilinear, linear
from heisenberg.combinat import (
    Composition,
    Permutation,
    beta_max_shuffle,
    composition_to_subset,
    heisenberg_range,
    parabolic_embed,
    permutations,
    shuffles,
)
from heisenberg.nsymfn import NSymElem

logger = logging.getLogger(__name__)


class PermElem(Element):
    space = "perm"

    def normalize_index(self, index: Hashable) -> Permutation:
        return index if isinstance(index, Permutation) else Permutation(index)


def perm(*image: int) -> PermElem:
    """``perm(5, 2, 4, 1, 3)`` is the permutation 52413."""
    return PermElem({image: 1})


def unit() -> PermElem:
    return PermElem({(): 1})


def counit(f: PermElem):
    return f.coefficient(())


def _compose_rule(sigma: Permutation, tau: Permutation):
    if sigma.n != tau.n:
        return ()
    return ((sigma.compose(tau), 1),)


def compose(f: PermElem, g: PermElem) -> PermElem:
    return bilinear(f, g, _compose_rule)


@lru_cache(maxsize=None)
def _mr_rule(sigma: Permutation, tau: Permutation) -> tuple:
    block = parabolic_embed(sigma, tau)
    return tuple((xi.compose(block), 1) for xi in shuffles(sigma.n, tau.n))


def mr_product(f: PermElem, g: PermElem) -> PermElem:
    """σ ⋆ τ = Σ_{ξ ∈ Sh(p,q)} ξ∘(σ×τ)."""
    return bilinear(f, g, _mr_rule)


@lru_cache(maxsize=None)
def _heisenberg_rule(sigma: Permutation, tau: Permutation) -> tuple:
    p, q = sigma.n, tau.n
    counts: Counter = Counter()
    for n in heisenberg_range(p, q):
        right = parabolic_embed(Permutation.identity(n - q), tau)
        swap = beta_max_shuffle(2 * n - p - q, p + q - n)
        for eta in shuffles(p + q - n, n - q):
            middle = parabolic_embed(sigma.compose(eta), Permutation.identity(n - p)).compose(swap).compose(right)
            for xi in shuffles(p, n - p):
                counts[xi.compose(middle)] += 1
    logger.debug("%s # %s: %d terms", sigma, tau, len(counts))
    return tuple(counts.items())


def heisenberg_perm(f: PermElem, g: PermElem) -> PermElem:
    """σ # τ = Σ_n Σ_{ξ, η} ξ∘((σ∘η)×Id_{n−p})∘β_{2n−p−q,p+q−n}∘(Id_{n−q}×τ).

    ξ runs over Sh(p, n−p) and η over Sh(p+q−n, n−q).
    """
    return bilinear(f, g, _heisenberg_rule)


external = mr_product
internal = compose
heisenberg = heisenberg_perm


@lru_cache(maxsize=None)
def _coproduct_rule(sigma: Permutation) -> tuple:
    # σ = (σ_p × σ'_q)∘ξ⁻¹ where ξ sorts the positions of the values ≤ p first
    terms = []
    for p in range(sigma.n + 1):
        low = Permutation(v for v in sigma if v <= p)
        high = Permutation(v - p for v in sigma if v > p)
        terms.append(((low, high), 1))
    return tuple(terms)


def coproduct_perm(f: PermElem) -> Tensor:
    """Δ(σ) = Σ_p σ_p ⊗ σ'_{n−p}.

    For 52413 the terms are ()⊗52413, 1⊗4132, 21⊗321, 213⊗21, 2413⊗1
    and 52413⊗().
    """
    return linear(f, _coproduct_rule, Tensor(f))


coproduct = coproduct_perm


def heisenberg_tensor(left: Tensor, right: Tensor) -> Tensor:
    return left.componentwise(right, heisenberg_perm)


def mr_tensor(left: Tensor, right: Tensor) -> Tensor:
    return left.componentwise(right, mr_product)


def compose_tensor(left: Tensor, right: Tensor) -> Tensor:
    return left.componentwise(right, compose)


@lru_cache(maxsize=None)
def _embed_rule(alpha: Composition) -> tuple:
    allowed = composition_to_subset(alpha)
    return tuple((sigma, 1) for sigma in permutations(alpha.weight) if sigma.descent_set() <= allowed)


def embed_descents(f: NSymElem) -> PermElem:
    """X_α ↦ Σ σ over the permutations with Des(σ) inside the cuts of α."""
    return linear(f, _embed_rule, PermElem())
