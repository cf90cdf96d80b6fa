"""Non-commutative symmetric functions Σ in the X_α basis.

X_α is the sum of all permutations whose descent set lies inside the set
of partial sums of α; see :func:`heisenberg.permalg.embed_descents`.
"""

from __future__ import annotations

import logging
from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Hashable

from heisenberg.algebra import Element, Tensor, antipode_step, bilinear, invert_unitriangular, linear
from heisenberg.combinat import Composition, enumerate_margin_matrices, heisenberg_range
from heisenberg.errors import TruncationError
from heisenberg.symfn import SymElem

logger = logging.getLogger(__name__)


class NSymElem(Element):
    space = "X"

    def normalize_index(self, index: Hashable) -> Composition:
        return index if isinstance(index, Composition) else Composition(index)


def X(*parts: int) -> NSymElem:
    return NSymElem({parts: 1})


def _concat_rule(alpha: Composition, beta: Composition):
    return ((Composition((*alpha, *beta)), 1),)


def external_X(f: NSymElem, g: NSymElem) -> NSymElem:
    """X_α ⋆ X_β = X_{α·β}."""
    return bilinear(f, g, _concat_rule)


@lru_cache(maxsize=None)
def _heisenberg_rule(alpha: Composition, beta: Composition) -> tuple:
    counts: Counter = Counter()
    for n in heisenberg_range(alpha.weight, beta.weight):
        for matrix in enumerate_margin_matrices(alpha, beta, n):
            counts[matrix.composition()] += 1
    return tuple(counts.items())


def heisenberg_X(f: NSymElem, g: NSymElem) -> NSymElem:
    """X_α # X_β = Σ_n Σ_{M ∈ M^n_{α,β}} X_{c(M)}."""
    return bilinear(f, g, _heisenberg_rule)


@lru_cache(maxsize=None)
def _internal_rule(alpha: Composition, beta: Composition) -> tuple:
    if alpha.weight != beta.weight:
        return ()
    counts = Counter(m.composition() for m in enumerate_margin_matrices(alpha, beta, alpha.weight))
    return tuple(counts.items())


def internal_X(f: NSymElem, g: NSymElem) -> NSymElem:
    """The degree-diagonal part of #: Solomon's product on descent classes."""
    return bilinear(f, g, _internal_rule)


@lru_cache(maxsize=None)
def _coproduct_rule(alpha: Composition) -> tuple:
    counts: Counter = Counter()
    for split in product(*(range(part + 1) for part in alpha)):
        left = Composition(x for x in split if x)
        right = Composition(part - x for part, x in zip(alpha, split) if part - x)
        counts[(left, right)] += 1
    return tuple(counts.items())


def coproduct_X(f: NSymElem) -> Tensor:
    """Δ(X_α) = Σ_{b+c=α} X_b ⊗ X_c with zero parts dropped."""
    return linear(f, _coproduct_rule, Tensor(f))


def heisenberg_tensor(left: Tensor, right: Tensor) -> Tensor:
    return left.componentwise(right, heisenberg_X)


def project_pi(f: NSymElem) -> SymElem:
    """π(X_α) = h_{sort(α)}."""
    return SymElem("h", f.items())


@lru_cache(maxsize=None)
def _psi_rule(alpha: Composition) -> tuple:
    result = X()
    for part in alpha:
        result = heisenberg_X(result, X(part))
    return tuple(result.items())


def iso_psi(f: NSymElem) -> NSymElem:
    """ψ(X_{(a1..ar)}) = X_{a1} # ⋯ # X_{ar}; ψ sends ⋆ to #."""
    return linear(f, _psi_rule)


def iso_psi_inverse(f: NSymElem) -> NSymElem:
    return invert_unitriangular(f, iso_psi)


@lru_cache(maxsize=None)
def _antipode_rule(alpha: Composition) -> tuple:
    if not alpha:
        return ((alpha, 1),)
    return tuple(antipode_step(X(*alpha), coproduct_X, heisenberg_X, antipode_heisenberg_X).items())


def antipode_heisenberg_X(f: NSymElem) -> NSymElem:
    """Antipode of (Σ, #, Δ).

    Computed degree by degree from Σ S(f₁) # f₂ = ε(f); the result is
    usually inhomogeneous.
    """
    return linear(f, _antipode_rule)


def heisenberg_power_X1(n: int) -> NSymElem:
    """X_(1) # ⋯ # X_(1), n factors."""
    result = X()
    for _ in range(n):
        result = heisenberg_X(result, X(1))
    return result


def phi_X(f: NSymElem, N: int) -> NSymElem:
    """f ⋆ Σ_n X_(n), kept up to degree N.

    Unlike its commutative counterpart this map is not multiplicative from
    # to ∗.
    """
    if f.max_degree() > N:
        raise TruncationError(f"element has degree {f.max_degree()} above the cutoff N={N}")
    series = NSymElem({(n,) if n else (): 1 for n in range(N + 1)})
    return external_X(f, series).truncate(N)
