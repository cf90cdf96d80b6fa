"""Symmetric functions Λ in the complete homogeneous (h) and power-sum (p) bases.

Products:

* ``external``: h_λ ⋆ h_μ = h_{λμ}, p_λ ⋆ p_μ = p_{λμ}
* ``internal``: p_λ ∗ p_μ = z(λ) δ_{λμ} p_λ, and on h through the p-basis
* ``heisenberg``: the margin-matrix rule on h, the split rule on p
"""

from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Hashable

from heisenberg.algebra import Element, Tensor, antipode_step, bilinear, invert_unitriangular, linear
from heisenberg.combinat import (
    Partition,
    concat_partitions,
    enumerate_margin_matrices,
    heisenberg_range,
    partitions,
    z_factor,
)
from heisenberg.errors import BasisMismatchError, TruncationError

logger = logging.getLogger(__name__)

BASES = ("h", "p")


class SymElem(Element):
    """A symmetric function in one of the bases ``h`` or ``p``."""

    space = "sym"

    def __init__(self, basis: str = "h", terms=()) -> None:
        if basis not in BASES:
            raise BasisMismatchError(f"unknown basis {basis!r}, expected one of {BASES}")
        self.basis = basis
        super().__init__(terms)

    def normalize_index(self, index: Hashable) -> Partition:
        return Partition.from_parts(index)

    @property
    def tag(self) -> str:
        return self.basis

    def like(self, terms=()) -> SymElem:
        return SymElem(self.basis, terms)


def h(*parts: int) -> SymElem:
    return SymElem("h", {parts: 1})


def p(*parts: int) -> SymElem:
    return SymElem("p", {parts: 1})


def one(basis: str = "h") -> SymElem:
    return SymElem(basis, {(): 1})


def _expect(f: SymElem, basis: str, operation: str) -> None:
    if f.basis != basis:
        raise BasisMismatchError(f"{operation} expects the {basis}-basis, got {f.basis}")


def _same_basis(f: SymElem, g: SymElem) -> None:
    if f.basis != g.basis:
        raise BasisMismatchError(f"operands are in the {f.basis}- and {g.basis}-basis")


def _concat_rule(lam: Partition, mu: Partition):
    return ((concat_partitions(lam, mu), 1),)


def external(f: SymElem, g: SymElem) -> SymElem:
    _same_basis(f, g)
    return bilinear(f, g, _concat_rule)


def _internal_p_rule(lam: Partition, mu: Partition):
    if lam != mu:
        return ()
    return ((lam, z_factor(lam)),)


def internal_p(f: SymElem, g: SymElem) -> SymElem:
    _expect(f, "p", "internal_p")
    _expect(g, "p", "internal_p")
    return bilinear(f, g, _internal_p_rule)


def internal_h(f: SymElem, g: SymElem) -> SymElem:
    _expect(f, "h", "internal_h")
    _expect(g, "h", "internal_h")
    return p_to_h(internal_p(h_to_p(f), h_to_p(g)))


def internal(f: SymElem, g: SymElem) -> SymElem:
    _same_basis(f, g)
    return internal_p(f, g) if f.basis == "p" else internal_h(f, g)


@lru_cache(maxsize=None)
def _heisenberg_h_rule(alpha: Partition, beta: Partition) -> tuple:
    counts: Counter = Counter()
    for n in heisenberg_range(alpha.weight, beta.weight):
        for matrix in enumerate_margin_matrices(alpha, beta, n):
            counts[matrix.partition()] += 1
    return tuple(counts.items())


def heisenberg_h(f: SymElem, g: SymElem) -> SymElem:
    """h_α # h_β = Σ_n Σ_{M ∈ M^n_{α,β}} h_{p(M)}."""
    _expect(f, "h", "heisenberg_h")
    _expect(g, "h", "heisenberg_h")
    return bilinear(f, g, _heisenberg_h_rule)


@lru_cache(maxsize=None)
def _heisenberg_p_rule(lam: Partition, mu: Partition) -> tuple:
    # γ runs over common sub-multisets; position choices are counted by binomials
    left, right = Counter(lam), Counter(mu)
    shared = sorted(part for part in left if part in right)
    counts: Counter = Counter()
    for taken in product(*(range(min(left[r], right[r]) + 1) for r in shared)):
        gamma = [r for r, k in zip(shared, taken) for _ in range(k)]
        ways = 1
        for r, k in zip(shared, taken):
            ways *= comb(left[r], k) * comb(right[r], k)
        rest_left = left - Counter(gamma)
        rest_right = right - Counter(gamma)
        index = Partition.from_parts([*rest_left.elements(), *gamma, *rest_right.elements()])
        counts[index] += ways * z_factor(gamma)
    return tuple(counts.items())


def heisenberg_p(f: SymElem, g: SymElem) -> SymElem:
    """p_λ # p_μ = Σ_{αγ=λ, γβ=μ} z(γ) p_{αγβ}."""
    _expect(f, "p", "heisenberg_p")
    _expect(g, "p", "heisenberg_p")
    return bilinear(f, g, _heisenberg_p_rule)


def heisenberg(f: SymElem, g: SymElem) -> SymElem:
    _same_basis(f, g)
    return heisenberg_p(f, g) if f.basis == "p" else heisenberg_h(f, g)


def p_ones_heisenberg(u: int, v: int) -> SymElem:
    """Closed form of p_(1^u) # p_(1^v)."""
    terms = {}
    for n in heisenberg_range(u, v):
        terms[(1,) * n] = comb(u, n - v) * comb(v, n - u) * factorial(u + v - n)
    return SymElem("p", terms)


@lru_cache(maxsize=None)
def _coproduct_h_rule(lam: Partition) -> tuple:
    counts: Counter = Counter()
    for split in product(*(range(part + 1) for part in lam)):
        left = Partition.from_parts(x for x in split if x)
        right = Partition.from_parts(part - x for part, x in zip(lam, split) if part - x)
        counts[(left, right)] += 1
    return tuple(counts.items())


@lru_cache(maxsize=None)
def _coproduct_p_rule(lam: Partition) -> tuple:
    counts: Counter = Counter()
    for mask in product((False, True), repeat=len(lam)):
        left = Partition.from_parts(part for part, keep in zip(lam, mask) if keep)
        right = Partition.from_parts(part for part, keep in zip(lam, mask) if not keep)
        counts[(left, right)] += 1
    return tuple(counts.items())


def coproduct(f: SymElem) -> Tensor:
    """The external coproduct: Δ(h_n) = Σ h_i⊗h_{n−i}, p_n primitive."""
    rule = _coproduct_p_rule if f.basis == "p" else _coproduct_h_rule
    return linear(f, rule, Tensor(f))


def heisenberg_tensor(left: Tensor, right: Tensor) -> Tensor:
    """Componentwise # on Λ⊗Λ."""
    return left.componentwise(right, heisenberg)


def heisenberg_via_zelevinski(f: SymElem, g: SymElem) -> SymElem:
    """f # g = Σ f₁ ⋆ (f₂ ∗ g₁) ⋆ g₂."""
    _same_basis(f, g)
    result = f.like()
    g_split = coproduct(g).items()
    for (f1, f2), cf in coproduct(f).items():
        for (g1, g2), cg in g_split:
            if f2.weight != g1.weight:
                continue
            middle = internal(f.term(f2), f.term(g1))
            if middle:
                result = result + (cf * cg) * external(external(f.term(f1), middle), f.term(g2))
    return result


@lru_cache(maxsize=None)
def _h_part_in_p(n: int) -> tuple:
    return tuple((lam, Fraction(1, z_factor(lam))) for lam in partitions(n))


@lru_cache(maxsize=None)
def _h_to_p_rule(lam: Partition) -> tuple:
    result = one("p")
    for part in lam:
        result = external(result, SymElem("p", _h_part_in_p(part)))
    return tuple(result.items())


def h_to_p(f: SymElem) -> SymElem:
    """Expand using h_n = Σ_{λ ⊢ n} p_λ / z(λ)."""
    _expect(f, "h", "h_to_p")
    return linear(f, _h_to_p_rule, SymElem("p"))


@lru_cache(maxsize=None)
def _p_to_h_rule(lam: Partition) -> tuple:
    # h_λ = c·p_λ + (strict refinements of λ), so solve from the longest partitions up
    expansion = SymElem("p", _h_to_p_rule(lam))
    lead = expansion.coefficient(lam)
    result = h(*lam)
    for nu, coeff in expansion.items():
        if nu != lam:
            result = result - coeff * SymElem("h", _p_to_h_rule(nu))
    return tuple((result * (1 / lead)).items())


def p_to_h(f: SymElem) -> SymElem:
    _expect(f, "p", "p_to_h")
    return linear(f, _p_to_h_rule, SymElem("h"))


@lru_cache(maxsize=None)
def _iso_rule(lam: Partition) -> tuple:
    result = one("h")
    for part in lam:
        result = heisenberg_h(result, h(part))
    return tuple(result.items())


def iso_external_to_heisenberg(f: SymElem) -> SymElem:
    """h_{(a1..ar)} ↦ h_{a1} # ⋯ # h_{ar}."""
    _expect(f, "h", "iso_external_to_heisenberg")
    return linear(f, _iso_rule)


def iso_external_to_heisenberg_inverse(f: SymElem) -> SymElem:
    _expect(f, "h", "iso_external_to_heisenberg_inverse")
    return invert_unitriangular(f, iso_external_to_heisenberg)


def complete_series(N: int, basis: str = "h") -> SymElem:
    """Σ_{n ≤ N} h_(n), expressed in the requested basis."""
    series = SymElem("h", {(n,) if n else (): 1 for n in range(N + 1)})
    return h_to_p(series) if basis == "p" else series


def iso_heisenberg_to_internal_truncated(f: SymElem, N: int) -> SymElem:
    """φ(f) = f ⋆ Σ_n h_(n), kept up to degree N."""
    _expect(f, "h", "iso_heisenberg_to_internal_truncated")
    if f.max_degree() > N:
        raise TruncationError(f"element has degree {f.max_degree()} above the cutoff N={N}")
    return external(f, complete_series(N)).truncate(N)


@lru_cache(maxsize=None)
def _antipode_h_rule(lam: Partition) -> tuple:
    if not lam:
        return ((lam, 1),)
    return tuple(antipode_step(h(*lam), coproduct, heisenberg_h, antipode_heisenberg_h).items())


def antipode_heisenberg_h(f: SymElem) -> SymElem:
    """Antipode of (Λ, #, Δ) by recursion on the graded coproduct."""
    _expect(f, "h", "antipode_heisenberg_h")
    return linear(f, _antipode_h_rule)
