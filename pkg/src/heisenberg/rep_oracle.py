"""Brute-force double cosets behind the margin-matrix formula for h_α # h_β.

The degree-n part of h_α # h_β comes from the double cosets

    (S_p ×_n S_q) \\ (S_p × S_q) / (S_α × S_β)

and this module enumerates them by sweeping orbits over the whole group,
then compares their number, their stabilizer orders and a dimension count
against M^n_{α,β}. Groups are explicit sets of pairs (a, b) ∈ S_p × S_q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Sequence

from heisenberg.combinat import (
    Composition,
    MarginMatrix,
    Permutation,
    compositions,
    enumerate_margin_matrices,
    heisenberg_range,
    parabolic_embed,
    permutations,
)
from heisenberg.config import DEFAULT_LIMITS, Limits
from heisenberg.errors import EmptyDomainError, InvalidIndexError, SizeGuardError

logger = logging.getLogger(__name__)

Pair = tuple[Permutation, Permutation]


def _multiply(x: Pair, y: Pair) -> Pair:
    return (x[0].compose(y[0]), x[1].compose(y[1]))


def _invert(x: Pair) -> Pair:
    return (x[0].inverse(), x[1].inverse())


def _block_group(parts: Sequence[int]) -> list[Permutation]:
    """S_{a1} × S_{a2} × ⋯ as permutations of [1, Σ a_i]."""
    result = [Permutation()]
    for part in parts:
        result = [parabolic_embed(x, y) for x in result for y in permutations(part)]
    return result


@dataclass(frozen=True)
class SubgroupSpec:
    """An explicitly enumerated subgroup of S_p × S_q."""

    name: str
    p: int
    q: int
    elements: frozenset = field(repr=False)

    def __post_init__(self) -> None:
        identity = (Permutation.identity(self.p), Permutation.identity(self.q))
        if identity not in self.elements:
            raise InvalidIndexError(f"{self.name} does not contain the identity")
        for x in self.elements:
            if _invert(x) not in self.elements:
                raise InvalidIndexError(f"{self.name} is not closed under inverses")
            for y in self.elements:
                if _multiply(x, y) not in self.elements:
                    raise InvalidIndexError(f"{self.name} is not closed under products")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    @classmethod
    def full(cls, p: int, q: int) -> SubgroupSpec:
        return cls(f"S_{p}×S_{q}", p, q, frozenset(product(permutations(p), permutations(q))))

    @classmethod
    def parabolic(cls, alpha: Sequence[int], beta: Sequence[int]) -> SubgroupSpec:
        """S_α × S_β."""
        alpha, beta = Composition(alpha), Composition(beta)
        elements = frozenset(product(_block_group(alpha), _block_group(beta)))
        return cls(f"S_{tuple(alpha)}×S_{tuple(beta)}", alpha.weight, beta.weight, elements)

    @classmethod
    def interpolating(cls, p: int, q: int, n: int) -> SubgroupSpec:
        """S_p ×_n S_q = {(a×b, b×c)} with a ∈ S_{n−q}, b ∈ S_{p+q−n}, c ∈ S_{n−p}."""
        if n not in heisenberg_range(p, q):
            raise EmptyDomainError(f"n={n} outside [{max(p, q)}, {p + q}]")
        elements = frozenset(
            (parabolic_embed(a, b), parabolic_embed(b, c))
            for a in permutations(n - q)
            for b in permutations(p + q - n)
            for c in permutations(n - p)
        )
        return cls(f"S_{p}×_{n}S_{q}", p, q, elements)


def check_size(p: int, q: int, limits: Limits) -> None:
    if p + q > limits.max_coset_degree:
        raise SizeGuardError(f"p+q={p + q} exceeds the coset oracle limit {limits.max_coset_degree}")


@lru_cache(maxsize=None)
def _orbits(alpha: Composition, beta: Composition, n: int) -> tuple[tuple[Pair, frozenset], ...]:
    p, q = alpha.weight, beta.weight
    left = SubgroupSpec.interpolating(p, q, n)
    right = SubgroupSpec.parabolic(alpha, beta)
    seen: set[Pair] = set()
    orbits = []
    for g in product(permutations(p), permutations(q)):
        if g in seen:
            continue
        orbit = frozenset(_multiply(_multiply(h, g), k) for h in left.elements for k in right.elements)
        seen |= orbit
        orbits.append((g, orbit))
    logger.debug("double cosets for α=%s β=%s n=%d: %d", tuple(alpha), tuple(beta), n, len(orbits))
    return tuple(orbits)


def double_cosets(
    p: int,
    q: int,
    n: int,
    alpha: Sequence[int],
    beta: Sequence[int],
    limits: Limits = DEFAULT_LIMITS,
) -> list[Pair]:
    """One representative per double coset, the lexicographically first element of each.

    Raises:
        SizeGuardError: if p+q exceeds ``limits.max_coset_degree``.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if (alpha.weight, beta.weight) != (p, q):
        raise InvalidIndexError(f"α={tuple(alpha)} and β={tuple(beta)} do not have weights {p} and {q}")
    check_size(p, q, limits)
    return [rep for rep, _ in _orbits(alpha, beta, n)]


def _blocks(parts: Sequence[int]) -> list[range]:
    blocks, start = [], 1
    for part in parts:
        blocks.append(range(start, start + part))
        start += part
    return blocks


def coset_matrix(rep: Pair, alpha: Sequence[int], beta: Sequence[int], n: int) -> MarginMatrix:
    """The margin matrix of the double coset of ``rep`` = (σ, τ).

    With E_j the blocks of α and F_i those of β: row 0 counts σ(E_j) inside
    [1, n−q], column 0 counts τ(F_i) inside [p+q−n+1, q], and m_ij counts
    the overlap of σ(E_j) and n−q+τ(F_i) on the shared segment [n−q+1, p].
    """
    sigma, tau = rep
    p, q = sigma.n, tau.n
    low, shared = n - q, p + q - n
    images_a = [{sigma(x) for x in block} for block in _blocks(alpha)]
    images_b = [{tau(y) for y in block} for block in _blocks(beta)]
    rows = [(0, *(sum(1 for v in image if v <= low) for image in images_a))]
    for image_b in images_b:
        shifted = {low + v for v in image_b if v <= shared}
        row = [sum(1 for v in image_b if v > shared)]
        row.extend(len(image_a & shifted) for image_a in images_a)
        rows.append(tuple(row))
    return MarginMatrix(tuple(rows))


def intersection_order(rep: Pair, alpha: Sequence[int], beta: Sequence[int], n: int) -> int:
    """|S_p ×_n S_q ∩ υ(S_α × S_β)υ⁻¹| for υ = ``rep``."""
    alpha, beta = Composition(alpha), Composition(beta)
    left = SubgroupSpec.interpolating(alpha.weight, beta.weight, n)
    right = SubgroupSpec.parabolic(alpha, beta)
    inverse = _invert(rep)
    return sum(1 for k in right.elements if _multiply(_multiply(rep, k), inverse) in left)


def _dimension_sides(alpha: Composition, beta: Composition, n: int) -> tuple[int, int]:
    p, q = alpha.weight, beta.weight
    index = factorial(n) // (factorial(n - p) * factorial(n - q) * factorial(p + q - n))
    lhs = index * (factorial(p) // prod(map(factorial, alpha))) * (factorial(q) // prod(map(factorial, beta)))
    rhs = sum(
        factorial(n) // prod(factorial(m) for row in matrix.rows for m in row)
        for matrix in enumerate_margin_matrices(alpha, beta, n)
    )
    return lhs, rhs


def dimension_identity(alpha: Sequence[int], beta: Sequence[int], n: int) -> bool:
    """[S_n : S_p×_nS_q]·(p!/∏α_i!)·(q!/∏β_j!) = Σ_M n!/∏ m_ij!."""
    lhs, rhs = _dimension_sides(Composition(alpha), Composition(beta), n)
    return lhs == rhs


@dataclass
class CosetReport:
    """Outcome of an exhaustive double-coset sweep."""

    p_max: int
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"p_max": self.p_max, "cases": self.cases, "ok": self.ok, "failures": self.failures}


def coset_failures(alpha: Composition, beta: Composition, n: int) -> Iterable[str]:
    label = f"α={tuple(alpha)} β={tuple(beta)} n={n}"
    matrices = enumerate_margin_matrices(alpha, beta, n)
    orbits = _orbits(alpha, beta, n)
    if len(orbits) != len(matrices):
        yield f"{label}: {len(orbits)} double cosets but {len(matrices)} matrices"
    found = set()
    for rep, orbit in orbits:
        matrix = coset_matrix(rep, alpha, beta, n)
        found.add(matrix)
        if any(coset_matrix(g, alpha, beta, n) != matrix for g in orbit):
            yield f"{label}: coset matrix of {rep} is not constant on its double coset"
        expected = prod(factorial(m) for row in matrix.rows for m in row)
        order = intersection_order(rep, alpha, beta, n)
        if order != expected:
            yield f"{label}: intersection order {order} for {rep}, expected {expected}"
    if found != set(matrices):
        yield f"{label}: coset matrices differ from M^n_{{α,β}}"
    if not dimension_identity(alpha, beta, n):
        yield f"{label}: dimension identity fails"


def check_cosets(p_max: int, limits: Limits = DEFAULT_LIMITS) -> CosetReport:
    """Sweep every α ⊨ p, β ⊨ q with p, q ≤ p_max and every valid n."""
    check_size(p_max, p_max, limits)
    report = CosetReport(p_max)
    for p, q in product(range(p_max + 1), repeat=2):
        for alpha, beta in product(compositions(p), compositions(q)):
            for n in heisenberg_range(p, q):
                report.cases += 1
                report.failures.extend(coset_failures(alpha, beta, n))
    logger.info("coset sweep up to %d: %d cases, %d failures", p_max, report.cases, len(report.failures))
    return report
