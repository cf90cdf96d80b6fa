"""Compositions, partitions, permutations and margin matrices.

Every index type is an immutable tuple subclass with a ``degree`` so the
algebra modules can grade and sort terms without knowing which basis they
are looking at.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from itertools import permutations as _itertools_permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

from heisenberg.errors import EmptyDomainError, InvalidIndexError

logger = logging.getLogger(__name__)


class Composition(tuple):
    """An ordered sequence of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Composition:
        values = tuple(int(part) for part in parts)
        if any(part < 1 for part in values):
            raise InvalidIndexError(f"parts must be positive, got {values}")
        return super().__new__(cls, values)

    @property
    def weight(self) -> int:
        return sum(self)

    degree = weight

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"


class Partition(Composition):
    """A weakly decreasing composition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise InvalidIndexError(f"partition parts must be weakly decreasing, got {tuple(self)}")
        return self

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))


class Permutation(tuple):
    """A bijection of {1..n} in one-line notation."""

    __slots__ = ()

    def __new__(cls, image: Iterable[int] = ()) -> Permutation:
        values = tuple(int(v) for v in image)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidIndexError(f"{values} is not a permutation")
        return super().__new__(cls, values)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    degree = n

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """Return self∘other, i.e. i ↦ self(other(i))."""
        if len(self) != len(other):
            raise InvalidIndexError(f"cannot compose degrees {len(self)} and {len(other)}")
        return Permutation(self[t - 1] for t in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for position, value in enumerate(self, start=1):
            inv[value - 1] = position
        return Permutation(inv)

    def descent_set(self) -> frozenset[int]:
        return frozenset(i for i in range(1, len(self)) if self[i - 1] > self[i])

    def descent_composition(self) -> Composition:
        return subset_to_composition(self.descent_set(), len(self))

    def cycle_type(self) -> Partition:
        seen: set[int] = set()
        lengths = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            length = 0
            current = start
            while current not in seen:
                seen.add(current)
                current = self[current - 1]
                length += 1
            lengths.append(length)
        return Partition.from_parts(lengths)

    def __str__(self) -> str:
        if len(self) < 10:
            return "".join(str(v) for v in self)
        return "[" + ",".join(str(v) for v in self) + "]"

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)!r})"


def standardize(values: Sequence[int]) -> Permutation:
    """Replace distinct values by their ranks."""
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return Permutation(ranks[v] for v in values)


def index_key(index: tuple) -> tuple:
    """Canonical term order: graded, then lexicographic."""
    return (index.degree, tuple(index))


@dataclass(frozen=True)
class MarginMatrix:
    """Non-negative integer matrix with a zero upper-left corner.

    Rows are indexed by the parts of β (row 0 carries n−q), columns by the
    parts of α (column 0 carries n−p).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise InvalidIndexError("margin matrix rows must have equal length")
        if any(entry < 0 for row in self.rows for entry in row):
            raise InvalidIndexError("margin matrix entries must be non-negative")
        if self.rows and self.rows[0] and self.rows[0][0] != 0:
            raise InvalidIndexError("margin matrix corner entry must be 0")

    @property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    @property
    def col_sums(self) -> tuple[int, ...]:
        if not self.rows:
            return ()
        return tuple(sum(column) for column in zip(*self.rows))

    @property
    def n(self) -> int:
        return sum(self.row_sums)

    def composition(self) -> Composition:
        """c(M): nonzero entries read left to right, top to bottom."""
        return Composition(entry for row in self.rows for entry in row if entry)

    def partition(self) -> Partition:
        """p(M): the nonzero entries sorted into a partition."""
        return Partition.from_parts(entry for row in self.rows for entry in row if entry)

    def transpose(self) -> MarginMatrix:
        return MarginMatrix(tuple(zip(*self.rows)))


def _bounded_vectors(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Vectors with the given sum and entrywise caps, lexicographically."""
    if not caps:
        if total == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    room = sum(rest)
    for value in range(max(0, total - room), min(head, total) + 1):
        for tail in _bounded_vectors(total - value, rest):
            yield (value, *tail)


@lru_cache(maxsize=None)
def _margin_matrices(alpha: Composition, beta: Composition, n: int) -> tuple[MarginMatrix, ...]:
    col_sums = (n - alpha.weight, *alpha)
    row_sums = (n - beta.weight, *beta)

    def fill(i: int, remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(row_sums):
            if not any(remaining):
                yield ()
            return
        caps = (0, *remaining[1:]) if i == 0 else remaining
        for row in _bounded_vectors(row_sums[i], caps):
            rest = tuple(c - v for c, v in zip(remaining, row))
            for tail in fill(i + 1, rest):
                yield (row, *tail)

    matrices = tuple(MarginMatrix(rows) for rows in fill(0, col_sums))
    logger.debug("M^%d_{%s,%s}: %d matrices", n, tuple(alpha), tuple(beta), len(matrices))
    return matrices


def enumerate_margin_matrices(alpha: Sequence[int], beta: Sequence[int], n: int) -> list[MarginMatrix]:
    """All matrices in M^n_{α,β}, row-major lexicographic.

    Raises:
        EmptyDomainError: if n is outside [max(|α|,|β|), |α|+|β|].
    """
    alpha, beta = Composition(alpha), Composition(beta)
    p, q = alpha.weight, beta.weight
    if not max(p, q) <= n <= p + q:
        raise EmptyDomainError(f"n={n} outside [{max(p, q)}, {p + q}] for |α|={p}, |β|={q}")
    return list(_margin_matrices(alpha, beta, n))


def heisenberg_range(p: int, q: int) -> range:
    """Degrees n with max(p,q) ≤ n ≤ p+q."""
    return range(max(p, q), p + q + 1)


def matrix_composition(matrix: MarginMatrix) -> Composition:
    return matrix.composition()


def matrix_partition(matrix: MarginMatrix) -> Partition:
    return matrix.partition()


@lru_cache(maxsize=None)
def _shuffles(p: int, q: int) -> tuple[Permutation, ...]:
    values = range(1, p + q + 1)
    result = []
    for chosen in combinations(values, p):
        taken = set(chosen)
        result.append(Permutation((*chosen, *(v for v in values if v not in taken))))
    return tuple(result)


def shuffles(p: int, q: int) -> list[Permutation]:
    """All (p,q)-shuffles: increasing on [1,p] and on [p+1,p+q]."""
    return list(_shuffles(p, q))


def beta_max_shuffle(p: int, q: int) -> Permutation:
    """β_{p,q}: i ↦ q+i for i ≤ p and p+j ↦ j."""
    return Permutation((*range(q + 1, q + p + 1), *range(1, q + 1)))


def parabolic_embed(sigma: Permutation, tau: Permutation) -> Permutation:
    """σ×τ acting on [1,p] and, shifted, on [p+1,p+q]."""
    shift = len(sigma)
    return Permutation((*sigma, *(shift + t for t in tau)))


def descent_set(sigma: Permutation) -> frozenset[int]:
    return sigma.descent_set()


def descent_composition(sigma: Permutation) -> Composition:
    return sigma.descent_composition()


def subset_to_composition(subset: Iterable[int], n: int) -> Composition:
    """{a1, a1+a2, ...} ⊆ [n−1] ↦ (a1, a2, ...) ⊨ n."""
    cuts = sorted(set(subset))
    if any(not 1 <= c <= n - 1 for c in cuts):
        raise InvalidIndexError(f"{cuts} is not a subset of [1, {n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0, *cuts, n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def composition_to_subset(alpha: Sequence[int]) -> frozenset[int]:
    alpha = Composition(alpha)
    total = 0
    cuts = set()
    for part in alpha[:-1]:
        total += part
        cuts.add(total)
    return frozenset(cuts)


def z_factor(partition: Sequence[int]) -> int:
    """∏ r^{m_r} m_r!, the order of the centralizer of cycle type γ."""
    result = 1
    for part, count in Counter(partition).items():
        result *= part**count * factorial(count)
    return result


def concat_partitions(first: Sequence[int], second: Sequence[int]) -> Partition:
    return Partition.from_parts((*first, *second))


def egf_heisenberg(a: Sequence[Fraction | int], b: Sequence[Fraction | int], N: int) -> list[Fraction]:
    """Coefficient sequence of the Heisenberg product of two species.

    c_n = Σ_{i,j ≤ n ≤ i+j} n! / ((n−i)! (n−j)! (i+j−n)!) · a_i · b_j
    """
    if len(a) <= N or len(b) <= N:
        raise InvalidIndexError(f"sequences must be given up to index {N}")
    result = []
    for n in range(N + 1):
        total = Fraction(0)
        for i in range(n + 1):
            for j in range(n - i, n + 1):
                ways = factorial(n) // (factorial(n - i) * factorial(n - j) * factorial(i + j - n))
                total += ways * Fraction(a[i]) * Fraction(b[j])
        result.append(total)
    return result


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[Composition, ...]:
    found = [subset_to_composition(cuts, n) for k in range(n) for cuts in combinations(range(1, n), k)]
    if n == 0:
        found = [Composition()]
    return tuple(sorted(found))


def compositions(n: int) -> list[Composition]:
    """Compositions of n in lexicographic order."""
    return list(_compositions(n))


def compositions_up_to(n: int, start: int = 0) -> list[Composition]:
    return [alpha for m in range(start, n + 1) for alpha in _compositions(m)]


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(sorted({Partition.from_parts(alpha) for alpha in _compositions(n)}))


def partitions(n: int) -> list[Partition]:
    """Partitions of n in lexicographic order."""
    return list(_partitions(n))


def partitions_up_to(n: int, start: int = 0) -> list[Partition]:
    return [lam for m in range(start, n + 1) for lam in _partitions(m)]


def permutations(n: int) -> list[Permutation]:
    """S_n in lexicographic one-line order."""
    return [Permutation(image) for image in _itertools_permutations(range(1, n + 1))]
