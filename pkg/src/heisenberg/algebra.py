"""Finitely supported linear combinations with exact rational coefficients.

Every space in the package (Λ, Σ, kS∞, QSym, words) is an :class:`Element`
subclass keyed by one of the index types from :mod:`heisenberg.combinat`.
Coproducts land in :class:`Tensor`, keyed by pairs of indices.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Callable, ClassVar, Hashable, Iterable, Iterator, Mapping, Tuple, Union

import rich.repr
from typing_extensions import TypeAlias

from heisenberg.combinat import index_key
from heisenberg.errors import BasisMismatchError

Scalar: TypeAlias = Union[int, Fraction]
Terms: TypeAlias = Union[Mapping[Hashable, Scalar], Iterable[Tuple[Hashable, Scalar]]]
BasisRule: TypeAlias = Callable[..., Iterable[Tuple[Hashable, Scalar]]]


@rich.repr.auto
class Element:
    """An immutable element of a graded vector space.

    Subclasses set ``space`` and override :meth:`normalize_index`. Zero
    coefficients are never stored.
    """

    space: ClassVar[str] = "element"

    def __init__(self, terms: Terms = ()) -> None:
        collected: dict[Hashable, Fraction] = defaultdict(Fraction)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for index, coeff in items:
            collected[self.normalize_index(index)] += Fraction(coeff)
        self._terms = {index: coeff for index, coeff in collected.items() if coeff}

    def normalize_index(self, index: Hashable) -> Hashable:
        return index

    def degree_of(self, index: Hashable) -> int:
        return index.degree

    def sort_key(self, index: Hashable) -> tuple:
        return index_key(index)

    @property
    def tag(self) -> str:
        return self.space

    def like(self, terms: Terms = ()) -> Element:
        """Build an element of the same space."""
        return type(self)(terms)

    def term(self, index: Hashable) -> Element:
        return self.like({index: 1})

    def __rich_repr__(self) -> rich.repr.Result:
        yield self.tag
        yield "terms", {index: str(coeff) for index, coeff in self.terms()}

    def items(self) -> Iterable[tuple[Hashable, Fraction]]:
        """Terms in storage order; use :meth:`terms` when order matters."""
        return self._terms.items()

    def terms(self) -> list[tuple[Hashable, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: self.sort_key(item[0]))

    def __iter__(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, index: Hashable) -> Fraction:
        return self._terms.get(self.normalize_index(index), Fraction(0))

    def support(self) -> set[Hashable]:
        return set(self._terms)

    def degrees(self) -> list[int]:
        return sorted({self.degree_of(index) for index in self._terms})

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def component(self, degree: int) -> Element:
        return self.like({i: c for i, c in self._terms.items() if self.degree_of(i) == degree})

    def truncate(self, max_degree: int) -> Element:
        return self.like({i: c for i, c in self._terms.items() if self.degree_of(i) <= max_degree})

    def _check_compatible(self, other: Element) -> None:
        if type(self) is not type(other) or self.tag != other.tag:
            raise BasisMismatchError(f"cannot combine {self.tag} and {other.tag}")

    def __add__(self, other: Element) -> Element:
        self._check_compatible(other)
        merged: dict[Hashable, Fraction] = dict(self._terms)
        for index, coeff in other._terms.items():
            merged[index] = merged.get(index, 0) + coeff
        return self.like(merged)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __neg__(self) -> Element:
        return self.like({i: -c for i, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> Element:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self.like({i: c * scalar for i, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return type(self) is type(other) and self.tag == other.tag and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]


class Tensor(Element):
    """Σ c · a⊗b over pairs of indices of one factor space."""

    space = "tensor"

    def __init__(self, factor: Element, terms: Terms = ()) -> None:
        self.factor = factor.like()
        super().__init__(terms)

    def normalize_index(self, index: Hashable) -> Hashable:
        left, right = index
        return (self.factor.normalize_index(left), self.factor.normalize_index(right))

    def degree_of(self, index: Hashable) -> int:
        return sum(self.bidegree(index))

    def bidegree(self, index: Hashable) -> tuple[int, int]:
        left, right = index
        return (self.factor.degree_of(left), self.factor.degree_of(right))

    def sort_key(self, index: Hashable) -> tuple:
        left, right = index
        return (self.degree_of(index), self.factor.sort_key(left), self.factor.sort_key(right))

    @property
    def tag(self) -> str:
        return f"{self.factor.tag}⊗{self.factor.tag}"

    def like(self, terms: Terms = ()) -> Tensor:
        return Tensor(self.factor, terms)

    def bidegree_component(self, left: int, right: int) -> Tensor:
        return self.like({i: c for i, c in self.items() if self.bidegree(i) == (left, right)})

    def componentwise(self, other: Tensor, multiply: Callable[[Element, Element], Element]) -> Tensor:
        """(a⊗b)(c⊗d) = ac⊗bd, extended bilinearly."""
        self._check_compatible(other)
        acc: dict[Hashable, Fraction] = defaultdict(Fraction)
        for (a, b), c1 in self.items():
            for (c, d), c2 in other.items():
                left = multiply(self.factor.term(a), other.factor.term(c))
                if not left:
                    continue
                right = multiply(self.factor.term(b), other.factor.term(d))
                for i, ci in left.items():
                    for j, cj in right.items():
                        acc[(i, j)] += c1 * c2 * ci * cj
        return Tensor(self._product_factor(multiply), acc)

    def _product_factor(self, multiply: Callable[[Element, Element], Element]) -> Element:
        return multiply(self.factor, self.factor).like()

    def map(self, left: Callable[[Element], Element], right: Callable[[Element], Element] | None = None) -> Tensor:
        """Apply F⊗G, with G = F when only one map is given."""
        right = right or left
        acc: dict[Hashable, Fraction] = defaultdict(Fraction)
        factor = None
        for (a, b), coeff in self.items():
            image_a = left(self.factor.term(a))
            image_b = right(self.factor.term(b))
            if factor is None:
                factor = image_a.like()
            for i, ci in image_a.items():
                for j, cj in image_b.items():
                    acc[(i, j)] += coeff * ci * cj
        if factor is None:
            factor = left(self.factor)
        return Tensor(factor, acc)


def bilinear(f: Element, g: Element, rule: BasisRule, result: Element | None = None) -> Element:
    """Extend a basis-level product rule(a, b) -> [(index, coeff)] bilinearly."""
    acc: dict[Hashable, Fraction] = defaultdict(Fraction)
    for a, ca in f.items():
        for b, cb in g.items():
            for index, coeff in rule(a, b):
                acc[index] += ca * cb * coeff
    return (result if result is not None else f).like(acc)


def linear(f: Element, rule: BasisRule, result: Element | None = None) -> Element:
    """Extend a basis-level map rule(a) -> [(index, coeff)] linearly."""
    acc: dict[Hashable, Fraction] = defaultdict(Fraction)
    for a, ca in f.items():
        for index, coeff in rule(a):
            acc[index] += ca * coeff
    return (result if result is not None else f).like(acc)


def invert_unitriangular(f: Element, forward: Callable[[Element], Element]) -> Element:
    """Solve forward(x) = f.

    ``forward`` must send every homogeneous element to itself plus terms of
    strictly lower degree.
    """
    solution = f.like()
    remainder = f
    while remainder:
        top = remainder.component(remainder.max_degree())
        solution = solution + top
        remainder = remainder - forward(top)
    return solution


def antipode_step(
    basis: Element,
    coproduct: Callable[[Element], Tensor],
    multiply: Callable[[Element, Element], Element],
    antipode: Callable[[Element], Element],
) -> Element:
    """S(x) = −x − Σ' S(x₁)·x₂ over the middle terms of a graded coproduct."""
    result = -basis
    tensor = coproduct(basis)
    for (left, right), coeff in tensor.terms():
        if tensor.factor.degree_of(left) == 0 or tensor.factor.degree_of(right) == 0:
            continue
        result = result - coeff * multiply(antipode(basis.term(left)), basis.term(right))
    return result
