"""Quasi-symmetric functions in the monomial basis M_α.

QSym is graded dual to Σ under ⟨M_α, X_β⟩ = δ_{αβ}. Every structure here is
computed as the transpose of the corresponding structure on Σ:

* ``product_M`` is dual to ``coproduct_X``
* ``heisenberg_coproduct`` is dual to ``heisenberg_X``
* the deconcatenation and internal coproducts are dual to ``external_X``
  and ``internal_X``

The second half of the module evaluates M_α on ordered alphabets with exact
rational points. It is an independent route to the same answers: Δ_# is
f(X+Y+XY), ψ* is f(exp X) and the antipode is f((−X)*).
"""

from __future__ import annotations

import logging
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations, product
from math import comb
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Union

from typing_extensions import TypeAlias

from heisenberg.algebra import Element, Tensor, linear
from heisenberg.combinat import Composition, compositions, compositions_up_to
from heisenberg.errors import InvalidIndexError, TruncationError, UnboundedAlphabetError
from heisenberg.nsymfn import (
    NSymElem,
    X,
    antipode_heisenberg_X,
    coproduct_X,
    heisenberg_X,
    internal_X,
    iso_psi,
)

logger = logging.getLogger(__name__)


class QSymElem(Element):
    space = "M"

    def normalize_index(self, index: Hashable) -> Composition:
        return index if isinstance(index, Composition) else Composition(index)


def M(*parts: int) -> QSymElem:
    return QSymElem({parts: 1})


def counit(f: QSymElem) -> Fraction:
    return f.coefficient(())


def pairing(f: QSymElem, g: NSymElem) -> Fraction:
    """⟨f, g⟩ with ⟨M_α, X_β⟩ = δ_{αβ}."""
    return sum((coeff * g.coefficient(alpha) for alpha, coeff in f.items()), Fraction(0))


def pairing_tensor(f: Tensor, g: Tensor) -> Fraction:
    return sum((coeff * g.coefficient(index) for index, coeff in f.items()), Fraction(0))


@lru_cache(maxsize=None)
def _coproduct_dual(n: int) -> dict:
    """(α, β) ↦ {γ: [X_α⊗X_β]Δ(X_γ)} over γ ⊨ n."""
    table: dict = defaultdict(Counter)
    for gamma in compositions(n):
        for pair, coeff in coproduct_X(X(*gamma)).items():
            table[pair][gamma] += coeff
    return dict(table)


def _product_rule(alpha: Composition, beta: Composition):
    return _coproduct_dual(alpha.weight + beta.weight).get((alpha, beta), {}).items()


def product_M(f: QSymElem, g: QSymElem) -> QSymElem:
    """The quasi-shuffle product: [M_γ](M_α·M_β) = [X_α⊗X_β]Δ(X_γ)."""
    acc: dict[Composition, Fraction] = defaultdict(Fraction)
    for alpha, ca in f.items():
        for beta, cb in g.items():
            for gamma, coeff in _product_rule(alpha, beta):
                acc[gamma] += ca * cb * coeff
    return QSymElem(acc)


def product_tensor(left: Tensor, right: Tensor) -> Tensor:
    return left.componentwise(right, product_M)


def _transpose_rule(n: int, pairs: Iterable[tuple[Composition, Composition]], multiply) -> dict:
    table: dict = defaultdict(Counter)
    for alpha, beta in pairs:
        for gamma, coeff in multiply(X(*alpha), X(*beta)).items():
            if gamma.weight == n:
                table[gamma][(alpha, beta)] += coeff
    return table


@lru_cache(maxsize=None)
def _heisenberg_dual(n: int) -> dict:
    pairs = (
        (alpha, beta)
        for p in range(n + 1)
        for q in range(n - p, n + 1)
        for alpha in compositions(p)
        for beta in compositions(q)
    )
    table = _transpose_rule(n, pairs, heisenberg_X)
    logger.debug("Δ_# table for degree %d: %d compositions", n, len(table))
    return {gamma: tuple(counts.items()) for gamma, counts in table.items()}


def heisenberg_coproduct(f: QSymElem) -> Tensor:
    """Δ_#(M_γ) = Σ_{α,β} |{M ∈ M^n_{α,β} : c(M) = γ}| M_α⊗M_β with n = |γ|."""
    return linear(f, lambda gamma: _heisenberg_dual(gamma.weight).get(gamma, ()), Tensor(f))


def _deconcatenation_rule(gamma: Composition):
    return (((gamma[:i], gamma[i:]), 1) for i in range(len(gamma) + 1))


def external_coproduct(f: QSymElem) -> Tensor:
    """Δ_⋆, dual to concatenation: Δ_⋆(M_γ) = Σ_{γ=α·β} M_α⊗M_β."""
    return linear(f, _deconcatenation_rule, Tensor(f))


@lru_cache(maxsize=None)
def _internal_dual(n: int) -> dict:
    pairs = product(compositions(n), repeat=2)
    return {gamma: tuple(counts.items()) for gamma, counts in _transpose_rule(n, pairs, internal_X).items()}


def internal_coproduct(f: QSymElem) -> Tensor:
    """Δ_∘, dual to the Solomon product internal_X."""
    return linear(f, lambda gamma: _internal_dual(gamma.weight).get(gamma, ()), Tensor(f))


def classical_coproducts(f: QSymElem) -> tuple[Tensor, Tensor]:
    """(Δ_⋆(f), Δ_∘(f)), the external and internal coproducts."""
    return external_coproduct(f), internal_coproduct(f)


def _check_cutoff(f: QSymElem, N: Optional[int], name: str) -> int:
    if N is None:
        raise TruncationError(f"{name} lands in the completion and needs an explicit N")
    if f.max_degree() > N:
        raise TruncationError(f"element has degree {f.max_degree()} above the cutoff N={N}")
    return N


def _transpose_up_to(f: QSymElem, N: int, forward) -> QSymElem:
    """Σ_{|β| ≤ N} [X_γ]forward(X_β) · M_β for each M_γ in f."""
    acc: dict[Composition, Fraction] = defaultdict(Fraction)
    for gamma, coeff in f.items():
        for beta in compositions_up_to(N, start=gamma.weight):
            image = forward(X(*beta)).coefficient(gamma)
            if image:
                acc[beta] += coeff * image
    return QSymElem(acc)


def antipode_heisenberg_qsym(f: QSymElem, N: Optional[int]) -> QSymElem:
    """S_#(f) kept up to degree N, by duality with the antipode of (Σ, #, Δ)."""
    return _transpose_up_to(f, _check_cutoff(f, N, "the antipode"), antipode_heisenberg_X)


def iso_dual_psi(f: QSymElem, N: Optional[int]) -> QSymElem:
    """ψ*(f) kept up to degree N, the transpose of ψ."""
    return _transpose_up_to(f, _check_cutoff(f, N, "ψ*"), iso_psi)


@dataclass(frozen=True)
class Letter:
    """One letter of an ordered alphabet: a monomial with a parity.

    Odd letters contribute a sign and may repeat in a chain. Idempotent
    variables satisfy x₀ᵏ = x₀ and evaluate to 1.
    """

    monomial: tuple[tuple[str, int], ...]
    parity: int = 0
    idempotent: frozenset = frozenset()

    @classmethod
    def variable(cls, name: str, *, idempotent: bool = False) -> Letter:
        return cls(((name, 1),), 0, frozenset({name}) if idempotent else frozenset())

    @property
    def degree(self) -> int:
        return sum(e for v, e in self.monomial if v not in self.idempotent)

    @property
    def odd(self) -> bool:
        return self.parity % 2 == 1

    def times(self, other: Letter) -> Letter:
        exponents: Counter = Counter(dict(self.monomial))
        exponents.update(dict(other.monomial))
        return Letter(tuple(sorted(exponents.items())), self.parity + other.parity, self.idempotent | other.idempotent)

    def flipped(self) -> Letter:
        return Letter(self.monomial, self.parity + 1, self.idempotent)

    def value(self, point: Mapping[str, Fraction], power: int) -> Fraction:
        result = Fraction(-1 if self.odd else 1)
        for name, exponent in self.monomial:
            if name in self.idempotent:
                continue
            if name not in point:
                raise InvalidIndexError(f"no value given for variable {name}")
            result *= Fraction(point[name]) ** (exponent * power)
        return result

    def __str__(self) -> str:
        body = "".join(name if e == 1 else f"{name}^{e}" for name, e in self.monomial) or "1"
        return f"-{body}" if self.odd else body


def _lex_reversed(ranks: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(ranks))


@dataclass(frozen=True)
class OrderedAlphabet:
    """A totally ordered, possibly signed, set of letters, smallest first.

    Divided-power alphabets are infinite; they are built with a
    ``max_level`` cap on word length, and without one they refuse to be
    evaluated.
    """

    letters: tuple[Letter, ...]
    variables: tuple[str, ...]
    name: str = "X"
    bounded: bool = True

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: OrderedAlphabet) -> OrderedAlphabet:
        return alphabet_sum(self, other)

    def __mul__(self, other: OrderedAlphabet) -> OrderedAlphabet:
        return alphabet_product(self, other)

    def __neg__(self) -> OrderedAlphabet:
        return negate(self)

    def require_bounded(self) -> None:
        if not self.bounded:
            raise UnboundedAlphabetError(f"alphabet {self.name} is infinite; give max_level")


def base(k: int, name: str = "x") -> OrderedAlphabet:
    """x1 < x2 < ⋯ < xk."""
    names = tuple(f"{name}{i}" for i in range(1, k + 1))
    return OrderedAlphabet(tuple(Letter.variable(v) for v in names), names, name=name.upper())


def alphabet_sum(a: OrderedAlphabet, b: OrderedAlphabet) -> OrderedAlphabet:
    """A+B: every letter of A precedes every letter of B."""
    a.require_bounded()
    b.require_bounded()
    return OrderedAlphabet(a.letters + b.letters, a.variables + b.variables, name=f"{a.name}+{b.name}")


def alphabet_product(a: OrderedAlphabet, b: OrderedAlphabet) -> OrderedAlphabet:
    """A×B in reverse lexicographic order: compare the B letter first."""
    a.require_bounded()
    b.require_bounded()
    pairs = sorted(product(range(len(a)), range(len(b))), key=_lex_reversed)
    letters = tuple(a.letters[i].times(b.letters[j]) for i, j in pairs)
    return OrderedAlphabet(letters, a.variables + b.variables, name=f"({a.name})({b.name})")


def one_plus(a: OrderedAlphabet) -> OrderedAlphabet:
    """1+A: an idempotent x₀ below every other letter."""
    a.require_bounded()
    unit = Letter.variable(f"{a.name.lower()}0", idempotent=True)
    return OrderedAlphabet((unit, *a.letters), a.variables, name=f"1+{a.name}")


def negate(a: OrderedAlphabet) -> OrderedAlphabet:
    """−A: the order reversed and every letter's parity flipped."""
    a.require_bounded()
    return OrderedAlphabet(tuple(letter.flipped() for letter in reversed(a.letters)), a.variables, name=f"-{a.name}")


def _word_letter(a: OrderedAlphabet, ranks: Iterable[int]) -> Letter:
    return reduce(Letter.times, (a.letters[rank] for rank in ranks))


def divided_powers(a: OrderedAlphabet, max_level: Optional[int] = None) -> OrderedAlphabet:
    """exp A = A + A⁽²⁾ + ⋯, where A⁽ⁿ⁾ holds the strictly increasing n-tuples."""
    a.require_bounded()
    name = f"exp {a.name}"
    if max_level is None:
        return OrderedAlphabet((), a.variables, name=name, bounded=False)
    chosen = sorted(
        (ranks for level in range(1, max_level + 1) for ranks in combinations(range(len(a)), level)),
        key=_lex_reversed,
    )
    return OrderedAlphabet(tuple(_word_letter(a, ranks) for ranks in chosen), a.variables, name=name)


def heisenberg_alphabet(a: OrderedAlphabet, b: OrderedAlphabet) -> OrderedAlphabet:
    """(1+A)(1+B) with the letter x₀y₀ removed, often written A+B+AB."""
    full = one_plus(a) * one_plus(b)
    letters = tuple(letter for letter in full.letters if letter.degree)
    return OrderedAlphabet(letters, full.variables, name=f"{a.name}+{b.name}+{a.name}{b.name}")


def heisenberg_power(a: OrderedAlphabet, n: int) -> OrderedAlphabet:
    """(1+A)ⁿ − 1 in reverse lexicographic order, every factor on the same variables.

    f((1+A)ⁿ − 1) is the n-th power of evaluation at A under Δ_#; n = 0 gives
    the empty alphabet.
    """
    a.require_bounded()
    # -1 stands for the unit of 1+A, below every letter
    words = sorted(product(range(-1, len(a)), repeat=n), key=_lex_reversed)[1:]
    letters = tuple(_word_letter(a, [rank for rank in word if rank >= 0]) for word in words)
    return OrderedAlphabet(letters, a.variables, name=f"(1+{a.name})^{n}-1")


@dataclass(frozen=True)
class AlphabetSum:
    """A formal integer combination Σ cⱼ·Aⱼ of ordered alphabets.

    f(Σ cⱼ·Aⱼ) = Σ cⱼ·f(Aⱼ). A sum built with ``max_level`` is only exact up
    to that degree, so evaluation never reports higher degrees.
    """

    parts: tuple[tuple[int, OrderedAlphabet], ...]
    variables: tuple[str, ...]
    name: str
    max_level: Optional[int] = None

    def require_bounded(self) -> None:
        if self.max_level is None:
            raise UnboundedAlphabetError(f"alphabet {self.name} is infinite; give max_level")


Alphabet: TypeAlias = Union[OrderedAlphabet, AlphabetSum]


def star(a: OrderedAlphabet, max_level: Optional[int] = None) -> AlphabetSum:
    """A* = A + A^{#2} + A^{#3} + ⋯ up to degree ``max_level``.

    A^{#n} keeps the chains of (1+A)ⁿ − 1 that use all n factors; on a
    one-part M_γ that is the Cartesian power Aⁿ. Taking A = negate(X) flips
    the sign of A^{#n} by (−1)ⁿ, and (−X)* is then the inverse of X under
    Δ_#, so f((−X)*) = S_#(f) evaluated at X.

    Raises:
        InvalidIndexError: if ``a`` mixes odd and even letters.
    """
    a.require_bounded()
    name = f"({a.name})*"
    if max_level is None:
        return AlphabetSum((), a.variables, name)
    if a.letters and all(letter.odd for letter in a.letters):
        sign, positive = -1, negate(a)
    elif not any(letter.odd for letter in a.letters):
        sign, positive = 1, a
    else:
        raise InvalidIndexError(f"star needs a positive or a negated alphabet, got {a.name}")
    parts = []
    for j in range(max_level + 1):
        # inclusion-exclusion over the factors left at the unit
        coeff = sum(sign**n * comb(n, j) * (-1) ** (n - j) for n in range(j, max_level + 1))
        if coeff:
            parts.append((coeff, heisenberg_power(positive, j)))
    logger.debug("%s up to degree %d: %d alphabets", name, max_level, len(parts))
    return AlphabetSum(tuple(parts), a.variables, name, max_level)


Graded = dict


def _shift(graded: Graded, degree: int, factor: Fraction, cap: Optional[int]) -> Graded:
    return {d + degree: v * factor for d, v in graded.items() if cap is None or d + degree <= cap}


def _accumulate(target: Graded, source: Graded) -> None:
    for d, v in source.items():
        target[d] = target.get(d, 0) + v


def _chain_sum(alpha: Composition, alphabet: OrderedAlphabet, point, cap: Optional[int]) -> Graded:
    """Σ over chains l₁ ≤ ⋯ ≤ l_r of Π sign(l_i)·l_i^{a_i}, graded by degree.

    Consecutive equal letters are allowed only when the letter is odd.
    """
    r = len(alpha)
    before: list[Graded] = [{0: Fraction(1)}] + [{} for _ in range(r)]
    for letter in alphabet.letters:
        ending: list[Graded] = [{} for _ in range(r + 1)]
        for k in range(1, r + 1):
            incoming = dict(before[k - 1])
            if letter.odd and k > 1:
                _accumulate(incoming, ending[k - 1])
            if incoming:
                step = alpha[k - 1]
                ending[k] = _shift(incoming, step * letter.degree, letter.value(point, step), cap)
        for k in range(1, r + 1):
            _accumulate(before[k], ending[k])
    return before[r]


def evaluate_graded(
    f: QSymElem, alphabet: Alphabet, point: Mapping[str, Fraction], max_degree: Optional[int] = None
) -> dict[int, Fraction]:
    """f evaluated on an alphabet, split by polynomial degree up to ``max_degree``."""
    alphabet.require_bounded()
    if isinstance(alphabet, AlphabetSum):
        parts = alphabet.parts
        if max_degree is None or max_degree > alphabet.max_level:
            max_degree = alphabet.max_level
    else:
        parts = ((1, alphabet),)
    total: Graded = {}
    for alpha, coeff in f.items():
        for weight, letters in parts:
            _accumulate(total, _shift(_chain_sum(alpha, letters, point, max_degree), 0, coeff * weight, None))
    return {d: v for d, v in sorted(total.items()) if v}


def evaluate(f: QSymElem, alphabet: Alphabet, point: Mapping[str, Fraction]) -> Fraction:
    """f(A) at an exact rational point.

    Raises:
        UnboundedAlphabetError: if ``alphabet`` is a star or divided power without ``max_level``.
    """
    return sum(evaluate_graded(f, alphabet, point).values(), Fraction(0))


def random_point(variables: Iterable[str], seed: int) -> dict[str, Fraction]:
    """Positive rationals with small numerators and denominators."""
    rng = random.Random(seed)
    return {name: Fraction(rng.randint(1, 9), rng.randint(1, 9)) for name in variables}


def _tensor_value(f: Tensor, left: OrderedAlphabet, right: OrderedAlphabet, point) -> Fraction:
    total = Fraction(0)
    for (alpha, beta), coeff in f.items():
        total += coeff * evaluate(M(*alpha), left, point) * evaluate(M(*beta), right, point)
    return total


@dataclass
class AlphabetCheck:
    """Symbolic and numeric values of one identity at one sample point."""

    label: str
    point: dict = field(repr=False)
    symbolic: Fraction = Fraction(0)
    numeric: Fraction = Fraction(0)

    @property
    def ok(self) -> bool:
        return self.symbolic == self.numeric


def coproduct_checks(f: QSymElem, which: str = "heisenberg", k: int = 3, seeds: Iterable[int] = (0, 1, 2)) -> list[AlphabetCheck]:
    """Compare a coproduct of f with f evaluated on the matching alphabet.

    ``which`` is ``heisenberg`` (X+Y+XY), ``external`` (X+Y) or
    ``internal`` (X×Y); the tensor side separates the X and Y variables.
    """
    left, right = base(k, "x"), base(k, "y")
    coproducts = {
        "heisenberg": (heisenberg_coproduct, heisenberg_alphabet(left, right)),
        "external": (external_coproduct, left + right),
        "internal": (internal_coproduct, left * right),
    }
    if which not in coproducts:
        raise InvalidIndexError(f"unknown coproduct {which!r}, expected one of {sorted(coproducts)}")
    coproduct, combined = coproducts[which]
    tensor = coproduct(f)
    checks = []
    for seed in seeds:
        point = random_point(left.variables + right.variables, seed)
        checks.append(
            AlphabetCheck(which, point, _tensor_value(tensor, left, right, point), evaluate(f, combined, point))
        )
    return checks


def _graded_checks(label: str, symbolic: QSymElem, alphabet: OrderedAlphabet, f: QSymElem, N: int, k: int, seeds):
    plain = base(k, "x")
    checks = []
    for seed in seeds:
        point = random_point(plain.variables, seed)
        numeric = evaluate_graded(f, alphabet, point, N)
        for degree in range(N + 1):
            expected = evaluate(symbolic.component(degree), plain, point)
            checks.append(AlphabetCheck(f"{label} degree {degree}", point, expected, numeric.get(degree, Fraction(0))))
    return checks


def dual_psi_checks(f: QSymElem, N: int, k: int = 3, seeds: Iterable[int] = (0, 1, 2)) -> list[AlphabetCheck]:
    """ψ*(f) against f(exp X) with k variables, degree by degree up to N."""
    return _graded_checks("ψ*", iso_dual_psi(f, N), divided_powers(base(k, "x"), N), f, N, k, seeds)


def antipode_checks(f: QSymElem, N: int, k: int = 2, seeds: Iterable[int] = (0, 1, 2)) -> list[AlphabetCheck]:
    """S_#(f) against f((−X)*) with k variables, degree by degree up to N."""
    return _graded_checks("S_#", antipode_heisenberg_qsym(f, N), star(negate(base(k, "x")), N), f, N, k, seeds)


def dual_psi_agrees(f: QSymElem, N: int, k: int = 3, seeds: Iterable[int] = (0, 1, 2)) -> bool:
    return all(check.ok for check in dual_psi_checks(f, N, k, seeds))


def antipode_agrees(f: QSymElem, N: int, k: int = 2, seeds: Iterable[int] = (0, 1, 2)) -> bool:
    return all(check.ok for check in antipode_checks(f, N, k, seeds))


def heisenberg_coproduct_agrees(f: QSymElem, k: int = 3, seeds: Iterable[int] = (0, 1, 2)) -> bool:
    return all(check.ok for check in coproduct_checks(f, "heisenberg", k, seeds))
