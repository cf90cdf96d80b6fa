"""Graded endomorphisms of the tensor algebra T(V) over a finite alphabet.

Words are tuples of letters 1..d and multiply by concatenation; every letter
is primitive, so Δ(w) splits the positions of w into two subwords. A
permutation σ acts on the right: Ψ(σ)(v₁⋯vₙ) = v_{σ(1)}⋯v_{σ(n)}, and the
Heisenberg product of endomorphisms computed here is the ground truth for
:func:`heisenberg.permalg.heisenberg_perm`.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import permutations as _itertools_permutations
from itertools import product
from typing import Callable, Hashable, Iterable, Union

from heisenberg.algebra import Element, Tensor, bilinear, linear
from heisenberg.combinat import Permutation, heisenberg_range
from heisenberg.config import Limits
from heisenberg.errors import BasisMismatchError, EmptyDomainError, InvalidIndexError, SizeGuardError
from heisenberg.nsymfn import NSymElem
from heisenberg.permalg import PermElem, embed_descents, heisenberg_perm

logger = logging.getLogger(__name__)


class Word(tuple):
    """A word v₁⋯vₙ in the letters 1, 2, …"""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()) -> Word:
        values = tuple(int(letter) for letter in letters)
        if any(letter < 1 for letter in values):
            raise InvalidIndexError(f"letters must be positive, got {values}")
        return super().__new__(cls, values)

    @property
    def degree(self) -> int:
        return len(self)

    def has_distinct_letters(self) -> bool:
        return len(set(self)) == len(self)

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self) if all(v < 10 for v in self) else str(tuple(self))


class WordElem(Element):
    space = "word"

    def normalize_index(self, index: Hashable) -> Word:
        return index if isinstance(index, Word) else Word(index)


def _concat_rule(u: Word, v: Word):
    return ((Word((*u, *v)), 1),)


def concatenate(f: WordElem, g: WordElem) -> WordElem:
    return bilinear(f, g, _concat_rule)


def _split_rule(word: Word):
    for mask in product((True, False), repeat=len(word)):
        left = Word(letter for letter, keep in zip(word, mask) if keep)
        right = Word(letter for letter, keep in zip(word, mask) if not keep)
        yield (left, right), 1


def word_coproduct(f: Union[Word, WordElem]) -> Tensor:
    """Δ(v₁⋯vₙ) = Σ over position subsets S of w_S ⊗ w_{S^c}."""
    f = WordElem({f: 1}) if isinstance(f, Word) else f
    return linear(f, _split_rule, Tensor(f))


def words(n: int, d: int) -> list[Word]:
    """All dⁿ words of length n, lexicographically."""
    return [Word(letters) for letters in product(range(1, d + 1), repeat=n)]


def distinct_letter_words(n: int, d: int) -> list[Word]:
    return [Word(letters) for letters in _itertools_permutations(range(1, d + 1), n)]


Action = Callable[[Word], WordElem]


class GradedEndo:
    """A degree-preserving linear endomorphism of T(V), dim V = ``alphabet_size``.

    Images of basis words are computed on demand and cached, so only the
    degrees that are actually evaluated get materialized.
    """

    def __init__(self, action: Action, alphabet_size: int, name: str = "f") -> None:
        self._action = action
        self.alphabet_size = alphabet_size
        self.name = name
        self._images: dict[Word, WordElem] = {}

    def __repr__(self) -> str:
        return f"GradedEndo({self.name}, d={self.alphabet_size})"

    def _check_word(self, word: Word) -> None:
        if any(letter > self.alphabet_size for letter in word):
            raise InvalidIndexError(f"word {word} uses letters outside 1..{self.alphabet_size}")

    def image(self, word: Word) -> WordElem:
        word = Word(word)
        cached = self._images.get(word)
        if cached is None:
            self._check_word(word)
            cached = self._action(word)
            if any(w.degree != word.degree for w in cached.support()):
                raise InvalidIndexError(f"{self.name} does not preserve the degree of {word}")
            self._images[word] = cached
        return cached

    def apply(self, f: Union[Word, WordElem]) -> WordElem:
        f = WordElem({f: 1}) if isinstance(f, Word) else f
        return linear(f, lambda word: self.image(word).items(), WordElem())

    __call__ = apply

    def matrix(self, degree: int) -> dict[Word, WordElem]:
        """The degree-n block: the image of each of the dⁿ words."""
        block = {word: self.image(word) for word in words(degree, self.alphabet_size)}
        logger.debug("%s: materialized degree %d (%d words)", self.name, degree, len(block))
        return block

    def same_on(self, other: GradedEndo, sample_words: Iterable[Word]) -> bool:
        return all(self.image(word) == other.image(word) for word in sample_words)


def _check_alphabets(f: GradedEndo, g: GradedEndo) -> int:
    if f.alphabet_size != g.alphabet_size:
        raise BasisMismatchError(f"alphabet sizes {f.alphabet_size} and {g.alphabet_size} differ")
    return f.alphabet_size


def unit(d: int) -> GradedEndo:
    """ιε: the projection onto degree 0, the unit of #."""
    return GradedEndo(lambda word: WordElem() if word else WordElem({word: 1}), d, name="ιε")


def compose(f: GradedEndo, g: GradedEndo) -> GradedEndo:
    """f∘g."""
    d = _check_alphabets(f, g)
    return GradedEndo(lambda word: f.apply(g.image(word)), d, name=f"({f.name}∘{g.name})")


def convolve(f: GradedEndo, g: GradedEndo) -> GradedEndo:
    """f ⋆ g = m∘(f⊗g)∘Δ."""
    d = _check_alphabets(f, g)

    def action(word: Word) -> WordElem:
        result = WordElem()
        for (left, right), coeff in word_coproduct(word).items():
            image = f.image(left)
            if image:
                result = result + coeff * concatenate(image, g.image(right))
        return result

    return GradedEndo(action, d, name=f"({f.name}⋆{g.name})")


def endo_heisenberg(f: GradedEndo, g: GradedEndo) -> GradedEndo:
    """(f#g)(w) = Σ f(w₁)₂ · g(w₂ · f(w₁)₁)."""
    d = _check_alphabets(f, g)

    def action(word: Word) -> WordElem:
        acc: dict[Word, Fraction] = defaultdict(Fraction)
        for (w1, w2), c1 in word_coproduct(word).items():
            image = f.image(w1)
            if not image:
                continue
            for (u1, u2), c2 in word_coproduct(image).items():
                for v, c3 in g.image(Word((*w2, *u1))).items():
                    acc[Word((*u2, *v))] += c1 * c2 * c3
        return WordElem(acc)

    return GradedEndo(action, d, name=f"({f.name}#{g.name})")


def psi_action(sigma: Permutation, d: int) -> GradedEndo:
    """Ψ(σ): v₁⋯vₙ ↦ v_{σ(1)}⋯v_{σ(n)} on words of length n, zero elsewhere."""
    sigma = Permutation(sigma)

    def action(word: Word) -> WordElem:
        if word.degree != sigma.n:
            return WordElem()
        return WordElem({Word(word[i - 1] for i in sigma): 1})

    return GradedEndo(action, d, name=f"Ψ({sigma})")


def psi_of_element(f: PermElem, d: int) -> GradedEndo:
    """Ψ extended linearly to kS∞."""

    def action(word: Word) -> WordElem:
        acc: dict[Word, Fraction] = defaultdict(Fraction)
        for sigma, coeff in f.items():
            if sigma.n == word.degree:
                acc[Word(word[i - 1] for i in sigma)] += coeff
        return WordElem(acc)

    return GradedEndo(action, d, name="Ψ(f)")


def identity_word(n: int) -> Word:
    return Word(range(1, n + 1))


def read_permutations(image: WordElem) -> PermElem:
    """Read Σ c·Ψ(σ)(12…n) back as Σ c·σ."""
    return PermElem({Permutation(word): coeff for word, coeff in image.items()})


def check_alphabet(n: int, limits: Limits) -> None:
    if n > limits.schur_weyl_alphabet:
        raise SizeGuardError(f"words of length {n} need more than the {limits.schur_weyl_alphabet} letters allowed")


def verify_schur_weyl(sigma: Permutation, tau: Permutation, n: int, d: int = 6) -> bool:
    """Compare (Ψσ # Ψτ)(12…n) with the degree-n part of σ # τ."""
    sigma, tau = Permutation(sigma), Permutation(tau)
    if n not in heisenberg_range(sigma.n, tau.n):
        raise EmptyDomainError(f"n={n} outside [{max(sigma.n, tau.n)}, {sigma.n + tau.n}]")
    if d < n:
        raise InvalidIndexError(f"alphabet size {d} is smaller than n={n}")
    endo = endo_heisenberg(psi_action(sigma, d), psi_action(tau, d))
    observed = read_permutations(endo.image(identity_word(n)))
    expected = heisenberg_perm(PermElem({sigma: 1}), PermElem({tau: 1})).component(n)
    if observed != expected:
        logger.debug("Schur-Weyl mismatch for %s # %s at n=%d", sigma, tau, n)
    return observed == expected


def check_gr_invariance(f: NSymElem, sample_words: Iterable[Word]) -> bool:
    """Ψ(f) maps each distinct-letter word into the span of its rearrangements."""
    sample_words = [Word(w) for w in sample_words]
    for word in sample_words:
        if not word.has_distinct_letters():
            raise InvalidIndexError(f"word {word} repeats a letter")
    d = max((max(word) for word in sample_words if word), default=1)
    endo = psi_of_element(embed_descents(f), d)
    for word in sample_words:
        letters = sorted(word)
        if any(sorted(image) != letters for image in endo.image(word).support()):
            return False
    return True
