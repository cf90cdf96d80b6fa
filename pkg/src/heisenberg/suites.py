"""Named property suites behind ``heisenberg verify``.

A suite is a list of :class:`PropertyCheck` objects. Each check pairs a
predicate with a case generator that takes a degree bound, and a suite run
stops at the first case whose predicate is false.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, Optional

from heisenberg import nsymfn, permalg, qsymfn, rep_oracle, symfn, tensor_oracle
from heisenberg.algebra import Element, Tensor
from heisenberg.combinat import (
    Composition,
    Partition,
    Permutation,
    compositions,
    egf_heisenberg,
    heisenberg_range,
    partitions,
    permutations,
)
from heisenberg.config import DEFAULT_LIMITS, Limits
from heisenberg.errors import InvalidIndexError

logger = logging.getLogger(__name__)

Case = tuple
CaseGenerator = Callable[[int, Limits], Iterable[Case]]


@dataclass
class PropertyCheck:
    """A named predicate and the cases it must hold on."""

    name: str
    predicate: Callable[..., bool]
    cases: CaseGenerator

    def run(self, bound: int, limits: Limits) -> Iterator[tuple[Case, bool]]:
        for case in self.cases(bound, limits):
            yield case, bool(self.predicate(*case))


@dataclass
class Suite:
    name: str
    description: str
    default_degree: int
    checks: list[PropertyCheck] = field(default_factory=list)


@dataclass
class SuiteResult:
    """Outcome of one suite run."""

    suite: str
    max_degree: int
    cases: int = 0
    check: Optional[str] = None
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            "suite": self.suite,
            "max_degree": self.max_degree,
            "cases": self.cases,
            "ok": self.ok,
            "check": self.check,
            "counterexample": self.counterexample,
        }


def describe_case(case: Case) -> str:
    parts = []
    for value in case:
        if isinstance(value, Permutation):
            parts.append(str(value) or "()")
        elif isinstance(value, tuple):
            parts.append(str(tuple(value)))
        else:
            parts.append(str(value))
    return ", ".join(parts)


# Case generators


def _generator_triples(bound: int, limits: Limits) -> Iterator[Case]:
    for a, b, c in product(range(1, bound + 1), repeat=3):
        if a + b + c <= bound:
            yield a, b, c


def _index_pairs(family: Callable[[int], list], start: int = 1) -> CaseGenerator:
    def cases(bound: int, limits: Limits) -> Iterator[Case]:
        for p in range(start, bound + 1):
            for q in range(start, bound + 1 - p):
                for x, y in product(family(p), family(q)):
                    yield x, y

    return cases


def _diagonal_pairs(family: Callable[[int], list]) -> CaseGenerator:
    def cases(bound: int, limits: Limits) -> Iterator[Case]:
        for n in range(1, bound // 2 + 1):
            for x, y in product(family(n), repeat=2):
                yield x, y

    return cases


def _indices(family: Callable[[int], list], start: int = 1) -> CaseGenerator:
    def cases(bound: int, limits: Limits) -> Iterator[Case]:
        for n in range(start, bound + 1):
            for x in family(n):
                yield (x,)

    return cases


def _permutation_triples(bound: int, limits: Limits) -> Iterator[Case]:
    for p, q, r in product(range(1, bound + 1), repeat=3):
        if p + q + r <= bound:
            yield from product(permutations(p), permutations(q), permutations(r))


def _capped(cases: CaseGenerator, cap: int) -> CaseGenerator:
    return lambda bound, limits: cases(min(bound, cap), limits)


# Shared predicates


def _associative(multiply: Callable[[Element, Element], Element], make: Callable) -> Callable[..., bool]:
    def predicate(*indices) -> bool:
        f, g, k = (make(index) for index in indices)
        return multiply(multiply(f, g), k) == multiply(f, multiply(g, k))

    return predicate


def _triple_terms(tensor: Tensor, coproduct: Callable, side: str) -> Counter:
    acc: Counter = Counter()
    for (a, b), coeff in tensor.items():
        if side == "left":
            for (a1, a2), c in coproduct(tensor.factor.term(a)).items():
                acc[(a1, a2, b)] += coeff * c
        else:
            for (b1, b2), c in coproduct(tensor.factor.term(b)).items():
                acc[(a, b1, b2)] += coeff * c
    return Counter({k: v for k, v in acc.items() if v})


def _coassociative(coproduct: Callable, f: Element) -> bool:
    tensor = coproduct(f)
    return _triple_terms(tensor, coproduct, "left") == _triple_terms(tensor, coproduct, "right")


def _counital(coproduct: Callable, f: Element) -> bool:
    tensor = coproduct(f)
    degree = tensor.factor.degree_of
    left = f.like({b: c for (a, b), c in tensor.items() if degree(a) == 0})
    right = f.like({a: c for (a, b), c in tensor.items() if degree(b) == 0})
    return left == f and right == f


def _antipode_axiom(f: Element, coproduct: Callable, multiply: Callable, antipode: Callable, counit) -> bool:
    total = f.like()
    tensor = coproduct(f)
    for (a, b), coeff in tensor.items():
        total = total + coeff * multiply(antipode(f.term(a)), f.term(b))
    return total == counit(f) * f.term(())


# Associativity


def _h_gen(n: int) -> symfn.SymElem:
    return symfn.h(n)


def _p_gen(n: int) -> symfn.SymElem:
    return symfn.p(n)


def _x_gen(n: int) -> nsymfn.NSymElem:
    return nsymfn.X(n)


def _perm(sigma: Permutation) -> permalg.PermElem:
    return permalg.PermElem({sigma: 1})


# Interpolation


def _lambda_top(lam, mu) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    return symfn.heisenberg_h(f, g).component(lam.weight + mu.weight) == symfn.external(f, g)


def _lambda_bottom(lam, mu) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    return symfn.heisenberg_h(f, g).component(lam.weight) == symfn.internal_h(f, g)


def _sigma_top(alpha, beta) -> bool:
    f, g = nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1})
    return nsymfn.heisenberg_X(f, g).component(alpha.weight + beta.weight) == nsymfn.external_X(f, g)


def _sigma_bottom(alpha, beta) -> bool:
    f, g = nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1})
    bottom = nsymfn.heisenberg_X(f, g).component(alpha.weight)
    return permalg.embed_descents(bottom) == permalg.compose(permalg.embed_descents(f), permalg.embed_descents(g))


def _perm_top(sigma, tau) -> bool:
    f, g = _perm(sigma), _perm(tau)
    return permalg.heisenberg_perm(f, g).component(sigma.n + tau.n) == permalg.mr_product(f, g)


def _perm_bottom(sigma, tau) -> bool:
    f, g = _perm(sigma), _perm(tau)
    return permalg.heisenberg_perm(f, g).component(sigma.n) == permalg.compose(f, g)


def _endo_pairs(bound: int, limits: Limits) -> Iterator[Case]:
    tensor_oracle.check_alphabet(bound, limits)
    for p in range(1, bound + 1):
        for q in range(1, bound + 1 - p):
            for sigma, tau in product(permutations(p), permutations(q)):
                yield sigma, tau, limits.schur_weyl_alphabet


def _endo_diagonal(bound: int, limits: Limits) -> Iterator[Case]:
    for sigma, tau, d in _endo_pairs(bound, limits):
        if sigma.n == tau.n:
            yield sigma, tau, d


def _endo_top(sigma, tau, d) -> bool:
    f, g = tensor_oracle.psi_action(sigma, d), tensor_oracle.psi_action(tau, d)
    word = tensor_oracle.identity_word(sigma.n + tau.n)
    return tensor_oracle.endo_heisenberg(f, g).image(word) == tensor_oracle.convolve(f, g).image(word)


def _endo_bottom(sigma, tau, d) -> bool:
    f, g = tensor_oracle.psi_action(sigma, d), tensor_oracle.psi_action(tau, d)
    word = tensor_oracle.identity_word(sigma.n)
    return tensor_oracle.endo_heisenberg(f, g).image(word) == tensor_oracle.compose(g, f).image(word)


# Cross-formula equivalences


def _zelevinski(lam, mu) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    return symfn.heisenberg_via_zelevinski(f, g) == symfn.heisenberg_h(f, g)


def _zelevinski_p(lam, mu) -> bool:
    f, g = symfn.SymElem("p", {lam: 1}), symfn.SymElem("p", {mu: 1})
    return symfn.heisenberg_via_zelevinski(f, g) == symfn.heisenberg_p(f, g)


def _basis_change(lam, mu) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    through_p = symfn.p_to_h(symfn.heisenberg_p(symfn.h_to_p(f), symfn.h_to_p(g)))
    return through_p == symfn.heisenberg_h(f, g)


def _perm_sigma(alpha, beta) -> bool:
    f, g = nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1})
    lhs = permalg.heisenberg_perm(permalg.embed_descents(f), permalg.embed_descents(g))
    return lhs == permalg.embed_descents(nsymfn.heisenberg_X(f, g))


# Oracles


def _schur_weyl_cases(bound: int, limits: Limits) -> Iterator[Case]:
    tensor_oracle.check_alphabet(2 * bound, limits)
    for p, q in product(range(bound + 1), repeat=2):
        for sigma, tau in product(permutations(p), permutations(q)):
            for n in heisenberg_range(p, q):
                yield sigma, tau, n, limits.schur_weyl_alphabet


def _gr_cases(bound: int, limits: Limits) -> Iterator[Case]:
    # |α|+|β| ≤ bound+2
    for alpha, beta in _index_pairs(compositions)(bound + 2, limits):
        yield alpha, beta


def _gr_invariant(alpha, beta) -> bool:
    f = nsymfn.heisenberg_X(nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1}))
    d = alpha.weight + beta.weight
    sample_words = [word for n in f.degrees() for word in tensor_oracle.distinct_letter_words(n, d)]
    return tensor_oracle.check_gr_invariance(f, sample_words)


def _coset_cases(bound: int, limits: Limits) -> Iterator[Case]:
    rep_oracle.check_size(bound, bound, limits)
    for p, q in product(range(bound + 1), repeat=2):
        for alpha, beta in product(compositions(p), compositions(q)):
            for n in heisenberg_range(p, q):
                yield alpha, beta, n


def _coset_clean(alpha, beta, n) -> bool:
    failures = list(rep_oracle.coset_failures(alpha, beta, n))
    for failure in failures:
        logger.debug("coset failure: %s", failure)
    return not failures


# Hopf structure


def _sigma_hopf(alpha, beta) -> bool:
    f, g = nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1})
    lhs = nsymfn.coproduct_X(nsymfn.heisenberg_X(f, g))
    return lhs == nsymfn.heisenberg_tensor(nsymfn.coproduct_X(f), nsymfn.coproduct_X(g))


def _lambda_hopf(lam, mu) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    return symfn.coproduct(symfn.heisenberg_h(f, g)) == symfn.heisenberg_tensor(symfn.coproduct(f), symfn.coproduct(g))


def _psi_multiplicative(alpha, beta) -> bool:
    f, g = nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1})
    return nsymfn.iso_psi(nsymfn.external_X(f, g)) == nsymfn.heisenberg_X(nsymfn.iso_psi(f), nsymfn.iso_psi(g))


def _psi_comultiplicative(alpha) -> bool:
    f = nsymfn.NSymElem({alpha: 1})
    return nsymfn.coproduct_X(nsymfn.iso_psi(f)) == nsymfn.coproduct_X(f).map(nsymfn.iso_psi)


def _psi_lambda_multiplicative(lam, mu) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    psi = symfn.iso_external_to_heisenberg
    return psi(symfn.external(f, g)) == symfn.heisenberg_h(psi(f), psi(g))


def _pi_multiplicative(alpha, beta) -> bool:
    f, g = nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1})
    pi = nsymfn.project_pi
    return pi(nsymfn.heisenberg_X(f, g)) == symfn.heisenberg_h(pi(f), pi(g))


def _pi_comultiplicative(alpha) -> bool:
    f = nsymfn.NSymElem({alpha: 1})
    return symfn.coproduct(nsymfn.project_pi(f)) == nsymfn.coproduct_X(f).map(nsymfn.project_pi)


def _perm_coassociative(sigma) -> bool:
    return _coassociative(permalg.coproduct_perm, _perm(sigma))


def _perm_counital(sigma) -> bool:
    return _counital(permalg.coproduct_perm, _perm(sigma))


def _perm_mr_compatible(sigma, tau) -> bool:
    f, g = _perm(sigma), _perm(tau)
    lhs = permalg.coproduct_perm(permalg.mr_product(f, g))
    return lhs == permalg.mr_tensor(permalg.coproduct_perm(f), permalg.coproduct_perm(g))


# Antipodes


def _sigma_antipode(alpha) -> bool:
    return _antipode_axiom(
        nsymfn.NSymElem({alpha: 1}),
        nsymfn.coproduct_X,
        nsymfn.heisenberg_X,
        nsymfn.antipode_heisenberg_X,
        lambda f: f.coefficient(()),
    )


def _lambda_antipode(lam) -> bool:
    return _antipode_axiom(
        symfn.SymElem("h", {lam: 1}),
        symfn.coproduct,
        symfn.heisenberg_h,
        symfn.antipode_heisenberg_h,
        lambda f: f.coefficient(()),
    )


def _pi_intertwines_antipodes(alpha) -> bool:
    f = nsymfn.NSymElem({alpha: 1})
    return nsymfn.project_pi(nsymfn.antipode_heisenberg_X(f)) == symfn.antipode_heisenberg_h(nsymfn.project_pi(f))


def _qsym_antipode_cases(bound: int, limits: Limits) -> Iterator[Case]:
    for n in range(1, bound):
        for gamma in compositions(n):
            yield gamma, bound


def _qsym_antipode(gamma, N) -> bool:
    f = qsymfn.QSymElem({gamma: 1})
    total = qsymfn.QSymElem()
    for (a, b), coeff in qsymfn.heisenberg_coproduct(f).items():
        total = total + coeff * qsymfn.product_M(qsymfn.antipode_heisenberg_qsym(qsymfn.M(*a), N), qsymfn.M(*b))
    return total.truncate(N) == qsymfn.counit(f) * qsymfn.M()


# QSym duality


@lru_cache(maxsize=None)
def _quasi_shuffles(alpha: tuple, beta: tuple) -> tuple:
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    acc: Counter = Counter()
    for gamma, c in _quasi_shuffles(alpha[1:], beta):
        acc[(alpha[0], *gamma)] += c
    for gamma, c in _quasi_shuffles(alpha, beta[1:]):
        acc[(beta[0], *gamma)] += c
    for gamma, c in _quasi_shuffles(alpha[1:], beta[1:]):
        acc[(alpha[0] + beta[0], *gamma)] += c
    return tuple(acc.items())


def _product_is_quasi_shuffle(alpha, beta) -> bool:
    expected = qsymfn.QSymElem(_quasi_shuffles(tuple(alpha), tuple(beta)))
    return qsymfn.product_M(qsymfn.QSymElem({alpha: 1}), qsymfn.QSymElem({beta: 1})) == expected


def _product_dual_to_coproduct(alpha, beta) -> bool:
    product_ = qsymfn.product_M(qsymfn.QSymElem({alpha: 1}), qsymfn.QSymElem({beta: 1}))
    return all(
        product_.coefficient(gamma) == nsymfn.coproduct_X(nsymfn.NSymElem({gamma: 1})).coefficient((alpha, beta))
        for gamma in compositions(alpha.weight + beta.weight)
    )


_COPRODUCTS = {
    "heisenberg": (qsymfn.heisenberg_coproduct, nsymfn.heisenberg_X),
    "external": (qsymfn.external_coproduct, nsymfn.external_X),
    "internal": (qsymfn.internal_coproduct, nsymfn.internal_X),
}


@lru_cache(maxsize=None)
def _coproduct_table(which: str, n: int) -> dict:
    coproduct = _COPRODUCTS[which][0]
    return {gamma: coproduct(qsymfn.QSymElem({gamma: 1})) for gamma in compositions(n)}


def _dual_pairs(bound: int, limits: Limits) -> Iterator[Case]:
    for p, q in product(range(bound + 1), repeat=2):
        for alpha, beta in product(compositions(p), compositions(q)):
            yield alpha, beta, bound


def _coproduct_dual_to(which: str) -> Callable[..., bool]:
    def predicate(alpha, beta, bound) -> bool:
        multiply = _COPRODUCTS[which][1]
        product_ = multiply(nsymfn.NSymElem({alpha: 1}), nsymfn.NSymElem({beta: 1}))
        for n in range(max(alpha.weight, beta.weight), bound + 1):
            for gamma, tensor in _coproduct_table(which, n).items():
                if tensor.coefficient((alpha, beta)) != product_.coefficient(gamma):
                    return False
        return True

    return predicate


def _classical_parts(gamma) -> bool:
    n = gamma.weight
    f = qsymfn.QSymElem({gamma: 1})
    heisenberg = qsymfn.heisenberg_coproduct(f)
    external, internal = qsymfn.classical_coproducts(f)
    top = heisenberg.like({i: c for i, c in heisenberg.items() if heisenberg.degree_of(i) == n})
    diagonal = heisenberg.bidegree_component(n, n)
    return top == external and (n == 0 or diagonal == internal)


def _qsym_coassociative(gamma) -> bool:
    return _coassociative(qsymfn.heisenberg_coproduct, qsymfn.QSymElem({gamma: 1}))


def _qsym_counital(gamma) -> bool:
    return _counital(qsymfn.heisenberg_coproduct, qsymfn.QSymElem({gamma: 1}))


def _qsym_bialgebra(alpha, beta) -> bool:
    f, g = qsymfn.QSymElem({alpha: 1}), qsymfn.QSymElem({beta: 1})
    lhs = qsymfn.heisenberg_coproduct(qsymfn.product_M(f, g))
    return lhs == qsymfn.product_tensor(qsymfn.heisenberg_coproduct(f), qsymfn.heisenberg_coproduct(g))


# QSym alphabets


def _seeds(limits: Limits) -> tuple[int, ...]:
    return tuple(range(limits.sample_points))


def _alphabet_cases(bound: int, limits: Limits) -> Iterator[Case]:
    for n in range(1, bound + 1):
        for gamma in compositions(n):
            yield gamma, _seeds(limits)


def _coproduct_numeric(which: str) -> Callable[..., bool]:
    def predicate(gamma, seeds) -> bool:
        checks = qsymfn.coproduct_checks(qsymfn.QSymElem({gamma: 1}), which, k=3, seeds=seeds)
        return all(check.ok for check in checks)

    return predicate


def _dual_psi_numeric(gamma, seeds) -> bool:
    return qsymfn.dual_psi_agrees(qsymfn.QSymElem({gamma: 1}), gamma.weight + 1, k=3, seeds=seeds)


def _antipode_numeric_cases(bound: int, limits: Limits) -> Iterator[Case]:
    for n in range(1, bound + 1):
        for gamma in compositions(n):
            for k in (1, 2, 3):
                yield gamma, bound, k, _seeds(limits)


def _antipode_numeric(gamma, N, k, seeds) -> bool:
    return qsymfn.antipode_agrees(qsymfn.QSymElem({gamma: 1}), N, k=k, seeds=seeds)


# Regressions


def _regression_cases(bound: int, limits: Limits) -> Iterator[Case]:
    # the first witnesses live in degree 4
    yield (max(bound, 4),)


def _with_tail(head: tuple[int, ...], n: int) -> Composition:
    return Composition(head + (n,) if n else head)


def _sigma_phi_not_multiplicative(N) -> bool:
    """φ(X_3 # X_3) has X_(1,1,2,n) and φ(X_3) ∗ φ(X_3) has X_(2,1,1,n), for every n ≤ N−4."""
    x3 = nsymfn.X(3)
    lhs = nsymfn.phi_X(nsymfn.heisenberg_X(x3, x3), N)
    rhs = nsymfn.internal_X(nsymfn.phi_X(x3, N), nsymfn.phi_X(x3, N))
    for n in range(N - 3):
        left, right = _with_tail((1, 1, 2), n), _with_tail((2, 1, 1), n)
        if lhs.coefficient(left) != 1 or rhs.coefficient(left) != 0:
            return False
        if rhs.coefficient(right) != 1 or lhs.coefficient(right) != 0:
            return False
    return not any(alpha[:3] == (2, 1, 1) for alpha in lhs.support())


def _phi_multiplicative(lam, mu, N) -> bool:
    f, g = symfn.SymElem("h", {lam: 1}), symfn.SymElem("h", {mu: 1})
    phi = symfn.iso_heisenberg_to_internal_truncated
    return phi(symfn.heisenberg_h(f, g), N) == symfn.internal(phi(f, N), phi(g, N)).truncate(N)


def _phi_cases(bound: int, limits: Limits) -> Iterator[Case]:
    yield Partition((3,)), Partition((3,)), bound
    for lam, mu in _index_pairs(partitions)(6, limits):
        if lam.weight <= 3 and mu.weight <= 3:
            yield lam, mu, 6


def _composition_not_comultiplicative(sigma, tau) -> bool:
    f, g = _perm(sigma), _perm(tau)
    lhs = permalg.coproduct_perm(permalg.compose(f, g))
    return lhs != permalg.compose_tensor(permalg.coproduct_perm(f), permalg.coproduct_perm(g))


def _negative_control(bound: int, limits: Limits) -> Iterator[Case]:
    yield Permutation((2, 1, 3)), Permutation((1, 3, 2))


# Closed forms


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind by S(n,k) = k·S(n−1,k) + S(n−1,k−1)."""
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _stirling(n) -> bool:
    expected = nsymfn.NSymElem({(1,) * k: stirling2(n, k) for k in range(n + 1)})
    return nsymfn.heisenberg_power_X1(n) == expected


def _covering_pairs(n: int) -> int:
    full = (1 << n) - 1
    return sum(1 for s in range(full + 1) for t in range(full + 1) if s | t == full)


def _egf(N) -> bool:
    ones = [Fraction(1)] * (N + 1)
    coefficients = egf_heisenberg(ones, ones, N)
    return all(coefficients[n] == 3**n == _covering_pairs(n) for n in range(N + 1))


def _p_ones(u, v) -> bool:
    lhs = symfn.heisenberg_p(symfn.p(*([1] * u)), symfn.p(*([1] * v)))
    return lhs == symfn.p_ones_heisenberg(u, v)


def _ones_pairs(bound: int, limits: Limits) -> Iterator[Case]:
    for u in range(bound + 1):
        for v in range(bound + 1 - u):
            yield u, v


def _degrees(bound: int, limits: Limits) -> Iterator[Case]:
    for n in range(bound + 1):
        yield (n,)


SUITES: dict[str, Suite] = {}


def register(suite: Suite) -> Suite:
    SUITES[suite.name] = suite
    return suite


register(
    Suite(
        "assoc-h",
        "# is associative on h-generators",
        8,
        [PropertyCheck("h_a # h_b # h_c", _associative(symfn.heisenberg_h, _h_gen), _generator_triples)],
    )
)
register(
    Suite(
        "assoc-p",
        "# is associative on p-generators",
        8,
        [PropertyCheck("p_a # p_b # p_c", _associative(symfn.heisenberg_p, _p_gen), _generator_triples)],
    )
)
register(
    Suite(
        "assoc-X",
        "# is associative on X-generators",
        8,
        [PropertyCheck("X_a # X_b # X_c", _associative(nsymfn.heisenberg_X, _x_gen), _generator_triples)],
    )
)
register(
    Suite(
        "assoc-perm",
        "# is associative on single permutations",
        7,
        [PropertyCheck("σ # τ # ρ", _associative(permalg.heisenberg_perm, _perm), _permutation_triples)],
    )
)
register(
    Suite(
        "interpolation",
        "top component is the external product, diagonal component the internal product",
        6,
        [
            PropertyCheck("Λ top", _lambda_top, _index_pairs(partitions)),
            PropertyCheck("Λ diagonal", _lambda_bottom, _diagonal_pairs(partitions)),
            PropertyCheck("Σ top", _sigma_top, _index_pairs(compositions)),
            PropertyCheck("Σ diagonal", _sigma_bottom, _diagonal_pairs(compositions)),
            PropertyCheck("S∞ top", _perm_top, _index_pairs(permutations)),
            PropertyCheck("S∞ diagonal", _perm_bottom, _diagonal_pairs(permutations)),
            PropertyCheck("End T(V) top", _endo_top, _endo_pairs),
            PropertyCheck("End T(V) diagonal", _endo_bottom, _endo_diagonal),
        ],
    )
)
register(
    Suite(
        "zelevinski",
        "the Zelevinski identity agrees with the margin-matrix and p-basis formulas",
        7,
        [
            PropertyCheck("h basis", _zelevinski, _index_pairs(partitions)),
            PropertyCheck("p basis", _zelevinski_p, _index_pairs(partitions)),
        ],
    )
)
register(
    Suite(
        "basis-change",
        "the p-basis formula agrees with the h-basis formula",
        7,
        [
            PropertyCheck("h_λ # h_μ through p", _basis_change, _index_pairs(partitions)),
            PropertyCheck("p_(1^u) # p_(1^v) closed form", _p_ones, _ones_pairs),
        ],
    )
)
register(
    Suite(
        "perm-sigma",
        "embed_descents is a morphism for #",
        7,
        [PropertyCheck("embed(X_α # X_β)", _perm_sigma, _index_pairs(compositions))],
    )
)
register(
    Suite(
        "schur-weyl",
        "the permutation formula agrees with endomorphisms of T(V)",
        3,
        [
            PropertyCheck("Ψσ # Ψτ", tensor_oracle.verify_schur_weyl, _schur_weyl_cases),
            PropertyCheck("Garsia-Reutenauer invariance", _gr_invariant, _gr_cases),
        ],
    )
)
register(
    Suite(
        "cosets",
        "double cosets match margin matrices",
        3,
        [PropertyCheck("double cosets", _coset_clean, _coset_cases)],
    )
)
register(
    Suite(
        "hopf",
        "Δ is multiplicative for # and ψ, π are Hopf morphisms",
        6,
        [
            PropertyCheck("Σ Δ(f # g)", _sigma_hopf, _index_pairs(compositions)),
            PropertyCheck("Λ Δ(f # g)", _lambda_hopf, _index_pairs(partitions)),
            PropertyCheck("ψ(f ⋆ g) on Σ", _psi_multiplicative, _index_pairs(compositions)),
            PropertyCheck("Δψ on Σ", _psi_comultiplicative, _indices(compositions)),
            PropertyCheck("ψ(f ⋆ g) on Λ", _psi_lambda_multiplicative, _index_pairs(partitions)),
            PropertyCheck("π(f # g)", _pi_multiplicative, _index_pairs(compositions)),
            PropertyCheck("Δπ", _pi_comultiplicative, _indices(compositions)),
            PropertyCheck("S∞ coassociativity", _perm_coassociative, _capped(_indices(permutations), 5)),
            PropertyCheck("S∞ counit", _perm_counital, _capped(_indices(permutations), 5)),
            PropertyCheck("S∞ Δ(σ ⋆ τ)", _perm_mr_compatible, _capped(_index_pairs(permutations), 5)),
        ],
    )
)
register(
    Suite(
        "antipode",
        "antipode axioms on Σ, Λ and QSym",
        5,
        [
            PropertyCheck("Σ S(f₁) # f₂", _sigma_antipode, _indices(compositions)),
            PropertyCheck("Λ S(f₁) # f₂", _lambda_antipode, _indices(partitions)),
            PropertyCheck("π∘S", _pi_intertwines_antipodes, _indices(compositions)),
            PropertyCheck("QSym S(f₁) · f₂", _qsym_antipode, _qsym_antipode_cases),
        ],
    )
)
register(
    Suite(
        "qsym-duality",
        "QSym structures are transposes of the Σ structures",
        5,
        [
            PropertyCheck("M_α · M_β is the quasi-shuffle", _product_is_quasi_shuffle, _index_pairs(compositions)),
            PropertyCheck("product dual to Δ", _product_dual_to_coproduct, _index_pairs(compositions, start=0)),
            PropertyCheck("Δ_# dual to #", _coproduct_dual_to("heisenberg"), _dual_pairs),
            PropertyCheck("Δ_⋆ dual to ⋆", _coproduct_dual_to("external"), _dual_pairs),
            PropertyCheck("Δ_∘ dual to ∗", _coproduct_dual_to("internal"), _dual_pairs),
            PropertyCheck("Δ_⋆ and Δ_∘ inside Δ_#", _classical_parts, _indices(compositions, start=0)),
            PropertyCheck("Δ_# coassociativity", _qsym_coassociative, _indices(compositions)),
            PropertyCheck("Δ_# counit", _qsym_counital, _indices(compositions)),
            PropertyCheck("Δ_#(f · g)", _qsym_bialgebra, _capped(_index_pairs(compositions), 4)),
        ],
    )
)
register(
    Suite(
        "qsym-alphabet",
        "QSym coproducts, ψ* and S_# agree with alphabet evaluation",
        4,
        [
            PropertyCheck("Δ_# on X+Y+XY", _coproduct_numeric("heisenberg"), _alphabet_cases),
            PropertyCheck("Δ_⋆ on X+Y", _coproduct_numeric("external"), _alphabet_cases),
            PropertyCheck("Δ_∘ on X×Y", _coproduct_numeric("internal"), _alphabet_cases),
            PropertyCheck("ψ* on exp X", _dual_psi_numeric, _alphabet_cases),
            PropertyCheck("S_# on (−X)*", _antipode_numeric, _antipode_numeric_cases),
        ],
    )
)
register(
    Suite(
        "regression",
        "known counterexamples and their multiplicative counterparts",
        9,
        [
            PropertyCheck("Σ̂ map is not multiplicative", _sigma_phi_not_multiplicative, _regression_cases),
            PropertyCheck("Λ̂ map is multiplicative", _phi_multiplicative, _phi_cases),
            PropertyCheck("Δ is not compatible with composition", _composition_not_comultiplicative, _negative_control),
        ],
    )
)
register(
    Suite(
        "stirling",
        "X_(1)^#n expands with Stirling numbers",
        6,
        [PropertyCheck("X_(1)^#n", _stirling, _degrees)],
    )
)
register(
    Suite(
        "egf",
        "Heisenberg EGF of (1,1,...) counts covering pairs",
        8,
        [PropertyCheck("3^n", _egf, _regression_cases)],
    )
)


def suite_names() -> list[str]:
    return [*SUITES, "all"]


def run_suite(name: str, max_degree: Optional[int] = None, limits: Limits = DEFAULT_LIMITS) -> SuiteResult:
    """Run one suite, stopping at the first counterexample."""
    if name not in SUITES:
        raise InvalidIndexError(f"unknown suite {name!r}, expected one of {', '.join(suite_names())}")
    suite = SUITES[name]
    bound = suite.default_degree if max_degree is None else max_degree
    result = SuiteResult(name, bound)
    logger.info("suite %s started (max degree %d)", name, bound)
    for check in suite.checks:
        for case, holds in check.run(bound, limits):
            result.cases += 1
            if not holds:
                result.check = check.name
                result.counterexample = describe_case(case)
                logger.info("suite %s failed: %s at %s", name, check.name, result.counterexample)
                return result
    logger.info("suite %s finished: %d cases", name, result.cases)
    return result


def run_suites(name: str, max_degree: Optional[int] = None, limits: Limits = DEFAULT_LIMITS) -> list[SuiteResult]:
    """``all`` runs every suite and stops at the first failing one."""
    if name != "all":
        return [run_suite(name, max_degree, limits)]
    results = []
    for suite in SUITES:
        results.append(run_suite(suite, max_degree, limits))
        if not results[-1].ok:
            break
    return results


def format_suites_text(results: list[SuiteResult]) -> str:
    lines = []
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        lines.append(f"{status} {result.suite}: {result.cases} cases up to degree {result.max_degree}")
        if not result.ok:
            lines.append(f"  first counterexample for {result.check}: {result.counterexample}")
    return "\n".join(lines)


def format_suites_json(results: list[SuiteResult]) -> str:
    return json.dumps([result.to_dict() for result in results], indent=2, ensure_ascii=False)
