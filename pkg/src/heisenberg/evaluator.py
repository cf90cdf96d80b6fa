"""Evaluate parsed expressions and serialize the results."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Union

from heisenberg import nsymfn, permalg, qsymfn, symfn
from heisenberg.algebra import Element, Tensor
from heisenberg.combinat import compositions, partitions, permutations
from heisenberg.config import DEFAULT_LIMITS, Limits
from heisenberg.errors import ExprTypeError, SizeGuardError, TruncationError
from heisenberg.expr import SCALAR, Atom, BinOp, Call, Expr, Neg, Scalar, format_atom, format_expr, infer_space

logger = logging.getLogger(__name__)

Value = Union[Element, Fraction]

# (operator, space tag) -> product
PRODUCTS: dict[tuple[str, str], Callable] = {
    ("#", "h"): symfn.heisenberg,
    ("#", "p"): symfn.heisenberg,
    ("#", "X"): nsymfn.heisenberg_X,
    ("#", "perm"): permalg.heisenberg_perm,
    ("*", "h"): symfn.external,
    ("*", "p"): symfn.external,
    ("*", "X"): nsymfn.external_X,
    ("*", "perm"): permalg.mr_product,
    ("*", "M"): qsymfn.product_M,
    (".", "h"): symfn.internal,
    (".", "p"): symfn.internal,
    (".", "X"): nsymfn.internal_X,
    (".", "perm"): permalg.compose,
}

# (function, argument space) -> map; truncated maps take N as a second argument
UNARY: dict[tuple[str, str], Callable] = {
    ("delta", "h"): symfn.coproduct,
    ("delta", "p"): symfn.coproduct,
    ("delta", "X"): nsymfn.coproduct_X,
    ("delta", "perm"): permalg.coproduct_perm,
    ("delta", "M"): qsymfn.external_coproduct,
    ("delta_heis", "M"): qsymfn.heisenberg_coproduct,
    ("delta_int", "M"): qsymfn.internal_coproduct,
    ("antipode", "h"): symfn.antipode_heisenberg_h,
    ("antipode", "X"): nsymfn.antipode_heisenberg_X,
    ("pi", "X"): nsymfn.project_pi,
    ("psi", "h"): symfn.iso_external_to_heisenberg,
    ("psi", "X"): nsymfn.iso_psi,
    ("psi_inv", "h"): symfn.iso_external_to_heisenberg_inverse,
    ("psi_inv", "X"): nsymfn.iso_psi_inverse,
    ("to_p", "h"): symfn.h_to_p,
    ("to_h", "p"): symfn.p_to_h,
    ("embed", "X"): permalg.embed_descents,
}

TRUNCATED: dict[tuple[str, str], Callable] = {
    ("antipode", "M"): qsymfn.antipode_heisenberg_qsym,
    ("psi_dual", "M"): qsymfn.iso_dual_psi,
    ("phi", "h"): symfn.iso_heisenberg_to_internal_truncated,
    ("phi", "X"): nsymfn.phi_X,
}

_CONSTRUCTORS = {
    "h": lambda index: symfn.SymElem("h", {index: 1}),
    "p": lambda index: symfn.SymElem("p", {index: 1}),
    "X": lambda index: nsymfn.NSymElem({index: 1}),
    "M": lambda index: qsymfn.QSymElem({index: 1}),
    "perm": lambda index: permalg.PermElem({index: 1}),
}


def space_of(value: Value) -> str:
    if isinstance(value, Fraction):
        return SCALAR
    return value.tag


def _factor_tag(value: Element) -> str:
    return value.factor.tag if isinstance(value, Tensor) else value.tag


def _unit_like(value: Element) -> Element:
    """The unit 1 (or 1⊗1) of the space ``value`` lives in; scalars act as c·1."""
    return value.term(((), ())) if isinstance(value, Tensor) else value.term(())


@dataclass
class Evaluator:
    """Evaluates expressions under size limits.

    ``truncate`` is the default N for maps into a completion when the
    expression does not give one.
    """

    limits: Limits = DEFAULT_LIMITS
    truncate: Optional[int] = None
    cutoffs: list[int] = field(default_factory=list)

    def evaluate(self, expr: Expr) -> Value:
        infer_space(expr)
        return self._eval(expr)

    def _eval(self, expr: Expr) -> Value:
        if isinstance(expr, Scalar):
            return expr.value
        if isinstance(expr, Atom):
            return self._atom(expr)
        if isinstance(expr, Neg):
            return -self._eval(expr.operand)
        if isinstance(expr, Call):
            return self._call(expr)
        return self._binop(expr.op, self._eval(expr.left), self._eval(expr.right))

    def _atom(self, atom: Atom) -> Element:
        if atom.space == "perm" and len(atom.index) > self.limits.max_perm_degree:
            raise SizeGuardError(
                f"{format_atom('perm', atom.index)} has degree {len(atom.index)}, "
                f"above the limit {self.limits.max_perm_degree}"
            )
        return _CONSTRUCTORS[atom.space](atom.index)

    def _binop(self, op: str, left: Value, right: Value) -> Value:
        if isinstance(left, Fraction) and isinstance(right, Fraction):
            if op == "+":
                return left + right
            if op == "-":
                return left - right
            return left * right
        if isinstance(left, Fraction):
            left = left * _unit_like(right)
        if isinstance(right, Fraction):
            right = right * _unit_like(left)
        if op in ("+", "-"):
            return left + right if op == "+" else left - right
        multiply = PRODUCTS.get((op, _factor_tag(left)))
        if multiply is None:
            raise ExprTypeError(f"operator {op} is not defined on {space_of(left)}")
        logger.debug("evaluating %s on %s", op, space_of(left))
        if isinstance(left, Tensor):
            return left.componentwise(right, multiply)
        return multiply(left, right)

    def _call(self, call: Call) -> Value:
        argument = self._eval(call.argument)
        key = (call.name, space_of(argument))
        if key in UNARY:
            return UNARY[key](argument)
        cutoff = call.cutoff if call.cutoff is not None else self.truncate
        if cutoff is None:
            raise TruncationError(f"{call.name} lands in a completion: write {call.name}(e, N) or pass --truncate N")
        self.cutoffs.append(cutoff)
        return TRUNCATED[key](argument, cutoff)


def format_index(space: str, index) -> str:
    if "⊗" in space:
        factor = space.split("⊗")[0]
        return "⊗".join(format_index(factor, part) for part in index)
    return format_atom(space, tuple(index))


def format_coefficient(coeff: Fraction) -> str:
    return f"{coeff.numerator}/{coeff.denominator}"


@dataclass
class ResultDoc:
    """An evaluated expression in canonical term order."""

    space: str
    terms: list[tuple[tuple, Fraction]]
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_value(cls, value: Value, **meta) -> ResultDoc:
        if isinstance(value, Fraction):
            terms = [((), value)] if value else []
            return cls(SCALAR, terms, {"degrees": [0] if value else [], **meta})
        return cls(value.tag, value.terms(), {"degrees": value.degrees(), **meta})

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""

        def plain(index):
            if "⊗" in self.space:
                return [list(part) for part in index]
            return list(index)

        return {
            "space": self.space,
            "terms": [{"index": plain(index), "coeff": format_coefficient(coeff)} for index, coeff in self.terms],
            "meta": self.meta,
        }


def format_result_text(doc: ResultDoc) -> str:
    """One term per line: coefficient, then basis element."""
    if not doc.terms:
        return "0"
    if doc.space == SCALAR:
        return str(doc.terms[0][1])
    return "\n".join(f"{coeff} {format_index(doc.space, index)}" for index, coeff in doc.terms)


def format_result_json(doc: ResultDoc) -> str:
    return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False)


def evaluate_expression(expr: Expr, limits: Limits = DEFAULT_LIMITS, truncate: Optional[int] = None) -> ResultDoc:
    evaluator = Evaluator(limits, truncate)
    value = evaluator.evaluate(expr)
    cutoffs = sorted(set(evaluator.cutoffs))
    return ResultDoc.from_value(value, expression=format_expr(expr), truncation=cutoffs or None)


TABLE_OPS = {"heis": "#", "ext": "*", "int": "."}
_TABLE_BASES = {"h": partitions, "p": partitions, "X": compositions, "perm": permutations}


def basis_table(space: str, max_degree: int, op: str, limits: Limits = DEFAULT_LIMITS) -> list[ResultDoc]:
    """Products of every basis pair of positive degrees with total degree ≤ max_degree.

    Raises:
        SizeGuardError: above ``limits.max_table_degree``, or above
            ``limits.max_perm_degree`` for permutations.
    """
    if max_degree > limits.max_table_degree:
        raise SizeGuardError(f"table degree {max_degree} is above the limit {limits.max_table_degree}; pass --force")
    if space == "perm" and max_degree > limits.max_perm_degree:
        raise SizeGuardError(f"permutation table degree {max_degree} is above the limit {limits.max_perm_degree}")
    symbol = TABLE_OPS[op]
    multiply = PRODUCTS[(symbol, space)]
    family = _TABLE_BASES[space]
    docs = []
    for p in range(1, max_degree + 1):
        for q in range(1, max_degree + 1 - p):
            for left, right in product(family(p), family(q)):
                value = multiply(_CONSTRUCTORS[space](left), _CONSTRUCTORS[space](right))
                docs.append(
                    ResultDoc.from_value(value, left=format_atom(space, left), op=symbol, right=format_atom(space, right))
                )
    logger.debug("table %s %s up to degree %d: %d pairs", space, op, max_degree, len(docs))
    return docs


def format_table_text(docs: list[ResultDoc]) -> str:
    blocks = []
    for doc in docs:
        header = f"{doc.meta['left']} {doc.meta['op']} {doc.meta['right']} ="
        body = "\n".join(f"  {line}" for line in format_result_text(doc).splitlines())
        blocks.append(f"{header}\n{body}")
    return "\n".join(blocks)


def format_table_json(docs: list[ResultDoc]) -> str:
    return json.dumps([doc.to_dict() for doc in docs], indent=2, ensure_ascii=False)
