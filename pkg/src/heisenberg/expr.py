"""The expression language of the command line.

Expressions are parsed with PLY. Examples::

    h[2,1] # h[3]
    perm 12 # perm 132
    delta(perm 52413)
    antipode(M[1], 3) * 2
    1/2 * p[1,1] + 1/2 * p[2]

``#`` is the Heisenberg product, ``*`` the external (or Malvenuto–Reutenauer,
or quasi-shuffle) product and ``.`` the internal product or composition.
The three products share one precedence level above ``+`` and ``-`` and all
operators associate to the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import ply.lex as lex
import ply.yacc as yacc

from heisenberg.combinat import Permutation
from heisenberg.errors import ExprSyntaxError, ExprTypeError, InvalidIndexError

BASES = ("h", "p", "X", "M")

# function name -> {argument space: result space}
FUNCTIONS: dict[str, dict[str, str]] = {
    "delta": {"h": "h⊗h", "p": "p⊗p", "X": "X⊗X", "perm": "perm⊗perm", "M": "M⊗M"},
    "delta_heis": {"M": "M⊗M"},
    "delta_int": {"M": "M⊗M"},
    "antipode": {"h": "h", "X": "X", "M": "M"},
    "pi": {"X": "h"},
    "psi": {"h": "h", "X": "X"},
    "psi_inv": {"h": "h", "X": "X"},
    "psi_dual": {"M": "M"},
    "phi": {"h": "h", "X": "X"},
    "to_p": {"h": "p"},
    "to_h": {"p": "h"},
    "embed": {"X": "perm"},
}

# operator -> spaces it is defined on, besides the scalar cases
OPERATORS: dict[str, frozenset[str]] = {
    "+": frozenset({"h", "p", "X", "perm", "M"}),
    "-": frozenset({"h", "p", "X", "perm", "M"}),
    "#": frozenset({"h", "p", "X", "perm"}),
    "*": frozenset({"h", "p", "X", "perm", "M"}),
    ".": frozenset({"h", "p", "X", "perm"}),
}

SCALAR = "scalar"


@dataclass(frozen=True)
class Atom:
    space: str
    index: tuple[int, ...]


@dataclass(frozen=True)
class Scalar:
    value: Fraction


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class Call:
    name: str
    argument: Expr
    cutoff: Optional[int] = None


Expr = Union[Atom, Scalar, BinOp, Neg, Call]


def _position(text: str, lexpos: int) -> tuple[int, int]:
    line = text.count("\n", 0, lexpos) + 1
    column = lexpos - (text.rfind("\n", 0, lexpos) + 1) + 1
    return line, column


class ExprParser:
    """PLY lexer and LALR parser for one expression."""

    reserved = {**{name: "BASIS" for name in BASES}, "perm": "PERM", **{name: "FUNC" for name in FUNCTIONS}}

    tokens = (
        "NUMBER",
        "BASIS",
        "PERM",
        "FUNC",
        "LBRACKET",
        "RBRACKET",
        "LPAREN",
        "RPAREN",
        "COMMA",
        "PLUS",
        "MINUS",
        "HASH",
        "STAR",
        "DOT",
        "SLASH",
    )

    t_LBRACKET = r"\["
    t_RBRACKET = r"\]"
    t_LPAREN = r"\("
    t_RPAREN = r"\)"
    t_COMMA = r","
    t_PLUS = r"\+"
    t_MINUS = r"-"
    t_HASH = r"\#"
    t_STAR = r"\*"
    t_DOT = r"\."
    t_SLASH = r"/"
    t_NUMBER = r"\d+"
    t_ignore = " \t\r"

    precedence = (
        ("left", "PLUS", "MINUS"),
        ("left", "HASH", "STAR", "DOT"),
        ("right", "UMINUS"),
    )

    start = "expression"

    def __init__(self) -> None:
        self.text = ""
        self.lexer = lex.lex(module=self, errorlog=lex.NullLogger())
        self.parser = yacc.yacc(module=self, debug=False, write_tables=False, errorlog=yacc.NullLogger())

    def _error(self, message: str, lexpos: int, expected: tuple[str, ...] = ()) -> ExprSyntaxError:
        line, column = _position(self.text, lexpos)
        return ExprSyntaxError(message, line=line, column=column, expected=expected, text=self.text)

    def t_NAME(self, t):
        r"[A-Za-z_][A-Za-z_0-9]*"
        if t.value not in self.reserved:
            raise self._error(f"unknown name {t.value!r}", t.lexpos)
        t.type = self.reserved[t.value]
        return t

    def t_newline(self, t):
        r"\n+"
        t.lexer.lineno += len(t.value)

    def t_error(self, t):
        raise self._error(f"illegal character {t.value[0]!r}", t.lexpos)

    def p_expression_binop(self, p):
        """expression : expression PLUS expression
        | expression MINUS expression
        | expression HASH expression
        | expression STAR expression
        | expression DOT expression"""
        p[0] = BinOp(p[2], p[1], p[3])

    def p_expression_uminus(self, p):
        "expression : MINUS expression %prec UMINUS"
        p[0] = Neg(p[2])

    def p_expression_group(self, p):
        "expression : LPAREN expression RPAREN"
        p[0] = p[2]

    def p_expression_scalar(self, p):
        """expression : NUMBER
        | NUMBER SLASH NUMBER"""
        if len(p) == 2:
            p[0] = Scalar(Fraction(int(p[1])))
        elif int(p[3]) == 0:
            raise self._error("division by zero", p.lexpos(3))
        else:
            p[0] = Scalar(Fraction(int(p[1]), int(p[3])))

    def p_expression_basis(self, p):
        "expression : BASIS LBRACKET parts RBRACKET"
        parts = p[3]
        if any(part < 1 for part in parts):
            raise self._error(f"parts of {p[1]}[...] must be positive", p.lexpos(2))
        p[0] = Atom(p[1], parts)

    def p_expression_perm_digits(self, p):
        "expression : PERM NUMBER"
        p[0] = self._permutation(tuple(int(digit) for digit in p[2]), p.lexpos(2))

    def p_expression_perm_list(self, p):
        "expression : PERM LBRACKET parts RBRACKET"
        p[0] = self._permutation(p[3], p.lexpos(2))

    def _permutation(self, image: tuple[int, ...], lexpos: int) -> Atom:
        try:
            return Atom("perm", tuple(Permutation(image)))
        except InvalidIndexError as exc:
            raise self._error(str(exc), lexpos) from exc

    def p_expression_call(self, p):
        """expression : FUNC LPAREN expression RPAREN
        | FUNC LPAREN expression COMMA NUMBER RPAREN"""
        p[0] = Call(p[1], p[3], int(p[5]) if len(p) == 7 else None)

    def p_parts(self, p):
        """parts : numbers
        | empty"""
        p[0] = p[1]

    def p_numbers(self, p):
        """numbers : NUMBER
        | numbers COMMA NUMBER"""
        p[0] = (int(p[1]),) if len(p) == 2 else (*p[1], int(p[3]))

    def p_empty(self, p):
        "empty :"
        p[0] = ()

    def p_error(self, t):
        stack = getattr(self.parser, "statestack", None)
        actions = self.parser.action.get(stack[-1], {}) if stack else {}
        expected = tuple(sorted("end of input" if name == "$end" else name for name in actions))
        if t is None:
            raise self._error("unexpected end of input", len(self.text), expected)
        raise self._error(f"unexpected {t.type} {t.value!r}", t.lexpos, expected)

    def parse(self, text: str) -> Expr:
        self.text = text
        self.lexer.lineno = 1
        return self.parser.parse(text, lexer=self.lexer)


@lru_cache(maxsize=1)
def _parser() -> ExprParser:
    return ExprParser()


def parse(text: str) -> Expr:
    """Parse and type-check an expression.

    Raises:
        ExprSyntaxError: with the line, column and expected tokens.
        ExprTypeError: if an operator or function is applied across spaces.
    """
    expr = _parser().parse(text)
    infer_space(expr)
    return expr


def infer_space(expr: Expr) -> str:
    """The space an expression evaluates in: a basis tag, ``perm``, ``scalar`` or a tensor tag."""
    if isinstance(expr, Atom):
        return expr.space
    if isinstance(expr, Scalar):
        return SCALAR
    if isinstance(expr, Neg):
        return infer_space(expr.operand)
    if isinstance(expr, Call):
        space = infer_space(expr.argument)
        results = FUNCTIONS[expr.name]
        if space not in results:
            raise ExprTypeError(f"{expr.name} is not defined on {space}; it accepts {', '.join(results)}")
        return results[space]
    left, right = infer_space(expr.left), infer_space(expr.right)
    if expr.op == "." and SCALAR in (left, right):
        raise ExprTypeError(f"operator . is not defined on scalars, got {left} and {right}")
    if left == SCALAR and right == SCALAR:
        return SCALAR
    if SCALAR in (left, right):
        other = right if left == SCALAR else left
        if expr.op in ("+", "-") and "⊗" in other:
            raise ExprTypeError(f"cannot combine {left} and {right} with {expr.op}")
        if other.split("⊗")[0] not in OPERATORS[expr.op]:
            raise ExprTypeError(f"operator {expr.op} is not defined on {other}")
        return other
    if left != right:
        raise ExprTypeError(f"cannot combine {left} and {right} with {expr.op}")
    if left.split("⊗")[0] not in OPERATORS[expr.op]:
        raise ExprTypeError(f"operator {expr.op} is not defined on {left}")
    return left


def format_atom(space: str, index: tuple[int, ...]) -> str:
    if space == "perm":
        if index and max(index) < 10:
            return "perm " + "".join(str(v) for v in index)
        return "perm[" + ",".join(str(v) for v in index) + "]"
    return f"{space}[{','.join(str(v) for v in index)}]"


def format_expr(expr: Expr) -> str:
    """Print fully parenthesized, so parsing the output gives ``expr`` back."""
    if isinstance(expr, Atom):
        return format_atom(expr.space, expr.index)
    if isinstance(expr, Scalar):
        text = str(abs(expr.value))
        return f"(-{text})" if expr.value < 0 else text
    if isinstance(expr, Neg):
        return f"(-{format_expr(expr.operand)})"
    if isinstance(expr, Call):
        cutoff = "" if expr.cutoff is None else f", {expr.cutoff}"
        return f"{expr.name}({format_expr(expr.argument)}{cutoff})"
    return f"({format_expr(expr.left)} {expr.op} {format_expr(expr.right)})"
