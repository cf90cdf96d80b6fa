"""Tests for the expression parser."""

from fractions import Fraction

import pytest

from heisenberg.errors import ExprSyntaxError, ExprTypeError
from heisenberg.expr import Atom, BinOp, Call, Neg, Scalar, format_expr, infer_space, parse


class TestParse:
    """Tests for the grammar."""

    def test_heisenberg_product(self):
        """Test the worked example expression."""
        assert parse("h[2,1] # h[3]") == BinOp("#", Atom("h", (2, 1)), Atom("h", (3,)))

    def test_products_bind_tighter_than_sums(self):
        """Test that # binds tighter than +."""
        expr = parse("h[1] + h[1] # h[1]")
        assert expr == BinOp("+", Atom("h", (1,)), BinOp("#", Atom("h", (1,)), Atom("h", (1,))))

    def test_left_associative(self):
        """Test that products of equal precedence group to the left."""
        expr = parse("X[1] # X[2] * X[1]")
        assert expr == BinOp("*", BinOp("#", Atom("X", (1,)), Atom("X", (2,))), Atom("X", (1,)))

    def test_scalars(self):
        """Test integers, fractions and unary minus."""
        assert parse("1/2 * p[1,1]") == BinOp("*", Scalar(Fraction(1, 2)), Atom("p", (1, 1)))
        assert parse("-X[1]") == Neg(Atom("X", (1,)))

    @pytest.mark.parametrize(
        "text, image",
        [
            ("perm 52413", (5, 2, 4, 1, 3)),
            ("perm[2,1]", (2, 1)),
            ("perm[1,2,3,4,5,6,7,8,10,9]", (1, 2, 3, 4, 5, 6, 7, 8, 10, 9)),
        ],
    )
    def test_permutations(self, text, image):
        """Test digit and list forms of permutations."""
        assert parse(text) == Atom("perm", image)

    def test_calls(self):
        """Test function calls with and without a cutoff."""
        assert parse("antipode(M[1], 3)") == Call("antipode", Atom("M", (1,)), 3)
        assert parse("delta(perm 52413)") == Call("delta", Atom("perm", (5, 2, 4, 1, 3)))

    def test_unit_atom(self):
        """Test that empty brackets give the unit."""
        assert parse("h[] + h[1]") == BinOp("+", Atom("h", ()), Atom("h", (1,)))


class TestSyntaxErrors:
    """Tests for error positions."""

    def test_end_of_input(self):
        """Test a missing right operand."""
        with pytest.raises(ExprSyntaxError) as excinfo:
            parse("h[2,1] #")
        assert excinfo.value.column == 9
        assert "BASIS" in excinfo.value.expected

    def test_unknown_name(self):
        """Test that names outside the vocabulary are rejected."""
        with pytest.raises(ExprSyntaxError) as excinfo:
            parse("h[1] # q[1]")
        assert excinfo.value.column == 8

    def test_illegal_character_on_second_line(self):
        """Test line and column on multi-line input."""
        with pytest.raises(ExprSyntaxError) as excinfo:
            parse("h[1]\n  & h[1]")
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    @pytest.mark.parametrize("text", ["h[0]", "perm 112", "1/0", "h[1,]", "(h[1]"])
    def test_malformed(self, text):
        """Test zero parts, repeated letters, zero divisors and bad brackets."""
        with pytest.raises(ExprSyntaxError):
            parse(text)


class TestTypes:
    """Tests for infer_space."""

    @pytest.mark.parametrize(
        "text, space",
        [
            ("h[2,1] # h[3]", "h"),
            ("delta(p[3])", "p⊗p"),
            ("embed(X[2,1])", "perm"),
            ("pi(X[1,2])", "h"),
            ("2 * 1/3", "scalar"),
            ("delta(X[1]) # delta(X[1])", "X⊗X"),
            ("M[1] * M[1] + 1", "M"),
            ("2 # X[1,2]", "X"),
            ("delta(X[1]) * 1/2", "X⊗X"),
        ],
    )
    def test_spaces(self, text, space):
        """Test the inferred result space."""
        assert infer_space(parse(text)) == space

    @pytest.mark.parametrize(
        "text",
        [
            "h[1] # p[1]",
            "antipode(p[1])",
            "M[1] # M[1]",
            "delta(h[1]) + 1",
            "to_h(h[1])",
            "h[1] . X[1]",
            "2 . h[1]",
            "perm 21 . 1/2",
            "2 . 3",
            "2 # M[1]",
        ],
    )
    def test_mismatches(self, text):
        """Test operators and functions applied across spaces."""
        with pytest.raises(ExprTypeError):
            parse(text)


class TestFormat:
    """Tests for format_expr."""

    @pytest.mark.parametrize(
        "text",
        [
            "h[2,1] # h[3]",
            "1/2 * p[1,1] + 1/2 * p[2]",
            "-(X[1] . X[2]) - psi(X[1])",
            "antipode(M[1], 3) * 2",
            "perm 12 # perm[1,2,3,4,5,6,7,8,10,9]",
            "delta(h[])",
        ],
    )
    def test_reparse(self, text):
        """Test that the printed form parses back to the same tree."""
        expr = parse(text)
        assert parse(format_expr(expr)) == expr

    def test_fully_parenthesized(self):
        """Test the printed form of a sum of products."""
        assert format_expr(parse("h[1] + h[1] # h[2]")) == "(h[1] + (h[1] # h[2]))"
