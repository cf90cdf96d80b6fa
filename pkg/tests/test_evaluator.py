"""Tests for expression evaluation and result documents."""

import json
from dataclasses import replace
from fractions import Fraction

import pytest

from heisenberg.config import DEFAULT_LIMITS
from heisenberg.errors import SizeGuardError, TruncationError
from heisenberg.evaluator import (
    ResultDoc,
    basis_table,
    evaluate_expression,
    format_result_json,
    format_result_text,
    format_table_text,
)
from heisenberg.expr import parse


def evaluate(text, **kwargs):
    return evaluate_expression(parse(text), **kwargs)


class TestEvaluate:
    """Tests for evaluate_expression."""

    def test_worked_example(self):
        """Test the six terms of h_21 # h_3 in canonical order."""
        doc = evaluate("h[2,1] # h[3]")
        assert doc.space == "h"
        assert [index for index, _ in doc.terms] == [(2, 1), (1, 1, 1, 1), (2, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 2, 1)]
        assert all(coeff == 1 for _, coeff in doc.terms)
        assert doc.meta["degrees"] == [3, 4, 5, 6]

    def test_scalars_and_sums(self):
        """Test rational arithmetic and scalar promotion."""
        assert evaluate("1/2 * p[1,1] + 1/2 * p[2]").terms == evaluate("to_p(h[2])").terms
        assert evaluate("2 + 1/3").terms == [((), Fraction(7, 3))]
        assert evaluate("X[1] + 1").terms == [((), Fraction(1)), ((1,), Fraction(1))]

    @pytest.mark.parametrize(
        "text, lifted",
        [
            ("2 # X[1,2]", "(X[] + X[]) # X[1,2]"),
            ("X[1,2] # 2", "X[1,2] # (X[] + X[])"),
            ("2 * h[2,1]", "(h[] + h[]) * h[2,1]"),
            ("perm 21 # 1/2", "perm 21 # (1/2 * perm[])"),
            ("delta(X[1]) # 3", "delta(X[1]) # (3 * delta(X[]))"),
        ],
    )
    def test_scalar_operands_are_multiples_of_one(self, text, lifted):
        """Test that a scalar next to # or * acts as c times the unit."""
        assert evaluate(text).terms == evaluate(lifted).terms

    def test_tensor_products(self):
        """Test componentwise products on tensors."""
        doc = evaluate("delta(X[1]) # delta(X[1])")
        assert doc.space == "X⊗X"
        assert evaluate("delta(X[1] # X[1])").terms == doc.terms

    def test_truncated_maps(self):
        """Test explicit and default cutoffs."""
        doc = evaluate("antipode(M[1], 3)")
        assert doc.meta["truncation"] == [3]
        assert len(doc.terms) == 7
        assert evaluate("phi(h[1])", truncate=2).terms == evaluate("h[1] + h[1,1]").terms

    def test_missing_cutoff(self):
        """Test that completion-valued maps need N."""
        with pytest.raises(TruncationError):
            evaluate("psi_dual(M[1])")

    def test_permutation_guard(self):
        """Test the limit on permutation degrees."""
        with pytest.raises(SizeGuardError):
            evaluate("perm 123456789 # perm 1")
        limits = replace(DEFAULT_LIMITS, max_perm_degree=9)
        assert evaluate("perm 123456789 . perm 123456789", limits=limits).terms == [((1, 2, 3, 4, 5, 6, 7, 8, 9), 1)]

    def test_zero(self):
        """Test that a vanishing result prints as 0."""
        doc = evaluate("p[2] . p[1,1]")
        assert doc.terms == []
        assert format_result_text(doc) == "0"


class TestFormats:
    """Tests for the text and JSON renderings."""

    def test_text(self):
        """Test one term per line with the coefficient first."""
        assert format_result_text(evaluate("X[1,1] # X[1,1]")) == "2 X[1,1]\n4 X[1,1,1]\n1 X[1,1,1,1]"
        assert format_result_text(evaluate("delta(perm 21)")) == "1 perm[]⊗perm 21\n1 perm 1⊗perm 1\n1 perm 21⊗perm[]"

    def test_json_schema(self):
        """Test space, terms with num/den coefficients, and meta."""
        data = json.loads(format_result_json(evaluate("h[2] - 1/2 * h[1,1]")))
        assert data["space"] == "h"
        assert data["terms"] == [{"index": [1, 1], "coeff": "-1/2"}, {"index": [2], "coeff": "1/1"}]
        assert data["meta"]["expression"] == "(h[2] - (1/2 * h[1,1]))"
        assert data["meta"]["truncation"] is None

    def test_json_tensor_index(self):
        """Test that tensor indices serialize as pairs of lists."""
        data = json.loads(format_result_json(evaluate("delta(X[1,1])")))
        assert data["terms"][1] == {"index": [[1], [1]], "coeff": "2/1"}

    def test_json_is_stable(self):
        """Test byte-identical output for repeated evaluation."""
        text = "perm 12 # perm 132"
        assert format_result_json(evaluate(text)) == format_result_json(evaluate(text))

    def test_scalar_doc(self):
        """Test a purely numeric result."""
        doc = ResultDoc.from_value(Fraction(3, 4))
        assert format_result_text(doc) == "3/4"


class TestTable:
    """Tests for basis_table."""

    def test_pairs(self):
        """Test that X up to degree 3 has every pair with p, q ≥ 1."""
        docs = basis_table("X", 3, "heis")
        pairs = [(doc.meta["left"], doc.meta["right"]) for doc in docs]
        assert pairs == [("X[1]", "X[1]"), ("X[1]", "X[1,1]"), ("X[1]", "X[2]"), ("X[1,1]", "X[1]"), ("X[2]", "X[1]")]

    def test_text(self):
        """Test the header and indented terms."""
        text = format_table_text(basis_table("h", 2, "heis"))
        assert text == "h[1] # h[1] =\n  1 h[1]\n  1 h[1,1]"

    def test_internal_table(self):
        """Test that ∗ vanishes across degrees."""
        docs = basis_table("perm", 2, "int")
        assert [doc.terms for doc in docs] == [[((1,), 1)]]

    def test_guards(self):
        """Test the table and permutation degree limits."""
        with pytest.raises(SizeGuardError):
            basis_table("h", 11, "heis")
        with pytest.raises(SizeGuardError):
            basis_table("perm", 9, "ext")
