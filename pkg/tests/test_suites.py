"""Tests for the verification suites."""

import json

import pytest
from sympy.functions.combinatorial.numbers import stirling

from heisenberg import suites
from heisenberg.combinat import Composition, Permutation
from heisenberg.config import DEFAULT_LIMITS
from heisenberg.errors import InvalidIndexError, SizeGuardError
from heisenberg.suites import (
    PropertyCheck,
    Suite,
    SuiteResult,
    describe_case,
    format_suites_json,
    format_suites_text,
    run_suite,
    run_suites,
    stirling2,
    suite_names,
)


def _upto(bound, limits):
    for n in range(bound + 1):
        yield (n,)


def _suite(name, predicate, degree=2):
    return Suite(name, "test suite", degree, [PropertyCheck(f"{name} check", predicate, _upto)])


class TestRegistry:
    """Tests for the registered suites."""

    def test_names(self):
        """Test that every suite is listed and all comes last."""
        names = suite_names()
        assert names[-1] == "all"
        for name in ["assoc-h", "assoc-perm", "interpolation", "schur-weyl", "cosets", "qsym-duality", "regression"]:
            assert name in names

    @pytest.mark.parametrize(
        "name, bound",
        [
            ("assoc-h", 4),
            ("assoc-p", 4),
            ("assoc-X", 4),
            ("assoc-perm", 3),
            ("interpolation", 3),
            ("zelevinski", 4),
            ("basis-change", 4),
            ("perm-sigma", 3),
            ("schur-weyl", 2),
            ("cosets", 2),
            ("hopf", 3),
            ("antipode", 3),
            ("qsym-duality", 3),
            ("qsym-alphabet", 2),
            ("regression", None),
            ("stirling", 5),
            ("egf", 6),
        ],
    )
    def test_suite_passes(self, name, bound):
        """Test each suite at a small degree bound."""
        result = run_suite(name, bound)
        assert result.ok, format_suites_text([result])
        assert result.cases > 0

    def test_unknown_suite(self):
        """Test that an unknown name is an input error."""
        with pytest.raises(InvalidIndexError):
            run_suite("assoc-q")

    def test_alphabet_guard(self):
        """Test that a sweep needing more letters than allowed is refused, not cut short."""
        with pytest.raises(SizeGuardError):
            run_suite("schur-weyl", 4)
        with pytest.raises(SizeGuardError):
            list(suites._endo_pairs(7, DEFAULT_LIMITS))
        assert len(list(suites._endo_pairs(6, DEFAULT_LIMITS))) > 0

    def test_gr_cases_reach_degree_five(self):
        """Test that the default schur-weyl bound sweeps |α|+|β| up to 5."""
        cases = list(suites._gr_cases(3, DEFAULT_LIMITS))
        assert max(alpha.weight + beta.weight for alpha, beta in cases) == 5
        assert (Composition((1, 2)), Composition((1, 1))) in cases


class TestRunner:
    """Tests for stopping at the first counterexample."""

    def test_first_counterexample(self, monkeypatch):
        """Test that the run stops at the first failing case."""
        monkeypatch.setitem(suites.SUITES, "broken", _suite("broken", lambda n: n < 2, degree=4))
        result = run_suite("broken")
        assert not result.ok
        assert result.cases == 3
        assert result.check == "broken check"
        assert result.counterexample == "2"
        assert format_suites_text([result]) == (
            "FAIL broken: 3 cases up to degree 4\n  first counterexample for broken check: 2"
        )

    def test_all_stops_after_failure(self, monkeypatch):
        """Test that all runs suites in order and stops at a failure."""
        registry = {
            "first": _suite("first", lambda n: True),
            "second": _suite("second", lambda n: n == 0),
            "third": _suite("third", lambda n: True),
        }
        monkeypatch.setattr(suites, "SUITES", registry)
        results = run_suites("all")
        assert [result.suite for result in results] == ["first", "second"]
        assert [result.ok for result in results] == [True, False]

    def test_json(self):
        """Test the JSON rendering of results."""
        result = SuiteResult("egf", 3, cases=1)
        data = json.loads(format_suites_json([result]))
        assert data == [
            {"suite": "egf", "max_degree": 3, "cases": 1, "ok": True, "check": None, "counterexample": None}
        ]

    def test_describe_case(self):
        """Test how cases are printed."""
        assert describe_case((Permutation((2, 1, 3)), Permutation())) == "213, ()"
        assert describe_case((Composition((1, 2)), 3)) == "(1, 2), 3"


class TestClosedForms:
    """Tests for the independent oracles used by the suites."""

    @pytest.mark.parametrize("n", range(9))
    def test_stirling_against_sympy(self, n):
        """Test the recurrence against sympy."""
        for k in range(n + 1):
            assert stirling2(n, k) == stirling(n, k)
