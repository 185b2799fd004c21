import random
from fractions import Fraction

import pytest
import sympy

from oracles import X, sympy_coeffs
from stirlingkit.errors import PrecisionError, RowCapExceeded
from stirlingkit.oracle import (
    CaseKind,
    SymbolicDerivative,
    TestFunction,
    all_ones_function,
    check_bell_polynomial_identity,
    closed_formula_exp_case,
    closed_formula_log_case,
    derive_triangle_by_rewriting,
    nth_derivative_exp_case,
    nth_derivative_log_case,
    rewrite_step,
    standard_corpus,
    verify_identity,
)
from stirlingkit.series import TruncatedSeries
from stirlingkit.triangle import TriangleKind, bell_number, build_triangle, stirling2

LOG, EXP = CaseKind.LOG, CaseKind.EXP


def fn(label, coeffs, order):
    coeffs = list(coeffs)
    return TestFunction(label, TruncatedSeries(coeffs + [0] * (order + 1 - len(coeffs))))


def test_rewrite_step_examples():
    assert rewrite_step(SymbolicDerivative(LOG, 1, {1: 1})) == SymbolicDerivative(LOG, 2, {1: -1, 2: 1})
    assert rewrite_step(SymbolicDerivative(EXP, 2, {1: 1, 2: 1})) == SymbolicDerivative(EXP, 3, {1: 1, 2: 3, 3: 1})
    assert rewrite_step(SymbolicDerivative.base(LOG)) == SymbolicDerivative(LOG, 1, {1: 1})


def test_rewrite_third_derivative_log_case():
    d = SymbolicDerivative.base(LOG)
    for _ in range(3):
        d = rewrite_step(d)
    assert d.terms == {1: 2, 2: -3, 3: 1}


def test_rewrite_never_stores_zeros():
    d = SymbolicDerivative.base(EXP)
    for n in range(1, 15):
        d = rewrite_step(d)
        assert all(d.terms.values())
        assert set(d.terms) == set(range(1, n + 1))


def test_derive_triangle_examples():
    for kind in TriangleKind:
        assert derive_triangle_by_rewriting(kind, 3) == build_triangle(kind, 3)
        assert derive_triangle_by_rewriting(kind, 30) == build_triangle(kind, 30)
    assert derive_triangle_by_rewriting(TriangleKind.SECOND_KIND, 1).to_lists() == [[1], [0, 1]]
    with pytest.raises(RowCapExceeded):
        derive_triangle_by_rewriting(TriangleKind.SECOND_KIND, 12, cap=11)


def test_log_case_examples():
    t = fn("t", [0, 1], 5)
    assert nth_derivative_log_case(t, 2) == -1 == closed_formula_log_case(t, 2)
    assert nth_derivative_log_case(t, 1) == 1
    assert nth_derivative_log_case(all_ones_function(5), 3) == 0
    zero = fn("zero", [0], 5)
    assert closed_formula_log_case(zero, 4) == 0


def test_log_case_against_sympy_derivative():
    # d^n/dx^n sqrt(1 + ln x) at x = 1, straight from sympy
    x = sympy.Symbol("x", positive=True)
    expr = sympy.sqrt(1 + sympy.log(x))
    f = TestFunction("sqrt(1+t)", TruncatedSeries(sympy_coeffs(sympy.sqrt(1 + X), 6)))
    for n in range(1, 7):
        want = sympy.diff(expr, x, n).subs(x, 1)
        got = nth_derivative_log_case(f, n)
        assert got == Fraction(int(want.p), int(want.q))
        assert closed_formula_log_case(f, n) == got


def test_exp_case_examples():
    t_minus_1 = fn("t-1", [0, 1], 5)
    assert nth_derivative_exp_case(t_minus_1, 3) == 1 == closed_formula_exp_case(t_minus_1, 3)
    const = fn("const", [7], 5)
    assert all(nth_derivative_exp_case(const, n) == 0 for n in range(1, 6))
    ones = all_ones_function(5)
    assert nth_derivative_exp_case(ones, 3) == 5 == closed_formula_exp_case(ones, 3)
    assert closed_formula_exp_case(fn("zero", [0], 5), 3) == 0


def test_exp_case_against_sympy_derivative():
    # f(t) = 1/t, so f(e^x) = e^{-x}; expansion of 1/t around t = 1 is sum (-1)^j (t-1)^j
    f = TestFunction("1/t", TruncatedSeries([(-1) ** j for j in range(9)]))
    for n in range(1, 9):
        assert nth_derivative_exp_case(f, n) == (-1) ** n == closed_formula_exp_case(f, n)


def test_precision_errors():
    short = fn("short", [0, 1], 3)
    for route in (nth_derivative_log_case, closed_formula_log_case,
                  nth_derivative_exp_case, closed_formula_exp_case):
        with pytest.raises(PrecisionError):
            route(short, 4)
    with pytest.raises(PrecisionError):
        verify_identity(LOG, [short], 5)


def test_verify_identity_examples():
    assert verify_identity(LOG, standard_corpus(20), 20).all_passed
    empty = verify_identity(EXP, [], 5)
    assert len(empty) == 0 and empty.all_passed
    half_sq = fn("(t-1)^2/2", [0, 0, Fraction(1, 2)], 4)
    report = verify_identity(EXP, [half_sq], 4)
    assert report.all_passed
    assert [c.actual for c in report.checks] == [stirling2(n, 2) for n in range(1, 5)]


def test_report_covers_every_pair():
    corpus = standard_corpus(8)
    report = verify_identity(EXP, corpus, 8)
    assert {(c.label, c.index) for c in report.checks} == {(f.label, (n,)) for f in corpus for n in range(1, 9)}


def test_standard_corpus_shape():
    corpus = standard_corpus(20)
    assert len(corpus) >= 7
    assert all(f.series.order >= 20 for f in corpus)
    # 1/(1 - t/2) has f^(k)(0) = k!/2^k
    geo = next(f for f in corpus if f.label == "1/(1-t/2)")
    assert geo.series[5] == Fraction(1, 32)


def test_linearity():
    rng = random.Random(5)
    corpus = standard_corpus(12)
    for kind, oracle, closed in ((LOG, nth_derivative_log_case, closed_formula_log_case),
                                 (EXP, nth_derivative_exp_case, closed_formula_exp_case)):
        for _ in range(3):
            f, g = rng.sample(corpus, 2)
            a, b = Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            h = TestFunction("combo", a * f.series + b * g.series)
            for n in range(1, 13):
                assert oracle(h, n) == a * oracle(f, n) + b * oracle(g, n)
                assert closed(h, n) == a * closed(f, n) + b * closed(g, n)


def test_bell_consistency():
    ones = all_ones_function(15)
    for n in range(16):
        assert closed_formula_exp_case(ones, n) == bell_number(n)


def test_bell_polynomial_identity():
    report = check_bell_polynomial_identity(8, order=6)
    assert report.all_passed and len(report) == 8 * 7


def test_mismatch_reporting():
    from stirlingkit.report import VerificationReport

    report = VerificationReport("demo", 1)
    report.add("f", (1,), Fraction(1, 2), 3)
    assert not report.all_passed
    data = report.to_dict()
    assert data["checks"][0] == {"label": "f", "index": [1], "pass": False, "expected": "1/2", "actual": "3"}
    assert "MISMATCH" in report.to_table()
