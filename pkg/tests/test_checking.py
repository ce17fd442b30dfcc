from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hstar.cones import CMON, HOOT, HOOT2, SECTION7
from hstar.inequalities.checking import (
    check_vector,
    minimal_novel_dimension,
    novel_at,
    primitive,
    prune,
)
from hstar.inequalities.families import all_forms_at, superA_form, superA_inequalities, variant_inequalities
from hstar.inequalities.forms import LinearFormAB, LinearFormH
from hstar.lattice import PayneSimplex, payne_hstar
from hstar.polynomials import HStarVector, decompose


def failing(h):
    return {e.label: e.value for e in check_vector(HStarVector.of(h)).violations}


def test_counterexamples():
    assert failing((1, 2, 2, 1, 2, 2, 1, 0)) == {"superA(0,0)": -1}
    assert failing((1, 2, 3, 2, 2, 2)) == {"refinement(b,2)": -1}
    assert failing((1, 1, 2, 1, 1, 2, 1)) == {"variant3(0,0,0)": -1}


def test_counterexample_values():
    ab = decompose(HStarVector.of((1, 2, 2, 1, 2, 2, 1, 0)))
    assert ab.a[1] + ab.a[2] == 7 and ab.a[3] + ab.a[4] == 6
    h = (1, 1, 2, 1, 1, 2, 1)
    assert h[1] + h[2] == 3 and h[3] + h[4] == 2


def test_report_json():
    report = check_vector(HStarVector.of((1, 2, 3, 2, 2, 2)))
    data = report.to_json()
    assert data["pass"] is False and data["violations"] == 1 and data["interior"] is True
    assert {"family", "label", "form", "h_form", "value", "pass", "conjecture"} <= set(data["entries"][0])


def test_conjectures_do_not_affect_verdict():
    h = HStarVector.of((1,) * 8)
    report = check_vector(h, include_conjectures=True)
    assert report.passed
    assert sum(e.conjecture for e in report.entries) == 2


@pytest.mark.parametrize("alpha", [a for a, _ in HOOT + CMON + HOOT2 + SECTION7])
def test_realised_vectors_pass(alpha):
    assert check_vector(payne_hstar(PayneSimplex.of(alpha))).passed


@given(st.integers(2, 9).flatmap(lambda d: st.lists(st.integers(1, 4), min_size=(d + 1) // 2,
                                                    max_size=(d + 1) // 2).map(lambda half: (d, half))))
def test_palindromic_reduces_to_a_forms(data):
    d, half = data
    coeffs = [1] + [half[min(i, d - i) - 1] if 0 < i < d else 1 for i in range(1, d + 1)]
    h = HStarVector.of(coeffs)
    ab = decompose(h)
    assert not any(ab.b)
    for f in all_forms_at(d, True):
        if isinstance(f, LinearFormAB):
            a_only = LinearFormAB({k: c for k, c in f.lhs.items() if k[0] == "a"},
                                  {k: c for k, c in f.rhs.items() if k[0] == "a"}, family="a")
            assert f.evaluate(ab) == a_only.evaluate(ab)


def test_primitive():
    assert primitive({1: F(1, 2), 2: F(-3, 4)}) == {1: 2, 2: -3}
    assert primitive({1: F(4), 3: F(-6)}) == {1: 2, 3: -3}
    assert primitive({}) == {}


def test_prune():
    d = 5
    f1 = LinearFormH(d, d, {1: 1, 0: -1})
    f2 = LinearFormH(d, d, {2: 1, 1: -1})
    f3 = LinearFormH(d, d, {2: 1, 0: -1})  # sum of the first two
    f4 = LinearFormH(d, d, {2: 2, 1: -2})  # duplicate of f2
    kept = prune([f1, f2, f3, f4])
    assert [f.coeffs for f in kept] == [f1.coeffs, f2.coeffs]
    assert prune([LinearFormH(d, d, {})]) == []


def test_novelty_examples():
    assert minimal_novel_dimension(superA_inequalities(0, 0)[0]) == 7
    assert minimal_novel_dimension(superA_form(0, 1, (1, 0))) == 9
    assert minimal_novel_dimension(superA_form(1, 1, (1, 1, 1)), search_cap=12) == 11
    assert not novel_at(superA_form(1, 1, (1, 1, 1)), 10)
    assert minimal_novel_dimension(variant_inequalities(3, 0, 0, 0)[0], search_cap=8) == 6


def test_novelty_with_custom_baseline():
    # with an empty baseline the normalisation alone cannot imply a_1 + a_2 <= a_3 + a_4
    assert novel_at(superA_inequalities(0, 0)[0], 7, baseline_generator=lambda d, i: [])
