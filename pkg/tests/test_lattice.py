import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hstar.lattice import (
    BoxGroup,
    BudgetExceeded,
    InvalidSimplex,
    NonTerminalError,
    PayneSimplex,
    age_profile,
    box_group,
    dilation_count_hstar,
    parallelepiped_hstar,
    payne_hstar,
    terminal_cyclic_samples,
)
from hstar.snf import determinant

alphas = st.lists(st.integers(1, 6), min_size=2, max_size=5).filter(lambda a: math.gcd(*a) == 1)


@pytest.mark.parametrize("alpha, h", [
    ((2, 1), (1, 2)),
    ((1, 1, 1), (1, 1, 1)),
    ((1,) * 6, (1,) * 6),
    ((8, 2, 2, 2, 2, 2, 1), (1, 2, 4, 3, 3, 4, 2)),
    ((3, 1, 1, 1, 1, 1), (1, 1, 2, 1, 2, 1)),
    ((2, 2, 1), (1, 2, 2)),
    ((2, 2, 2, 1), (1, 2, 2, 2)),
])
def test_payne_examples(alpha, h):
    p = PayneSimplex.of(alpha)
    assert payne_hstar(p).coeffs == h
    assert parallelepiped_hstar(box_group(p)).coeffs == h
    assert dilation_count_hstar(p).coeffs == h


def test_alpha_normalised_and_validated():
    assert PayneSimplex.of((1, 2)).alpha == (2, 1)
    for bad in [(2, 4), (1,), (1, 0)]:
        with pytest.raises(InvalidSimplex):
            PayneSimplex.of(bad)


def test_box_group_examples():
    g = box_group(PayneSimplex.of((2, 1)))
    assert g.order == 3 and len(g) == 3
    assert sorted(e.age for e in g) == [0, 1, 1]
    assert box_group(PayneSimplex.of((2, 2, 1))).order == 5
    triv = box_group([[0, 0], [1, 0], [0, 1]])
    assert triv.order == 1 and len(triv) == 1 and triv.zero.age == 0
    assert parallelepiped_hstar(triv).coeffs == (1, 0, 0)
    with pytest.raises(InvalidSimplex):
        box_group([[0, 0], [1, 1], [2, 2]])


def test_box_group_json():
    data = box_group(PayneSimplex.of((2, 1))).to_json()
    assert data["order"] == 3 and data["diagonal"] == [3]
    assert data["elements"][0] == {"coords": ["0", "0"], "age": 0, "coage": 0, "boundary": False}
    assert {tuple(e["coords"]) for e in data["elements"]} == {("0", "0"), ("2/3", "1/3"), ("1/3", "2/3")}


def test_dilation_budget():
    with pytest.raises(BudgetExceeded):
        dilation_count_hstar(PayneSimplex.of((40, 39, 1)), budget=10)


@given(alphas)
def test_oracle_triangle(alpha):
    p = PayneSimplex.of(alpha)
    h = payne_hstar(p)
    assert h == parallelepiped_hstar(box_group(p)) == dilation_count_hstar(p)
    assert sum(h.coeffs) == sum(alpha)


@given(alphas)
def test_group_invariants(alpha):
    p = PayneSimplex.of(alpha)
    g = box_group(p)
    assert g.order == len(g) == math.prod(g.diagonal) == abs(determinant(
        [list(v) + [1] for v in p.vertex_matrix()]))
    assert g.zero.age == g.zero.coage == 0
    for e in g:
        if not e.is_zero:
            assert e.age + e.coage == e.support
            assert e.boundary == (e.support < g.rank)
        neg = g.neg(e)
        assert neg.age == e.coage and g.add(e, neg).is_zero


def test_profile_seven_element_example():
    g = BoxGroup.cyclic(7, (4, 4, 2, 1, 1, 1, 1))
    prof = age_profile(g, "boundary")
    assert prof.d == 7
    assert dict(prof.plain) == {(0, 0): 2, (1, 1): 1, (2, 2): 1, (3, 3): 2}
    assert prof.total() == len(g) - 1


def test_profile_trivial_and_errors():
    prof = age_profile(BoxGroup.cyclic(1, (0, 0, 0, 0)), "boundary")
    assert prof.total() == 0 and prof.count("plain", 0, 0) == 0
    g = BoxGroup.cyclic(3, (1, 2, 0, 0))  # element of age 1
    with pytest.raises(NonTerminalError):
        age_profile(g, "boundary")
    assert age_profile(g, "boundary", strict=False).total() == 0
    with pytest.raises(ValueError):
        age_profile(g, "sideways")
    with pytest.raises(InvalidSimplex):
        BoxGroup.cyclic(7, (4, 4, 2, 1, 1, 1))


def test_terminal_samples_small():
    groups = terminal_cyclic_samples(4, 2)
    assert [tuple(g.numerators[1]) for g in groups] == [(1, 1, 1, 1)]
    assert age_profile(groups[0], "boundary").plain == {(0, 0): 1}


@pytest.mark.parametrize("d, n_max", [(5, 6), (7, 3), (8, 5)])
def test_profile_ranges_and_symmetry(d, n_max):
    for g in terminal_cyclic_samples(d, n_max):
        assert int(np.min(g.ages[1:])) >= 2
        prof = age_profile(g, "boundary")
        assert prof.total() == len(g) - 1
        for (k, l), c in prof.plain.items():
            assert 0 <= k <= l <= d - 4
            assert prof.plain[(d - 4 - l, d - 4 - k)] == c


def test_maximal_profile_splits():
    for g in terminal_cyclic_samples(6, 7):
        prof = age_profile(g, "maximal", interior_vertices=(0,))
        assert prof.d == 5
        assert sum(prof.a.values()) + sum(prof.b.values()) == len(g) - 1
        assert not prof.plain
        on = sum(1 for e in g if not e.is_zero and e.numerators[0] == 0)
        assert sum(prof.a.values()) == on
