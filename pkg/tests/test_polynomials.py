from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hstar.polynomials import (
    ABDecomposition,
    HStarVector,
    InvalidVector,
    decompose,
    degree_codegree,
    ehrhart_values,
    hstar_from_values,
    parse_int_list,
    recompose,
)


def hstar_vectors(max_d=8, top=3):
    return st.integers(1, max_d).flatmap(
        lambda d: st.lists(st.integers(0, top), min_size=d, max_size=d).map(
            lambda tail: HStarVector.of([1] + tail)))


def test_parse_and_errors():
    assert parse_int_list(" 1, 2,3") == [1, 2, 3]
    for bad in ["", "1,,2", "1,a"]:
        with pytest.raises(InvalidVector):
            parse_int_list(bad)
    with pytest.raises(InvalidVector):
        HStarVector.of([2, 1])
    with pytest.raises(InvalidVector):
        HStarVector.of([1, -1])
    with pytest.raises(InvalidVector):
        HStarVector(3, (1, 1))
    with pytest.raises(InvalidVector):
        HStarVector.of([1])


def test_json_roundtrip():
    h = HStarVector.parse("1,2,3,2,2,2")
    assert HStarVector.from_json(h.to_json()) == h
    assert str(h) == "1,2,3,2,2,2"


@pytest.mark.parametrize("h, expected", [
    ((1, 2, 3, 2, 2, 2), (5, 1)),
    ((1, 2, 2, 1, 2, 2, 1, 0), (6, 2)),
    ((1, 0, 0), (0, 3)),
])
def test_degree_codegree(h, expected):
    assert degree_codegree(HStarVector.of(h)) == expected


@pytest.mark.parametrize("h, a, b", [
    ((1, 2, 3, 2, 2, 2), (1, 1, 2, 2, 1, 1), (1, 1, 0, 1, 1)),
    ((1, 2, 2, 1, 2, 2, 1, 0), (1, 3, 4, 3, 3, 4, 3, 1), (0,) * 6),
    ((1,) * 7, (1,) * 7, (0,) * 6),
    ((1, 1, 2, 1, 1, 2, 1), (1,) * 7, (0, 1, 0, 0, 1, 0)),
])
def test_decompose_examples(h, a, b):
    ab = decompose(HStarVector.of(h))
    assert ab.a == a and ab.b == b
    assert recompose(ab) == HStarVector.of(h)


def test_recompose_unit_segment():
    assert recompose(ABDecomposition(1, 0, (1, 1), ())) == HStarVector.of([1, 0])


def test_recompose_rejects_inconsistent():
    with pytest.raises(InvalidVector):
        recompose(ABDecomposition(2, 1, (1, 5, 1), (7,)))


@given(hstar_vectors())
def test_decomposition_invariants(h):
    ab = decompose(h)
    assert ab.is_palindromic()
    assert ab.a[0] == 1
    assert ab.s == h.degree and ab.l == h.codegree
    assert recompose(ab) == h


def test_ehrhart_values():
    assert ehrhart_values(HStarVector.of([1, 2]), 3) == [1, 4, 7, 10]
    assert ehrhart_values(HStarVector.of([1, 1, 1]), 2) == [1, 4, 10]
    for d in range(1, 6):
        assert ehrhart_values(HStarVector.of([1] + [0] * d), 2) == [1, comb(d + 1, d), comb(d + 2, d)]


@given(hstar_vectors(max_d=7, top=5))
def test_binomial_transform_inverts(h):
    assert hstar_from_values(ehrhart_values(h, h.d), h.d) == list(h.coeffs)


def _triangle_points(m):
    # conv((1,0),(0,1),(-1,-1)) dilated by m
    return sum(1 for x in range(-m, m + 1) for y in range(-m, m + 1)
               if x + y <= m and y <= 2 * x + m and x <= 2 * y + m)


def test_ehrhart_matches_brute_force_triangle():
    assert ehrhart_values(HStarVector.of([1, 1, 1]), 4) == [_triangle_points(m) for m in range(5)]
