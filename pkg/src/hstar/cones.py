"""Cones of h*-vectors with an interior point, in the coordinates ``x_i = h*_i - 1``.

Includes the smooth outer cone cut out by the interior-point chain
inequalities, the seven-ray cone in dimension 6, the symmetric section
used for reflexive polytopes, and realisation data by Payne simplices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .inequalities.forms import LinearFormH
from .inequalities.polyhedron import _solve
from .lattice import PayneSimplex, payne_hstar
from .polynomials import HStarVector


class NoInteriorPoint(ValueError):
    pass


class UnsupportedCone(ValueError):
    pass


@dataclass(frozen=True)
class RayCone:
    d: int
    rays: tuple[tuple[int, ...], ...]

    @property
    def is_simplicial(self) -> bool:
        return len(self.rays) == self.d

    def to_json(self) -> dict:
        return {"d": self.d, "rays": [list(r) for r in self.rays]}


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in v) if g else tuple(int(x) for x in v)


def x_vector(h: HStarVector) -> tuple[int, ...]:
    """``(h*_1 - 1, ..., h*_d - 1)``; needs ``h*_d > 0``."""
    if h.coeffs[h.d] == 0:
        raise NoInteriorPoint("x-coordinates need h*_d > 0")
    return tuple(c - 1 for c in h.coeffs[1:])


def _unit(d: int, *idx: int) -> tuple[int, ...]:
    v = [0] * d
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


def cprime_rays(d: int) -> RayCone:
    """Rays of the smooth cone given by ``0 <= x_d <= x_1`` and the nested partial sums.

    ``e_{i+1} + e_{d-i-1}`` for ``1 <= i <= floor(d/2) - 1``,
    ``e_{i+1} + e_{d-i}`` for ``1 <= i <= floor((d-1)/2)``,
    ``e_1 + ... + e_{d-1}`` and ``e_1 + ... + e_d``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    rays = set()
    for i in range(1, d // 2):
        rays.add(primitive_vector(_unit(d, i + 1, d - i - 1)))
    for i in range(1, (d - 1) // 2 + 1):
        rays.add(primitive_vector(_unit(d, i + 1, d - i)))
    if d > 1:
        rays.add(_unit(d, *range(1, d)))
    rays.add(_unit(d, *range(1, d + 1)))
    return RayCone(d, tuple(sorted(rays)))


def cprime_inequalities(d: int) -> list[LinearFormH]:
    """Facets of the same cone as forms in ``x_1, ..., x_d`` (stored in slots ``1..d``)."""
    def mid(i):
        return {d - j: 1 for j in range(1, i + 1)}

    if d == 1:
        return [LinearFormH(1, 1, {1: 1})]
    out = [LinearFormH(d, d, {d: 1}), LinearFormH(d, d, {1: 1, d: -1})]
    for i in range(1, (d - 1) // 2 + 1):
        low = {j: -1 for j in range(1, i + 1)}
        out.append(LinearFormH(d, d, _merge(low, mid(i))))
    for i in range(1, d // 2):
        high = {j: 1 for j in range(2, i + 2)}
        out.append(LinearFormH(d, d, _merge({k: -v for k, v in mid(i).items()}, high)))
    return out


def _merge(*parts: dict) -> dict:
    out: dict = {}
    for p in parts:
        for k, v in p.items():
            out[k] = out.get(k, 0) + v
    return out


CDOUBLEPRIME6 = (
    (0, 0, 1, 0, 0, 0),
    (0, 0, 1, 1, 0, 0),
    (0, 1, 0, 1, 0, 0),
    (0, 1, 1, 0, 1, 0),
    (1, 1, 1, 1, 1, 0),
    (1, 1, 1, 1, 1, 1),
    (0, 2, 1, 1, 2, 0),
)


def cdoubleprime6_rays() -> RayCone:
    return RayCone(6, CDOUBLEPRIME6)


def six_inequalities() -> list[LinearFormH]:
    """The strictly balanced generators in dimension 6, as forms ``>= 0``.

    ``h_6 <= h_1 <= h_5 <= h_2``, ``h_1 + h_2 <= h_4 + h_5 <= h_2 + h_3``
    and ``h_1 + h_2 <= h_3 + h_4``.
    """
    rows = [
        {1: 1, 6: -1}, {5: 1, 1: -1}, {2: 1, 5: -1},
        {4: 1, 5: 1, 1: -1, 2: -1}, {2: 1, 3: 1, 4: -1, 5: -1},
        {3: 1, 4: 1, 1: -1, 2: -1},
    ]
    return [LinearFormH(6, 6, r, family="six") for r in rows]


def evaluate_x(form: LinearFormH, x: Sequence[int]) -> Fraction:
    """Value of a form whose slots ``1..d`` are read as x-coordinates."""
    return sum((c * x[i - 1] for i, c in form.coeffs.items() if i >= 1), Fraction(0))


def in_symmetric_section(x: Sequence[int]) -> bool:
    """``x_d = 0`` and ``x_i = x_{d-i}`` for ``1 <= i <= floor(d/2)``."""
    d = len(x)
    return x[d - 1] == 0 and all(x[i - 1] == x[d - i - 1] for i in range(1, d // 2 + 1))


def projective_class(x: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of the ray of ``x`` modulo the all-ones line.

    Subtract the minimum entry, then divide by the gcd.
    """
    m = min(x)
    return primitive_vector([v - m for v in x])


def projective_equal(x: Sequence[int], y: Sequence[int]) -> bool:
    return len(x) == len(y) and projective_class(x) == projective_class(y)


def realize(alpha: Sequence[int], expected_x: Sequence[int], projective: bool = False) -> bool:
    """Whether the Payne simplex ``P(alpha)`` has x-vector ``expected_x``."""
    x = x_vector(payne_hstar(PayneSimplex.of(alpha)))
    if projective:
        return projective_equal(x, expected_x)
    return x == tuple(expected_x)


def cone_membership(x: Sequence, cone: RayCone) -> tuple[Fraction, ...] | None:
    """Exact non-negative coefficients of ``x`` over the rays of a simplicial cone."""
    if not cone.is_simplicial:
        raise UnsupportedCone("membership is only decided for simplicial cones")
    if len(x) != cone.d:
        raise ValueError("dimension mismatch")
    rows = [[Fraction(r[i]) for r in cone.rays] for i in range(cone.d)]
    coeffs = _solve(rows, [Fraction(v) for v in x])
    if coeffs is None:
        raise UnsupportedCone("rays are linearly dependent")
    return coeffs if all(c >= 0 for c in coeffs) else None


# Payne simplices realising rays and vectors; alpha -> x-vector.
HOOT = (
    ((2, 1), (1,)),
    ((2, 1, 1), (1, 0)),
    ((2, 2, 1), (1, 1)),
    ((2, 1, 1, 1), (0, 1, 0)),
    ((2, 2, 1, 1), (1, 1, 0)),
    ((2, 2, 2, 1), (1, 1, 1)),
    ((2, 1, 1, 1, 1), (0, 1, 0, 0)),
    ((2, 2, 1, 1, 1), (0, 1, 1, 0)),
    ((2, 2, 2, 1, 1), (1, 1, 1, 0)),
    ((2, 2, 2, 2, 1), (1, 1, 1, 1)),
    ((2, 1, 1, 1, 1, 1), (0, 0, 1, 0, 0)),
    ((2, 2, 1, 1, 1, 1), (0, 1, 1, 0, 0)),
    ((3, 1, 1, 1, 1, 1), (0, 1, 0, 1, 0)),
    ((2, 2, 2, 2, 1, 1), (1, 1, 1, 1, 0)),
    ((2, 2, 2, 2, 2, 1), (1, 1, 1, 1, 1)),
)

CMON = (
    ((2, 1, 1, 1, 1, 1, 1), (0, 0, 1, 0, 0, 0)),
    ((2, 2, 1, 1, 1, 1, 1), (0, 0, 1, 1, 0, 0)),
    ((3, 1, 1, 1, 1, 1, 1), (0, 1, 0, 1, 0, 0)),
    ((4, 1, 1, 1, 1, 1, 1), (0, 1, 1, 0, 1, 0)),
    ((2, 2, 2, 2, 2, 1, 1), (1, 1, 1, 1, 1, 0)),
    ((2, 2, 2, 2, 2, 2, 1), (1, 1, 1, 1, 1, 1)),
    ((8, 2, 2, 2, 2, 2, 1), (1, 3, 2, 2, 3, 1)),
)

HOOT2 = (
    ((2, 1, 1), (1, 0)),
    ((2, 2, 1, 1), (1, 1, 0)),
    ((2, 1, 1, 1, 1), (0, 1, 0, 0)),
    ((2, 2, 2, 1, 1), (1, 1, 1, 0)),
    ((2, 2, 1, 1, 1, 1), (0, 1, 1, 0, 0)),
    ((2, 2, 2, 2, 1, 1), (1, 1, 1, 1, 0)),
    ((2, 1, 1, 1, 1, 1, 1), (0, 0, 1, 0, 0, 0)),
    ((3, 1, 1, 1, 1, 1, 1), (0, 1, 0, 1, 0, 0)),
    ((2, 2, 2, 2, 2, 1, 1), (1, 1, 1, 1, 1, 0)),
)

# Generators of the projected symmetric section in dimension 7.
SECTION7 = (
    ((2, 2, 1, 1, 1, 1, 1, 1), (0, 0, 1, 1, 0, 0, 0)),
    ((10, 4, 1, 1, 1, 1, 1, 1), (1, 3, 2, 2, 3, 1, 0)),
)
