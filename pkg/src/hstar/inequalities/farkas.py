"""Exact implication test for linear inequalities.

``target >= 0`` follows from ``g_k >= 0`` (on all points satisfying the
given forms) iff ``target = sum y_k g_k`` with ``y >= 0``, by Farkas' lemma
for homogeneous systems.  Feasibility of that system is decided with a
Phase-I simplex over ``Fraction`` using Bland's rule, and every positive
answer is re-checked by substitution before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Mapping, Sequence

from .forms import LinearFormH

Coeffs = Mapping[Hashable, Fraction]


@dataclass(frozen=True)
class Certificate:
    """Non-negative multipliers, one per given form, reproducing the target."""

    multipliers: tuple[Fraction, ...]

    def support(self) -> list[int]:
        return [k for k, y in enumerate(self.multipliers) if y != 0]


def nonnegative_combination(target: Coeffs, given: Sequence[Coeffs]) -> tuple[Fraction, ...] | None:
    """Solve ``sum_k y_k given[k] == target`` with ``y >= 0`` exactly, or return None."""
    keys = sorted({k for g in given for k in g} | set(target), key=repr)
    rows = len(keys)
    cols = len(given)
    if rows == 0:
        return tuple(Fraction(0) for _ in range(cols))
    # tableau rows: [A | I_art | b] with b >= 0
    T: list[list[Fraction]] = []
    for i, key in enumerate(keys):
        row = [Fraction(g.get(key, 0)) for g in given]
        rhs = Fraction(target.get(key, 0))
        if rhs < 0:
            row, rhs = [-x for x in row], -rhs
        art = [Fraction(int(i == j)) for j in range(rows)]
        T.append(row + art + [rhs])
    width = cols + rows
    basis = [cols + i for i in range(rows)]
    # objective: minimise the sum of artificials, kept as reduced costs
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(cols):
            cost[j] -= row[j]
        cost[width] -= row[width]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen in Phase I, the objective is bounded below
            break
        _pivot(T, cost, best[1], enter)
        basis[best[1]] = enter
    if cost[width] != 0:
        return None
    y = [Fraction(0)] * cols
    for i, b in enumerate(basis):
        if b < cols:
            y[b] = T[i][width]
    y = tuple(y)
    if not _verify(target, given, y):
        raise ArithmeticError("simplex produced an invalid certificate")
    return y


def _pivot(T, cost, r, c) -> None:
    p = T[r][c]
    T[r] = [x / p for x in T[r]]
    pr = T[r]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, pr)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [a - f * b for a, b in zip(cost, pr)]


def _verify(target: Coeffs, given: Sequence[Coeffs], y: Sequence[Fraction]) -> bool:
    if any(v < 0 for v in y):
        return False
    total: dict = {}
    for g, v in zip(given, y):
        if v:
            for k, c in g.items():
                total[k] = total.get(k, Fraction(0)) + v * c
    keys = set(total) | set(target)
    return all(total.get(k, 0) == target.get(k, 0) for k in keys)


def implied_by(target: LinearFormH, given: Sequence[LinearFormH],
               normalization: bool = True) -> Certificate | None:
    """Certificate that ``target`` follows from ``given``, or None.

    With ``normalization`` the form ``h*_0 >= 0`` (a consequence of
    ``h*_0 = 1``) is appended as a last, extra given form and its
    multiplier is the final entry of the certificate.
    """
    forms = [g.coeffs for g in given]
    if normalization:
        forms.append({0: Fraction(1)})
    y = nonnegative_combination(target.coeffs, forms)
    return None if y is None else Certificate(y)
