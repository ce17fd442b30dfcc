"""The rational polyhedra Q(r, r') and their exact vertices.

``Q(r, r')`` lives in ``R^(r + r' + 1)`` and is cut out by non-negativity
and four families of lower bounds on single coordinates and on symmetric
windows ``x_i + ... + x_{n-1-i}``.  For ``r < 0`` it is the origin; when
``r + r' + 1 < 0`` the ambient space is taken to be zero dimensional.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vector = tuple[Fraction, ...]

DEFAULT_SUBSET_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Constraint:
    row: tuple[Fraction, ...]
    rhs: Fraction
    label: str

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * b for a, b in zip(self.row, x)), Fraction(0)) - self.rhs


@dataclass(frozen=True)
class QPolyhedron:
    r: int
    rp: int
    constraints: tuple[Constraint, ...]

    @property
    def n(self) -> int:
        return max(self.r + self.rp + 1, 0)

    def contains(self, x: Sequence) -> bool:
        x = [Fraction(v) for v in x]
        return len(x) == self.n and all(c.slack(x) >= 0 for c in self.constraints)

    def violated(self, x: Sequence) -> list[Constraint]:
        x = [Fraction(v) for v in x]
        return [c for c in self.constraints if c.slack(x) < 0]


def _window(n: int, lo: int, hi: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(lo <= k <= hi)) for k in range(n))


def q_polyhedron(r: int, rp: int) -> QPolyhedron:
    if r > rp:
        raise ValueError(f"need r <= r', got r={r}, r'={rp}")
    n = r + rp + 1
    if n <= 0:
        return QPolyhedron(r, rp, ())
    cons = [Constraint(_window(n, i, i), Fraction(0), f"x_{i} >= 0") for i in range(n)]
    if r < 0:
        cons += [Constraint(tuple(-c for c in _window(n, i, i)), Fraction(0), f"x_{i} <= 0")
                 for i in range(n)]
        return QPolyhedron(r, rp, tuple(cons))
    for i in range(r + 1):
        cons.append(Constraint(_window(n, i, i), Fraction(1), f"x_{i} >= 1"))
    for i in range(r + 1, (r + rp) // 2 + 1):
        cons.append(Constraint(_window(n, i, i), Fraction(r + 1, 2 * i + 1),
                               f"x_{i} >= {Fraction(r + 1, 2 * i + 1)}"))
    for i in range(r):
        cons.append(Constraint(_window(n, i, 2 * r - i), Fraction(2 * r - 2 * i + 1),
                               f"x_{i} + ... + x_{2 * r - i} >= {2 * r - 2 * i + 1}"))
    i = r + 1
    while 2 * i < r + rp:
        rhs = r + 1 - Fraction(2 * i * (r + 1), r + rp + 1)
        cons.append(Constraint(_window(n, i, r + rp - i), rhs,
                               f"x_{i} + ... + x_{r + rp - i} >= {rhs}"))
        i += 1
    return QPolyhedron(r, rp, tuple(cons))


def _solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vector | None:
    """Unique solution of a square system, or None if singular."""
    n = len(rows)
    M = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        if p != 1:
            M[col] = [v / p for v in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return tuple(M[i][n] for i in range(n))


def vertices(q: QPolyhedron, budget: int = DEFAULT_SUBSET_BUDGET) -> list[Vector]:
    """Exact vertex list, deduplicated and sorted lexicographically."""
    return list(_vertices_cached(q.r, q.rp, budget))


@lru_cache(maxsize=None)
def _vertices_cached(r: int, rp: int, budget: int) -> tuple[Vector, ...]:
    q = q_polyhedron(r, rp)
    n = q.n
    if n == 0:
        return ((),)
    if r < 0:
        return (tuple(Fraction(0) for _ in range(n)),)
    cons = q.constraints
    total = _binom(len(cons), n)
    if total > budget:
        raise BudgetExceeded(f"{total} active sets for Q({r},{rp}) exceed budget {budget}")
    found = set()
    for subset in itertools.combinations(range(len(cons)), n):
        x = _solve([cons[k].row for k in subset], [cons[k].rhs for k in subset])
        if x is not None and all(c.slack(x) >= 0 for c in cons):
            found.add(x)
    return tuple(sorted(found))


def _binom(a: int, b: int) -> int:
    return math.comb(a, b)


def swim_vertices(r: int) -> list[Vector]:
    """Closed-form vertices of ``Q(r, r)``.

    Each vertex is ``e_0 + ... + e_r + sum_{j<r} e_{k_j}`` where, putting
    ``k_r = r``, every ``k_j`` is one of ``j``, ``2r - j`` or ``k_{j+1}``.
    That gives ``3^r`` distinct vertices.  Letting ``k_j`` range over the
    whole window ``[j, 2r - j]`` (see :func:`swim_points`) also produces
    non-vertex points of ``Q(r, r)`` once ``r >= 2``.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    n = 2 * r + 1
    out = set()

    def extend(j: int, nxt: int, ks: list[int]) -> None:
        if j < 0:
            x = [Fraction(int(k <= r)) for k in range(n)]
            for k in ks:
                x[k] += 1
            out.add(tuple(x))
            return
        for k in (j, nxt, 2 * r - j):
            extend(j - 1, k, ks + [k])

    extend(r - 1, r, [])
    return sorted(out)


def swim_points(r: int) -> list[Vector]:
    """All points ``e_0 + ... + e_r + sum_{i<r} e_{k_i}`` with ``i <= k_i <= 2r - i``.

    Every such point lies in ``Q(r, r)``; it contains the vertex set but is
    strictly larger for ``r >= 2``.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    n = 2 * r + 1
    out = set()
    for ks in itertools.product(*(range(i, 2 * r - i + 1) for i in range(r))):
        x = [Fraction(int(k <= r)) for k in range(n)]
        for k in ks:
            x[k] += 1
        out.add(tuple(x))
    return sorted(out)


def swum_vertices(rp: int) -> list[Vector]:
    """Closed-form vertices of ``Q(0, r')``.

    Base point ``sum_{i <= r'/2} e_i / (2i + 1)`` plus, for each
    ``ceil(r'/4) <= i <= floor((r'-1)/2)``, a mass ``2/(r'+1) - 1/(2i+1)``
    placed at some ``k_i`` in ``[i, r' - i]``.  This agrees with exact
    enumeration for ``r' <= 6``; for larger ``r'`` it also yields some
    non-vertex points of the polyhedron.
    """
    if rp < 0:
        raise ValueError("r' must be non-negative")
    n = rp + 1
    base = [Fraction(0)] * n
    for i in range(rp // 2 + 1):
        base[i] += Fraction(1, 2 * i + 1)
    lo, hi = -(-rp // 4), (rp - 1) // 2
    movable = list(range(lo, hi + 1))
    out = set()
    for ks in itertools.product(*(range(i, rp - i + 1) for i in movable)):
        x = list(base)
        for i, k in zip(movable, ks):
            x[k] += Fraction(2, rp + 1) - Fraction(1, 2 * i + 1)
        out.add(tuple(x))
    return sorted(out)


def plan_parameter(r: int, rp: int) -> int:
    """``m = max(2r, floor((r + r') / 2))``; ``-1`` when ``r < 0``."""
    if r < 0:
        return -1
    return max(2 * r, (r + rp) // 2)


def plan_vector(r: int, rp: int) -> Vector:
    """0/1 vector with ones in positions ``0..m``."""
    n = max(r + rp + 1, 0)
    m = plan_parameter(r, rp)
    return tuple(Fraction(int(i <= m)) for i in range(n))


def coke_condition(mu: Sequence, beta) -> bool:
    """Window condition ``mu_i + ... + mu_{r-i} >= beta (r - 2i + 1)``.

    Equivalent to ``sum mu_i h_i >= beta sum h_i`` for every symmetric
    unimodal non-negative sequence ``h`` of the same length.
    """
    mu = [x if isinstance(x, Fraction) else Fraction(x) for x in mu]
    beta = beta if isinstance(beta, Fraction) else Fraction(beta)
    if beta < 0 or any(x < 0 for x in mu):
        raise ValueError("entries must be non-negative")
    # integer arithmetic after clearing denominators
    den = math.lcm(beta.denominator, *(x.denominator for x in mu))
    ints = [x.numerator * (den // x.denominator) for x in mu]
    b = beta.numerator * (den // beta.denominator)
    r = len(mu) - 1
    window = sum(ints)
    for i in range(r // 2 + 1):
        if window < b * (r - 2 * i + 1):
            return False
        window -= ints[i] + (ints[r - i] if r - i != i else 0)
    return True


@dataclass(frozen=True)
class HaydenResult:
    hypothesis_failures: tuple[str, ...]
    conclusion_failures: tuple[str, ...]

    @property
    def hypotheses_hold(self) -> bool:
        return not self.hypothesis_failures

    @property
    def conclusions_hold(self) -> bool:
        return not self.conclusion_failures

    def __bool__(self) -> bool:
        return self.hypotheses_hold and self.conclusions_hold


def hayden_check(lam: Sequence, r: int, rp: int) -> HaydenResult:
    """Check that ``lam`` in ``Q(r, r')`` satisfies the two nested window families.

    For ``0 <= p <= r`` and ``0 <= i <= (q - p) / 2``, the window
    ``lam_{p+i} + ... + lam_{q-i}`` must be at least ``q - p - 2i + 1``
    when ``p <= q <= 2r - p``, and at least
    ``(r - p + 1)(1 - 2i / (q - p + 1))`` when ``2r - p < q <= r + r' - p``.
    """
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) != r + rp + 1:
        raise ValueError("vector length must be r + r' + 1")
    q = q_polyhedron(r, rp)
    hyp = tuple(c.label for c in q.violated(lam))
    bad = []
    for p in range(r + 1):
        for qq in range(p, r + rp - p + 1):
            for i in range((qq - p) // 2 + 1):
                window = sum(lam[p + i:qq - i + 1], Fraction(0))
                if qq <= 2 * r - p:
                    bound = Fraction(qq - p - 2 * i + 1)
                else:
                    bound = (r - p + 1) * (1 - Fraction(2 * i, qq - p + 1))
                if window < bound:
                    bad.append(f"p={p}, q={qq}, i={i}: {window} < {bound}")
    return HaydenResult(hyp, tuple(bad))
