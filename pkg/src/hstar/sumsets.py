"""Sumsets in finite abelian groups and counting checks on box groups.

Subsets store element keys (coordinate tuples modulo the invariant
factors), so every set operation is hash based and exact.  The counting
checks compare class sizes ``|N(G,k,l)|`` of a box group; the containment
checks test where sums of classified elements land.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .lattice import AgeProfile, BoxGroup, age_profile


class AmbientMismatch(ValueError):
    pass


class PreconditionError(ValueError):
    """Parameters outside the range where a counting statement applies."""


@dataclass(frozen=True)
class AbelianGroup:
    """``Z/f_1 x ... x Z/f_k`` with keys in lexicographic order."""

    diagonal: tuple[int, ...]

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return cls((n,) if n > 1 else ())

    @property
    def order(self) -> int:
        out = 1
        for f in self.diagonal:
            out *= f
        return out

    def keys(self) -> list[tuple[int, ...]]:
        out = [()]
        for f in self.diagonal:
            out = [k + (x,) for k in out for x in range(f)]
        return out


def _diagonal(ambient) -> tuple[int, ...]:
    return tuple(ambient.diagonal)


def _normalize(key, diagonal) -> tuple[int, ...]:
    if isinstance(key, int):
        key = (key,) if diagonal else ()
    key = tuple(key)
    if len(key) != len(diagonal):
        raise ValueError(f"key {key} does not match group {diagonal}")
    return tuple(x % f for x, f in zip(key, diagonal))


class GroupSubset:
    """A set of elements of a fixed ambient group (a BoxGroup or AbelianGroup)."""

    def __init__(self, ambient, members: Iterable):
        self.ambient = ambient
        diag = _diagonal(ambient)
        self.members = frozenset(_normalize(m, diag) for m in members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, key) -> bool:
        return _normalize(key, _diagonal(self.ambient)) in self.members

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupSubset) and _same_ambient(self, other)
                and self.members == other.members)

    def __hash__(self) -> int:
        return hash((_diagonal(self.ambient), self.members))

    def __repr__(self) -> str:
        return f"GroupSubset({sorted(self.members)})"

    def negate(self) -> "GroupSubset":
        diag = _diagonal(self.ambient)
        return GroupSubset(self.ambient, (tuple(-x % f for x, f in zip(m, diag))
                                          for m in self.members))


def _same_ambient(A: GroupSubset, B: GroupSubset) -> bool:
    if A.ambient is B.ambient:
        return True
    return (isinstance(A.ambient, AbelianGroup) and isinstance(B.ambient, AbelianGroup)
            and A.ambient == B.ambient)


def sumset(A: GroupSubset, B: GroupSubset) -> GroupSubset:
    if not _same_ambient(A, B):
        raise AmbientMismatch("subsets live in different groups")
    diag = _diagonal(A.ambient)
    return GroupSubset(A.ambient, (tuple((x + y) % f for x, y, f in zip(a, b, diag))
                                   for a in A.members for b in B.members))


@dataclass(frozen=True)
class KSVerdict:
    hypothesis_holds: bool  # A and -B meet only in 0
    bound_holds: bool  # |A + B| >= |A| + |B| - 1
    sumset_size: int
    size_a: int
    size_b: int


def kemperman_scherk_check(A: GroupSubset, B: GroupSubset) -> KSVerdict:
    zero = tuple(0 for _ in _diagonal(A.ambient))
    if zero not in A.members or zero not in B.members:
        raise PreconditionError("both sets must contain 0")
    hyp = A.members & B.negate().members == {zero}
    size = len(sumset(A, B))
    return KSVerdict(hyp, size >= len(A) + len(B) - 1, size, len(A), len(B))


def kemperman_scherk_exhaustive(n: int) -> tuple[int, int]:
    """Check the bound on every pair of subsets of ``Z/n`` containing 0.

    Subsets are bitmasks and ``A + B`` is the union of rotations of ``A``.
    Returns ``(pairs meeting the hypothesis, violations)``; a violation
    would contradict the theorem.
    """
    full = (1 << n) - 1

    def rot(mask, s):
        return ((mask << s) | (mask >> (n - s))) & full if s else mask

    def neg(mask):
        out = 0
        for x in range(n):
            if mask >> x & 1:
                out |= 1 << (-x % n)
        return out

    subsets = [m for m in range(1, full + 1) if m & 1]
    negs = {m: neg(m) for m in subsets}
    pop = {m: bin(m).count("1") for m in subsets}
    checked = bad = 0
    for a in subsets:
        for b in subsets:
            if a & negs[b] != 1:
                continue
            checked += 1
            total = 0
            for s in range(n):
                if b >> s & 1:
                    total |= rot(a, s)
            if bin(total).count("1") < pop[a] + pop[b] - 1:
                bad += 1
    return checked, bad


# --- element classes -------------------------------------------------------

@dataclass
class _Classes:
    """Per-element (k, l) data of a box group, as arrays indexed by element."""

    k: np.ndarray
    l: np.ndarray  # noqa: E741
    in_a: np.ndarray  # boundary part under the maximal convention


def _classes(g: BoxGroup, convention: str, interior_vertices: Sequence[int]) -> _Classes:
    # run the profile for its validation side effects (strict terminal check)
    age_profile(g, convention, strict=True, interior_vertices=interior_vertices)
    k = g.ages - 2
    if convention == "boundary":
        d = g.rank
        return _Classes(k, d - 2 - g.coages, np.ones(g.order, dtype=bool))
    d = g.rank - 1
    in_a = np.all(g.numerators[:, list(interior_vertices)] == 0, axis=1)
    l = np.where(in_a, d - 2 - g.coages, d - 1 - g.coages)  # noqa: E741
    return _Classes(k, l, in_a)


def _sum_table(g: BoxGroup) -> np.ndarray:
    """``T[i, j]`` = index of element i + element j."""
    keys = g.keys
    if keys.shape[1] == 0:
        return np.zeros((1, 1), dtype=np.int64)
    diag = np.array(g.diagonal, dtype=np.int64)
    sums = (keys[:, None, :] + keys[None, :, :]) % diag
    strides = np.ones(len(diag), dtype=np.int64)
    for t in range(len(diag) - 2, -1, -1):
        strides[t] = strides[t + 1] * diag[t + 1]
    return sums @ strides


def _pair_mask(c: _Classes, T: np.ndarray) -> np.ndarray:
    n = len(c.k)
    nz = np.arange(n) > 0
    return nz[:, None] & nz[None, :] & (T != 0)


def flight_violations(g: BoxGroup, selector=None) -> list[tuple[int, int]]:
    """Pairs of non-zero elements whose non-zero sum leaves the allowed classes.

    For ``v`` in ``N(k,l)`` and ``w`` in ``N(m,n)`` the sum must lie in some
    ``N(p,q)`` with ``p <= k + m + 2`` and ``q <= min(l + m, k + n) + 2``.
    ``selector(i, j)`` may restrict the pairs examined (a boolean matrix).
    """
    c = _classes(g, "boundary", (0,))
    T = _sum_table(g)
    mask = _pair_mask(c, T)
    if selector is not None:
        mask &= selector
    k, l = c.k, c.l  # noqa: E741
    p_ok = k[T] <= k[:, None] + k[None, :] + 2
    q_ok = l[T] <= np.minimum(l[:, None] + k[None, :], k[:, None] + l[None, :]) + 2
    bad = mask & ~(p_ok & q_ok)
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(bad))]


def verify_flight(g: BoxGroup, k: int, l: int, m: int, n: int) -> bool:  # noqa: E741
    """Containment of ``N(k,l) + N(m,n)`` minus 0 in the allowed classes."""
    c = _classes(g, "boundary", (0,))
    left = (c.k == k) & (c.l == l)
    right = (c.k == m) & (c.l == n)
    return not flight_violations(g, left[:, None] & right[None, :])


def verify_flight_all(g: BoxGroup) -> bool:
    """The containment for every quadruple at once (every pair of elements)."""
    return not flight_violations(g)


def flight2_violations(g: BoxGroup, interior_vertices: Sequence[int] = (0,)) -> list[tuple[int, int]]:
    """Same as :func:`flight_violations` for the boundary/interior split.

    Two boundary elements sum into the boundary part, a boundary and an
    interior element sum into the interior part, and two interior elements
    sum into either ``N(p-1,q-1)^a`` or ``N(p,q)^b`` within the bounds.
    """
    c = _classes(g, "maximal", interior_vertices)
    T = _sum_table(g)
    mask = _pair_mask(c, T)
    k, l, a = c.k, c.l, c.in_a  # noqa: E741
    pmax = k[:, None] + k[None, :] + 2
    qmax = np.minimum(l[:, None] + k[None, :], k[:, None] + l[None, :]) + 2
    ks, ls, as_ = k[T], l[T], a[T]
    both_a = a[:, None] & a[None, :]
    both_b = ~a[:, None] & ~a[None, :]
    mixed = ~both_a & ~both_b
    within = (ks <= pmax) & (ls <= qmax)
    shifted = (ks + 1 <= pmax) & (ls + 1 <= qmax)
    ok = ((both_a & as_ & within) | (mixed & ~as_ & within)
          | (both_b & ((as_ & shifted) | (~as_ & within))))
    bad = mask & ~ok
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(bad))]


def verify_flight2_all(g: BoxGroup, interior_vertices: Sequence[int] = (0,)) -> bool:
    return not flight2_violations(g, interior_vertices)


# --- counting inequalities -------------------------------------------------

def _check_range(r: int, rp: int, i: int, j: int) -> None:
    if not 0 <= r <= rp:
        raise PreconditionError(f"need 0 <= r <= r', got r={r}, r'={rp}")
    if not 0 <= i <= r:
        raise PreconditionError(f"need 0 <= i <= r, got i={i}")
    if not 0 <= j <= r + rp - i:
        raise PreconditionError(f"need 0 <= j <= r + r' - i, got j={j}")


def _grid(i: int, j: int, start: int = 0):
    """Pairs (p, q) with start <= p <= i and 0 <= q <= i + j - p."""
    for p in range(start, i + 1):
        for q in range(i + j - p + 1):
            yield p, q


def keyD_sides(prof: AgeProfile, r: int, rp: int, i: int, j: int,
               dim_bound: int | None = None) -> tuple[int, int]:
    _check_range(r, rp, i, j)
    bound = 2 * rp + r + 7 if dim_bound is None else dim_bound
    if prof.d < bound:
        raise PreconditionError(f"dimension {prof.d} below bound {bound}")
    N = prof.plain
    lhs = sum(N[(k, l)] for k, l in _grid(i, j))
    rhs = sum(N[(rp + 1, rp + 1 + q)] for q in range(i + j + 2))
    rhs += sum(N[(rp + 2 + p, rp + 2 + q)] for p, q in _grid(i, j))
    return lhs, rhs


def verify_keyD(g: BoxGroup, r: int, rp: int, i: int, j: int,
                dim_bound: int | None = None, strict: bool = True) -> bool:
    """Class-size inequality for a lattice-free boundary simplex.

    ``dim_bound`` defaults to ``2r' + r + 7``; smaller values may be passed
    to probe weaker hypotheses.
    """
    prof = age_profile(g, "boundary", strict=strict)
    lhs, rhs = keyD_sides(prof, r, rp, i, j, dim_bound)
    return lhs <= rhs


def keyD4_sides(prof: AgeProfile, variant: str, r: int, rp: int, alpha: int,
                i: int, j: int) -> tuple[int, int]:
    _check_range(r, rp, i, j)
    d = prof.d

    def A(k, l):  # noqa: E741
        return prof.count("a", k, l)

    def B(k, l):  # noqa: E741
        return prof.count("b", k, l)

    if variant == "a":
        _need(0 <= alpha <= r + 1, "need 0 <= alpha <= r + 1")
        _need(d >= 2 * rp + r + 7, f"dimension {d} below 2r' + r + 7")
        lhs = sum(A(k, l) + B(k - alpha, l - alpha) for k, l in _grid(i, j))
        rhs = sum(A(rp + 1, rp + 1 + q) + B(rp + 1 - alpha, rp + 1 + q - alpha)
                  for q in range(i + j + 2))
        rhs += sum(A(rp + 2 + p, rp + 2 + q) + B(rp + 2 - alpha + p, rp + 2 - alpha + q)
                   for p, q in _grid(i, j))
    elif variant == "b":
        _need(d >= 2 * rp + r + 6, f"dimension {d} below 2r' + r + 6")
        lhs = sum(A(k - 1, l - 1) + B(k, l) for k, l in _grid(i, j))
        rhs = sum(B(rp + 1, rp + 1 + q) for q in range(i + j + 2))
        rhs += sum(A(rp + 1 + p, rp + 1 + q) + B(rp + 2 + p, rp + 2 + q)
                   for p, q in _grid(i, j))
    elif variant == "c":
        _need(0 <= alpha <= r + 1, "need 0 <= alpha <= r + 1")
        _need(d >= 2 * rp + r + alpha + 6, f"dimension {d} below 2r' + r + alpha + 6")
        lhs = sum(B(k, l) for k, l in _grid(i, j))
        rhs = sum(A(rp + 1 + p, rp + 1 + q) for p, q in _grid(i, j, start=alpha))
        rhs += sum(B(rp + 1 + p, rp + 1 + q)
                   for p in range(alpha + 1) for q in range(alpha + i + j + 2))
        rhs += sum(B(rp + alpha + 2 + p, rp + alpha + 2 + q) for p, q in _grid(i, j))
    else:
        raise PreconditionError(f"unknown variant {variant!r}")
    return lhs, rhs


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def verify_keyD4(g: BoxGroup, variant: str, r: int, rp: int, alpha: int, i: int, j: int,
                 interior_vertices: Sequence[int] = (0,), strict: bool = True) -> bool:
    """Class-size inequalities for the boundary/interior split of a maximal simplex."""
    prof = age_profile(g, "maximal", strict=strict, interior_vertices=interior_vertices)
    lhs, rhs = keyD4_sides(prof, variant, r, rp, alpha, i, j)
    return lhs <= rhs


def parameter_grid(r: int, rp: int) -> list[tuple[int, int]]:
    """All (i, j) with 0 <= i <= r and 0 <= j <= r + r' - i."""
    return [(i, j) for i in range(r + 1) for j in range(r + rp - i + 1)]
