"""Weighted lattice simplices, their box groups, and three ways to get h*.

A Payne simplex ``P(alpha)`` is the convex hull of the images of the unit
vectors in ``N = Z^(d+1) / Z*alpha``.  Its box group is the quotient of the
lattice ``N x Z`` by the sublattice spanned by the cone generators
``(v_i, 1)``; every element is represented by its fractional coordinates
with respect to those generators.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .polynomials import HStarVector, hstar_from_values
from .snf import column_reduction, determinant, smith_normal_form

log = logging.getLogger(__name__)

DEFAULT_DILATION_BUDGET = 200


class InvalidSimplex(ValueError):
    """Bad weights or a degenerate vertex matrix."""


class NonTerminalError(ValueError):
    """A box group has a non-zero element of age at most one."""


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its explicit size budget."""


@dataclass(frozen=True)
class PayneSimplex:
    alpha: tuple[int, ...]

    def __post_init__(self):
        alpha = tuple(sorted((int(a) for a in self.alpha), reverse=True))
        if len(alpha) < 2:
            raise InvalidSimplex("need at least two weights")
        if alpha[-1] < 1:
            raise InvalidSimplex("weights must be positive")
        if reduce(math.gcd, alpha) != 1:
            raise InvalidSimplex(f"weights {alpha} have a common factor")
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def of(cls, alpha: Iterable[int]) -> "PayneSimplex":
        return cls(tuple(alpha))

    @property
    def d(self) -> int:
        return len(self.alpha) - 1

    @property
    def volume(self) -> int:
        return sum(self.alpha)

    def vertex_matrix(self) -> list[list[int]]:
        """Integer vertices in Z^d of a simplex unimodularly equivalent to P(alpha).

        A unimodular ``U`` with ``U alpha = e_0`` identifies ``N`` with
        ``Z^d`` via rows ``1..d``; vertex ``i`` is column ``i`` of those rows.
        """
        U = column_reduction(self.alpha)
        n = len(self.alpha)
        return [[U[row][i] for row in range(1, n)] for i in range(n)]


def payne_hstar(p: PayneSimplex) -> HStarVector:
    """Closed double-sum formula for the h*-vector of ``P(alpha)``.

    The term for ``(i, j)`` has exponent ``ceil(sum_{k != i} frac(j a_k / a_i))``
    plus the number of ``k > i`` with ``j a_k / a_i`` integral.  Only integer
    residues are used.
    """
    alpha, d = p.alpha, p.d
    h = [0] * (d + 1)
    for i, ai in enumerate(alpha):
        for j in range(ai):
            total = 0
            integral_after = 0
            for k, ak in enumerate(alpha):
                if k == i:
                    continue
                rem = (j * ak) % ai
                total += rem
                if k > i and rem == 0:
                    integral_after += 1
            h[-(-total // ai) + integral_after] += 1
    return HStarVector(d, tuple(h))


class BoxElement(NamedTuple):
    key: tuple[int, ...]
    numerators: tuple[int, ...]  # fractional coordinates times the group order
    denominator: int
    age: int
    coage: int
    boundary: bool

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.denominator) for x in self.numerators)

    @property
    def support(self) -> int:
        return sum(1 for x in self.numerators if x)

    @property
    def is_zero(self) -> bool:
        return not any(self.numerators)

    def to_json(self) -> dict:
        return {
            "coords": [str(c) for c in self.coords],
            "age": self.age,
            "coage": self.coage,
            "boundary": self.boundary,
        }


class BoxGroup:
    """Finite abelian group of box points of a simplicial cone.

    ``diagonal`` holds the invariant factors larger than one.  Element keys
    are coordinates in the matching product of cyclic groups; elements are
    listed in lexicographic key order, so the position of a key is its
    mixed-radix value.  Per-element data is stored column-wise in numpy
    arrays; :attr:`elements` materializes it on demand.
    """

    def __init__(self, order: int, diagonal: Sequence[int], rank: int,
                 keys: np.ndarray, numerators: np.ndarray):
        self.order = int(order)
        self.diagonal = tuple(int(f) for f in diagonal)
        self.rank = int(rank)  # number of cone generators
        self.keys = keys
        self.numerators = numerators
        if len(keys) != self.order or math.prod(self.diagonal) != self.order:
            raise AssertionError("element count differs from group order")
        totals = numerators.sum(axis=1)
        if np.any(totals % self.order):
            raise InvalidSimplex("box point at non-integral height; generators not at height one")
        self.ages = (totals // self.order).astype(np.int64)
        self.supports = (numerators != 0).sum(axis=1).astype(np.int64)
        self.coages = self.supports - self.ages
        self._elements: list[BoxElement] | None = None

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"BoxGroup(order={self.order}, diagonal={self.diagonal}, rank={self.rank})"

    @property
    def elements(self) -> list[BoxElement]:
        if self._elements is None:
            self._elements = [
                BoxElement(tuple(key), tuple(num), self.order, age, sup - age, 0 < sup < self.rank)
                for key, num, age, sup in zip(self.keys.tolist(), self.numerators.tolist(),
                                              self.ages.tolist(), self.supports.tolist())]
        return self._elements

    @property
    def zero(self) -> BoxElement:
        return self.elements[0]

    def index(self, key: Sequence[int]) -> int:
        idx = 0
        for k, f in zip(key, self.diagonal):
            idx = idx * f + k % f
        return idx

    def element(self, key: Sequence[int]) -> BoxElement:
        return self.elements[self.index(key)]

    def add(self, x: BoxElement, y: BoxElement) -> BoxElement:
        return self.element([a + b for a, b in zip(x.key, y.key)])

    def neg(self, x: BoxElement) -> BoxElement:
        return self.element([-a for a in x.key])

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "diagonal": list(self.diagonal),
            "elements": [e.to_json() for e in self.elements],
        }

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence[int]]) -> "BoxGroup":
        """Box group of the cone spanned by the rows of a square integer matrix."""
        n = len(gens)
        if n == 0 or any(len(row) != n for row in gens):
            raise InvalidSimplex("generator matrix must be square and non-empty")
        det = determinant(gens)
        if det == 0:
            raise InvalidSimplex("generator matrix is singular")
        order = abs(det)
        # with U G V = D, the point z V^-1 of the ambient lattice has
        # fractional coordinates z D^-1 U with respect to the rows of G
        U, D, _ = smith_normal_form(gens)
        factors = [(i, D[i][i]) for i in range(n) if D[i][i] > 1]
        keys = _key_grid([f for _, f in factors])
        dtype = np.int64 if order < 3 * 10**9 else object
        basis = np.array([[(order // f) * (U[i][j] % order) % order for j in range(n)]
                          for i, f in factors], dtype=dtype).reshape(len(factors), n)
        nums = (keys.astype(dtype) @ basis) % order if factors else np.zeros((1, n), dtype)
        return cls(order, [f for _, f in factors], n, keys, nums)

    @classmethod
    def from_vertices(cls, vertices: Sequence[Sequence[int]]) -> "BoxGroup":
        """Box group of the lattice simplex with the given integer vertices."""
        return cls.from_generators([list(v) + [1] for v in vertices])

    @classmethod
    def cyclic(cls, n: int, weights: Sequence[int]) -> "BoxGroup":
        """Cyclic group ``Z/n`` generated by ``(w_1, ..., w_k) / n``.

        Requires ``sum(w) = 0 mod n`` (box points at integral height) and
        ``gcd(n, w) = 1`` so the generator has order exactly ``n``.
        """
        weights = tuple(int(w) % n for w in weights)
        if n < 1:
            raise InvalidSimplex("group order must be positive")
        if sum(weights) % n:
            raise InvalidSimplex("weights must sum to 0 mod n")
        if math.gcd(n, *weights) != 1:
            raise InvalidSimplex("weights and n have a common factor")
        keys = np.arange(n, dtype=np.int64).reshape(-1, 1)
        nums = (keys * np.array(weights, dtype=np.int64)) % n
        return cls(n, (n,) if n > 1 else (), len(weights), keys if n > 1 else keys[:, :0], nums)


def _key_grid(factors: Sequence[int]) -> np.ndarray:
    """Rows of ``range(f_1) x ... x range(f_k)`` in lexicographic order."""
    if not factors:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*(np.arange(f, dtype=np.int64) for f in factors), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def box_group(source: PayneSimplex | Sequence[Sequence[int]]) -> BoxGroup:
    """Box group of a Payne simplex or of a simplex given by its vertex rows."""
    if isinstance(source, PayneSimplex):
        return BoxGroup.from_vertices(source.vertex_matrix())
    return BoxGroup.from_vertices(source)


def parallelepiped_hstar(g: BoxGroup) -> HStarVector:
    """h* of a full simplex as the age distribution over its box group."""
    d = g.rank - 1
    h = np.bincount(g.ages, minlength=d + 1)
    return HStarVector(d, tuple(int(x) for x in h))


def dilation_count_hstar(p: PayneSimplex, budget: int = DEFAULT_DILATION_BUDGET) -> HStarVector:
    """h* from lattice-point counts of the dilates ``mP``, ``m = 0..d``.

    A point of ``m P(alpha)`` is a class of ``sum x_i e_i`` with ``x >= 0``
    and ``sum x_i = m``.  Each class meets the slice with real coordinates
    ``x' + (u/S) alpha`` (``S = sum alpha``) for exactly one integral ``x'``
    and one ``u in [0, S)``, so the count is a stars-and-bars sum over ``u``.
    """
    alpha, d = p.alpha, p.d
    S = sum(alpha)
    if S > budget:
        raise BudgetExceeded(f"sum of weights {S} exceeds dilation budget {budget}")
    # for shift u, integral x' with x'_i >= ceil(-u a_i / S) and sum x' = m - u
    # exist iff m >= c_u, and then number C(m - c_u + d, d)
    offsets = Counter(u - sum(u * a // S for a in alpha) for u in range(S))
    values = [sum(mult * math.comb(m - c + d, d) for c, mult in offsets.items() if m >= c)
              for m in range(d + 1)]
    return HStarVector(d, tuple(hstar_from_values(values, d)))


@dataclass
class AgeProfile:
    """Counts of box elements by age class.

    ``plain[(k, l)]`` counts ages ``k + 2`` with coage ``d - 2 - l``;
    ``a`` and ``b`` split elements by whether they lie in the cone over the
    boundary facet (``a``, coage ``d - 2 - l``) or not (``b``, coage
    ``d - 1 - l``).  Missing keys count zero.
    """

    d: int
    convention: str
    plain: Counter = field(default_factory=Counter)
    a: Counter = field(default_factory=Counter)
    b: Counter = field(default_factory=Counter)

    def count(self, kind: str, k: int, l: int) -> int:  # noqa: E741
        if k < 0 or l < 0:
            return 0
        return getattr(self, kind)[(k, l)]

    def total(self) -> int:
        return sum(self.plain.values()) + sum(self.a.values()) + sum(self.b.values())


def age_profile(g: BoxGroup, convention: str = "boundary", strict: bool = True,
                interior_vertices: Sequence[int] = (0,)) -> AgeProfile:
    """Classify the non-zero elements of ``g`` by (k, l).

    ``"boundary"``: ``g`` comes from a lattice-free simplex of dimension
    ``d - 1``, so ``d`` equals the number of generators and only
    ``plain`` is filled.

    ``"maximal"``: ``g`` comes from a d-dimensional simplex, ``d`` is one
    less than the number of generators, and an element is in the boundary
    part iff its coordinates vanish at every index in ``interior_vertices``
    (the vertices not on the boundary of the ambient polytope).
    """
    if convention == "boundary":
        d = g.rank
    elif convention == "maximal":
        d = g.rank - 1
    else:
        raise ValueError(f"unknown convention {convention!r}")
    prof = AgeProfile(d, convention)
    ages, coages = g.ages[1:], g.coages[1:]
    bad = (ages < 2) | (coages < 2)
    if bad.any():
        i = int(np.argmax(bad)) + 1
        msg = f"element {g.elements[i].key} has age {g.ages[i]}, coage {g.coages[i]}"
        if strict:
            raise NonTerminalError(msg)
        log.warning("skipping %d non-terminal elements, e.g. %s", int(bad.sum()), msg)
    keep = ~bad
    ks = (ages - 2)[keep].tolist()
    if convention == "boundary":
        prof.plain.update(zip(ks, (d - 2 - coages)[keep].tolist()))
        return prof
    in_boundary = np.all(g.numerators[1:, list(interior_vertices)] == 0, axis=1)[keep]
    ls_a = (d - 2 - coages)[keep].tolist()
    ls_b = (d - 1 - coages)[keep].tolist()
    for k, la, lb, on in zip(ks, ls_a, ls_b, in_boundary.tolist()):
        if on:
            prof.a[(k, la)] += 1
        else:
            prof.b[(k, lb)] += 1
    return prof


def _sorted_tuples(n: int, length: int) -> np.ndarray:
    """All non-decreasing tuples over ``range(n)`` (unordered rows)."""
    arr = np.arange(n, dtype=np.int16).reshape(-1, 1)
    for _ in range(length - 1):
        blocks = []
        last = arr[:, -1]
        for v in range(n):
            sel = arr[last <= v]
            blocks.append(np.hstack([sel, np.full((len(sel), 1), v, dtype=np.int16)]))
        arr = np.vstack(blocks)
    return arr


def terminal_weight_vectors(d: int, n: int) -> list[tuple[int, ...]]:
    """Canonical weight vectors of terminal cyclic groups ``Z/n`` on d generators.

    A vector qualifies when its entries sum to 0 mod n, it generates a group
    of order n, and every non-zero multiple has age at least 2.  Vectors
    differing by a permutation or by a unit of ``Z/n`` give isomorphic
    graded groups; only the sorted, lexicographically smallest
    representative is kept.
    """
    W = _sorted_tuples(n, d)
    W = W[(W.sum(axis=1, dtype=np.int64) % n) == 0].astype(np.int64)
    for j in range(1, n):
        W = W[((j * W) % n).sum(axis=1) >= 2 * n]
    if len(W) == 0:
        return []
    g = np.gcd.reduce(np.hstack([W, np.full((len(W), 1), n)]), axis=1)
    W = W[g == 1]
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    base = np.int64(n) ** np.arange(d - 1, -1, -1, dtype=np.int64)
    codes = np.stack([np.sort((u * W) % n, axis=1) @ base for u in units])
    W = W[codes[0] == codes.min(axis=0)]
    W = W[np.lexsort(W.T[::-1])]
    return [tuple(int(x) for x in row) for row in W]


def terminal_cyclic_samples(d: int, n_max: int) -> list[BoxGroup]:
    """All canonical terminal cyclic box groups on d generators with ``2 <= n <= n_max``.

    Ordered by n, then lexicographically by weight vector.
    """
    if d < 4 or n_max < 2:
        raise ValueError("need d >= 4 and n_max >= 2")
    return [BoxGroup.cyclic(n, w)
            for n in range(2, n_max + 1)
            for w in terminal_weight_vectors(d, n)]
