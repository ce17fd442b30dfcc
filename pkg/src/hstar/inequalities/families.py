"""Generators for the families of linear inequalities on a/b-vectors.

Every generator returns :class:`LinearFormAB` objects with unfolded indices,
exactly as the family is stated; fold them at a concrete dimension with
:meth:`LinearFormAB.clamped` or convert with :meth:`LinearFormAB.to_h`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .forms import LinearFormAB, LinearFormH
from .polyhedron import plan_parameter, plan_vector, q_polyhedron, vertices


class DimensionTooSmall(ValueError):
    pass


class InvalidParameters(ValueError):
    pass


ONE = Fraction(1)


def _a(i: int, c=ONE):
    return (("a", i), Fraction(c))


def _b(i: int, c=ONE):
    return (("b", i), Fraction(c))


def _require(d: int | None, bound: int, what: str) -> None:
    if d is not None and d < bound:
        raise DimensionTooSmall(f"{what} needs d >= {bound}, got d={d}")


def _vertex_list(r: int, rp: int) -> list[tuple[Fraction, ...]]:
    return vertices(q_polyhedron(r, rp))


# ---------------------------------------------------------------- superA

def superA_bound(r: int, rp: int) -> int:
    return 2 * rp + r + 7


def superA_form(r: int, rp: int, lam: Sequence) -> LinearFormAB:
    """``lam a_1 + sum_{j<=r} a_{j+2} <= a_{r'+3} + sum_j lam_j a_{r'+4+j}``."""
    lam = tuple(Fraction(x) for x in lam)
    scalar = sum(lam, Fraction(0)) - r
    lhs = [_a(1, scalar)] + [_a(j + 2) for j in range(r + 1)]
    rhs = [_a(rp + 3)] + [_a(rp + 4 + j, c) for j, c in enumerate(lam)]
    return LinearFormAB.build(lhs, rhs, family="superA", params=(r, rp), vertex=(lam,),
                              d_min=superA_bound(r, rp))


def superA_inequalities(r: int, rp: int, d: int | None = None) -> list[LinearFormAB]:
    if not 0 <= r <= rp:
        raise InvalidParameters(f"need 0 <= r <= r', got ({r}, {rp})")
    _require(d, superA_bound(r, rp), f"superA({r},{rp})")
    return [superA_form(r, rp, lam) for lam in _vertex_list(r, rp)]


# ---------------------------------------------------------------- corA

def corA_bound(r: int, rp: int) -> int:
    return 2 * rp + plan_parameter(r, rp) + 7


def corA_inequality(r: int, rp: int, d: int | None = None) -> tuple[LinearFormAB, LinearFormH]:
    """The plan-vertex member of superA in a-form and in h*-form at ``d``.

    Both forms are built from their own closed displays; the a-form is
    ``(m-r+1)a_1 + a_2 + ... + a_{r+2} <= a_{r'+3} + ... + a_{r'+m+4}``.
    Without ``d`` the h*-form is produced at the minimal valid dimension.
    """
    if not 0 <= r <= rp:
        raise InvalidParameters(f"need 0 <= r <= r', got ({r}, {rp})")
    m = plan_parameter(r, rp)
    bound = corA_bound(r, rp)
    _require(d, bound, f"corA({r},{rp})")
    d = bound if d is None else d
    lhs = [_a(1, m - r + 1)] + [_a(j) for j in range(2, r + 3)]
    rhs = [_a(j) for j in range(rp + 3, rp + m + 5)]
    form = LinearFormAB.build(lhs, rhs, family="corA", params=(r, rp),
                              vertex=(plan_vector(r, rp),), d_min=bound)
    coeffs: dict[int, Fraction] = {}

    def add(i: int, c) -> None:
        coeffs[i] = coeffs.get(i, Fraction(0)) + c

    # small side, read as ... <= ...: the h*-indices near d, then near 0
    for j in range(r + 1):
        add(d - 1 - j, -(m - r + 1 + j))
        add(j + 2, m - r + 1 + j)
    for j in range(rp - r + 1):
        add(d - r - 2 - j, -(m + 2))
        add(r + 3 + j, m + 2)
    for j in range(m + 1):
        add(d - rp - 3 - j, -(m + 1 - j))
        add(rp + 4 + j, m + 1 - j)
    return form, LinearFormH(d, None, coeffs, family="corA", label=form.tag())


# ---------------------------------------------------------------- variant

def variant_bound(kind: int, alpha: int | None, r: int, rp: int) -> int:
    if kind == 1:
        return 2 * rp + r + 7
    if kind == 2:
        return 2 * rp + r + 6
    if kind == 3:
        return 2 * rp + r + alpha + 6
    raise InvalidParameters(f"unknown variant type {kind}")


def _check_variant(kind: int, alpha: int | None, r: int, rp: int) -> None:
    if not 0 <= r <= rp:
        raise InvalidParameters(f"need 0 <= r <= r', got ({r}, {rp})")
    if kind == 1 and not (alpha is not None and 0 <= alpha <= r):
        raise InvalidParameters("type 1 needs 0 <= alpha <= r")
    if kind == 2 and r <= 0:
        raise InvalidParameters("type 2 needs r > 0")
    if kind == 3 and not (alpha is not None and 0 <= alpha <= r + 1):
        raise InvalidParameters("type 3 needs 0 <= alpha <= r + 1")
    if kind not in (1, 2, 3):
        raise InvalidParameters(f"unknown variant type {kind}")


def variant_form(kind: int, alpha: int | None, r: int, rp: int,
                 first: Sequence, mu: Sequence) -> LinearFormAB:
    """One member of a variant family.

    ``first`` is ``lam`` for types 1 and 2 and ``lam'`` for type 3.
    """
    _check_variant(kind, alpha, r, rp)
    first = tuple(Fraction(x) for x in first)
    mu = tuple(Fraction(x) for x in mu)
    if kind == 1:
        lam_s = sum(first, Fraction(0)) - r
        mu_s = sum(mu, Fraction(0)) - r + alpha
        lhs = ([_a(1, lam_s), _b(0, mu_s)] + [_a(j + 2) for j in range(r + 1)]
               + [_b(j + 1) for j in range(r - alpha + 1)])
        rhs = ([_a(rp + 3)] + [_a(rp + 4 + j, c) for j, c in enumerate(first)]
               + [_b(rp + 2 - alpha)] + [_b(rp + 3 - alpha + j, c) for j, c in enumerate(mu)])
        params = (alpha, r, rp)
    elif kind == 2:
        lam_s = sum(first, Fraction(0)) - r
        mu_s = sum(mu, Fraction(0)) - r
        lhs = ([_a(1, lam_s), _b(0, mu_s)] + [_a(j + 1) for j in range(r + 1)]
               + [_b(j + 1) for j in range(r + 1)])
        rhs = ([_a(rp + 2), _b(rp + 2)] + [_a(rp + 3 + j, c) for j, c in enumerate(first)]
               + [_b(rp + 3 + j, c) for j, c in enumerate(mu)])
        params = (None, r, rp)
    else:
        lam_s = sum(first, Fraction(0))
        mu_s = sum(mu, Fraction(0)) - r + alpha
        lhs = [_a(1, lam_s), _b(0, mu_s)] + [_b(j + 1) for j in range(r + 1)]
        rhs = ([_b(rp + 2 + j) for j in range(alpha + 1)]
               + [_a(rp + alpha + 3 + j, c) for j, c in enumerate(first)]
               + [_b(rp + alpha + 3 + j, c) for j, c in enumerate(mu)])
        params = (alpha, r, rp)
    return LinearFormAB.build(lhs, rhs, family=f"variant{kind}", params=params,
                              vertex=(first, mu), d_min=variant_bound(kind, alpha, r, rp),
                              interior=True)


def variant_inequalities(kind: int, alpha: int | None, r: int, rp: int,
                         d: int | None = None) -> list[LinearFormAB]:
    """All members over the vertex tuples the type requires, in lexicographic order."""
    _check_variant(kind, alpha, r, rp)
    _require(d, variant_bound(kind, alpha, r, rp), f"variant type {kind}")
    mus = _vertex_list(r, rp)
    firsts = _vertex_list(r - alpha, rp - alpha) if kind == 3 else mus
    return [variant_form(kind, alpha, r, rp, f, mu) for f in firsts for mu in mus]


# ---------------------------------------------------------------- dos

def dos_bound(part: int, alpha: int | None, r: int, rp: int) -> int:
    m = plan_parameter(r, rp)
    if part == 1:
        return 2 * rp + m + 7
    if part == 2:
        return 2 * rp + m + 6
    if part == 3:
        return 2 * rp + m + alpha + 6
    raise InvalidParameters(f"unknown part {part}")


def dos_inequalities(part: int, alpha: int | None, r: int, rp: int,
                     d: int | None = None) -> LinearFormAB:
    """The variant families at the plan vertices, from their closed displays."""
    _check_variant(part, alpha, r, rp)
    bound = dos_bound(part, alpha, r, rp)
    _require(d, bound, f"dos part {part}")
    m = plan_parameter(r, rp)
    if part == 1:
        lhs = ([_a(1, m - r + 1), _b(0, m - r + alpha + 1)] + [_a(j + 2) for j in range(r + 1)]
               + [_b(j + 1) for j in range(r - alpha + 1)])
        rhs = ([_a(rp + 3 + j) for j in range(m + 2)]
               + [_b(rp + 2 - alpha + j) for j in range(m + 2)])
        vertex = (plan_vector(r, rp), plan_vector(r, rp))
        params = (alpha, r, rp)
    elif part == 2:
        lhs = ([_a(1, m - r + 1), _b(0, m - r + 1)] + [_a(j + 1) for j in range(r + 1)]
               + [_b(j + 1) for j in range(r + 1)])
        rhs = [_a(rp + 2 + j) for j in range(m + 2)] + [_b(rp + 2 + j) for j in range(m + 2)]
        vertex = (plan_vector(r, rp), plan_vector(r, rp))
        params = (None, r, rp)
    else:
        mp = plan_parameter(r - alpha, rp - alpha)
        lhs = [_a(1, mp + 1), _b(0, m + alpha - r + 1)] + [_b(j + 1) for j in range(r + 1)]
        rhs = ([_a(rp + alpha + 3 + j) for j in range(mp + 1)]
               + [_b(rp + 2 + j) for j in range(m + alpha + 2)])
        vertex = (plan_vector(r - alpha, rp - alpha), plan_vector(r, rp))
        params = (alpha, r, rp)
    return LinearFormAB.build(lhs, rhs, family=f"dos{part}", params=params, vertex=vertex,
                              d_min=bound, interior=True)


# ---------------------------------------------------------------- refinement, baseline

def refinement_inequalities(d: int) -> list[LinearFormAB]:
    """``a_0 <= a_1 <= a_i`` and ``0 <= b_0 <= b_i``, valid with an interior point."""
    if d < 1:
        raise InvalidParameters("d must be positive")
    meta = dict(family="refinement", interior=True)
    out = [LinearFormAB.build([_a(0)], [_a(1)], params=("a", 1), d_min=1, **meta)]
    out += [LinearFormAB.build([_a(1)], [_a(i)], params=("a", i), d_min=i + 1, **meta)
            for i in range(2, d)]
    out.append(LinearFormAB.build([], [_b(0)], params=("b", 0), d_min=1, **meta))
    out += [LinearFormAB.build([_b(0)], [_b(i)], params=("b", i), d_min=i + 2, **meta)
            for i in range(1, d - 1)]
    return out


def refinement_h_display(d: int) -> list[LinearFormH]:
    """The h*-form chain ``h_d <= h_1``, ``h_0 <= h_d`` and the nested partial sums."""
    out = [LinearFormH(d, d, {1: 1, d: -1}), LinearFormH(d, d, {d: 1, 0: -1})]
    for i in range(1, (d - 1) // 2 + 1):
        low = {j: Fraction(-1) for j in range(1, i + 1)}
        mid = {d - j: Fraction(1) for j in range(1, i + 1)}
        out.append(LinearFormH(d, d, _merge(low, mid)))
        high = {j: Fraction(1) for j in range(2, i + 2)}
        out.append(LinearFormH(d, d, _merge({k: -v for k, v in mid.items()}, high)))
    return out


def _merge(*parts: dict) -> dict:
    out: dict = {}
    for part in parts:
        for k, v in part.items():
            out[k] = out.get(k, Fraction(0)) + v
    return out


def baseline_inequalities(d: int, interior: bool, s: int | None = None) -> list:
    """Previously known inequalities at dimension ``d``.

    ``a_0 <= a_1 <= a_i`` for ``2 <= i <= d - 1`` and ``b_i >= 0`` for
    ``0 <= i < s`` (``s = d`` when ``interior``; b-forms are omitted when no
    degree is supplied).  With an interior point the h*-chain
    ``h*_0 <= h*_1 <= h*_i`` is appended as :class:`LinearFormH`.
    """
    if d < 1:
        raise InvalidParameters("d must be positive")
    if interior:
        s = d
    meta = dict(family="baseline", interior=False)
    out: list = [LinearFormAB.build([_a(0)], [_a(1)], params=("a", 1), **meta)]
    out += [LinearFormAB.build([_a(1)], [_a(i)], params=("a", i), **meta)
            for i in range(2, d)]
    if s is not None:
        out += [LinearFormAB.build([], [_b(i)], params=("b", i), **meta) for i in range(s)]
    if interior:
        out.append(LinearFormH(d, s, {1: 1, 0: -1}, family="baseline", label="hibi(1)"))
        out += [LinearFormH(d, s, {i: 1, 1: -1}, family="baseline", label=f"hibi({i})")
                for i in range(2, d)]
    return out


# ---------------------------------------------------------------- sweeps

def superA_parameters(d: int) -> Iterator[tuple[int, int]]:
    """``(r, r')`` with ``0 <= r <= r'`` and ``2r' + r + 7 <= d``."""
    rp = 0
    while superA_bound(0, rp) <= d:
        for r in range(rp + 1):
            if superA_bound(r, rp) <= d:
                yield r, rp
        rp += 1


def variant_parameters(d: int) -> Iterator[tuple[int, int | None, int, int]]:
    """``(type, alpha, r, r')`` valid at ``d``, ordered by type then parameters."""
    for kind in (1, 2, 3):
        rp = 0
        while 2 * rp + 6 <= d:
            for r in range(rp + 1):
                alphas = {1: range(r + 1), 2: [None] if r > 0 else [], 3: range(r + 2)}[kind]
                for alpha in alphas:
                    if variant_bound(kind, alpha, r, rp) <= d:
                        yield kind, alpha, r, rp
            rp += 1


def all_forms_at(d: int, interior: bool, s: int | None = None,
                 include_conjectures: bool = False) -> list:
    """Every form the package knows to hold at ``d``, in canonical order.

    Order: baseline, refinement, superA, variant (each by parameters then
    vertex), then the conjectural forms when requested and ``d == 7``.
    """
    out = list(baseline_inequalities(d, interior, s))
    if interior:
        out += refinement_inequalities(d)
    for r, rp in superA_parameters(d):
        out += superA_inequalities(r, rp, d)
    if interior:
        for kind, alpha, r, rp in variant_parameters(d):
            out += variant_inequalities(kind, alpha, r, rp, d)
    if include_conjectures and d == 7:
        out += conjectural_forms()
    return out


def conjectural_forms() -> list[LinearFormAB]:
    """Two unproved dimension-7 inequalities, carried as annotations only."""
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    meta = dict(family="conjecture", d_min=7, interior=True, conjecture=True)
    first = LinearFormAB.build([_a(1, half), _b(0), _b(1)], [_a(2, half), _b(2), _b(3)],
                               params=(1,), **meta)
    second = LinearFormAB.build([_a(1, quarter), _a(2, quarter), _b(0), _b(1)],
                                [_a(3, half), _b(2), _b(3)], params=(2,), **meta)
    return [first, second]
