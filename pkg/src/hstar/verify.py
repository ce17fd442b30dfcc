"""Verification sweeps that emit one JSON-serialisable record per finding.

Each suite yields records with a ``"suite"`` key; the last record of each
check has ``"kind": "summary"`` and a boolean ``"pass"``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator

import numpy as np

from .inequalities.polyhedron import (
    coke_condition,
    hayden_check,
    plan_vector,
    q_polyhedron,
    swim_points,
    swim_vertices,
    swum_vertices,
    vertices,
)
from .lattice import (
    PayneSimplex,
    age_profile,
    box_group,
    dilation_count_hstar,
    parallelepiped_hstar,
    payne_hstar,
    terminal_cyclic_samples,
)
from .sumsets import (
    flight2_violations,
    flight_violations,
    keyD4_sides,
    keyD_sides,
    kemperman_scherk_exhaustive,
    parameter_grid,
)

Record = dict


def _summary(suite: str, check: str, checked: int, failures: int, **extra) -> Record:
    return {"suite": suite, "kind": "summary", "check": check, "checked": checked,
            "failures": failures, "pass": failures == 0, **extra}


# ---------------------------------------------------------------- oracles

def iter_alphas(max_d: int, sum_max: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive ``alpha`` with gcd 1, ``2 <= len <= max_d + 1`` and sum ``<= sum_max``."""

    def rec(prefix: list[int], remaining: int, cap: int, slots: int):
        if len(prefix) >= 2 and math.gcd(*prefix) == 1:
            yield tuple(prefix)
        if slots == 0:
            return
        for x in range(min(cap, remaining), 0, -1):
            prefix.append(x)
            yield from rec(prefix, remaining - x, x, slots - 1)
            prefix.pop()

    yield from rec([], sum_max, sum_max, max_d + 1)


def oracle_suite(max_d: int = 6, sum_max: int = 40) -> Iterator[Record]:
    checked = bad = 0
    for alpha in iter_alphas(max_d, sum_max):
        p = PayneSimplex.of(alpha)
        closed = payne_hstar(p)
        box = parallelepiped_hstar(box_group(p))
        dil = dilation_count_hstar(p, budget=max(200, p.volume + p.d + 2))
        checked += 1
        if not closed.coeffs == box.coeffs == dil.coeffs:
            bad += 1
            yield {"suite": "oracles", "kind": "mismatch", "alpha": list(alpha),
                   "closed": list(closed.coeffs), "box": list(box.coeffs),
                   "dilation": list(dil.coeffs)}
    yield _summary("oracles", "triangle", checked, bad, max_d=max_d, sum_max=sum_max)


# ---------------------------------------------------------------- sumsets

def keyD4_parameters(d: int, r_max: int = 2) -> list[tuple[str, int, int, int]]:
    """``(variant, r, r', alpha)`` whose dimension bound is met at ``d``."""
    out = []
    for rp in range(r_max + 1):
        for r in range(rp + 1):
            if 2 * rp + r + 7 <= d:
                out += [("a", r, rp, al) for al in range(r + 2)]
            if 2 * rp + r + 6 <= d:
                out.append(("b", r, rp, 0))
            out += [("c", r, rp, al) for al in range(r + 2) if 2 * rp + r + al + 6 <= d]
    return sorted(out)


def sumset_suite(ks_n_max: int = 8, flight_n_max: int = 20, keyD4_n_max: int = 12,
                 r: int = 0, rp: int = 1) -> Iterator[Record]:
    checked = bad = 0
    for n in range(1, ks_n_max + 1):
        c, b = kemperman_scherk_exhaustive(n)
        checked += c
        bad += b
    yield _summary("sumsets", "kemperman-scherk", checked, bad, n_max=ks_n_max)

    groups = terminal_cyclic_samples(9, flight_n_max)
    fl_bad = kd_bad = kd_checked = 0
    grid = parameter_grid(r, rp)
    for g in groups:
        if flight_violations(g):
            fl_bad += 1
            yield {"suite": "sumsets", "kind": "failure", "check": "flight",
                   "group": g.to_json()}
        prof = age_profile(g, "boundary")
        for i, j in grid:
            kd_checked += 1
            lhs, rhs = keyD_sides(prof, r, rp, i, j)
            if lhs > rhs:
                kd_bad += 1
                yield {"suite": "sumsets", "kind": "failure", "check": "keyD",
                       "params": [r, rp, i, j], "lhs": lhs, "rhs": rhs}
    yield _summary("sumsets", "flight", len(groups), fl_bad, d=9, n_max=flight_n_max)
    yield _summary("sumsets", "keyD", kd_checked, kd_bad, d=9, n_max=flight_n_max, r=r, rp=rp)

    yield from keyD4_sweep(keyD4_n_max)


def keyD4_sweep(n_max: int, params=None) -> Iterator[Record]:
    """Split-class inequalities and flight for every apex of the 9-generator samples."""
    params = keyD4_parameters(8) if params is None else params
    groups = terminal_cyclic_samples(9, n_max)
    checked = bad = f2_checked = f2_bad = 0
    for g in groups:
        weights = g.numerators[1] if len(g) > 1 else np.zeros(g.rank, dtype=int)
        apexes = sorted({int(np.flatnonzero(weights == w)[0]) for w in weights})
        for apex in apexes:
            prof = age_profile(g, "maximal", interior_vertices=(apex,))
            for variant, r, rp, alpha in params:
                for i, j in parameter_grid(r, rp):
                    checked += 1
                    lhs, rhs = keyD4_sides(prof, variant, r, rp, alpha, i, j)
                    if lhs > rhs:
                        bad += 1
                        yield {"suite": "sumsets", "kind": "failure", "check": "keyD4",
                               "params": [variant, r, rp, alpha, i, j], "apex": apex,
                               "lhs": lhs, "rhs": rhs}
            f2_checked += 1
            if flight2_violations(g, (apex,)):
                f2_bad += 1
                yield {"suite": "sumsets", "kind": "failure", "check": "flight2", "apex": apex}
    yield _summary("sumsets", "keyD4", checked, bad, d=8, n_max=n_max, groups=len(groups))
    yield _summary("sumsets", "flight2", f2_checked, f2_bad, d=8, n_max=n_max)


# ---------------------------------------------------------------- lemmas

COKE_ENTRIES = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2))
COKE_BETAS = (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3))


def symmetric_unimodal(length: int, top: int = 3) -> list[tuple[int, ...]]:
    """Symmetric, unimodal sequences of the given length with entries in ``[0, top]``."""
    half = (length + 1) // 2
    out = []
    for first in itertools.combinations_with_replacement(range(top + 1), half):
        out.append(first + tuple(reversed(first[: length // 2])))
    return out


def coke_oracle_table(length: int, betas=COKE_BETAS, entries=COKE_ENTRIES):
    """For every mu and beta, whether ``sum mu_i h_i >= beta sum h_i`` for all test ``h``.

    Yields ``(mu, beta, holds)``.  Computed in integers after scaling by 6,
    the common denominator of all entries and betas.
    """
    H = np.array(symmetric_unimodal(length), dtype=np.int64)
    idx = np.array(list(itertools.product(range(len(entries)), repeat=length)), dtype=np.int64)
    scaled = np.array([int(6 * x) for x in entries], dtype=np.int64)
    lhs = scaled[idx] @ H.T
    sums = H.sum(axis=1)
    for beta in betas:
        ok = (lhs >= int(6 * beta) * sums[None, :]).all(axis=1)
        for row, v in zip(idx.tolist(), ok.tolist()):
            yield tuple(entries[k] for k in row), beta, v


def lemma_suite(coke_max_len: int = 7, hayden_r: int = 2, hayden_rp: int = 4,
                plan_r: int = 3, plan_rp: int = 5) -> Iterator[Record]:
    checked = bad = 0
    for length in range(1, coke_max_len + 1):
        for mu, beta, expected in coke_oracle_table(length):
            checked += 1
            if coke_condition(mu, beta) != expected:
                bad += 1
                yield {"suite": "lemmas", "kind": "failure", "check": "coke",
                       "mu": [str(x) for x in mu], "beta": str(beta)}
    yield _summary("lemmas", "coke", checked, bad, max_len=coke_max_len)

    checked = bad = 0
    for rp in range(hayden_rp + 1):
        for r in range(min(rp, hayden_r) + 1):
            for v in vertices(q_polyhedron(r, rp)):
                checked += 1
                res = hayden_check(v, r, rp)
                if not res:
                    bad += 1
                    yield {"suite": "lemmas", "kind": "failure", "check": "hayden",
                           "r": r, "rp": rp, "vertex": [str(x) for x in v],
                           "hypotheses": list(res.hypothesis_failures),
                           "conclusions": list(res.conclusion_failures)}
    yield _summary("lemmas", "hayden", checked, bad, r_max=hayden_r, rp_max=hayden_rp)

    checked = bad = 0
    for rp in range(plan_rp + 1):
        for r in range(min(rp, plan_r) + 1):
            checked += 1
            if not q_polyhedron(r, rp).contains(plan_vector(r, rp)):
                bad += 1
                yield {"suite": "lemmas", "kind": "failure", "check": "plan", "r": r, "rp": rp}
    yield _summary("lemmas", "plan", checked, bad, r_max=plan_r, rp_max=plan_rp)


# ---------------------------------------------------------------- vertices

def vertex_suite(swim_max: int = 3, swum_max: int = 6) -> Iterator[Record]:
    bad = 0
    for r in range(swim_max + 1):
        enum = set(vertices(q_polyhedron(r, r)))
        closed = set(swim_vertices(r))
        literal = set(swim_points(r))
        q = q_polyhedron(r, r)
        ok = enum == closed and enum <= literal and all(q.contains(x) for x in literal)
        bad += not ok
        yield {"suite": "vertices", "kind": "swim", "r": r, "vertices": len(enum),
               "closed_form": len(closed), "literal_points": len(literal), "pass": ok}
    yield _summary("vertices", "swim", swim_max + 1, bad)
    bad = 0
    for rp in range(swum_max + 1):
        enum = set(vertices(q_polyhedron(0, rp)))
        closed = set(swum_vertices(rp))
        ok = enum == closed
        bad += not ok
        yield {"suite": "vertices", "kind": "swum", "rp": rp, "vertices": len(enum),
               "closed_form": len(closed), "pass": ok}
    yield _summary("vertices", "swum", swum_max + 1, bad)


SUITES = {
    "oracles": oracle_suite,
    "sumsets": sumset_suite,
    "lemmas": lemma_suite,
    "vertices": vertex_suite,
}
