"""Regeneration of the result tables from the generators.

Every row is computed; the only static content is the row layout of the
dimension-7 table and its two conjectural rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .cones import CMON, HOOT, HOOT2, x_vector
from .inequalities.checking import minimal_novel_dimension, primitive, prune
from .inequalities.families import (
    all_forms_at,
    conjectural_forms,
    refinement_inequalities,
    superA_bound,
    superA_inequalities,
    variant_inequalities,
    variant_parameters,
)
from .inequalities.forms import LinearFormAB, LinearFormH
from .lattice import PayneSimplex, payne_hstar


class UnknownTable(KeyError):
    pass


@dataclass
class Table:
    name: str
    title: str
    columns: list[str]
    rows: list[list[str]]

    def to_text(self) -> str:
        widths = [max(len(c), *(len(r[k]) for r in self.rows)) if self.rows else len(c)
                  for k, c in enumerate(self.columns)]
        line = lambda cells: " | ".join(s.ljust(w) for s, w in zip(cells, widths)).rstrip()  # noqa: E731
        out = [self.title, line(self.columns), "-+-".join("-" * w for w in widths)]
        out += [line(r) for r in self.rows]
        return "\n".join(out)

    def to_tsv(self) -> str:
        return "\n".join("\t".join(r) for r in [self.columns] + self.rows)

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "title": self.title, "columns": self.columns,
                           "rows": [dict(zip(self.columns, r)) for r in self.rows]}, indent=2)

    def render(self, fmt: str = "text") -> str:
        return {"text": self.to_text, "tsv": self.to_tsv, "json": self.to_json}[fmt]()


def _pair(*xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _display_h(f: LinearFormH) -> str:
    return LinearFormH(f.d, f.s, primitive(f.coeffs)).render()


# ---------------------------------------------------------------- superA table

def noint_items(max_dim: int = 12) -> list[tuple[LinearFormAB, int]]:
    """superA members that are new in some dimension ``<= max_dim``, with that dimension."""
    items = []
    rp = 0
    while superA_bound(0, rp) <= max_dim:
        for r in range(rp + 1):
            if superA_bound(r, rp) > max_dim:
                continue
            for f in superA_inequalities(r, rp):
                dim = minimal_novel_dimension(f, search_cap=max_dim)
                if dim is not None:
                    items.append((f, dim))
        rp += 1
    items.sort(key=lambda it: (it[0].d_min, it[1], it[0].vertex))
    return items


def noint_table(max_dim: int = 12) -> Table:
    rows = [[f.render(), _pair(*f.params), _vec(f.vertex[0]), str(f.d_min), f"d >= {dim}"]
            for f, dim in noint_items(max_dim)]
    return Table("noint", f"superA inequalities new in dimension at most {max_dim}",
                 ["inequality", "(r,r')", "vertex", "bound", "dimension"], rows)


# ---------------------------------------------------------------- variant table

def int_items(max_dim: int = 8) -> list[LinearFormAB]:
    items = [f for kind, alpha, r, rp in variant_parameters(max_dim)
             for f in variant_inequalities(kind, alpha, r, rp)]
    items.sort(key=lambda f: (f.d_min, f.family, tuple(-1 if p is None else p for p in f.params),
                              f.vertex))
    return items


def int_table(max_dim: int = 8) -> Table:
    rows = [[f.render(), _pair(*("-" if p is None else p for p in f.params)),
             f.family.removeprefix("variant"), f"d >= {f.d_min}"] for f in int_items(max_dim)]
    return Table("int", f"variant inequalities in dimension at most {max_dim}",
                 ["inequality", "(alpha,r,r')", "type", "dimension"], rows)


# ---------------------------------------------------------------- dimension 7

def _find(forms, family: str, params: tuple) -> LinearFormAB:
    return next(f for f in forms if f.family == family and f.params == params)


def seven_rows() -> list[tuple[list[LinearFormAB], str]]:
    """Row layout of the dimension-7 summary, filled with generated forms."""
    d = 7
    ref = refinement_inequalities(d)
    var = {(k, a, r, rp): variant_inequalities(k, a, r, rp, d)[0]
           for k, a, r, rp in [(3, 0, 0, 0), (1, 0, 0, 0), (3, 1, 0, 0)]}
    sup = superA_inequalities(0, 0, d)[0]
    return [
        ([_find(ref, "refinement", ("a", 1)), _find(ref, "refinement", ("a", 2)),
          _find(ref, "refinement", ("b", 0)), _find(ref, "refinement", ("b", 1))], "refinement"),
        ([_find(ref, "refinement", ("b", 2))], "refinement"),
        ([_find(ref, "refinement", ("b", 3))], "refinement"),
        ([var[(3, 0, 0, 0)]], "variant type 3"),
        ([var[(1, 0, 0, 0)]], "variant type 1"),
        ([sup], "superA"),
        ([var[(3, 1, 0, 0)]], "variant type 3"),
    ]


def seven_table() -> Table:
    d = 7
    rows = []
    for forms, source in seven_rows():
        rows.append(["; ".join(_display_h(f.to_h(d, d)) for f in forms),
                     "; ".join(f.render() for f in forms), source])
    for f in conjectural_forms():
        rows.append([_display_h(f.to_h(d, d)), f.render(), "CONJECTURE"])
    return Table("seven", "inequalities in dimension 7 with an interior lattice point",
                 ["h*-form", "a/b-form", "source"], rows)


# ---------------------------------------------------------------- reflexive

def reflexive_forms(d: int) -> list[LinearFormH]:
    """All known forms at ``d`` restricted to symmetric vectors, pruned.

    Symmetric h* means ``b = 0`` and ``a = h*``; each form is rewritten in
    ``h*_0, ..., h*_{floor(d/2)}`` and redundant ones are removed.
    """
    out = []
    for f in all_forms_at(d, interior=True):
        coeffs: dict[int, Fraction] = {}
        if isinstance(f, LinearFormAB):
            items = [(i, c) for (kind, i), c in f.net().items() if kind == "a"]
        else:
            items = list(f.coeffs.items())
        for i, c in items:
            j = min(i, d - i)
            coeffs[j] = coeffs.get(j, Fraction(0)) + c
        out.append(LinearFormH(d, d, coeffs, family=f.family))
    return prune(out)


def reflexive_table(max_dim: int = 6) -> Table:
    rows = []
    for d in range(2, max_dim + 1):
        half = [f"h*_{min(i, d - i)}" if 0 < i < d else "1" for i in range(d + 1)]
        forms = reflexive_forms(d)
        rows.append([_vec(half).replace(",", ", "), "; ".join(f.render() for f in forms), str(d)])
    return Table("reflexive", f"balanced inequalities for symmetric h*-vectors, d <= {max_dim}",
                 ["h*-polynomial", "inequalities", "d"], rows)


# ---------------------------------------------------------------- realisations

def _realization_table(name: str, title: str, data, with_dim: bool) -> Table:
    rows = []
    for alpha, expected in data:
        h = payne_hstar(PayneSimplex.of(alpha))
        x = x_vector(h)
        row = [f"P{_vec(alpha)}", _vec(x), _vec(h.coeffs), "yes" if x == tuple(expected) else "NO"]
        if with_dim:
            row.insert(2, f"d = {h.d}")
        rows.append(row)
    cols = ["polytope", "x-vector"] + (["dimension"] if with_dim else []) + ["h*", "matches"]
    return Table(name, title, cols, rows)


def hoot_table() -> Table:
    return _realization_table("hoot", "realisation of the rays of the cone for d <= 5", HOOT, True)


def cmon_table() -> Table:
    return _realization_table("cmon", "realisation of vectors in dimension 6", CMON, False)


def hoot2_table() -> Table:
    return _realization_table("hoot2", "realisation of the rays of the symmetric section, d <= 6",
                              HOOT2, True)


TABLES = {
    "noint": noint_table,
    "int": int_table,
    "seven": seven_table,
    "reflexive": reflexive_table,
    "hoot": hoot_table,
    "cmon": cmon_table,
    "hoot2": hoot2_table,
}


def build_table(name: str) -> Table:
    try:
        return TABLES[name]()
    except KeyError:
        raise UnknownTable(name) from None
