"""Linear inequalities over the a/b symbols and over h*-coefficients.

An inequality ``LHS <= RHS`` is stored with both sides as coefficient maps so
that it can be printed exactly as generated.  ``net`` forms (``RHS - LHS``,
read as ``>= 0``) are what implication tests and evaluation use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from ..polynomials import ABDecomposition, HStarVector

Key = tuple[str, int]  # ("a", i) or ("b", i)


def _clean(coeffs: Mapping) -> dict:
    return {k: Fraction(v) for k, v in coeffs.items() if v != 0}


def _accumulate(terms: Iterable[tuple[Key, Fraction]]) -> dict:
    out: dict = {}
    for key, c in terms:
        out[key] = out.get(key, Fraction(0)) + Fraction(c)
    return _clean(out)


def format_coeff(c: Fraction) -> str:
    """Prefix for a positive coefficient: ``""`` for 1, ``"2"``, ``"(4/3)"``."""
    if c == 1:
        return ""
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c})"


def _render_side(coeffs: Mapping, name) -> str:
    if not coeffs:
        return "0"
    return " + ".join(format_coeff(c) + name(k) for k, c in sorted(coeffs.items()))


def clamp_key(key: Key, d: int, s: int | None) -> Key:
    """Fold an index onto ``[0, midpoint]`` using the palindromic symmetry."""
    kind, i = key
    if kind == "a":
        if not 0 <= i <= d:
            raise IndexError(f"a_{i} out of range for d={d}")
        return ("a", min(i, d - i))
    if s is None:
        raise ValueError("the degree s is needed to fold b-indices")
    if not 0 <= i <= s - 1:
        raise IndexError(f"b_{i} out of range for s={s}")
    return ("b", min(i, s - 1 - i))


def _h_expansion(key: Key, d: int, s: int | None) -> dict[int, int]:
    kind, i = key
    out: dict[int, int] = {}
    if kind == "a":
        if not 0 <= i <= d:
            raise IndexError(f"a_{i} out of range for d={d}")
        for j in range(i + 1):
            out[j] = out.get(j, 0) + 1
        for j in range(d - i + 1, d + 1):
            out[j] = out.get(j, 0) - 1
    else:
        if s is None:
            raise ValueError("the degree s is needed to expand b-symbols")
        if not 0 <= i <= s - 1:
            raise IndexError(f"b_{i} out of range for s={s}")
        for j in range(i + 1):
            out[j] = out.get(j, 0) - 1
        for j in range(s - i, s + 1):
            out[j] = out.get(j, 0) + 1
    return out


@dataclass
class LinearFormH:
    """``sum_i coeffs[i] h*_i >= 0`` in dimension ``d`` under degree ``s``."""

    d: int
    s: int | None
    coeffs: dict[int, Fraction]
    family: str = ""
    label: str = ""

    def __post_init__(self):
        self.coeffs = _clean(self.coeffs)
        if any(not 0 <= i <= self.d for i in self.coeffs):
            raise IndexError("h*-index out of range")

    @property
    def balanced(self) -> bool:
        return sum(self.coeffs.values()) == 0

    @property
    def strictly_balanced(self) -> bool:
        return sum(c for i, c in self.coeffs.items() if i >= 1) == 0

    @property
    def is_trivial(self) -> bool:
        return not self.coeffs

    def evaluate(self, h: HStarVector) -> Fraction:
        return sum((c * h.coeffs[i] for i, c in self.coeffs.items()), Fraction(0))

    def sides(self) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
        lhs = {i: -c for i, c in self.coeffs.items() if c < 0}
        rhs = {i: c for i, c in self.coeffs.items() if c > 0}
        return lhs, rhs

    def render(self) -> str:
        lhs, rhs = self.sides()
        name = lambda i: f"h*_{i}"  # noqa: E731
        return f"{_render_side(lhs, name)} <= {_render_side(rhs, name)}"

    def key(self) -> tuple:
        return tuple(sorted(self.coeffs.items()))

    def to_json(self) -> dict:
        return {"d": self.d, "s": self.s,
                "coeffs": {str(i): str(c) for i, c in sorted(self.coeffs.items())},
                "text": self.render()}


@dataclass
class LinearFormAB:
    """``LHS <= RHS`` over the symbols ``a_i`` and ``b_i``.

    ``params`` and ``vertex`` record how the form was generated; ``d_min``
    is the smallest dimension in which it is a theorem, and ``interior``
    marks forms that need an interior lattice point.
    """

    lhs: dict[Key, Fraction]
    rhs: dict[Key, Fraction]
    family: str
    params: tuple = ()
    vertex: tuple = ()
    d_min: int = 1
    interior: bool = False
    conjecture: bool = False
    note: str = field(default="", compare=False)

    def __post_init__(self):
        self.lhs = _clean(self.lhs)
        self.rhs = _clean(self.rhs)

    @classmethod
    def build(cls, lhs_terms, rhs_terms, **meta) -> "LinearFormAB":
        return cls(_accumulate(lhs_terms), _accumulate(rhs_terms), **meta)

    @property
    def keys(self) -> set[Key]:
        return set(self.lhs) | set(self.rhs)

    @property
    def uses_b(self) -> bool:
        return any(k[0] == "b" for k in self.keys)

    def net(self) -> dict[Key, Fraction]:
        """``RHS - LHS`` over unfolded symbols."""
        out = dict(self.rhs)
        for k, c in self.lhs.items():
            out[k] = out.get(k, Fraction(0)) - c
        return _clean(out)

    def clamped(self, d: int, s: int | None = None) -> dict[Key, Fraction]:
        """``RHS - LHS`` after folding every index by symmetry at ``(d, s)``."""
        out: dict[Key, Fraction] = {}
        for k, c in self.net().items():
            ck = clamp_key(k, d, s)
            out[ck] = out.get(ck, Fraction(0)) + c
        return _clean(out)

    def clamped_sides(self, d: int, s: int | None = None) -> tuple[dict, dict]:
        net = self.clamped(d, s)
        return ({k: -c for k, c in net.items() if c < 0}, {k: c for k, c in net.items() if c > 0})

    def to_h(self, d: int, s: int | None = None) -> LinearFormH:
        out: dict[int, Fraction] = {}
        for k, c in self.net().items():
            for j, e in _h_expansion(k, d, s).items():
                out[j] = out.get(j, Fraction(0)) + c * e
        return LinearFormH(d, s, out, family=self.family, label=self.tag())

    def evaluate(self, ab: ABDecomposition) -> Fraction:
        total = Fraction(0)
        for (kind, i), c in self.net().items():
            seq = ab.a if kind == "a" else ab.b
            if not 0 <= i < len(seq):
                raise IndexError(f"{kind}_{i} not defined for d={ab.d}, s={ab.s}")
            total += c * seq[i]
        return total

    def render(self) -> str:
        return f"{_render_side(self.lhs, _ab_name)} <= {_render_side(self.rhs, _ab_name)}"

    def render_clamped(self, d: int, s: int | None = None) -> str:
        lhs, rhs = self.clamped_sides(d, s)
        return f"{_render_side(lhs, _ab_name)} <= {_render_side(rhs, _ab_name)}"

    def tag(self) -> str:
        params = ",".join("-" if p is None else str(p) for p in self.params)
        return f"{self.family}({params})" if params else self.family

    def identity(self) -> tuple:
        return (self.family, self.params, self.vertex)

    def to_json(self, d: int | None = None, s: int | None = None) -> dict:
        out = {
            "family": self.family,
            "params": list(self.params),
            "vertex": [[str(x) for x in v] for v in self.vertex],
            "d_min": self.d_min,
            "interior": self.interior,
            "conjecture": self.conjecture,
            "ab_form": self.render(),
        }
        if d is not None:
            out["ab_form_folded"] = self.render_clamped(d, s)
            out["h_form"] = self.to_h(d, s).render()
        return out


def _ab_name(key: Key) -> str:
    return f"{key[0]}_{key[1]}"


def ab_to_h_form(f: LinearFormAB, d: int, s: int | None = None) -> LinearFormH:
    """Substitute the h*-expansions of ``a_i`` and ``b_i`` at ``(d, s)``."""
    return f.to_h(d, s)
