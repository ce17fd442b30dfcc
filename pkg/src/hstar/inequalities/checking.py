"""Checking candidate h*-vectors, novelty of family members, and pruning."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from ..polynomials import HStarVector
from .families import (
    all_forms_at,
    baseline_inequalities,
    refinement_inequalities,
    superA_inequalities,
    superA_parameters,
    variant_inequalities,
    variant_parameters,
)
from .farkas import implied_by, nonnegative_combination
from .forms import LinearFormAB, LinearFormH

DEFAULT_SEARCH_CAP = 16


def _label(form) -> str:
    return form.tag() if isinstance(form, LinearFormAB) else (form.label or form.family)


def _text(form) -> str:
    return form.render()


@dataclass
class CheckEntry:
    family: str
    label: str
    form: str
    h_form: str
    value: Fraction
    conjecture: bool = False

    @property
    def passed(self) -> bool:
        return self.value >= 0

    def to_json(self) -> dict:
        return {"family": self.family, "label": self.label, "form": self.form,
                "h_form": self.h_form, "value": str(self.value), "pass": self.passed,
                "conjecture": self.conjecture}


@dataclass
class CheckReport:
    h: HStarVector
    interior: bool
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def violations(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.passed and not e.conjecture]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"h": list(self.h.coeffs), "d": self.h.d, "degree": self.h.degree,
                "interior": self.interior, "pass": self.passed,
                "violations": len(self.violations),
                "entries": [e.to_json() for e in self.entries]}


def check_vector(h: HStarVector, include_conjectures: bool = False) -> CheckReport:
    """Evaluate every known inequality that applies to ``h``.

    The interior case (degree ``s == d``) adds the refinement and variant
    families.  Conjectural forms, when requested, are reported but never
    affect the verdict.
    """
    d, s = h.d, h.degree
    interior = h.has_interior_point
    report = CheckReport(h, interior)
    for form in all_forms_at(d, interior, s=s, include_conjectures=include_conjectures):
        hf = form.to_h(d, s) if isinstance(form, LinearFormAB) else form
        conj = isinstance(form, LinearFormAB) and form.conjecture
        text = form.render_clamped(d, s) if isinstance(form, LinearFormAB) else form.render()
        report.entries.append(CheckEntry(form.family, _label(form), text, hf.render(),
                                         hf.evaluate(h), conj))
    return report


# ---------------------------------------------------------------- novelty

def _family_members(item: LinearFormAB, d: int) -> list[LinearFormAB]:
    """The forms an item is compared against, besides the baseline."""
    members = [f for r, rp in superA_parameters(d) for f in superA_inequalities(r, rp, d)]
    if item.interior:
        members += refinement_inequalities(d)
        for kind, alpha, r, rp in variant_parameters(d):
            members += variant_inequalities(kind, alpha, r, rp, d)
    return [f for f in members if f.identity() != item.identity()]


def default_baseline(d: int, interior: bool) -> list:
    return baseline_inequalities(d, interior)


def novel_at(item: LinearFormAB, d: int,
             baseline_generator: Callable[[int, bool], list] = default_baseline) -> bool:
    """Whether ``item`` at ``d`` is not implied by the baseline and its siblings.

    Forms without b-symbols and without the interior assumption are compared
    in the folded a-coordinates ``a_0, ..., a_{floor(d/2)}``; interior forms
    are compared in h*-coordinates with ``s = d``.  In both spaces the
    normalisation ``a_0 = h*_0 = 1`` contributes the form ``a_0 >= 0``.
    """
    given = list(baseline_generator(d, item.interior)) + _family_members(item, d)
    if item.interior:
        target = item.to_h(d, d).coeffs
        rows = [g.to_h(d, d).coeffs if isinstance(g, LinearFormAB) else g.coeffs for g in given]
        rows.append({0: Fraction(1)})
    else:
        target = item.clamped(d)
        rows = [g.clamped(d) for g in given
                if isinstance(g, LinearFormAB) and not g.uses_b]
        rows.append({("a", 0): Fraction(1)})
    return nonnegative_combination(target, rows) is None


def minimal_novel_dimension(item: LinearFormAB,
                            baseline_generator: Callable[[int, bool], list] = default_baseline,
                            search_cap: int = DEFAULT_SEARCH_CAP) -> int | None:
    """Smallest ``d`` in ``[d_min, search_cap]`` at which ``item`` is new, else None."""
    for d in range(item.d_min, search_cap + 1):
        if novel_at(item, d, baseline_generator):
            return d
    return None


# ---------------------------------------------------------------- pruning

def primitive(coeffs: dict) -> dict:
    """Scale a non-zero coefficient map to coprime integers, keeping its sign pattern."""
    from math import gcd, lcm

    if not coeffs:
        return {}
    den = lcm(*(Fraction(c).denominator for c in coeffs.values()))
    ints = {k: int(Fraction(c) * den) for k, c in coeffs.items()}
    g = gcd(*ints.values())
    return {k: Fraction(v // g) for k, v in ints.items()}


def prune(forms: Sequence[LinearFormH], normalization: bool = True) -> list[LinearFormH]:
    """Drop trivial, duplicate and implied forms.

    Forms are made primitive and deduplicated, then scanned from the last to
    the first; each form implied by the others still present is removed.
    The survivors are returned in their original order.
    """
    seen: dict[tuple, LinearFormH] = {}
    for f in forms:
        p = primitive(f.coeffs)
        if not p:
            continue
        key = tuple(sorted(p.items()))
        if key not in seen:
            seen[key] = LinearFormH(f.d, f.s, p, family=f.family, label=f.label)
    kept = list(seen.values())
    k = len(kept) - 1
    while k >= 0:
        others = kept[:k] + kept[k + 1:]
        if implied_by(kept[k], others, normalization=normalization) is not None:
            kept = others
        k -= 1
    return kept
