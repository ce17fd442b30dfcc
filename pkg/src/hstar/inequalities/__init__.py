"""Polyhedra Q(r, r'), inequality families, and exact implication tests."""

from .checking import CheckReport, check_vector, minimal_novel_dimension, novel_at, prune
from .families import (
    DimensionTooSmall,
    InvalidParameters,
    all_forms_at,
    baseline_inequalities,
    conjectural_forms,
    corA_inequality,
    dos_inequalities,
    refinement_h_display,
    refinement_inequalities,
    superA_form,
    superA_inequalities,
    variant_form,
    variant_inequalities,
)
from .farkas import Certificate, implied_by, nonnegative_combination
from .forms import LinearFormAB, LinearFormH, ab_to_h_form
from .polyhedron import (
    BudgetExceeded,
    QPolyhedron,
    coke_condition,
    hayden_check,
    plan_vector,
    q_polyhedron,
    swim_points,
    swim_vertices,
    swum_vertices,
    vertices,
)

__all__ = [
    "BudgetExceeded", "Certificate", "CheckReport", "DimensionTooSmall", "InvalidParameters",
    "LinearFormAB", "LinearFormH", "QPolyhedron", "ab_to_h_form", "all_forms_at",
    "baseline_inequalities", "check_vector", "coke_condition", "conjectural_forms",
    "corA_inequality", "dos_inequalities", "hayden_check", "implied_by",
    "minimal_novel_dimension", "nonnegative_combination", "novel_at", "plan_vector", "prune",
    "q_polyhedron", "refinement_h_display", "refinement_inequalities", "superA_form",
    "superA_inequalities", "swim_points", "swim_vertices", "swum_vertices", "variant_form",
    "variant_inequalities", "vertices",
]
