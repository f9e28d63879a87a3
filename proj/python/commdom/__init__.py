"""Commuting graphs of finite groups: domination numbers and closed-form checks.

Structured results (invariants, solver results, reports) are plain dicts with
the same fields as the JSON written by the ``commdom`` command-line tool.
"""

from fractions import Fraction

from ._core import (
    Error,
    FormatError,
    FormulaIntegrityError,
    Group,
    PreconditionError,
    SizeLimitError,
    __version__,
    evaluate_formula,
    family_names,
    formula_ids,
    product_laws,
    solve_graph,
    suzuki_summands,
    sweep,
)


def gamma(descriptor, total=False, budget=60.0):
    """Exact (total) domination number of the proper commuting graph, or None
    when no total dominating set exists. Raises if the budget ran out."""
    r = Group(descriptor).gamma(total=total, budget=budget)
    if r["method"] != "exact":
        raise RuntimeError(f"budget exhausted: bounds [{r['lower_bound']}, {r['upper_bound']}]")
    return r["value"]


def ratio(descriptor, budget=60.0):
    """gamma / |G| as a Fraction."""
    g = Group(descriptor)
    return Fraction(gamma(descriptor, budget=budget), g.order)


__all__ = [
    "Error",
    "FormatError",
    "FormulaIntegrityError",
    "Group",
    "PreconditionError",
    "SizeLimitError",
    "__version__",
    "evaluate_formula",
    "family_names",
    "formula_ids",
    "gamma",
    "product_laws",
    "ratio",
    "solve_graph",
    "suzuki_summands",
    "sweep",
]
