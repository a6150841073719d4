"""Multicurves on the n-punctured disk in Dynnikov coordinates: braid action,
relaxation, and geometric intersection numbers, all in exact arbitrary-precision
integer arithmetic."""

from .bench import (
    BenchRecord,
    count_relax_operations,
    exponent_vs_m,
    exponent_vs_n,
    fit_exponent,
    random_multicurve,
    random_positive_word,
    run_scaling,
    write_csv,
)
from .braid import BraidWord, apply_generator, apply_word
from .coords import (
    ArcIntersections,
    DynnikovCoords,
    ElementaryCurve,
    ReducedCoords,
    arc_intersections,
    ceil_half,
    coordinate_sum,
    disjoint_union,
    elementary_coords,
    extend,
    from_arcs,
    reduce,
)
from .errors import (
    DynnikovError,
    InvalidCoordinatesError,
    IterationBudgetError,
    MalformedInputError,
    NotDisjointError,
    NotRelaxedError,
)
from .intersect import (
    AboveBelowCounts,
    above_below,
    intersect_elementary,
    intersection_number,
)
from .relax import ParsedRelaxed, parse_relaxed, relax

__version__ = "0.1.0"

__all__ = [
    "AboveBelowCounts",
    "ArcIntersections",
    "BenchRecord",
    "BraidWord",
    "DynnikovCoords",
    "DynnikovError",
    "ElementaryCurve",
    "InvalidCoordinatesError",
    "IterationBudgetError",
    "MalformedInputError",
    "NotDisjointError",
    "NotRelaxedError",
    "ParsedRelaxed",
    "ReducedCoords",
    "above_below",
    "apply_generator",
    "apply_word",
    "arc_intersections",
    "ceil_half",
    "coordinate_sum",
    "count_relax_operations",
    "disjoint_union",
    "elementary_coords",
    "exponent_vs_m",
    "exponent_vs_n",
    "extend",
    "fit_exponent",
    "from_arcs",
    "intersect_elementary",
    "intersection_number",
    "parse_relaxed",
    "random_multicurve",
    "random_positive_word",
    "reduce",
    "relax",
    "run_scaling",
    "write_csv",
]
