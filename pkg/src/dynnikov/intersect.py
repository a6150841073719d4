"""Geometric intersection numbers of multicurves from their coordinates.

The key quantity is the intersection number with a single round curve, which
has a closed form in terms of the counts of strands running above and below
the diameter through each band between consecutive beta arcs.  The general
algorithm relaxes the first multicurve by a positive braid, pushes the second
through the same braid (intersection numbers are braid-invariant), and sums
the closed form over the round components of the relaxed side.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import apply_word
from .coords import (
    ArcIntersections,
    DynnikovCoords,
    ElementaryCurve,
    _arcs_unchecked,
    check_elementary,
)
from .errors import MalformedInputError
from .relax import parse_relaxed, relax


@dataclass(frozen=True)
class AboveBelowCounts:
    """Per-band strand counts for a multicurve, bands numbered 1..n.

    Band i sits between beta arcs i-1 and i and contains puncture i;
    ``above[i-1]`` strands cross it entirely above the diameter and
    ``below[i-1]`` entirely below (loop components are excluded from both).
    """

    n: int
    above: tuple[int, ...]
    below: tuple[int, ...]

    def min_above(self, lo: int, hi: int) -> int:
        """Least above-count over bands lo..hi: the number of strands running
        above the diameter across that whole range."""
        return min(self.above[lo - 1 : hi])

    def min_below(self, lo: int, hi: int) -> int:
        return min(self.below[lo - 1 : hi])


def above_below(c: DynnikovCoords) -> AboveBelowCounts:
    """Count the above and below components in every band: the alpha count on
    the corresponding side minus the |b| loop components of the band."""
    c.require_valid()
    return _counts_from_arcs(c.b, _arcs_unchecked(c))


def _counts_from_arcs(b: tuple[int, ...], arcs: ArcIntersections) -> AboveBelowCounts:
    n = arcs.n
    above = []
    below = []
    for i in range(1, n + 1):
        loops = abs(b[i - 1])
        above.append(arcs.alpha_at(2 * i - 3) - loops)
        below.append(arcs.alpha_at(2 * i - 2) - loops)
    return AboveBelowCounts(n, tuple(above), tuple(below))


def intersect_elementary(c: DynnikovCoords, e: ElementaryCurve) -> int:
    """Geometric intersection number of c with the round curve about
    punctures e.i through e.j."""
    c.require_valid()
    check_elementary(e.i, e.j, c.n)
    arcs = _arcs_unchecked(c)
    counts = _counts_from_arcs(c.b, arcs)
    return _elementary_count(c.b, arcs, counts, e.i, e.j)


def _elementary_count(
    b: tuple[int, ...], arcs: ArcIntersections, counts: AboveBelowCounts, i: int, j: int
) -> int:
    """Closed form for the intersection number with the round curve about
    punctures i..j.

    Strands of the multicurve crossing the region between beta arcs i-1 and j
    miss the round curve exactly when they run clear across it above or below
    the diameter, or loop back around a gap just outside it; everything else
    crosses twice.  The loop counts are minima of three available quantities:
    over-strands (resp. under-strands) that stop one band short, and the loop
    components of the boundary band itself.
    """
    across_above = counts.min_above(i, j)
    across_below = counts.min_below(i, j)
    large_right = min(
        counts.min_above(i, j - 1) - across_above,
        counts.min_below(i, j - 1) - across_below,
        max(b[j - 1], 0),
    )
    large_left = min(
        counts.min_above(i + 1, j) - across_above,
        counts.min_below(i + 1, j) - across_below,
        max(-b[i - 1], 0),
    )
    missing = large_right + large_left + across_above + across_below
    return arcs.beta_at(i - 1) + arcs.beta_at(j) - 2 * missing


def intersection_number(c1: DynnikovCoords, c2: DynnikovCoords) -> int:
    """Geometric intersection number of two multicurves on the same disk.

    Relaxes c1 with a positive braid w, splits the relaxed curve into round
    components, applies w to c2 (which preserves the intersection number),
    and sums the per-component closed form.
    """
    if c1.n != c2.n:
        raise MalformedInputError(f"puncture counts differ: {c1.n} != {c2.n}")
    c1.require_valid()
    c2.require_valid()
    word, relaxed = relax(c1)
    components = parse_relaxed(relaxed)
    if not components.components:
        return 0
    moved = apply_word(c2, word)
    arcs = _arcs_unchecked(moved)
    counts = _counts_from_arcs(moved.b, arcs)
    return sum(
        _elementary_count(moved.b, arcs, counts, e.i, e.j) for e in components
    )


__all__ = [
    "AboveBelowCounts",
    "above_below",
    "intersect_elementary",
    "intersection_number",
]
