"""Relaxation of multicurves by positive braids.

A multicurve is relaxed when all its a-coordinates vanish; equivalently it is
a disjoint union of round curves.  ``relax`` finds the prefix-minimal positive
braid carrying a multicurve to a relaxed one, and ``parse_relaxed`` splits a
relaxed multicurve into its round components by bracket matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, _apply_inplace
from .coords import DynnikovCoords, ElementaryCurve
from .errors import IterationBudgetError, NotRelaxedError


@dataclass(frozen=True)
class ParsedRelaxed:
    """The round components (i_1, j_1), ..., (i_N, j_N) of a relaxed
    multicurve.  Any two components are nested or disjoint, never linked."""

    components: tuple[ElementaryCurve, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def parse_relaxed(c: DynnikovCoords) -> ParsedRelaxed:
    """Split a relaxed multicurve into round components.

    Walk the punctures left to right keeping a stack of open components:
    b[i-1] < 0 opens -b[i-1] components at puncture i, b[i-1] > 0 closes
    b[i-1] of them, most recently opened first.  Validity of the coordinates
    guarantees the stack never underflows and is empty at the end.
    """
    c.require_valid()
    if not c.is_relaxed():
        raise NotRelaxedError(
            f"multicurve with a = {c.a} is not relaxed; relax it first"
        )
    stack: list[int] = []
    components = []
    for i in range(1, c.n + 1):
        count = c.b[i - 1]
        if count < 0:
            stack.extend([i] * -count)
        else:
            for _ in range(count):
                components.append(ElementaryCurve(stack.pop(), i))
    return ParsedRelaxed(tuple(components))


def relax(c: DynnikovCoords) -> tuple[BraidWord, DynnikovCoords]:
    """Find a positive braid word w and relaxed coordinates c' with
    c' = w(c).

    Scans for the first index j with a[j] > a[j-1], applies sigma_j, and
    restarts the scan; when no such index remains, a is non-increasing with
    both ends zero, hence identically zero.  The returned word is the
    prefix-minimal positive relaxing braid.
    """
    c.require_valid()
    n = c.n
    a = list(c.a)
    b = list(c.b)
    budget = relax_budget(n, c.norm())
    letters = _relax_lists(a, b, n, budget)
    return (
        BraidWord(n, tuple(letters)),
        DynnikovCoords(n, tuple(a), tuple(b)),
    )


def relax_budget(n: int, norm: int) -> int:
    """Generator-application allowance before relaxation gives up.  Valid
    coordinates finish within a constant times n^2 * norm letters, so running
    past this budget signals corrupt input rather than a long computation."""
    return 10 * (n * n * norm + n)


def _relax_lists(a: list, b: list, n: int, budget: int) -> list[int]:
    """Core relaxation loop on mutable coordinate lists.  Returns the letters
    applied.  Entries only need +, -, comparison and max, so instrumented
    integer types can be substituted for operation counting."""
    letters: list[int] = []
    applied = 0
    j = 1
    while j < n:
        if a[j] > a[j - 1]:
            _apply_inplace(a, b, j)
            letters.append(j)
            applied += 1
            if applied > budget:
                raise IterationBudgetError(
                    f"relaxation did not finish within {budget} generator "
                    "applications; input coordinates are corrupt"
                )
            j = 1
        else:
            j += 1
    return letters
