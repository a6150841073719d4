"""Positive braid words and their action on Dynnikov coordinates.

The braid group on n strands acts on multicurves in D_n through its Artin
generators; the generator sigma_i swaps punctures i and i+1 counter-clockwise.
Only the positive generators are implemented: relaxation and the intersection
algorithm never need inverses.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .coords import DynnikovCoords
from .errors import MalformedInputError


@dataclass(frozen=True)
class BraidWord:
    """A finite product of positive Artin generators on n strands, stored as
    the sequence of generator indices (each in 1..n-1)."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        if n < 3:
            raise MalformedInputError(f"need at least 3 strands, got n={n}")
        letters = tuple(operator.index(x) for x in self.letters)
        for x in letters:
            if x < 1:
                raise MalformedInputError(
                    f"letter {x} is not a positive generator index; only positive "
                    "braid words are supported"
                )
            if x > n - 1:
                raise MalformedInputError(
                    f"letter {x} out of range 1..{n - 1} for {n} strands"
                )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def _twist(a_prev, a_cur, b_prev, b_cur):
    """One counter-clockwise half-twist of two adjacent punctures: the
    max-plus update of the four coordinate entries around them.

    With p = max(b_prev, 0) and q = max(b_cur, 0):

        a_prev' = max(a_prev + p, a_cur + b_prev)
        a_cur'  = b_cur - max(-a_prev, q - a_cur)
        b_prev' = a_cur + b_prev + b_cur - max(a_prev + p + q, a_cur + b_prev)
        b_cur'  = max(a_prev + p + q, a_cur + b_prev) - a_cur
    """
    p = max(b_prev, 0)
    q = max(b_cur, 0)
    big = max(a_prev + p + q, a_cur + b_prev)
    return (
        max(a_prev + p, a_cur + b_prev),
        b_cur - max(-a_prev, q - a_cur),
        a_cur + b_prev + b_cur - big,
        big - a_cur,
    )


def _apply_inplace(a: list, b: list, i: int) -> None:
    a[i - 1], a[i], b[i - 1], b[i] = _twist(a[i - 1], a[i], b[i - 1], b[i])


def apply_generator(c: DynnikovCoords, i: int) -> DynnikovCoords:
    """Coordinates of the image of the multicurve under sigma_i.

    Only the entries a[i-1], a[i], b[i-1], b[i] change.
    """
    if not 1 <= i <= c.n - 1:
        raise MalformedInputError(f"generator index {i} out of range 1..{c.n - 1}")
    na_prev, na_cur, nb_prev, nb_cur = _twist(c.a[i - 1], c.a[i], c.b[i - 1], c.b[i])
    return DynnikovCoords(
        c.n,
        c.a[: i - 1] + (na_prev, na_cur) + c.a[i + 1 :],
        c.b[: i - 1] + (nb_prev, nb_cur) + c.b[i + 1 :],
    )


def apply_word(c: DynnikovCoords, w: BraidWord) -> DynnikovCoords:
    """Apply the letters of w left to right; the empty word is the identity."""
    if w.n != c.n:
        raise MalformedInputError(
            f"strand count {w.n} does not match puncture count {c.n}"
        )
    if not w.letters:
        return c
    a = list(c.a)
    b = list(c.b)
    for i in w.letters:
        _apply_inplace(a, b, i)
    return DynnikovCoords(c.n, tuple(a), tuple(b))
