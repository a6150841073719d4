"""Dynnikov coordinates for multicurves on the n-punctured disk.

A multicurve is a finite union of pairwise disjoint essential simple closed
curves, up to isotopy, in a disk with n >= 3 punctures along its horizontal
diameter.  Its extended coordinate vector (a; b) lives in Z^{2n} and is built
from halved differences of minimal intersection counts with a fixed family of
arcs: 2n arcs transverse to the diameter between and beside the punctures
(the alpha arcs, indexed -1..2n-2) and n+1 arcs separating the punctures
(the beta arcs, indexed 0..n).  Four of the extended entries are redundant;
dropping them gives the reduced form, a bijection between multicurves and
Z^{2n-4}.

All entries are plain Python integers, so coordinates of any magnitude are
exact.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidCoordinatesError, MalformedInputError, NotDisjointError


def _int_tuple(values: Iterable[object], what: str) -> tuple[int, ...]:
    try:
        return tuple(operator.index(v) for v in values)
    except TypeError as exc:
        raise MalformedInputError(f"{what} entries must be integers") from exc


def ceil_half(i: int) -> int:
    """Ceiling of i/2.  Truncating division would round the wrong way for odd
    negative i (the arc index -1 must map to 0)."""
    return -(-i // 2)


@dataclass(frozen=True)
class DynnikovCoords:
    """Extended coordinate vector (a; b) in Z^{2n} of a multicurve on D_n."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        a = _int_tuple(self.a, "a")
        b = _int_tuple(self.b, "b")
        if n < 3:
            raise MalformedInputError(f"need at least 3 punctures, got n={n}")
        if len(a) != n or len(b) != n:
            raise MalformedInputError(
                f"coordinate lengths must equal n={n}, got len(a)={len(a)}, len(b)={len(b)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def empty(cls, n: int) -> "DynnikovCoords":
        """The empty multicurve: all coordinates zero."""
        return cls(n, (0,) * n, (0,) * n)

    def norm(self) -> int:
        """Sum of absolute values of all entries; the size parameter for
        complexity bounds."""
        return sum(abs(x) for x in self.a) + sum(abs(x) for x in self.b)

    def is_relaxed(self) -> bool:
        """True when every a-entry is zero, i.e. the multicurve is a disjoint
        union of round curves."""
        return all(x == 0 for x in self.a)

    def validate(self) -> list[str]:
        """Report every violated invariant (empty list means valid).

        A vector in Z^{2n} is the coordinate vector of a multicurve exactly
        when a[0] = a[n-1] = 0, the b-entries sum to zero, every prefix sum
        of b is <= 0 (the derived beta counts are nonnegative), and b[0]
        balances the largest interior excursion: because no component can
        enclose all n punctures,

            b[0] = -max_{1<=k<=n-2} ( |a[k]| + max(b[k], 0) + b[1] + ... + b[k-1] ).
        """
        n, a, b = self.n, self.a, self.b
        problems = []
        if a[0] != 0:
            problems.append(f"a[0] = {a[0]} (must be 0)")
        if a[n - 1] != 0:
            problems.append(f"a[{n - 1}] = {a[n - 1]} (must be 0)")
        total = sum(b)
        if total != 0:
            problems.append(f"b entries sum to {total} (must sum to 0)")
        run = 0
        required_b0 = None
        for k in range(1, n - 1):
            term = abs(a[k]) + max(b[k], 0) + run
            if required_b0 is None or term > required_b0:
                required_b0 = term
            run += b[k]
        if required_b0 is not None and b[0] != -required_b0:
            problems.append(
                f"b[0] = {b[0]} but the no-enclosing-component relation forces {-required_b0}"
            )
        prefix = 0
        for i in range(n):
            prefix += b[i]
            if prefix > 0:
                problems.append(
                    f"prefix sum b[0..{i}] = {prefix} > 0 (beta[{i + 1}] would be negative)"
                )
        return problems

    def require_valid(self) -> None:
        """Raise InvalidCoordinatesError with the full report if invalid."""
        problems = self.validate()
        if problems:
            raise InvalidCoordinatesError(
                "invalid Dynnikov coordinates: " + "; ".join(problems)
            )


@dataclass(frozen=True)
class ReducedCoords:
    """Reduced coordinate vector (a_1..a_{n-2}, b_1..b_{n-2}) in Z^{2n-4}.

    Every integer vector of this length is the reduced coordinate vector of
    exactly one multicurve.
    """

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        values = _int_tuple(self.values, "reduced coordinate")
        if n < 3:
            raise MalformedInputError(f"need at least 3 punctures, got n={n}")
        if len(values) != 2 * n - 4:
            raise MalformedInputError(
                f"reduced coordinates for n={n} need {2 * n - 4} entries, got {len(values)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", values)

    @property
    def a_part(self) -> tuple[int, ...]:
        return self.values[: self.n - 2]

    @property
    def b_part(self) -> tuple[int, ...]:
        return self.values[self.n - 2 :]


@dataclass(frozen=True)
class ArcIntersections:
    """Minimal intersection counts of a multicurve with the coordinate arcs.

    alpha holds the 2n counts for arc indices -1..2n-2 (``alpha_at`` takes the
    logical index); beta holds the n+1 counts for arc indices 0..n.
    """

    n: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        alpha = _int_tuple(self.alpha, "alpha")
        beta = _int_tuple(self.beta, "beta")
        if n < 3:
            raise MalformedInputError(f"need at least 3 punctures, got n={n}")
        if len(alpha) != 2 * n or len(beta) != n + 1:
            raise MalformedInputError(
                f"arc counts for n={n} need 2n={2 * n} alpha and n+1={n + 1} beta entries, "
                f"got {len(alpha)} and {len(beta)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    def alpha_at(self, i: int) -> int:
        """Count for the alpha arc with logical index i, -1 <= i <= 2n-2."""
        if not -1 <= i <= 2 * self.n - 2:
            raise MalformedInputError(f"alpha index {i} out of range -1..{2 * self.n - 2}")
        return self.alpha[i + 1]

    def beta_at(self, i: int) -> int:
        """Count for the beta arc with index i, 0 <= i <= n."""
        if not 0 <= i <= self.n:
            raise MalformedInputError(f"beta index {i} out of range 0..{self.n}")
        return self.beta[i]

    def validate(self) -> list[str]:
        """Report every violated arc-count invariant (empty list means valid)."""
        n = self.n
        problems = []
        for i in range(-1, 2 * n - 1):
            if self.alpha_at(i) < 0:
                problems.append(f"alpha[{i}] = {self.alpha_at(i)} is negative")
        for i in range(n + 1):
            if self.beta[i] < 0:
                problems.append(f"beta[{i}] = {self.beta[i]} is negative")
            if self.beta[i] % 2 != 0:
                problems.append(f"beta[{i}] = {self.beta[i]} is odd")
        if self.beta[0] != 0:
            problems.append(f"beta[0] = {self.beta[0]} (must be 0)")
        if self.beta[n] != 0:
            problems.append(f"beta[{n}] = {self.beta[n]} (must be 0)")
        for i in range(n):
            lhs = self.alpha_at(2 * i) + self.alpha_at(2 * i - 1)
            rhs = max(self.beta[i], self.beta[i + 1])
            if lhs != rhs:
                problems.append(
                    f"alpha[{2 * i}] + alpha[{2 * i - 1}] = {lhs} != max(beta[{i}], beta[{i + 1}]) = {rhs}"
                )
            if (self.alpha_at(2 * i) - self.alpha_at(2 * i - 1)) % 2 != 0:
                problems.append(
                    f"alpha[{2 * i}] and alpha[{2 * i - 1}] have different parity"
                )
        return problems


@dataclass(frozen=True)
class ElementaryCurve:
    """The round curve enclosing exactly punctures i through j, meeting the
    diameter twice.  Needs 1 <= i < j <= n with (i, j) != (1, n)."""

    i: int
    j: int

    def __post_init__(self) -> None:
        i = operator.index(self.i)
        j = operator.index(self.j)
        if not 1 <= i < j:
            raise MalformedInputError(f"elementary curve needs 1 <= i < j, got ({i}, {j})")
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)


def check_elementary(i: int, j: int, n: int) -> None:
    """Raise unless (i, j) names an elementary curve on D_n."""
    if not 1 <= i < j <= n:
        raise MalformedInputError(
            f"elementary curve needs 1 <= i < j <= n={n}, got ({i}, {j})"
        )
    if (i, j) == (1, n):
        raise MalformedInputError(
            f"({i}, {j}) would enclose all {n} punctures and is not essential"
        )


def extend(r: ReducedCoords) -> DynnikovCoords:
    """Recover the extended coordinates from the reduced ones.

    Sets a[0] = a[n-1] = 0, derives b[0] from the no-enclosing-component
    relation, and closes the b-entries to sum zero.
    """
    n = r.n
    a_in = r.a_part
    b_in = r.b_part
    run = 0
    biggest = 0
    for k in range(n - 2):
        term = abs(a_in[k]) + max(b_in[k], 0) + run
        if k == 0 or term > biggest:
            biggest = term
        run += b_in[k]
    b0 = -biggest
    b_last = -(b0 + run)
    return DynnikovCoords(n, (0, *a_in, 0), (b0, *b_in, b_last))


def reduce(c: DynnikovCoords) -> ReducedCoords:
    """Drop the four redundant entries a[0], a[n-1], b[0], b[n-1]."""
    c.require_valid()
    n = c.n
    return ReducedCoords(n, c.a[1 : n - 1] + c.b[1 : n - 1])


def arc_intersections(c: DynnikovCoords) -> ArcIntersections:
    """Recover the arc intersection counts from the coordinates.

    beta[i] is -2 times the prefix sum of b; alpha[i] is (+-a) plus half of
    whichever neighbouring beta is larger, the sign alternating with the arc
    index.
    """
    c.require_valid()
    return _arcs_unchecked(c)


def _arcs_unchecked(c: DynnikovCoords) -> ArcIntersections:
    n, a, b = c.n, c.a, c.b
    beta = [0] * (n + 1)
    prefix = 0
    for k in range(n):
        prefix += b[k]
        beta[k + 1] = -2 * prefix
    alpha = []
    for i in range(-1, 2 * n - 1):
        h = ceil_half(i)
        sign = -1 if i % 2 else 1
        half = beta[h] // 2 if b[h] >= 0 else beta[h + 1] // 2
        alpha.append(sign * a[h] + half)
    return ArcIntersections(n, tuple(alpha), tuple(beta))


def from_arcs(x: ArcIntersections) -> DynnikovCoords:
    """Halve the arc-count differences back into coordinates:
    a[i] = (alpha[2i] - alpha[2i-1]) / 2 and b[i] = (beta[i] - beta[i+1]) / 2.
    """
    n = x.n
    a = []
    b = []
    for i in range(n):
        da = x.alpha_at(2 * i) - x.alpha_at(2 * i - 1)
        db = x.beta[i] - x.beta[i + 1]
        if da % 2 != 0 or db % 2 != 0:
            raise MalformedInputError(
                f"arc counts at puncture {i + 1} have odd differences ({da}, {db}); "
                "they cannot come from a multicurve"
            )
        a.append(da // 2)
        b.append(db // 2)
    return DynnikovCoords(n, tuple(a), tuple(b))


def elementary_coords(e: ElementaryCurve, n: int) -> DynnikovCoords:
    """Coordinates of the round curve about punctures e.i through e.j:
    all zero except b[i-1] = -1 and b[j-1] = +1."""
    check_elementary(e.i, e.j, n)
    b = [0] * n
    b[e.i - 1] = -1
    b[e.j - 1] = 1
    return DynnikovCoords(n, (0,) * n, tuple(b))


def disjoint_union(c1: DynnikovCoords, c2: DynnikovCoords) -> DynnikovCoords:
    """Coordinatewise sum, defined only for disjoint multicurves."""
    if c1.n != c2.n:
        raise MalformedInputError(f"puncture counts differ: {c1.n} != {c2.n}")
    from .intersect import intersection_number

    crossings = intersection_number(c1, c2)
    if crossings != 0:
        raise NotDisjointError(
            f"multicurves intersect {crossings} times; disjoint union is undefined"
        )
    return DynnikovCoords(
        c1.n,
        tuple(x + y for x, y in zip(c1.a, c2.a)),
        tuple(x + y for x, y in zip(c1.b, c2.b)),
    )


def coordinate_sum(curves: Sequence[DynnikovCoords], n: int) -> DynnikovCoords:
    """Coordinatewise sum without the disjointness check.  Callers must know
    the curves admit pairwise disjoint representatives."""
    a = [0] * n
    b = [0] * n
    for c in curves:
        if c.n != n:
            raise MalformedInputError(f"puncture counts differ: {c.n} != {n}")
        for k in range(n):
            a[k] += c.a[k]
            b[k] += c.b[k]
    return DynnikovCoords(n, tuple(a), tuple(b))
