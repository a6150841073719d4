"""Random instance generation and scaling measurements.

Instances are built the only way valid coordinates can be: start from a
random relaxed multicurve (nested or disjoint round curves drawn by a
balanced-bracket process) and push it through a random positive braid word
until the coordinate norm reaches a target.  ``run_scaling`` times the full
intersection pipeline over a grid of (puncture count, target norm) cells and
fits log-log exponents, the quantities the complexity bounds constrain.
"""

from __future__ import annotations

import csv
import math
import random
import statistics
import time
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .braid import BraidWord, _apply_inplace
from .coords import DynnikovCoords, ElementaryCurve, coordinate_sum, elementary_coords
from .intersect import intersection_number
from .relax import _relax_lists, relax, relax_budget

# Letters tried per unit of target norm before the generator gives up growing.
_WORD_CAP_PER_NORM = 200


@dataclass(frozen=True)
class BenchRecord:
    """One timing row: puncture count, combined norm of the input pair,
    relaxing-word length, optional counted arithmetic operations, and the
    wall time of one intersection-number call."""

    n: int
    m: int
    word_len: int
    ops: int | None
    wall_time: float


def _linked(p: tuple[int, int], q: tuple[int, int]) -> bool:
    (i, j), (k, l) = p, q
    return (i < k <= j < l) or (k < i <= l < j)


def _random_relaxed(n: int, rng: random.Random, min_components: int = 0) -> DynnikovCoords:
    """A random relaxed multicurve: up to n round curves, pairwise nested or
    disjoint, drawn by rejection (a nested copy is always available, so the
    loop cannot stall)."""
    want = rng.randint(min_components, n)
    pairs: list[tuple[int, int]] = []
    attempts = 0
    while len(pairs) < want and attempts < 60 * (want + 1):
        attempts += 1
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        if (i, j) == (1, n):
            continue
        if any(_linked((i, j), q) for q in pairs):
            continue
        pairs.append((i, j))
    curves = [elementary_coords(ElementaryCurve(i, j), n) for i, j in pairs]
    return coordinate_sum(curves, n)


def random_multicurve(n: int, target_norm: int, seed: int) -> DynnikovCoords:
    """A pseudo-random valid multicurve with norm at least target_norm
    (unless the word-length cap stops growth first).  Deterministic in seed.
    """
    if n < 3:
        raise ValueError(f"need at least 3 punctures, got n={n}")
    if target_norm < 0:
        raise ValueError(f"target norm must be nonnegative, got {target_norm}")
    if target_norm == 0:
        return DynnikovCoords.empty(n)
    rng = random.Random(seed)
    start = _random_relaxed(n, rng, min_components=1)
    a = list(start.a)
    b = list(start.b)
    cap = _WORD_CAP_PER_NORM * (target_norm + n)
    applied = 0
    norm = start.norm()
    while norm < target_norm and applied < cap:
        i = rng.randint(1, n - 1)
        _apply_inplace(a, b, i)
        applied += 1
        norm = sum(abs(x) for x in a) + sum(abs(x) for x in b)
    return DynnikovCoords(n, tuple(a), tuple(b))


def random_positive_word(n: int, length: int, seed: int) -> BraidWord:
    """A uniform random positive word of the given length."""
    rng = random.Random(seed)
    return BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(length)))


def run_scaling(
    grid: Sequence[tuple[int, int]],
    trials: int = 3,
    seed: int = 0,
    count_ops: bool = False,
) -> list[BenchRecord]:
    """Time the intersection pipeline over a grid of (n, target_norm) cells.

    Each trial draws an independent pair of multicurves with per-curve target
    norm target_norm // 2 and times one intersection_number call.  The
    relaxing-word length (and, when requested, the counted relaxation
    operations) are measured outside the timed region.
    """
    records = []
    counter = 0
    for n, target_norm in grid:
        per_curve = max(target_norm // 2, 1)
        for _ in range(trials):
            c1 = random_multicurve(n, per_curve, seed=seed * 1_000_003 + 2 * counter)
            c2 = random_multicurve(n, per_curve, seed=seed * 1_000_003 + 2 * counter + 1)
            counter += 1
            word, _relaxed = relax(c1)
            ops = count_relax_operations(c1) if count_ops else None
            start = time.perf_counter()
            intersection_number(c1, c2)
            elapsed = time.perf_counter() - start
            records.append(
                BenchRecord(
                    n=n,
                    m=c1.norm() + c2.norm(),
                    word_len=len(word),
                    ops=ops,
                    wall_time=elapsed,
                )
            )
    return records


def fit_exponent(points: Iterable[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x); the effective power-law
    exponent of the sample.  Needs two points with distinct positive x and
    positive y."""
    xs = []
    ys = []
    for x, y in points:
        if x > 0 and y > 0:
            xs.append(math.log(x))
            ys.append(math.log(y))
    if len(xs) < 2 or max(xs) == min(xs):
        raise ValueError("need at least two points with distinct positive x")
    return statistics.linear_regression(xs, ys).slope


def exponent_vs_m(records: Sequence[BenchRecord]) -> dict[int, float]:
    """For each puncture count with at least two distinct norms, the fitted
    exponent of wall time against norm."""
    by_n: dict[int, list[tuple[float, float]]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append((r.m, r.wall_time))
    fits = {}
    for n, points in sorted(by_n.items()):
        if len({round(math.log(m), 6) for m, _ in points if m > 0}) >= 2:
            fits[n] = fit_exponent(points)
    return fits


def exponent_vs_n(records: Sequence[BenchRecord]) -> float:
    """Fitted exponent of wall time against puncture count.  Meaningful when
    the records share (roughly) one norm scale."""
    return fit_exponent((r.n, r.wall_time) for r in records)


def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> None:
    """Write records as CSV with header n,m,word_len,ops,wall_time; a missing
    operation count becomes an empty field."""
    writer = csv.writer(stream)
    writer.writerow(["n", "m", "word_len", "ops", "wall_time"])
    for r in records:
        writer.writerow(
            [r.n, r.m, r.word_len, "" if r.ops is None else r.ops, repr(r.wall_time)]
        )


class OpCounter:
    """Shared mutable tally for instrumented integers."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


class CountedInt:
    """Integer wrapper that tallies additions, subtractions, negations and
    comparisons (min and max resolve to comparisons) on a shared counter.
    Supports exactly the operations the relaxation loop performs."""

    __slots__ = ("value", "counter")

    def __init__(self, value: int, counter: OpCounter) -> None:
        self.value = value
        self.counter = counter

    @staticmethod
    def _raw(other) -> int:
        return other.value if isinstance(other, CountedInt) else other

    def __add__(self, other):
        self.counter.count += 1
        return CountedInt(self.value + self._raw(other), self.counter)

    __radd__ = __add__

    def __sub__(self, other):
        self.counter.count += 1
        return CountedInt(self.value - self._raw(other), self.counter)

    def __rsub__(self, other):
        self.counter.count += 1
        return CountedInt(self._raw(other) - self.value, self.counter)

    def __neg__(self):
        self.counter.count += 1
        return CountedInt(-self.value, self.counter)

    def __lt__(self, other):
        self.counter.count += 1
        return self.value < self._raw(other)

    def __le__(self, other):
        self.counter.count += 1
        return self.value <= self._raw(other)

    def __gt__(self, other):
        self.counter.count += 1
        return self.value > self._raw(other)

    def __ge__(self, other):
        self.counter.count += 1
        return self.value >= self._raw(other)

    def __eq__(self, other):
        return self.value == self._raw(other)

    def __hash__(self):
        return hash(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"CountedInt({self.value})"


def count_relax_operations(c: DynnikovCoords) -> int:
    """Arithmetic operations (additions, subtractions, comparisons, min/max)
    performed by one relaxation of c."""
    c.require_valid()
    counter = OpCounter()
    a = [CountedInt(x, counter) for x in c.a]
    b = [CountedInt(x, counter) for x in c.b]
    _relax_lists(a, b, c.n, relax_budget(c.n, c.norm()))
    return counter.count
