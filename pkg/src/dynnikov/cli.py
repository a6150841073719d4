"""Command-line interface.

Curve documents are plain text, one ``key = values`` pair per line, with all
integers written in decimal (arbitrary precision round-trips exactly):

    n = 4
    reduced = 0 0 1 1

or, in extended form,

    n = 4
    a = 0 0 0 0
    b = -2 1 1 0

Blank lines and ``#`` comments are ignored, as is a ``word`` line (so relax
output re-parses as a document).  The ``n`` line may be omitted when it is
derivable from the value lengths or supplied with --n.

Exit codes: 0 success, 2 malformed input, 3 semantically invalid coordinates.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import bench as bench_mod
from .braid import BraidWord, apply_word
from .coords import (
    DynnikovCoords,
    ReducedCoords,
    arc_intersections,
    extend,
    reduce,
)
from .errors import InvalidCoordinatesError, MalformedInputError
from .intersect import intersection_number
from .relax import parse_relaxed, relax

_EXIT_MALFORMED = 2
_EXIT_INVALID = 3


@dataclass
class CurveDocument:
    """Parsed curve document: puncture count plus exactly one of a reduced
    vector or an extended (a, b) pair."""

    n: int
    reduced: tuple[int, ...] | None = None
    extended: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def to_coords(self) -> DynnikovCoords:
        """Extended coordinates of the document; extended input is validated."""
        if self.reduced is not None:
            return extend(ReducedCoords(self.n, self.reduced))
        assert self.extended is not None
        coords = DynnikovCoords(self.n, *self.extended)
        coords.require_valid()
        return coords


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise MalformedInputError(f"{what} must be whitespace-separated integers: {exc}")


def parse_document(text: str, n_flag: int | None = None) -> CurveDocument:
    """Parse document text into a CurveDocument, deriving n when possible."""
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise MalformedInputError(f"line {lineno}: expected 'key = values', got {raw!r}")
        if key == "word":
            continue
        if key not in ("n", "reduced", "a", "b"):
            raise MalformedInputError(f"line {lineno}: unknown key {key!r}")
        if key in fields:
            raise MalformedInputError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()

    has_reduced = "reduced" in fields
    has_extended = "a" in fields or "b" in fields
    if has_reduced and has_extended:
        raise MalformedInputError("document mixes reduced and extended coordinates")
    if has_extended and ("a" not in fields or "b" not in fields):
        raise MalformedInputError("extended coordinates need both an 'a' and a 'b' line")
    if not has_reduced and not has_extended:
        raise MalformedInputError("document has no coordinates (need 'reduced' or 'a'/'b')")

    n = None
    if "n" in fields:
        values = _parse_ints(fields["n"], "n")
        if len(values) != 1:
            raise MalformedInputError("the 'n' line must hold a single integer")
        n = values[0]
    if n is None:
        n = n_flag
    elif n_flag is not None and n_flag != n:
        raise MalformedInputError(f"--n {n_flag} contradicts document n = {n}")

    if has_reduced:
        reduced = _parse_ints(fields["reduced"], "reduced")
        if n is None:
            if len(reduced) % 2 != 0:
                raise MalformedInputError(
                    f"reduced coordinates need an even number of entries, got {len(reduced)}"
                )
            n = len(reduced) // 2 + 2
        return CurveDocument(n=n, reduced=tuple(ReducedCoords(n, reduced).values))
    a = _parse_ints(fields["a"], "a")
    b = _parse_ints(fields["b"], "b")
    if n is None:
        n = len(a)
    coords = DynnikovCoords(n, a, b)
    return CurveDocument(n=n, extended=(coords.a, coords.b))


def _read_document(path: str, n_flag: int | None) -> CurveDocument:
    if path == "-":
        return parse_document(sys.stdin.read(), n_flag)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_document(fh.read(), n_flag)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}")


def _ints(values) -> str:
    return " ".join(str(v) for v in values)


def _emit_extended(c: DynnikovCoords, fmt: str, out) -> None:
    if fmt == "machine":
        print(c.n, file=out)
        for v in c.a + c.b:
            print(v, file=out)
    else:
        print(f"n = {c.n}", file=out)
        print(f"a = {_ints(c.a)}", file=out)
        print(f"b = {_ints(c.b)}", file=out)


def cmd_convert(args) -> int:
    doc = _read_document(args.document, args.n)
    coords = doc.to_coords()
    out = sys.stdout
    if args.target == "reduced":
        r = reduce(coords)
        if args.format == "machine":
            print(r.n, file=out)
            for v in r.values:
                print(v, file=out)
        else:
            print(f"n = {r.n}", file=out)
            print(f"reduced = {_ints(r.values)}", file=out)
    elif args.target == "arcs":
        arcs = arc_intersections(coords)
        if args.format == "machine":
            print(arcs.n, file=out)
            for v in arcs.alpha + arcs.beta:
                print(v, file=out)
        else:
            print(f"n = {arcs.n}", file=out)
            print(f"# alpha indexed -1..{2 * arcs.n - 2}, beta indexed 0..{arcs.n}", file=out)
            print(f"alpha = {_ints(arcs.alpha)}", file=out)
            print(f"beta = {_ints(arcs.beta)}", file=out)
    else:
        _emit_extended(coords, args.format, out)
    return 0


def cmd_act(args) -> int:
    doc = _read_document(args.document, args.n)
    coords = doc.to_coords()
    letters = _parse_ints(args.word, "braid word")
    word = BraidWord(coords.n, letters)
    _emit_extended(apply_word(coords, word), args.format, sys.stdout)
    return 0


def cmd_relax(args) -> int:
    doc = _read_document(args.document, args.n)
    word, relaxed = relax(doc.to_coords())
    out = sys.stdout
    if args.format == "machine":
        print(len(word), file=out)
        for letter in word:
            print(letter, file=out)
        print(relaxed.n, file=out)
        for v in relaxed.a + relaxed.b:
            print(v, file=out)
    else:
        print(f"word = {_ints(word.letters)}", file=out)
        _emit_extended(relaxed, "text", out)
    return 0


def cmd_parse(args) -> int:
    doc = _read_document(args.document, args.n)
    parsed = parse_relaxed(doc.to_coords())
    out = sys.stdout
    if args.format == "machine":
        print(len(parsed), file=out)
        for e in parsed:
            print(e.i, file=out)
            print(e.j, file=out)
    else:
        for e in parsed:
            print(f"({e.i},{e.j})", file=out)
    return 0


def cmd_intersect(args) -> int:
    doc1 = _read_document(args.document1, args.n)
    doc2 = _read_document(args.document2, args.n)
    print(intersection_number(doc1.to_coords(), doc2.to_coords()))
    return 0


def _parse_grid(text: str) -> list[tuple[int, int]]:
    grid = []
    for cell in text.split(","):
        cell = cell.strip()
        if not cell:
            continue
        n_str, sep, m_str = cell.partition(":")
        if not sep:
            raise MalformedInputError(f"grid cell {cell!r} is not of the form n:m")
        try:
            grid.append((int(n_str), int(m_str)))
        except ValueError:
            raise MalformedInputError(f"grid cell {cell!r} is not of the form n:m")
    return grid


def cmd_bench(args) -> int:
    grid = _parse_grid(args.grid)
    records = bench_mod.run_scaling(
        grid, trials=args.trials, seed=args.seed, count_ops=args.ops
    )
    bench_mod.write_csv(records, sys.stdout)
    fits = bench_mod.exponent_vs_m(records)
    for n, slope in fits.items():
        print(f"time vs m exponent at n={n}: {slope:.3f}", file=sys.stderr)
    if len({r.n for r in records}) >= 2:
        slope = bench_mod.exponent_vs_n(records)
        print(f"time vs n exponent: {slope:.3f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynnikov",
        description="Multicurves on the punctured disk: coordinate conversion, "
        "braid action, relaxation, and geometric intersection numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, documents=1):
        if documents == 1:
            p.add_argument("document", help="curve document path, or - for stdin")
        else:
            p.add_argument("document1", help="first curve document path, or - for stdin")
            p.add_argument("document2", help="second curve document path, or - for stdin")
        p.add_argument("--n", type=int, default=None, help="puncture count (checked against the document)")
        p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("convert", help="rewrite a curve in another representation")
    add_common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--reduced", dest="target", action="store_const", const="reduced")
    group.add_argument("--extended", dest="target", action="store_const", const="extended")
    group.add_argument("--arcs", dest="target", action="store_const", const="arcs")
    p.set_defaults(target="extended", func=cmd_convert)

    p = sub.add_parser("act", help="apply a positive braid word to a curve")
    add_common(p)
    p.add_argument("--word", required=True, help="space-separated positive generator indices")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("relax", help="relax a curve by a positive braid")
    add_common(p)
    p.set_defaults(func=cmd_relax)

    p = sub.add_parser("parse", help="split a relaxed curve into round components")
    add_common(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("intersect", help="geometric intersection number of two curves")
    add_common(p, documents=2)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("bench", help="time the intersection pipeline over a grid")
    p.add_argument("--grid", required=True, help="comma-separated n:m cells, e.g. 5:100,10:1000")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ops", action="store_true", help="count relaxation arithmetic operations")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_MALFORMED
    except InvalidCoordinatesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
