"""Reading and writing the plain-text point-set format.

One point per line: two signed decimal integers separated by whitespace.
Lines whose first non-blank character is ``#`` are comments; blank lines are
skipped. Duplicate points are dropped with a warning. Serialization emits
the canonical (lexicographic) order, so parse(serialize(s)) == s.
"""

from __future__ import annotations

import re
import warnings
from typing import List

from .errors import ParseError
from .geometry import Point, PointSet

_INT = re.compile(r"[+-]?\d+$")


def parse_point_set(text: str, source: str = "<string>") -> PointSet:
    """Parse point-set text; raise ParseError with line/column on bad input."""
    points: List[Point] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = raw.split()
        if len(tokens) != 2:
            bad = tokens[2] if len(tokens) > 2 else tokens[0]
            col = raw.index(bad) + 1 if len(tokens) > 2 else len(raw.rstrip()) + 1
            what = "extra token" if len(tokens) > 2 else "expected two integers"
            raise ParseError(f"{what} in {source!r}: {stripped!r}", lineno, col)
        for tok in tokens:
            if not _INT.match(tok):
                raise ParseError(
                    f"not an integer in {source!r}: {tok!r}", lineno, raw.index(tok) + 1
                )
        p = Point(int(tokens[0]), int(tokens[1]))
        if p in seen:
            warnings.warn(
                f"{source}: duplicate point ({p.x}, {p.y}) on line {lineno} dropped"
            )
            continue
        seen.add(p)
        points.append(p)
    if not points:
        raise ParseError(f"no points in {source!r}", max(1, text.count(chr(10)) + 1), 1)
    return PointSet(points)


def load_point_set(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_point_set(fh.read(), source=path)


def serialize_point_set(s: PointSet) -> str:
    """Canonical text form: one 'x y' line per point, lexicographic order."""
    return "".join(f"{p.x} {p.y}\n" for p in s)


def save_point_set(s: PointSet, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_point_set(s))
