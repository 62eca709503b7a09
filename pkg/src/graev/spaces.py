"""Pointed metric spaces: finite distance tables and the rational unit interval.

Two backings are supported.  A finite space stores a full symmetric table of
nonnegative rationals over named points (one of which is the base point); the
interval space is the rational segment [0, 1] with base point 0 and
d(x, y) = |x - y|.  ``tilde_dist`` extends the point metric to signed letters.

Spaces are immutable after construction and safe to share between concurrent
norm computations.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Mapping, Optional, Union

from .rationals import format_rational, parse_rational

if TYPE_CHECKING:
    from .words import Letter, Point


@dataclass(frozen=True)
class MetricViolation:
    axiom: str
    points: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.axiom} violated at ({', '.join(self.points)})"


@dataclass(frozen=True)
class IntervalSpace:
    """The rational segment [0, 1], base point 0, d(x, y) = |x - y|."""

    kind = "interval"
    base = Fraction(0)

    def contains(self, p: "Point") -> bool:
        return isinstance(p, Fraction) and 0 <= p <= 1

    def dist(self, a: Fraction, b: Fraction) -> Fraction:
        return abs(a - b)


@dataclass(frozen=True, eq=True)
class FiniteSpace:
    base: str
    points: tuple[str, ...]
    table: Mapping[tuple[str, str], Fraction]

    kind = "finite"

    def contains(self, p: "Point") -> bool:
        return p in self.points

    def dist(self, a: str, b: str) -> Fraction:
        try:
            return self.table[(a, b)]
        except KeyError:
            raise ValueError(f"no distance for pair ({a}, {b})") from None

    @staticmethod
    def from_table(
        base: str,
        points: tuple[str, ...],
        entries: Mapping[tuple[str, str], Fraction],
        validate: bool = True,
    ) -> "FiniteSpace":
        """Build from off-diagonal entries; symmetric closure is applied.

        With ``validate`` (the default) the metric axioms are checked and a
        violation raises ValueError.
        """
        if base not in points:
            raise ValueError(f"base point {base!r} is not among the points")
        if len(set(points)) != len(points):
            raise ValueError("duplicate point names")
        table: dict[tuple[str, str], Fraction] = {}
        for p in points:
            table[(p, p)] = Fraction(0)
        for (a, b), value in entries.items():
            if a not in points or b not in points:
                raise ValueError(f"distance entry ({a}, {b}) names an unknown point")
            for key in ((a, b), (b, a)):
                if key in table and table[key] != value:
                    raise ValueError(f"conflicting distances for pair {key}")
                table[key] = Fraction(value)
        for a, b in itertools.combinations(points, 2):
            if (a, b) not in table:
                raise ValueError(f"missing distance for pair ({a}, {b})")
        space = FiniteSpace(base=base, points=tuple(points), table=table)
        if validate:
            violation = validate_metric(space)
            if violation is not None:
                raise ValueError(f"not a metric: {violation}")
        return space


Space = Union[IntervalSpace, FiniteSpace]

INTERVAL = IntervalSpace()


def validate_metric(space: Space) -> Optional[MetricViolation]:
    """None when all metric axioms hold, else a report naming the violation.

    The interval space satisfies the axioms by construction.  Finite tables
    are checked exhaustively: nonnegativity, d(a,b) = 0 iff a = b, symmetry,
    and the triangle inequality over all triples.
    """
    if space.kind == "interval":
        return None
    assert isinstance(space, FiniteSpace)
    pts = space.points
    for a in pts:
        if space.table[(a, a)] != 0:
            return MetricViolation("identity", (a, a))
    for a, b in itertools.combinations(pts, 2):
        d = space.table[(a, b)]
        if d < 0:
            return MetricViolation("nonnegativity", (a, b))
        if d == 0:
            return MetricViolation("identity", (a, b))
        if d != space.table[(b, a)]:
            return MetricViolation("symmetry", (a, b))
    for a, via, b in itertools.permutations(pts, 3):
        if space.table[(a, b)] > space.table[(a, via)] + space.table[(via, b)]:
            return MetricViolation("triangle", (a, via, b))
    return None


def tilde_dist(a: "Letter", b: "Letter", space: Space) -> Fraction:
    """The extension of the point metric to signed letters.

    Same signs look up the point distance directly; opposite signs route
    through the base point: d(x, e) + d(e, y).  The base-point letter is
    sign-insensitive.
    """
    pa, pb = a.point, b.point
    if not space.contains(pa):
        raise ValueError(f"letter point {pa!r} is not in the space")
    if not space.contains(pb):
        raise ValueError(f"letter point {pb!r} is not in the space")
    sa = 1 if pa == space.base else a.sign
    sb = 1 if pb == space.base else b.sign
    if sa == sb:
        return space.dist(pa, pb)
    return space.dist(pa, space.base) + space.dist(space.base, pb)


@lru_cache(maxsize=None)
def star_space(m: int) -> FiniteSpace:
    """Generators e1..em at distance 1 from the base and 2 from each other."""
    if m < 1:
        raise ValueError("star space needs at least one generator")
    points = ("e",) + tuple(f"e{i}" for i in range(1, m + 1))
    entries: dict[tuple[str, str], Fraction] = {}
    for i in range(1, m + 1):
        entries[("e", f"e{i}")] = Fraction(1)
        for j in range(i + 1, m + 1):
            entries[(f"e{i}", f"e{j}")] = Fraction(2)
    return FiniteSpace.from_table("e", points, entries)


@lru_cache(maxsize=None)
def chain_space(m: int) -> FiniteSpace:
    """Generators f1..fm on the integer line: d(fi, fj) = |i-j|, d(fi, e) = i."""
    if m < 1:
        raise ValueError("chain space needs at least one generator")
    points = ("e",) + tuple(f"f{i}" for i in range(1, m + 1))
    entries: dict[tuple[str, str], Fraction] = {}
    for i in range(1, m + 1):
        entries[("e", f"f{i}")] = Fraction(i)
        for j in range(i + 1, m + 1):
            entries[(f"f{i}", f"f{j}")] = Fraction(j - i)
    return FiniteSpace.from_table("e", points, entries)


def grid_points(m: int) -> list[Fraction]:
    """The points 0, 1/m, ..., m/m of the interval."""
    return [Fraction(j, m) for j in range(m + 1)]


def space_to_json(space: Space) -> dict:
    if space.kind == "interval":
        return {"kind": "interval"}
    assert isinstance(space, FiniteSpace)
    dist = {
        f"{a},{b}": format_rational(space.table[(a, b)])
        for a, b in itertools.combinations(space.points, 2)
    }
    return {"kind": "finite", "base": space.base, "points": list(space.points), "dist": dist}


def space_from_json(data: dict) -> Space:
    """Decode a space; the symmetric closure is applied and the metric
    axioms are validated, so loading an invalid table fails."""
    kind = data.get("kind")
    if kind == "interval":
        return INTERVAL
    if kind != "finite":
        raise ValueError(f"unknown space kind {kind!r}")
    try:
        base = data["base"]
        points = tuple(data["points"])
        raw = data["dist"]
    except KeyError as missing:
        raise ValueError(f"space file is missing field {missing}") from None
    for p in points:
        if "," in p:
            raise ValueError(f"point name {p!r} may not contain a comma")
    entries = {}
    for key, value in raw.items():
        parts = key.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad distance key {key!r}, expected 'a,b'")
        entries[(parts[0], parts[1])] = parse_rational(value)
    return FiniteSpace.from_table(base, points, entries, validate=True)


def load_space(path: str) -> Space:
    with open(path, "r", encoding="utf-8") as handle:
        return space_from_json(json.load(handle))


_BUILTIN = re.compile(r"^lemma32-m([1-9][0-9]*)$")


def builtin_space(name: str) -> Optional[Space]:
    """The built-in named spaces: ``interval`` and ``lemma32-m<k>``."""
    if name == "interval":
        return INTERVAL
    match = _BUILTIN.match(name)
    if match:
        return star_space(int(match.group(1)))
    return None


def resolve_space(name_or_path: str) -> Space:
    """A built-in space name, or else a path to a space JSON file."""
    space = builtin_space(name_or_path)
    if space is not None:
        return space
    return load_space(name_or_path)
