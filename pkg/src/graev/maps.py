"""Point maps, their extension to group endomorphisms, and basis changes.

A point map sends points of a domain space to points of a codomain space
with the base point going to the base point; it extends letterwise to a
group homomorphism on words.  Contractions (maps that do not increase any
distance) never increase the word norm, and exact-scaling maps multiply it
by their factor; both facts are exercised by the suite rather than assumed.

Also here: piecewise-linear extension of a partial contraction given on a
finite subset of [0, 1], the grid-to-chain rescaling map, and the agreement
check for norms extended from two different bases of the same free group.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .norm import graev_metric, graev_norm
from .rationals import format_rational, parse_rational
from .spaces import INTERVAL, FiniteSpace, Space, chain_space, star_space
from .words import Letter, Point, Word, free_reduce, invert_word, parse_word

TABLE = "table"
AFFINE = "affine"
PIECEWISE = "piecewise"


@dataclass(frozen=True)
class PointMap:
    """A base-point-preserving map between pointed metric spaces.

    Three backings: a finite ``table`` of point images, an ``affine`` rule
    t -> scale*t on the interval, or a ``piecewise`` linear rule given by
    breakpoints covering [0, 1].
    """

    domain: Space
    codomain: Space
    kind: str
    table: Optional[Mapping[Point, Point]] = None
    scale: Optional[Fraction] = None
    breakpoints: Optional[tuple[tuple[Fraction, Fraction], ...]] = None

    @staticmethod
    def from_table(domain: Space, codomain: Space, table: Mapping[Point, Point]) -> "PointMap":
        if domain.base not in table:
            raise ValueError("table does not define the image of the base point")
        if table[domain.base] != codomain.base:
            raise ValueError("map must send base point to base point")
        for p, q in table.items():
            if not domain.contains(p):
                raise ValueError(f"table key {p!r} is not in the domain")
            if not codomain.contains(q):
                raise ValueError(f"table value {q!r} is not in the codomain")
        return PointMap(domain, codomain, TABLE, table=dict(table))

    @staticmethod
    def scaling(scale: Fraction) -> "PointMap":
        """t -> scale*t on [0, 1]; a contraction exactly when scale <= 1."""
        if not 0 <= scale <= 1:
            raise ValueError("affine self-map of [0, 1] needs 0 <= scale <= 1")
        return PointMap(INTERVAL, INTERVAL, AFFINE, scale=Fraction(scale))

    @staticmethod
    def piecewise(breakpoints: Sequence[tuple[Fraction, Fraction]]) -> "PointMap":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in breakpoints)
        if not pts or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ValueError("breakpoints must start at x = 0 and end at x = 1")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise ValueError("breakpoint positions must increase strictly")
        for _, y in pts:
            if not 0 <= y <= 1:
                raise ValueError("breakpoint values must lie in [0, 1]")
        if pts[0][1] != 0:
            raise ValueError("map must send base point to base point")
        return PointMap(INTERVAL, INTERVAL, PIECEWISE, breakpoints=pts)

    def apply(self, p: Point) -> Point:
        if self.kind == TABLE:
            assert self.table is not None
            try:
                return self.table[p]
            except KeyError:
                raise ValueError(f"point {p} is outside the map domain") from None
        if not isinstance(p, Fraction) or not 0 <= p <= 1:
            raise ValueError(f"point {p!r} is outside [0, 1]")
        if self.kind == AFFINE:
            assert self.scale is not None
            return self.scale * p
        assert self.breakpoints is not None
        xs = [x for x, _ in self.breakpoints]
        idx = bisect_right(xs, p) - 1
        if idx == len(xs) - 1:
            return self.breakpoints[-1][1]
        (x0, y0), (x1, y1) = self.breakpoints[idx], self.breakpoints[idx + 1]
        return y0 + (y1 - y0) * (p - x0) / (x1 - x0)


def extend_endomorphism(h: PointMap, w: Word) -> Word:
    """Apply ``h`` letterwise (inverse letters go to inverse images), reduce."""
    out = []
    for letter in w:
        out.append(Letter(h.apply(letter.point), letter.sign))
    return free_reduce(Word(tuple(out)), h.codomain.base)


def check_contraction(h: PointMap) -> bool:
    """True iff the map provably never increases a distance.

    Finite tables are checked exhaustively over key pairs; affine rules by
    their slope; piecewise rules by every segment slope (sufficient and
    exact for continuous piecewise-linear maps).
    """
    if h.kind == TABLE:
        assert h.table is not None
        keys = sorted(h.table, key=str)
        for p, q in itertools.combinations(keys, 2):
            if h.codomain.dist(h.table[p], h.table[q]) > h.domain.dist(p, q):
                return False
        return True
    if h.kind == AFFINE:
        assert h.scale is not None
        return abs(h.scale) <= 1
    assert h.breakpoints is not None
    for (x0, y0), (x1, y1) in zip(h.breakpoints, h.breakpoints[1:]):
        if abs(y1 - y0) > x1 - x0:
            return False
    return True


@dataclass(frozen=True)
class PartialContraction:
    """1-Lipschitz values on a finite subset of [0, 1] containing 0.

    ``points`` must be strictly increasing, start at 0, and carry values in
    [0, 1] with value 0 at 0 and |v(b) - v(a)| <= b - a for neighbours
    (which already gives the inequality for every pair).
    """

    points: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.values):
            raise ValueError("points and values differ in length")
        if not self.points or self.points[0] != 0:
            raise ValueError("the anchor set must contain 0 as its first point")
        if self.values[0] != 0:
            raise ValueError("the value at 0 must be 0")
        for (a, va), (b, vb) in zip(
            zip(self.points, self.values), zip(self.points[1:], self.values[1:])
        ):
            if b <= a:
                raise ValueError("anchor points must increase strictly")
            if abs(vb - va) > b - a:
                raise ValueError(
                    f"not a partial contraction: |h({b}) - h({a})| = {abs(vb - va)} > {b - a}"
                )
        for t, v in zip(self.points, self.values):
            if not 0 <= t <= 1 or not 0 <= v <= 1:
                raise ValueError("anchors and values must lie in [0, 1]")

    @staticmethod
    def from_pairs(pairs: Mapping[Fraction, Fraction]) -> "PartialContraction":
        pts = tuple(sorted(pairs))
        return PartialContraction(pts, tuple(pairs[t] for t in pts))


def extend_partial_contraction(p: PartialContraction) -> PointMap:
    """Extend to a piecewise-linear contraction of all of [0, 1].

    Between consecutive anchors the extension interpolates affinely; to the
    right of the last anchor it stays constant.  It agrees with the given
    values on the anchor set exactly.
    """
    breakpoints = list(zip(p.points, p.values))
    if p.points[-1] != 1:
        breakpoints.append((Fraction(1), p.values[-1]))
    return PointMap.piecewise(breakpoints)


def scaling_norm_law(gamma: Fraction, w: Word, space: Space = INTERVAL) -> tuple[Fraction, Fraction]:
    """(norm of the image under t -> gamma*t, gamma * norm of w).

    The two components are equal exact rationals; the suite asserts that.
    """
    if not 0 < gamma <= 1:
        raise ValueError("scaling factor must satisfy 0 < gamma <= 1")
    image = extend_endomorphism(PointMap.scaling(gamma), w)
    return graev_norm(image, INTERVAL), gamma * graev_norm(w, space)


def grid_map(m: int) -> PointMap:
    """Send the grid point k/m of [0, 1] to the chain generator fk (0 to e).

    Multiplies every distance by exactly m.
    """
    target = chain_space(m)
    table: dict[Point, Point] = {Fraction(0): "e"}
    for k in range(1, m + 1):
        table[Fraction(k, m)] = f"f{k}"
    return PointMap.from_table(INTERVAL, target, table)


def rescale_grid_word(m: int, w: Word) -> Word:
    """Apply the grid-to-chain map letterwise; errors off the 1/m grid."""
    for letter in w:
        p = letter.point
        if not isinstance(p, Fraction) or not 0 <= p <= 1 or (p * m).denominator != 1:
            raise ValueError(f"point {p} is not on the 1/{m} grid")
    return extend_endomorphism(grid_map(m), w)


@dataclass(frozen=True)
class BasisTranslation:
    """Mutually inverse generator substitutions between two free bases."""

    space_a: Space
    space_b: Space
    a_to_b: Mapping[Point, Word]
    b_to_a: Mapping[Point, Word]


def translate_word(w: Word, mapping: Mapping[Point, Word], source_base: Point, target_base: Point) -> Word:
    out: list[Letter] = []
    for letter in w:
        if letter.point == source_base:
            continue
        try:
            image = mapping[letter.point]
        except KeyError:
            raise ValueError(f"no translation for generator {letter.point!r}") from None
        if letter.sign < 0:
            image = invert_word(image)
        out.extend(image.letters)
    return free_reduce(Word(tuple(out)), target_base)


def _generators(space: FiniteSpace) -> tuple[str, ...]:
    return tuple(p for p in space.points if p != space.base)


def validate_translation(tr: BasisTranslation) -> None:
    """Raise unless the substitutions are a bijective basis correspondence."""
    sa, sb = tr.space_a, tr.space_b
    if not isinstance(sa, FiniteSpace) or not isinstance(sb, FiniteSpace):
        raise ValueError("cross-basis checks need two finite spaces")
    if set(tr.a_to_b) != set(_generators(sa)) or set(tr.b_to_a) != set(_generators(sb)):
        raise ValueError("translation is not a bijective basis correspondence")
    for gen in _generators(sa):
        there = tr.a_to_b[gen]
        back = translate_word(there, tr.b_to_a, sb.base, sa.base)
        if back != Word((Letter(gen),)):
            raise ValueError("translation is not a bijective basis correspondence")
    for gen in _generators(sb):
        there = tr.b_to_a[gen]
        back = translate_word(there, tr.a_to_b, sa.base, sb.base)
        if back != Word((Letter(gen),)):
            raise ValueError("translation is not a bijective basis correspondence")


def triangular_translation(m: int) -> BasisTranslation:
    """The chain/star correspondence f_i <-> e1...ei of rank m."""
    chain, star = chain_space(m), star_space(m)
    a_to_b = {
        f"f{i}": Word(tuple(Letter(f"e{j}") for j in range(1, i + 1))) for i in range(1, m + 1)
    }
    b_to_a: dict[Point, Word] = {"e1": Word((Letter("f1"),))}
    for i in range(2, m + 1):
        b_to_a[f"e{i}"] = Word((Letter(f"f{i - 1}", -1), Letter(f"f{i}")))
    return BasisTranslation(chain, star, a_to_b, b_to_a)


def check_cross_extension(
    s1: Space, s2: Space, tr: BasisTranslation, samples: Sequence[Word]
) -> bool:
    """Do the norms extended from two bases induce the same metric?

    First verifies the hypothesis on the generator sets: the metric
    extended from one basis must restrict, on the translated generators of
    the other basis, to that basis's point metric.  If the hypothesis
    holds, every unordered pair from ``samples`` (words over ``s1``) must
    get the same distance in both extensions.
    """
    if (tr.space_a, tr.space_b) != (s1, s2):
        raise ValueError("translation does not connect the given spaces")
    validate_translation(tr)
    assert isinstance(s1, FiniteSpace) and isinstance(s2, FiniteSpace)

    def to_word_over_s1(point2: str) -> Word:
        if point2 == s2.base:
            return Word(())
        return tr.b_to_a[point2]

    def to_word_over_s2(point1: str) -> Word:
        if point1 == s1.base:
            return Word(())
        return tr.a_to_b[point1]

    for a, b in itertools.combinations(s2.points, 2):
        if graev_metric(to_word_over_s1(a), to_word_over_s1(b), s1) != s2.dist(a, b):
            return False
    for a, b in itertools.combinations(s1.points, 2):
        if graev_metric(to_word_over_s2(a), to_word_over_s2(b), s2) != s1.dist(a, b):
            return False

    for u, v in itertools.combinations(samples, 2):
        tu = translate_word(u, tr.a_to_b, s1.base, s2.base)
        tv = translate_word(v, tr.a_to_b, s1.base, s2.base)
        if graev_metric(u, v, s1) != graev_metric(tu, tv, s2):
            return False
    return True


def map_to_json(h: PointMap) -> dict:
    if h.kind == TABLE:
        assert h.table is not None
        return {"map": {str(p): str(q) for p, q in h.table.items()}}
    if h.kind == AFFINE:
        assert h.scale is not None
        return {"scale": format_rational(h.scale)}
    assert h.breakpoints is not None
    return {
        "breakpoints": [[format_rational(x), format_rational(y)] for x, y in h.breakpoints]
    }


def map_from_json(data: dict, space: Space) -> PointMap:
    """Decode a point map; finite tables are read over ``space``."""
    if "scale" in data:
        return PointMap.scaling(parse_rational(data["scale"]))
    if "breakpoints" in data:
        return PointMap.piecewise(
            [(parse_rational(x), parse_rational(y)) for x, y in data["breakpoints"]]
        )
    if "map" in data:
        table: dict[Point, Point] = {}
        for p, q in data["map"].items():
            lp = parse_word(p, space)
            lq = parse_word(q, space)
            if len(lp) != 1 or len(lq) != 1 or lp[0].sign < 0 or lq[0].sign < 0:
                raise ValueError(f"map entry {p!r}: {q!r} must name single points")
            table[lp[0].point] = lq[0].point
        if space.base not in table:
            table[space.base] = space.base
        return PointMap.from_table(space, space, table)
    raise ValueError("map file needs one of 'map', 'scale' or 'breakpoints'")


def partial_contraction_from_json(data: dict) -> PartialContraction:
    try:
        points = tuple(parse_rational(t) for t in data["points"])
        values = tuple(parse_rational(t) for t in data["values"])
    except KeyError as missing:
        raise ValueError(f"partial contraction file is missing field {missing}") from None
    order = sorted(range(len(points)), key=lambda idx: points[idx])
    return PartialContraction(
        tuple(points[idx] for idx in order), tuple(values[idx] for idx in order)
    )
