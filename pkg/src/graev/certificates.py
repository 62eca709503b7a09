"""Norm balls, conjugate decompositions, and power-subgroup certificates.

Membership of a word in the subgroup generated by n-th powers of a norm
ball is witnessed, never decided: a certificate lists base words of norm
below the radius whose n-th powers multiply to the target, and verification
just re-checks that.  Non-membership is only ever established by the
exponent-sum obstruction, which rules out products of few conjugated
letters with n-th powers.  The bounded search returns a verified
certificate or an explicit unknown.

Conjugate decompositions realise words of small norm over the star space as
short products of conjugated letters, with the factor count equal to the
norm; they are extracted from an optimal matching and re-verified by
multiplying out.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .maps import PointMap, check_contraction, extend_endomorphism
from .norm import graev_norm, norm_dp, pair_cost
from .rationals import format_rational, parse_rational
from .spaces import FiniteSpace, Space, star_space
from .words import (
    Letter,
    Point,
    Word,
    concat,
    enumerate_reduced_words,
    format_letter,
    format_word,
    free_reduce,
    parse_word,
    signed_alphabet,
)


def in_ball(w: Word, c: Fraction, space: Space) -> bool:
    """Strict norm-ball membership: norm(w) < c."""
    return graev_norm(w, space) < c


def _check_odd_exponent(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"the power exponent must be an odd integer >= 3, got {n}")


@dataclass(frozen=True)
class ConjugateDecomposition:
    """target = product of g_i a_i g_i^-1 with at most m-1 single-letter a_i."""

    m: int
    target: Word
    factors: tuple[tuple[Word, Letter], ...]


def _star_alphabet(m: int) -> set[str]:
    return {"e"} | {f"e{i}" for i in range(1, m + 1)}


def decompose_conjugates(w: Word, m: int) -> Optional[ConjugateDecomposition]:
    """Write ``w`` as a product of norm(w) conjugated letters, if norm(w) < m.

    Over the star space every pair in an optimal matching costs 0 or 2, so
    replacing nonzero pairs by fixed points keeps the value; the surviving
    zero-cost pairs cancel once the unmatched letters a_1..a_r are pulled
    out, making the segments between them multiply to the identity.  The
    conjugator g_j is the prefix up to the j-th unmatched position with the
    earlier unmatched letters removed.  Returns None when norm(w) >= m.
    """
    space = star_space(m)
    allowed = _star_alphabet(m)
    for letter in w:
        if letter.point not in allowed:
            raise ValueError(f"letter point {letter.point!r} is not in the rank-{m} star space")
    w = free_reduce(w, space.base)
    value, matching = norm_dp(w, space)
    if value >= m:
        return None

    zero_pairs = [
        (i, j) for i, j in matching.pairs() if pair_cost(w[i - 1], w[j - 1], space) == 0
    ]
    matched = {pos for pair in zero_pairs for pos in pair}
    unmatched = [pos for pos in range(1, len(w) + 1) if pos not in matched]
    assert len(unmatched) == value, "norm over the star space must count unmatched letters"

    factors = []
    for pos in unmatched:
        prefix = [w[t - 1] for t in range(1, pos) if t in matched]
        g = free_reduce(Word(tuple(prefix)), space.base)
        factors.append((g, w[pos - 1]))
    return ConjugateDecomposition(m=m, target=w, factors=tuple(factors))


def conjugate_decomposition_failure(d: ConjugateDecomposition) -> Optional[str]:
    """None when the decomposition checks out, else the reason it does not."""
    if d.m < 1:
        return f"m must be at least 1, got {d.m}"
    if len(d.factors) > d.m - 1:
        return f"factor count {len(d.factors)} exceeds m - 1 = {d.m - 1}"
    allowed = _star_alphabet(d.m)
    for letter in d.target:
        if letter.point not in allowed:
            return f"target letter {format_letter(letter)} is outside the alphabet"
    product = Word(())
    for g, a in d.factors:
        for letter in g:
            if letter.point not in allowed:
                return f"conjugator letter {format_letter(letter)} is outside the alphabet"
        if a.point not in allowed:
            return f"factor letter {format_letter(a)} is outside the alphabet"
        piece = free_reduce(Word(g.letters + (a,) + tuple(x.inverse() for x in reversed(g.letters))), "e")
        product = concat(product, piece, "e")
    if product != free_reduce(d.target, "e"):
        return (
            f"product mismatch: factors multiply to '{format_word(product)}', "
            f"target reduces to '{format_word(free_reduce(d.target, 'e'))}'"
        )
    return None


def verify_conjugate_decomposition(d: ConjugateDecomposition) -> bool:
    return conjugate_decomposition_failure(d) is None


@dataclass(frozen=True)
class PowerCertificate:
    """target = x_1^n ... x_k^n with every norm(x_i) < c."""

    n: int
    c: Fraction
    target: Word
    bases: tuple[Word, ...]

    def __post_init__(self) -> None:
        _check_odd_exponent(self.n)
        if self.c <= 0:
            raise ValueError(f"the radius must be positive, got {self.c}")


def word_power(w: Word, n: int, base: Point) -> Word:
    return free_reduce(Word(w.letters * n), base)


def power_certificate_failure(p: PowerCertificate, space: Space) -> Optional[str]:
    """None when the certificate verifies, else the reason it does not."""
    for idx, x in enumerate(p.bases, 1):
        value = graev_norm(x, space)
        if value >= p.c:
            return f"N(base {idx}) = {format_rational(value)} >= c = {format_rational(p.c)}"
    product = Word(())
    for x in p.bases:
        product = concat(product, word_power(x, p.n, space.base), space.base)
    target = free_reduce(p.target, space.base)
    if product != target:
        return (
            f"product mismatch: powers multiply to '{format_word(product)}', "
            f"target reduces to '{format_word(target)}'"
        )
    return None


def verify_power_certificate(p: PowerCertificate, space: Space) -> bool:
    return power_certificate_failure(p, space) is None


def transport_certificate(p: PowerCertificate, h: PointMap) -> PowerCertificate:
    """Push a certificate forward along a contraction.

    The image homomorphism sends each base word to a word of no larger
    norm, so the transported certificate verifies over the codomain.
    """
    if not check_contraction(h):
        raise ValueError("the map is not a contraction")
    failure = power_certificate_failure(p, h.domain)
    if failure is not None:
        raise ValueError(f"certificate does not verify: {failure}")
    return PowerCertificate(
        n=p.n,
        c=p.c,
        target=extend_endomorphism(h, p.target),
        bases=tuple(extend_endomorphism(h, x) for x in p.bases),
    )


def _candidate_points(w: Word, space: Space) -> list[Point]:
    if isinstance(space, FiniteSpace):
        return [p for p in space.points if p != space.base]
    pts = sorted({letter.point for letter in w} - {space.base})
    return pts


def search_power_certificate(
    w: Word,
    c: Fraction,
    n: int,
    max_factors: int,
    max_base_length: int,
    space: Space,
) -> Optional[PowerCertificate]:
    """Breadth-first search for a power certificate within the budget.

    Candidate bases are the reduced words of bounded length and norm < c
    over the space's generators (over the interval: over the points that
    occur in the target).  Returns a verified certificate, or None, which
    means unknown within budget, never non-membership.
    """
    _check_odd_exponent(n)
    if c <= 0:
        raise ValueError(f"the radius must be positive, got {c}")
    target = free_reduce(w, space.base)
    if len(target) == 0:
        return PowerCertificate(n=n, c=c, target=target, bases=())

    alphabet = signed_alphabet(_candidate_points(w, space))
    candidates = [
        base
        for base in enumerate_reduced_words(alphabet, max_base_length)
        if len(base) > 0 and graev_norm(base, space) < c
    ]

    frontier: dict[Word, tuple[Word, ...]] = {Word(()): ()}
    seen = {Word(())}
    for _ in range(max_factors):
        nxt: dict[Word, tuple[Word, ...]] = {}
        for state, used in frontier.items():
            for base in candidates:
                reached = concat(state, word_power(base, n, space.base), space.base)
                if reached == target:
                    return PowerCertificate(n=n, c=c, target=target, bases=used + (base,))
                if reached not in seen:
                    seen.add(reached)
                    nxt[reached] = used + (base,)
        frontier = nxt
        if not frontier:
            break
    return None


def exponent_sum(w: Word, generator: Point) -> int:
    """Sum of the signs of the occurrences of one generator (a homomorphism
    to the integers)."""
    return sum(letter.sign for letter in w if letter.point == generator)


@dataclass(frozen=True)
class ExponentObstruction:
    """Every generator's exponent sum is nonzero mod n.

    Any product of at most m-1 conjugated letters and arbitrary n-th powers
    leaves some generator's exponent sum at 0 mod n (pigeonhole: m-1
    letters cannot touch all m generators, and powers contribute multiples
    of n), so a word carrying this report is not of that form.
    """

    m: int
    n: int
    sums: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        inner = ", ".join(f"f_{g} = {s}" for g, s in self.sums)
        return f"exponent sums ({inner}) are all nonzero mod {self.n}"


def exponent_obstruction(w: Word, m: int, n: int) -> Optional[ExponentObstruction]:
    """The mod-n obstruction report, or None when some sum is 0 mod n."""
    _check_odd_exponent(n)
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    allowed = _star_alphabet(m)
    for letter in w:
        if letter.point not in allowed:
            raise ValueError(f"letter point {letter.point!r} is not among e1..e{m}")
    sums = tuple((f"e{i}", exponent_sum(w, f"e{i}")) for i in range(1, m + 1))
    if all(s % n != 0 for _, s in sums):
        return ExponentObstruction(m=m, n=n, sums=sums)
    return None


def decomposition_to_json(d: ConjugateDecomposition) -> dict:
    return {
        "m": d.m,
        "target": format_word(d.target),
        "factors": [{"g": format_word(g), "a": format_letter(a)} for g, a in d.factors],
    }


def decomposition_from_json(data: dict) -> ConjugateDecomposition:
    m = int(data["m"])
    space = star_space(m)
    target = parse_word(data["target"], space)
    factors = []
    for entry in data["factors"]:
        g = parse_word(entry["g"], space)
        a_word = parse_word(entry["a"], space)
        if len(a_word) != 1:
            raise ValueError(f"factor letter {entry['a']!r} must be a single letter")
        factors.append((g, a_word[0]))
    return ConjugateDecomposition(m=m, target=target, factors=tuple(factors))


def power_certificate_to_json(p: PowerCertificate) -> dict:
    return {
        "n": p.n,
        "c": format_rational(p.c),
        "target": format_word(p.target),
        "bases": [format_word(x) for x in p.bases],
    }


def power_certificate_from_json(data: dict, space: Space) -> PowerCertificate:
    return PowerCertificate(
        n=int(data["n"]),
        c=parse_rational(data["c"]),
        target=parse_word(data["target"], space),
        bases=tuple(parse_word(x, space) for x in data["bases"]),
    )
