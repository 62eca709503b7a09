"""The invariant word norm and its induced metric, computed exactly.

The norm of a word x1..xk is half the minimum, over a class of involutions
with pairwise non-crossing 2-cycles, of sum_i d~(x_i, x_{alpha(i)}^-1).
Equivalently: choose a non-crossing partial matching of the positions; a
matched pair (t, j) pays d~(x_t, x_j^-1) and an unmatched position pays its
distance to the base point.  Two evaluators are provided:

* ``norm_bruteforce`` enumerates the involution class literally and takes
  the minimum of the defining sums (guarded to short words);
* ``norm_dp`` is an O(k^3) interval dynamic program over non-crossing
  matchings that also recovers one optimal matching.

The two must agree exactly on every input; that equivalence is an oracle
check in the test suite, not an assumption here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .rationals import format_rational
from .spaces import Space, tilde_dist
from .words import Letter, Word, concat, free_reduce, invert_word

SIGMA_ENUM_MAX = 10
BRUTE_FORCE_MAX = 10


@dataclass(frozen=True)
class SigmaMatching:
    """An involution of {1..k} stored as its image array (1-based)."""

    k: int
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.k:
            raise ValueError("image array length does not match k")

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, self.map[i - 1]) for i in range(1, self.k + 1) if self.map[i - 1] > i]

    def fixed(self) -> list[int]:
        return [i for i in range(1, self.k + 1) if self.map[i - 1] == i]


def matching_to_json(matching: SigmaMatching, cost: Fraction) -> dict:
    return {
        "k": matching.k,
        "map": list(matching.map),
        "cost": format_rational(cost),
        "pairs": [list(p) for p in matching.pairs()],
        "fixed": matching.fixed(),
    }


def matching_from_json(data: dict) -> SigmaMatching:
    return SigmaMatching(k=int(data["k"]), map=tuple(int(v) for v in data["map"]))


def is_sigma(alpha: Sequence[int]) -> bool:
    """Literal membership test for the matching class.

    ``alpha`` lists the images of 1..k.  Requires alpha to be an involution
    and, for every i < j, one of four positional conditions relating i, j,
    alpha(i), alpha(j); together these say the 2-cycles of alpha, drawn as
    chords over 1..k, are pairwise non-crossing (fixed points are free).
    """
    k = len(alpha)
    if sorted(alpha) != list(range(1, k + 1)):
        raise ValueError("not a permutation of 1..k")
    image = tuple(alpha)
    for i in range(1, k + 1):
        if image[image[i - 1] - 1] != i:
            return False
    for i in range(1, k + 1):
        ai = image[i - 1]
        for j in range(i + 1, k + 1):
            aj = image[j - 1]
            if (
                (aj < i and aj < ai < j)
                or (ai > j and i < aj < ai)
                or (i < aj and ai < aj and ai < j)
                or (aj == i)
            ):
                continue
            return False
    return True


def _involutions(k: int) -> Iterator[tuple[int, ...]]:
    """All involutions of {1..k} as 1-based image tuples, deterministic order."""
    image = [0] * k

    def rec(free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(image)
            return
        i = free[0]
        image[i - 1] = i
        yield from rec(free[1:])
        for idx in range(1, len(free)):
            j = free[idx]
            image[i - 1], image[j - 1] = j, i
            yield from rec(free[1:idx] + free[idx + 1 :])
        image[i - 1] = 0

    yield from rec(list(range(1, k + 1)))


@lru_cache(maxsize=None)
def enumerate_sigma(k: int) -> tuple[SigmaMatching, ...]:
    """Every matching in the class, by filtering all involutions of S_k.

    Guarded to k <= 10 (2188 matchings); the guard keeps the brute-force
    norm evaluator instant.
    """
    if not 1 <= k <= SIGMA_ENUM_MAX:
        raise ValueError(f"k must be between 1 and {SIGMA_ENUM_MAX}, got {k}")
    return tuple(SigmaMatching(k, alpha) for alpha in _involutions(k) if is_sigma(alpha))


def noncrossing_involutions(k: int) -> set[tuple[int, ...]]:
    """Structural generator of non-crossing involutions (1-based images).

    Built by recursion on the first position (fixed, or paired with t and
    split into inner/outer segments); independent of ``is_sigma``, which it
    cross-checks in the tests.
    """

    @lru_cache(maxsize=None)
    def build(n: int) -> tuple[tuple[int, ...], ...]:
        if n == 0:
            return ((),)
        out: list[tuple[int, ...]] = []
        for rest in build(n - 1):
            out.append((0,) + tuple(v + 1 for v in rest))
        for t in range(1, n):
            for inner in build(t - 1):
                for outer in build(n - t - 1):
                    img = [0] * n
                    img[0], img[t] = t, 0
                    for v, w in enumerate(inner):
                        img[1 + v] = 1 + w
                    for v, w in enumerate(outer):
                        img[t + 1 + v] = t + 1 + w
                    out.append(tuple(img))
        return tuple(out)

    return {tuple(v + 1 for v in img) for img in build(k)}


def fixed_cost(letter: Letter, space: Space) -> Fraction:
    """Cost of leaving a position unmatched: d~(x, e) = d~(x, x^-1)/2."""
    return tilde_dist(letter, Letter(space.base), space)


def pair_cost(a: Letter, b: Letter, space: Space) -> Fraction:
    """Cost of matching two positions: d~(x_t, x_j^-1)."""
    return tilde_dist(a, b.inverse(), space)


def norm_bruteforce(w: Word, space: Space) -> Fraction:
    """The defining minimum, evaluated literally over the whole class.

    Accepts unreduced words (the value does not depend on the chosen
    representation; the suite tests that instead of assuming it).
    Guarded to 10 letters.
    """
    k = len(w)
    if k == 0:
        return Fraction(0)
    if k > BRUTE_FORCE_MAX:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_MAX} letters, got {k}")
    letters = w.letters
    inverses = [letter.inverse() for letter in letters]
    cost = [
        [tilde_dist(letters[i], inverses[j], space) for j in range(k)] for i in range(k)
    ]
    best: Fraction | None = None
    for matching in enumerate_sigma(k):
        total = sum(cost[i][matching.map[i] - 1] for i in range(k))
        if best is None or total < best:
            best = total
    assert best is not None
    return best / 2


def norm_dp(w: Word, space: Space) -> tuple[Fraction, SigmaMatching]:
    """Interval DP over non-crossing matchings; returns (value, matching).

    C(i, j) = min( C(i, j-1) + d~(x_j, e),
                   min_{i <= t < j} C(i, t-1) + d~(x_t, x_j^-1) + C(t+1, j-1) )
    with empty ranges costing 0.  Ties prefer leaving x_j unmatched, then
    the smallest split index t, which pins the recovered matching.  Runs on
    the letter sequence exactly as given (no reduction); O(k^3) time,
    O(k^2) space.
    """
    k = len(w)
    if k == 0:
        return Fraction(0), SigmaMatching(0, ())
    letters = w.letters
    base_letter = Letter(space.base)
    fix = [tilde_dist(x, base_letter, space) for x in letters]
    inverses = [x.inverse() for x in letters]
    pair = [
        [tilde_dist(letters[t], inverses[j], space) if t < j else Fraction(0) for j in range(k)]
        for t in range(k)
    ]

    zero = Fraction(0)
    cost = [[zero] * k for _ in range(k)]
    back: list[list[int]] = [[-1] * k for _ in range(k)]  # -1: x_j unmatched, else t

    def c(i: int, j: int) -> Fraction:
        return cost[i][j] if i <= j else zero

    for span in range(1, k + 1):
        for i in range(0, k - span + 1):
            j = i + span - 1
            best = c(i, j - 1) + fix[j]
            choice = -1
            for t in range(i, j):
                cand = c(i, t - 1) + pair[t][j] + c(t + 1, j - 1)
                if cand < best:
                    best, choice = cand, t
            cost[i][j], back[i][j] = best, choice

    image = list(range(1, k + 1))
    stack = [(0, k - 1)]
    while stack:
        i, j = stack.pop()
        if i > j:
            continue
        t = back[i][j]
        if t < 0:
            stack.append((i, j - 1))
        else:
            image[t], image[j] = j + 1, t + 1
            stack.append((i, t - 1))
            stack.append((t + 1, j - 1))
    return cost[0][k - 1], SigmaMatching(k, tuple(image))


def graev_norm(w: Word, space: Space) -> Fraction:
    """Canonical norm of the group element: evaluated on the reduced form."""
    return norm_dp(free_reduce(w, space.base), space)[0]


def graev_metric(u: Word, v: Word, space: Space) -> Fraction:
    """The induced invariant metric: norm of u * v^-1."""
    return norm_dp(concat(u, invert_word(v), space.base), space)[0]
