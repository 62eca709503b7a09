import random

import pytest

from fractions import Fraction

from graev.norm import (
    fixed_cost,
    graev_metric,
    graev_norm,
    matching_from_json,
    matching_to_json,
    norm_bruteforce,
    norm_dp,
    pair_cost,
)
from graev.spaces import INTERVAL, star_space
from graev.suite import insert_cancelling_pairs, random_any_word, random_reduced_word
from graev.words import Word, conjugate, cyclic_shift, free_reduce, invert_word, parse_word

STAR3 = star_space(3)
SPACES = (star_space(2), STAR3, INTERVAL)


def test_single_generator_norm_is_its_base_distance():
    # N(x) = d~(x, e) on one letter; the star table has d(e1, e) = 1
    word = parse_word("e1", STAR3)
    assert norm_bruteforce(word, STAR3) == 1


def test_empty_word_has_zero_norm():
    assert norm_bruteforce(Word(()), STAR3) == 0
    assert norm_dp(Word(()), INTERVAL)[0] == 0


def test_conjugated_generator_costs_one():
    # optimal matching pairs the e1 letters at zero cost; e2 stays fixed
    word = parse_word("e1 e2 e1^-1", STAR3)
    assert norm_bruteforce(word, STAR3) == 1


def test_dp_pairs_interval_letters():
    value, matching = norm_dp(parse_word("2/5 4/5^-1", INTERVAL), INTERVAL)
    assert value == Fraction(2, 5)
    assert matching.map == (2, 1)


def test_dp_on_two_star_generators():
    value, _ = norm_dp(parse_word("e1 e2", STAR3), STAR3)
    assert value == 2


def test_dp_on_cancelling_interval_pair():
    value, _ = norm_dp(parse_word("2/5 2/5^-1", INTERVAL), INTERVAL)
    assert value == 0


def test_dp_three_interval_letters():
    # by hand over the 4 matchings of sigma_3 the optimum pairs positions 1, 3
    value, matching = norm_dp(parse_word("1/2 1/3 1/6^-1", INTERVAL), INTERVAL)
    assert value == Fraction(2, 3)
    assert matching.map == (3, 2, 1)
    assert norm_bruteforce(parse_word("1/2 1/3 1/6^-1", INTERVAL), INTERVAL) == value


def test_brute_force_guard():
    long_word = Word(tuple(parse_word("e1", STAR3).letters * 11))
    with pytest.raises(ValueError, match="limited"):
        norm_bruteforce(long_word, STAR3)


def test_dp_equals_brute_force_randomized():
    rng = random.Random(2024)
    for index in range(400):
        space = SPACES[index % len(SPACES)]
        word = random_any_word(rng, space, 8, base_prob=0.1)
        assert norm_dp(word, space)[0] == norm_bruteforce(word, space)


def test_norm_is_representation_independent():
    rng = random.Random(99)
    for index in range(300):
        space = SPACES[index % len(SPACES)]
        base = random_reduced_word(rng, space, 4)
        inflated = insert_cancelling_pairs(rng, base, rng.randint(1, 3), space)
        assert norm_dp(inflated, space)[0] == norm_dp(base, space)[0]
        assert norm_bruteforce(inflated, space) == norm_dp(base, space)[0]


def test_norm_is_conjugation_invariant():
    rng = random.Random(7)
    for index in range(300):
        space = SPACES[index % len(SPACES)]
        word = random_any_word(rng, space, 5)
        g = random_any_word(rng, space, 3)
        assert graev_norm(conjugate(g, word, space.base), space) == graev_norm(word, space)


def test_norm_is_cyclic_shift_invariant():
    rng = random.Random(8)
    for index in range(300):
        space = SPACES[index % len(SPACES)]
        word = random_reduced_word(rng, space, 8)
        k = rng.randint(0, 8)
        assert graev_norm(cyclic_shift(word, k), space) == graev_norm(word, space)


def test_norm_axioms_randomized():
    rng = random.Random(13)
    for index in range(300):
        space = SPACES[index % len(SPACES)]
        u = random_any_word(rng, space, 6)
        v = random_any_word(rng, space, 6)
        nu, nv = graev_norm(u, space), graev_norm(v, space)
        assert nu == graev_norm(invert_word(u), space)
        assert graev_norm(Word(u.letters + v.letters), space) <= nu + nv
        assert (nu == 0) == (len(free_reduce(u, space.base)) == 0)


def test_metric_extends_interval_distance():
    u, v = parse_word("2/5", INTERVAL), parse_word("4/5", INTERVAL)
    assert graev_metric(u, v, INTERVAL) == Fraction(2, 5)


def test_metric_vanishes_on_equal_words():
    word = parse_word("e1 e2^-1", STAR3)
    assert graev_metric(word, word, STAR3) == 0


def test_metric_between_star_generators():
    u, v = parse_word("e1", STAR3), parse_word("e2", STAR3)
    assert graev_metric(u, v, STAR3) == 2


def test_metric_extends_d_on_every_generator_pair():
    for space in (star_space(2), STAR3):
        for a in space.points:
            for b in space.points:
                u = free_reduce(parse_word(a, space), space.base)
                v = free_reduce(parse_word(b, space), space.base)
                assert graev_metric(u, v, space) == space.dist(a, b)


def test_identity_matching_upper_bound():
    rng = random.Random(21)
    for index in range(200):
        space = SPACES[index % len(SPACES)]
        word = random_any_word(rng, space, 8)
        bound = sum(
            (space.dist(letter.point, space.base) for letter in word), Fraction(0)
        )
        assert norm_dp(word, space)[0] <= bound


def test_pair_cost_is_orientation_free():
    # d~(x_t, x_j^-1) = d~(x_j, x_t^-1), so one pair term stands for both
    rng = random.Random(55)
    from graev.suite import random_letter

    for index in range(300):
        space = SPACES[index % len(SPACES)]
        a = random_letter(rng, space, allow_base=True)
        b = random_letter(rng, space, allow_base=True)
        assert pair_cost(a, b, space) == pair_cost(b, a, space)


def test_fixed_cost_is_half_the_distance_to_the_inverse():
    # d~(x, e) = d~(x, x^-1) / 2, the price of an unmatched position
    rng = random.Random(56)
    from graev.spaces import tilde_dist
    from graev.suite import random_letter

    for index in range(300):
        space = SPACES[index % len(SPACES)]
        a = random_letter(rng, space, allow_base=True)
        assert fixed_cost(a, space) == tilde_dist(a, a.inverse(), space) / 2


def test_matching_json_schema_and_roundtrip():
    value, matching = norm_dp(parse_word("e1 e2 e1^-1", STAR3), STAR3)
    payload = matching_to_json(matching, value)
    assert payload == {
        "k": 3,
        "map": [3, 2, 1],
        "cost": "1",
        "pairs": [[1, 3]],
        "fixed": [2],
    }
    assert matching_from_json(payload) == matching
