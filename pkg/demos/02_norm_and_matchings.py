#!/usr/bin/env python3
"""The exact word norm: matching class, two evaluators, induced metric."""

from graev import (
    INTERVAL,
    enumerate_sigma,
    graev_metric,
    is_sigma,
    norm_bruteforce,
    norm_dp,
    parse_word,
    star_space,
)
from graev.norm import matching_to_json

# The feasible set of the defining formula: involutions whose 2-cycles are
# pairwise non-crossing chords.  Their counts are the Motzkin numbers.
print("matchings per word length:", [len(enumerate_sigma(k)) for k in range(1, 9)])
print("is (1 2)(3) admissible?  ", is_sigma([2, 1, 3]))
print("is (1 3)(2 4) admissible?", is_sigma([3, 4, 1, 2]))

# Over the star space (generators at distance 1 from the base, 2 apart),
# pairing the two e1 letters costs nothing and the fixed e2 pays 1.
star = star_space(3)
w = parse_word("e1 e2 e1^-1", star)
value, matching = norm_dp(w, star)
print("\nN(e1 e2 e1^-1) =", value)
print("optimal matching:", matching_to_json(matching, value))
print("brute force agrees:", norm_bruteforce(w, star) == value)

# Interval letters pair at |x - y| or stay fixed at their base distance.
word = parse_word("2/5 4/5^-1", INTERVAL)
value, matching = norm_dp(word, INTERVAL)
print("\nN(2/5 4/5^-1) =", value, "via pairs", matching.pairs())

# The induced metric extends the point metric exactly.
print("rho(2/5, 4/5) =", graev_metric(parse_word("2/5", INTERVAL), parse_word("4/5", INTERVAL), INTERVAL))
print("rho(e1, e2)   =", graev_metric(parse_word("e1", star), parse_word("e2", star), star))
