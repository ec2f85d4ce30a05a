#!/usr/bin/env python3
"""Survey the norm machinery on small inputs.

Prints the Motzkin growth of the match space with brute-force vs DP
timings, then a table of weighted-scale norm intervals across insertion
budgets for a few sample words.
"""

import random
import time

from graev.freegroup import Point, format_rat, format_word, parse_word
from graev.graevmetric import graev_norm_bruteforce, graev_norm_dp
from graev.matching import count_matches
from graev.sampling import sample_reduced_word
from graev.scales import norm_bounds, weighted_scale

SAMPLE_WORDS = [
    "[1]",
    "[1] [2]",
    "[1,2]^-1 [1,3]",
    "[1] [1,2] [1]^-1",
    "[2] [1,2]^-1 [0,3] [2]^-1",
]


def survey_match_growth() -> None:
    print("len  matches     brute-force   dynamic-program   value")
    rng = random.Random(0)
    points = [Point(()), Point((1,)), Point((1, 2)), Point((0, 0, 2))]
    for length in range(2, 13, 2):
        w = sample_reduced_word(rng, points, length, uniform_length=False)
        while len(w) < length:
            w = sample_reduced_word(rng, points, length, uniform_length=True)
        t0 = time.perf_counter()
        bf = graev_norm_bruteforce(w)
        t1 = time.perf_counter()
        dp = graev_norm_dp(w)
        t2 = time.perf_counter()
        assert bf.value == dp
        print(
            f"{length:3d}  {count_matches(length):7d}  {t1 - t0:10.4f}s"
            f"   {t2 - t1:12.4f}s   {format_rat(dp)}"
        )


def survey_bound_intervals() -> None:
    scale = weighted_scale()
    print()
    print("word                          budget0          budget1          budget2")
    for text in SAMPLE_WORDS:
        w = parse_word(text)
        cells = []
        for budget in (0, 1, 2):
            b = norm_bounds(w, scale, budget, search_cap=200000)
            cells.append(f"[{format_rat(b.lower)}, {format_rat(b.upper)}]")
        print(f"{format_word(w):28s}  {cells[0]:15s}  {cells[1]:15s}  {cells[2]}")


if __name__ == "__main__":
    survey_match_growth()
    survey_bound_intervals()
