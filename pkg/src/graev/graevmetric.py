"""The exact Graev norm and metric on free-group words.

Two independent routes compute the same minimum-cost rewriting over
non-crossing matchings: explicit enumeration (the permanent oracle, capped
because match counts grow like Motzkin numbers) and a cubic interval
dynamic program (the uncapped scalable path).  Arcs incident to the left
end of an interval split a non-crossing matching into independent
sub-intervals, which is exactly the DP recurrence.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceLimitError
from .freegroup import (
    IDENTITY,
    Rat,
    ReducedWord,
    Word,
    ZERO,
    invert,
    letter_distance,
    multiply,
    reduce_word,
)
from .matching import Match, match_maps

DEFAULT_MATCH_CAP = 14
MATCH_CAP_ENV = "GRAEV_MATCH_CAP"


def enumeration_cap() -> int:
    """Active cap on brute-force match enumeration (env override allowed)."""
    raw = os.environ.get(MATCH_CAP_ENV)
    if raw is None:
        return DEFAULT_MATCH_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MATCH_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MATCH_CAP_ENV} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class NormResult:
    value: Rat
    witness: Match


def _cost_tables(letters: tuple) -> tuple[list[Rat], list[list[Rat]]]:
    # fix[i] = d(e, x_i); arc[i][k] = d(x_k, x_i^{-1}) for i < k
    n = len(letters)
    fix = [letter_distance(IDENTITY, x) for x in letters]
    arc = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        inv_i = letters[i].inverse()
        for k in range(i + 1, n):
            arc[i][k] = letter_distance(letters[k], inv_i)
    return fix, arc


def graev_norm_bruteforce(w: Word, cap: int | None = None) -> NormResult:
    """Minimize the rewrite cost over every match, by enumeration.

    The input is reduced first.  All letter distances are dyadic, so the
    inner minimization runs on integers scaled by 2^(max depth); the result
    is exact.  Ties go to the first minimizer in enumeration order.
    """
    rw = reduce_word(w)
    n = len(rw)
    limit = enumeration_cap() if cap is None else cap
    if n > limit:
        raise ResourceLimitError(
            f"reduced word has length {n}, above the match enumeration cap {limit}; "
            f"set {MATCH_CAP_ENV} to raise it, or use the dynamic program"
        )
    fix, arc = _cost_tables(rw.letters)
    scale = 2**rw.max_depth
    ifix = [int(c * scale) for c in fix]
    iarc = [[int(c * scale) for c in row] for row in arc]
    best: int | None = None
    best_map: tuple[int, ...] = ()
    for mp in match_maps(n):
        cost = 0
        for i, t in enumerate(mp):
            if t == i:
                cost += ifix[i]
            elif t > i:
                cost += iarc[i][t]
        if best is None or cost < best:
            best, best_map = cost, mp
    assert best is not None
    return NormResult(Rat(best, scale), Match(best_map))


def graev_norm_dp(w: Word) -> Rat:
    """Same minimum as the brute force, by interval dynamic programming.

    C[i][j] = min over: fixing i (d(e, x_i) + C[i+1][j]) or pairing i with
    some k in (i, j] (d(x_k, x_i^{-1}) + C[i+1][k-1] + C[k+1][j]); empty
    intervals cost 0.  Uncapped; cubic in the reduced length.
    """
    rw = reduce_word(w)
    ls = rw.letters
    n = len(ls)
    fix, arc = _cost_tables(ls)
    C = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = fix[i]
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            j = i + span - 1
            best = fix[i] + C[i + 1][j]
            arc_i = arc[i]
            for k in range(i + 1, j + 1):
                cand = arc_i[k]
                if k > i + 1:
                    cand += C[i + 1][k - 1]
                if k < j:
                    cand += C[k + 1][j]
                if cand < best:
                    best = cand
            C[i][j] = best
    return C[0][n - 1]


def graev_norm(w: Word) -> Rat:
    """The Graev norm (distance to the identity), via the DP route."""
    return graev_norm_dp(w)


def graev_distance(u: ReducedWord, v: ReducedWord) -> Rat:
    """Left-invariant metric extending the letter distance: norm of u^{-1}v."""
    return graev_norm_dp(multiply(invert(u), v))


def graev_bidistance(u: ReducedWord, v: ReducedWord) -> Rat:
    """Two-sided metric: distance(u, v) + distance(u^{-1}, v^{-1})."""
    return graev_distance(u, v) + graev_distance(invert(u), invert(v))
