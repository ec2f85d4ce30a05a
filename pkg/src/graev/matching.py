"""Non-crossing involutions on index intervals.

A match pairs some positions of {0,...,l} so that no two arcs cross
(there are no i < j < theta(i) < theta(j)); fixed points are allowed,
which is why the counts are Motzkin numbers rather than Catalan numbers.
Matches over a sub-interval are always re-indexed to start at 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .freegroup import IDENTITY, Rat, Word, ZERO, letter_distance


@dataclass(frozen=True)
class Match:
    """An index map over {0,...,l}; map[i] holds the partner of i."""

    map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(self.map))

    def __len__(self) -> int:
        return len(self.map)

    @staticmethod
    def identity(length: int) -> "Match":
        return Match(tuple(range(length)))

    def serialize(self) -> str:
        return " ".join(str(v) for v in self.map)


def is_match(candidate: Sequence[int]) -> bool:
    """True iff candidate is an involution with no crossing arcs.

    The non-crossing test is the literal quantifier over quadruples;
    out-of-range images make the candidate invalid rather than an error.
    """
    seq = tuple(candidate)
    n = len(seq)
    if any(not 0 <= v < n for v in seq):
        return False
    if any(seq[seq[i]] != i for i in range(n)):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if j < seq[i] < seq[j]:
                return False
    return True


# Materialized match lists, keyed by interval length.  Only lengths strictly
# below the one being streamed are cached, so memory stays one Motzkin number
# behind the requested size.  Concurrent re-population is harmless.
_MATCH_LISTS: dict[int, tuple[tuple[int, ...], ...]] = {0: ((),)}


def _match_list(n: int) -> tuple[tuple[int, ...], ...]:
    cached = _MATCH_LISTS.get(n)
    if cached is None:
        cached = tuple(_generate(n))
        _MATCH_LISTS[n] = cached
    return cached


def _generate(n: int) -> Iterator[tuple[int, ...]]:
    # Canonical order by the fate of index 0: fixed first, then paired with
    # each j = 1..n-1, recursing on the inside and outside segments.
    if n == 0:
        yield ()
        return
    for rest in _match_list(n - 1):
        yield (0,) + tuple(v + 1 for v in rest)
    for j in range(1, n):
        outside_list = _match_list(n - 1 - j)
        for inside in _match_list(j - 1):
            head = (j,) + tuple(v + 1 for v in inside) + (0,)
            for outside in outside_list:
                yield head + tuple(v + j + 1 for v in outside)


def match_maps(length: int) -> Iterator[tuple[int, ...]]:
    """Stream every match on {0,...,length-1} as a raw index tuple."""
    if length < 1:
        raise ValueError("match enumeration needs interval length >= 1")
    return _generate(length)


def enumerate_matches(length: int) -> Iterator[Match]:
    """Yield every match on {0,...,length-1} exactly once, in a fixed order."""
    for m in match_maps(length):
        yield Match(m)


def count_matches(length: int) -> int:
    """Motzkin number M_length: M_0 = M_1 = 1,
    M_{n+1} = M_n + sum_{k<n} M_k * M_{n-1-k}."""
    if length < 0:
        raise ValueError("length must be >= 0")
    m = [1, 1]
    while len(m) <= length:
        n = len(m) - 1
        m.append(m[n] + sum(m[k] * m[n - 1 - k] for k in range(n)))
    return m[length]


def apply_match(w: Word, theta: Match) -> Word:
    """Rewrite w under theta: keep openers, blank fixed points to the
    identity, and close each arc with the inverse of its opener."""
    if len(w) != len(theta):
        raise ValueError(
            f"word length {len(w)} does not equal match domain size {len(theta)}"
        )
    out = []
    for i, t in enumerate(theta.map):
        if t > i:
            out.append(w.letters[i])
        elif t == i:
            out.append(IDENTITY)
        else:
            out.append(w.letters[t].inverse())
    return Word(tuple(out))


def rho(u: Word, v: Word) -> Rat:
    """Sum of letterwise distances between equal-length words."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    total = ZERO
    for a, b in zip(u.letters, v.letters):
        total += letter_distance(a, b)
    return total
