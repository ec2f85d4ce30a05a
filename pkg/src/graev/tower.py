"""Coordinate truncation and the induced word homomorphisms.

Truncating every point at depth n induces a group homomorphism on words.
The checks here are the finite-stage facts that make the truncation tower
useful: distances never grow under projection, distinct words over
depth-limited points stay uniformly separated, and any two distinct words
are told apart by some finite truncation level.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .freegroup import (
    Letter,
    Point,
    Rat,
    ReducedWord,
    Word,
    format_letter,
    format_rat,
    format_word,
    letter_distance,
    reduce_word,
)
from .graevmetric import graev_bidistance
from .matching import Match
from .reports import CheckCase, VerificationReport
from .scales import Scale, norm_theta

Level = int


def _check_level(n: Level) -> None:
    if n < 0:
        raise ValueError(f"truncation level must be >= 0, got {n}")


def project_point(p: Point, n: Level) -> Point:
    """Zero all coordinates at index >= n; idempotent."""
    _check_level(n)
    return p.truncate(n)


def project_letter(x: Letter, n: Level) -> Letter:
    _check_level(n)
    if x.point is None:
        return x
    return Letter(x.sign, x.point.truncate(n))


def project_word(w: Word, n: Level) -> ReducedWord:
    """Truncate letterwise, then reduce.  A group homomorphism that fixes
    every word whose points already have depth <= n."""
    _check_level(n)
    return reduce_word(Word(tuple(project_letter(x, n) for x in w.letters)))


def check_lipschitz_witness(w_star: Word, theta: Match, scale: Scale, n: Level) -> CheckCase:
    """Projected spelling never costs more than the original under the same
    match (valid for regular scales: projection shrinks both letter
    distances and scale values)."""
    _check_level(n)
    if not scale.declared_regular:
        raise ValueError(f"scale {scale.name!r} is not declared regular")
    projected = Word(tuple(project_letter(x, n) for x in w_star.letters))
    lhs = norm_theta(projected, theta, scale)
    rhs = norm_theta(w_star, theta, scale)
    return CheckCase.compare(
        {
            "word": format_word(w_star),
            "match": theta.serialize(),
            "level": str(n),
            "scale": scale.name,
        },
        "<=",
        lhs,
        rhs,
    )


def check_lipschitz_distance(u: ReducedWord, v: ReducedWord, n: Level) -> CheckCase:
    """Projection is nonexpansive for the exact two-sided metric."""
    _check_level(n)
    lhs = graev_bidistance(project_word(u, n), project_word(v, n))
    rhs = graev_bidistance(u, v)
    return CheckCase.compare(
        {"u": format_word(u), "v": format_word(v), "level": str(n)},
        "<=",
        lhs,
        rhs,
    )


def check_extension_conditions(
    n: Level,
    scale: Scale,
    letters: Iterable[Letter],
    r_grid: Sequence[Rat],
) -> VerificationReport:
    """Truncation at level n satisfies the homomorphism-extension conditions:
    it commutes with inversion and fixes the identity, it is nonexpansive on
    letters, and it never increases the scale."""
    _check_level(n)
    letters = tuple(letters)
    if not letters or not r_grid:
        raise ValueError("letter and grid samples must be nonempty")
    grid = sorted(Rat(r) for r in r_grid)
    report = VerificationReport(
        suite="extension",
        parameters={
            "level": str(n),
            "scale": scale.name,
            "letters": str(len(letters)),
            "r-grid": " ".join(format_rat(r) for r in grid),
        },
    )
    for x in letters:
        fx = format_letter(x)
        proj_of_inverse = project_letter(x.inverse(), n)
        inverse_of_proj = project_letter(x, n).inverse()
        report.add(
            CheckCase.compare(
                {"condition": "commutes-with-inversion", "x": fx, "level": str(n)},
                "==",
                letter_distance(proj_of_inverse, inverse_of_proj),
                Rat(0),
            )
        )
    for i, x in enumerate(letters):
        for y in letters[i + 1 :]:
            report.add(
                CheckCase.compare(
                    {
                        "condition": "nonexpansive-on-letters",
                        "x": format_letter(x),
                        "y": format_letter(y),
                        "level": str(n),
                    },
                    "<=",
                    letter_distance(project_letter(x, n), project_letter(y, n)),
                    letter_distance(x, y),
                )
            )
    for x in letters:
        for r in grid:
            report.add(
                CheckCase.compare(
                    {
                        "condition": "scale-dominates-projection",
                        "x": format_letter(x),
                        "r": format_rat(r),
                        "level": str(n),
                    },
                    "<=",
                    scale(project_letter(x, n), r),
                    scale(x, r),
                )
            )
    return report


def separating_level(u: ReducedWord, v: ReducedWord) -> int | None:
    """Least truncation level at which the two words project to different
    group elements, or None when they are equal.  For distinct words the
    level exists and is at most the maximum point depth (projection at that
    depth fixes both words)."""
    ru, rv = reduce_word(u), reduce_word(v)
    if ru == rv:
        return None
    bound = max(ru.max_depth, rv.max_depth)
    for n in range(bound + 1):
        if project_word(ru, n) != project_word(rv, n):
            return n
    raise AssertionError("distinct reduced words must separate by their max depth")


def check_discreteness(n: Level, corpus: Iterable[ReducedWord]) -> VerificationReport:
    """Every distinct pair of depth-<= n words is at two-sided distance at
    least 2^{-n}; the minimum observed distance and an attaining pair are
    recorded in the report parameters."""
    _check_level(n)
    words = []
    seen: set[tuple] = set()
    for w in corpus:
        rw = reduce_word(w)
        if rw.max_depth > n:
            raise ValueError(
                f"corpus word {format_word(rw)} has depth {rw.max_depth} > level {n}"
            )
        if rw.letters not in seen:
            seen.add(rw.letters)
            words.append(rw)
    words.sort(key=lambda w: (len(w), format_word(w)))
    bound = Rat(1, 2**n)
    report = VerificationReport(
        suite="discreteness",
        parameters={"level": str(n), "bound": format_rat(bound), "words": str(len(words))},
    )
    min_seen: Rat | None = None
    min_pair = ("", "")
    for i, u in enumerate(words):
        for v in words[i + 1 :]:
            d = graev_bidistance(u, v)
            report.add(
                CheckCase.compare(
                    {"u": format_word(u), "v": format_word(v)}, ">=", d, bound
                )
            )
            if min_seen is None or d < min_seen:
                min_seen = d
                min_pair = (format_word(u), format_word(v))
    if min_seen is not None:
        report.parameters["min-observed"] = format_rat(min_seen)
        report.parameters["attaining-pair"] = f"{min_pair[0]} | {min_pair[1]}"
    return report
