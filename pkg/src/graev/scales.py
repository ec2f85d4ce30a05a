"""Scales and the scale-weighted norm on words.

A scale inflates an inner norm value according to the conjugating letter:
it fixes the identity letter, dominates its argument, vanishes only at
zero, and is monotone.  The weighted family shipped here multiplies by
1 + sum_k x(k) * c_k with nonnegative rational coefficients, which keeps
every axiom a finite rational comparison and is regular (coordinate
truncation only drops nonnegative summands).

For a general scale the exact norm is an infimum over infinitely many
pre-reduced spellings of a word; this module reports certified intervals
instead: the lower bound is the trivial-scale Graev norm, the upper bound
comes from a bounded search over spellings with cancelling pairs inserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ResourceLimitError
from .freegroup import (
    IDENTITY,
    Letter,
    Point,
    Rat,
    ReducedWord,
    Word,
    ZERO,
    format_letter,
    format_rat,
    format_word,
    invert,
    letter_distance,
    multiply,
    reduce_word,
)
from .graevmetric import NormResult, graev_norm_dp
from .matching import Match, is_match
from .reports import CheckCase, VerificationReport


@dataclass(frozen=True)
class Scale:
    """Inflation function (letter, value) -> value with the scale axioms."""

    name: str
    evaluate: Callable[[Letter, Rat], Rat]
    declared_regular: bool = False

    def __call__(self, x: Letter, r: Rat) -> Rat:
        return self.evaluate(x, r)


TRIVIAL_SCALE = Scale("trivial", lambda x, r: r, declared_regular=True)


def _default_coefficient(k: int) -> Rat:
    return Rat(1, 4 ** (k + 1))


def weighted_scale(coefficients: Sequence[Rat] | None = None, name: str = "weighted") -> Scale:
    """Scale multiplying by 1 + sum_k x(k)*c_k; inverse-symmetric, regular
    for nonnegative coefficients.  Default coefficients are 4^{-(k+1)}."""
    coeffs = None if coefficients is None else tuple(Rat(c) for c in coefficients)
    weights: dict[Point, Rat] = {}

    def weight(p: Point) -> Rat:
        w = weights.get(p)
        if w is None:
            w = Rat(1)
            for k, c in enumerate(p.coords):
                if coeffs is None:
                    w += c * _default_coefficient(k)
                elif k < len(coeffs):
                    w += c * coeffs[k]
            weights[p] = w
        return w

    def evaluate(x: Letter, r: Rat) -> Rat:
        if x.point is None:
            return r
        return r * weight(x.point)

    return Scale(name, evaluate, declared_regular=True)


def load_scale_file(path: str) -> Scale:
    """Read weighted-family coefficients from a key-value text file.

    Lines are "<coordinate index> = <rational>", "#" starts a comment,
    blank lines are skipped.  Unlisted coordinates get coefficient 0.
    The file is not vetted here; run the axiom checker to certify it.
    """
    entries: dict[int, Rat] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected '<index> = <rational>'")
            left, right = line.split("=", 1)
            try:
                index = int(left.strip())
                value = Rat(right.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
            if index < 0:
                raise ValueError(f"{path}:{lineno}: coordinate index must be >= 0")
            if index in entries:
                raise ValueError(f"{path}:{lineno}: duplicate coordinate {index}")
            entries[index] = value
    size = max(entries) + 1 if entries else 0
    coeffs = tuple(entries.get(k, ZERO) for k in range(size))
    return weighted_scale(coeffs, name=f"file:{path}")


# ---------------------------------------------------------------------------
# Scale-weighted norm of a word under a fixed match.


def norm_theta(w: Word, theta: Match, scale: Scale) -> Rat:
    """Recursive cost of w under match theta.

    Single letters cost d(e, x).  If 0 is matched inside a proper prefix,
    the word splits there and the costs add.  If 0 is matched to the last
    index, the ends pay d(x, y) plus the scale applied to the inner value,
    where x is the inverse of the first letter and y the last letter; an
    empty inner word has value 0.
    """
    if len(w) != len(theta):
        raise ValueError(
            f"word length {len(w)} does not equal match domain size {len(theta)}"
        )
    if not is_match(theta.map):
        raise ValueError(f"not a match: {theta.map}")
    return _norm_theta(w.letters, theta.map, scale)


def _norm_theta(letters: tuple[Letter, ...], tmap: tuple[int, ...], scale: Scale) -> Rat:
    last = len(letters) - 1
    if last == 0:
        return letter_distance(IDENTITY, letters[0])
    k = tmap[0]
    if k < last:
        left = _norm_theta(letters[: k + 1], tmap[: k + 1], scale)
        right = _norm_theta(
            letters[k + 1 :], tuple(v - (k + 1) for v in tmap[k + 1 :]), scale
        )
        return left + right
    x = letters[0].inverse()
    y = letters[last]
    if last == 1:
        inner = ZERO
    else:
        inner = _norm_theta(letters[1:last], tuple(v - 1 for v in tmap[1:last]), scale)
    return letter_distance(x, y) + max(scale(x, inner), scale(y, inner))


def norm_theta_min(w: Word, scale: Scale) -> NormResult:
    """Minimum of norm_theta over every match, by interval DP.

    The pair-ends branch may take the minimal inner value because scales
    are monotone in their second argument.  The input word is used as
    given (it is not reduced); a minimizing match is reconstructed.
    """
    ls = w.letters
    n = len(ls)
    val: list[list[Rat]] = [[ZERO] * n for _ in range(n)]
    act: list[list[tuple]] = [[()] * n for _ in range(n)]
    for i in range(n):
        val[i][i] = letter_distance(IDENTITY, ls[i])
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            j = i + span - 1
            x = ls[i].inverse()
            y = ls[j]
            inner = val[i + 1][j - 1] if span > 2 else ZERO
            best = letter_distance(x, y) + max(scale(x, inner), scale(y, inner))
            choice: tuple = ("pair",)
            for k in range(i, j):
                cand = val[i][k] + val[k + 1][j]
                if cand < best:
                    best, choice = cand, ("split", k)
            val[i][j], act[i][j] = best, choice

    mp = [0] * n

    def fill(i: int, j: int) -> None:
        if i > j:
            return
        if i == j:
            mp[i] = i
            return
        c = act[i][j]
        if c[0] == "pair":
            mp[i], mp[j] = j, i
            fill(i + 1, j - 1)
        else:
            k = c[1]
            fill(i, k)
            fill(k + 1, j)

    fill(0, n - 1)
    return NormResult(val[0][n - 1], Match(tuple(mp)))


# ---------------------------------------------------------------------------
# Certified bounds for the scale norm.


@dataclass(frozen=True)
class BoundedNorm:
    """Certified interval for a scale norm; the true value lies inside.

    The upper witness is a pre-reduced spelling plus a match attaining the
    upper value; it is None for composite (summed) intervals.
    """

    lower: Rat
    upper: Rat
    witness_word: Word | None = None
    witness_match: Match | None = None


DEFAULT_SEARCH_CAP = 20000


def insertion_alphabet(w: Word) -> tuple[Letter, ...]:
    """Letters available for inserted cancelling pairs: the word's letters,
    their inverses, the identity, and coordinate truncations of all of
    those (truncated letters are the natural cheap witnesses under a
    regular scale)."""
    out: list[Letter] = []
    seen: set[Letter] = set()

    def add(x: Letter) -> None:
        if x not in seen:
            seen.add(x)
            out.append(x)

    for x in w.letters:
        if not x.is_identity:
            add(x)
            add(x.inverse())
    add(IDENTITY)
    for m in range(w.max_depth):
        for x in list(out):
            if x.point is not None:
                add(Letter(x.sign, x.point.truncate(m)))
    return tuple(out)


def norm_bounds(
    w: ReducedWord,
    scale: Scale,
    insertion_budget: int,
    search_cap: int | None = None,
) -> BoundedNorm:
    """Certified interval for the scale norm of w.

    lower: the trivial-scale Graev norm (a lower bound for any scale, since
    scale values dominate their argument, and exact for the trivial scale).
    upper: the cheapest norm_theta_min over spellings reached
    from the reduced w by inserting up to insertion_budget adjacent
    cancelling pairs from insertion_alphabet(w); each extra budget level
    only grows the candidate set, so the upper bound never increases.
    """
    if insertion_budget < 0:
        raise ValueError("insertion budget must be >= 0")
    rw = reduce_word(w)
    cap = DEFAULT_SEARCH_CAP if search_cap is None else search_cap
    alphabet = insertion_alphabet(rw)
    seen: set[tuple[Letter, ...]] = {rw.letters}
    order: list[tuple[Letter, ...]] = [rw.letters]
    frontier: list[tuple[Letter, ...]] = [rw.letters]
    for _ in range(insertion_budget):
        grown: list[tuple[Letter, ...]] = []
        for base in frontier:
            for p in range(len(base) + 1):
                head, tail = base[:p], base[p:]
                for a in alphabet:
                    cand = head + (a, a.inverse()) + tail
                    if cand not in seen:
                        if len(seen) >= cap:
                            raise ResourceLimitError(
                                f"insertion search exceeded the candidate cap {cap}; "
                                "lower the budget or raise the cap"
                            )
                        seen.add(cand)
                        grown.append(cand)
                        order.append(cand)
        frontier = grown
    best: NormResult | None = None
    best_word = rw
    for letters in order:
        cand_word = Word(letters)
        res = norm_theta_min(cand_word, scale)
        if best is None or res.value < best.value:
            best, best_word = res, cand_word
    assert best is not None
    return BoundedNorm(graev_norm_dp(rw), best.value, best_word, best.witness)


def scale_distance_bounds(
    u: ReducedWord,
    v: ReducedWord,
    scale: Scale,
    budget: int,
    search_cap: int | None = None,
) -> tuple[BoundedNorm, BoundedNorm]:
    """Bounds for the one-sided distance (norm of u^{-1}v) and for the
    two-sided distance (interval sum with the inverted pair)."""
    left = norm_bounds(multiply(invert(u), v), scale, budget, search_cap)
    right = norm_bounds(multiply(u, invert(v)), scale, budget, search_cap)
    two_sided = BoundedNorm(left.lower + right.lower, left.upper + right.upper)
    return left, two_sided


def conjugation_witness(v: Word, theta: Match, w: Letter, scale: Scale) -> Rat:
    """Evaluate the conjugated word under the lifted match.

    Builds w^{-1} v w and the match pairing the new ends around theta
    shifted by one, then checks the exact identity: the lifted cost equals
    the scale applied to the original cost.  Both sides are computed
    independently; a mismatch is an internal invariant violation.
    """
    if len(v) != len(theta):
        raise ValueError(
            f"word length {len(v)} does not equal match domain size {len(theta)}"
        )
    conj = Word((w.inverse(),) + v.letters + (w,))
    eta_map = (len(v) + 1,) + tuple(t + 1 for t in theta.map) + (0,)
    if not is_match(eta_map):
        raise RuntimeError(
            f"internal invariant violation: lifted map {eta_map} is not a match"
        )
    eta = Match(eta_map)
    lifted = norm_theta(conj, eta, scale)
    expected = scale(w, norm_theta(v, theta, scale))
    if lifted != expected:
        raise RuntimeError(
            "internal invariant violation: lifted cost "
            f"{format_rat(lifted)} != scaled inner cost {format_rat(expected)} "
            f"for v={format_word(v)}, w={format_letter(w)}"
        )
    return lifted


# ---------------------------------------------------------------------------
# Axiom checker.


def check_scale_axioms(
    scale: Scale,
    letters: Iterable[Letter],
    r_grid: Sequence[Rat],
    eps_tail: Sequence[Rat],
    limit_threshold: Rat = Rat(1, 4),
) -> VerificationReport:
    """Sample the scale axioms on finite grids.

    Checks: the identity letter is fixed; values dominate the argument;
    zero exactly at zero; monotonicity along the grid; small arguments stay
    below the threshold (consistency with a vanishing limit, not a proof);
    inverse symmetry (a convention this package requires of scales); and,
    for scales declared regular, domination of every coordinate truncation.
    Violations become failing report cases, never exceptions.
    """
    letters = tuple(letters)
    if not letters or not r_grid or not eps_tail:
        raise ValueError("letter and grid samples must be nonempty")
    grid = sorted(Rat(r) for r in r_grid)
    tail = sorted(Rat(r) for r in eps_tail)
    report = VerificationReport(
        suite="scale-axioms",
        parameters={
            "scale": scale.name,
            "letters": str(len(letters)),
            "r-grid": " ".join(format_rat(r) for r in grid),
            "eps-tail": " ".join(format_rat(r) for r in tail),
            "limit-threshold": format_rat(limit_threshold),
            "declared-regular": str(scale.declared_regular).lower(),
        },
    )
    for r in grid:
        report.add(
            CheckCase.compare(
                {"axiom": "identity-letter-neutral", "r": format_rat(r)},
                "==",
                scale(IDENTITY, r),
                r,
            )
        )
    for x in letters:
        fx = format_letter(x)
        for r in grid:
            report.add(
                CheckCase.compare(
                    {"axiom": "dominates-argument", "x": fx, "r": format_rat(r)},
                    ">=",
                    scale(x, r),
                    r,
                )
            )
        report.add(
            CheckCase.compare(
                {"axiom": "zero-only-at-zero", "x": fx, "r": "0/1"},
                "==",
                scale(x, ZERO),
                ZERO,
            )
        )
        for r in grid:
            if r > 0:
                report.add(
                    CheckCase.compare(
                        {"axiom": "positive-away-from-zero", "x": fx, "r": format_rat(r)},
                        ">",
                        scale(x, r),
                        ZERO,
                    )
                )
        for r1, r2 in zip(grid, grid[1:]):
            report.add(
                CheckCase.compare(
                    {
                        "axiom": "monotone-in-r",
                        "x": fx,
                        "r1": format_rat(r1),
                        "r2": format_rat(r2),
                    },
                    "<=",
                    scale(x, r1),
                    scale(x, r2),
                )
            )
        for eps in tail:
            report.add(
                CheckCase.compare(
                    {"axiom": "vanishes-near-zero (consistency)", "x": fx, "r": format_rat(eps)},
                    "<=",
                    scale(x, eps),
                    limit_threshold,
                )
            )
        for r in grid:
            report.add(
                CheckCase.compare(
                    {"axiom": "inverse-symmetric", "x": fx, "r": format_rat(r)},
                    "==",
                    scale(x.inverse(), r),
                    scale(x, r),
                )
            )
        if scale.declared_regular and x.point is not None:
            for level in range(x.point.depth + 1):
                truncated = Letter(x.sign, x.point.truncate(level))
                for r in grid:
                    report.add(
                        CheckCase.compare(
                            {
                                "axiom": "regular-under-truncation",
                                "x": fx,
                                "level": str(level),
                                "r": format_rat(r),
                            },
                            ">=",
                            scale(x, r),
                            scale(truncated, r),
                        )
                    )
    return report
