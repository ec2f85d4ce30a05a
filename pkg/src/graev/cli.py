"""Command-line surface: exact norms and distances, match enumeration,
truncation, separating levels, and the verification suites.

Exit codes: 0 success (and all verification cases passed), 1 at least one
verification case failed, 2 usage or parse errors, 3 resource-limit errors.
All numeric output is exact "p/q".
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import IO

from .errors import ResourceLimitError
from .freegroup import (
    Point,
    Rat,
    ReducedWord,
    Word,
    WordSyntaxError,
    format_rat,
    format_word,
    invert,
    multiply,
    parse_word,
    reduce_word,
)
from .graevmetric import enumeration_cap, graev_norm_dp
from .matching import count_matches, enumerate_matches
from .reports import VerificationReport
from .sampling import exhaustive_reduced_words, sample_corpus, sample_distinct_pairs
from .scales import (
    Scale,
    TRIVIAL_SCALE,
    check_scale_axioms,
    load_scale_file,
    norm_bounds,
    norm_theta_min,
    weighted_scale,
)
from .tower import (
    check_discreteness,
    check_extension_conditions,
    check_lipschitz_distance,
    project_word,
    separating_level,
)


class CorpusSyntaxError(ValueError):
    """Corpus file problem; carries the line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(message)
        self.line = line
        self.column = column


def parse_corpus(source: str | IO[str]) -> list[ReducedWord]:
    """One word per line in the word grammar, "#" comments allowed; every
    line is parsed and reduced.  An empty file is a valid empty corpus."""
    if isinstance(source, str):
        with open(source, "r", encoding="utf-8") as fh:
            return parse_corpus(fh)
    words: list[ReducedWord] = []
    for lineno, raw in enumerate(source, start=1):
        content = raw.split("#", 1)[0].rstrip("\n")
        if not content.strip():
            continue
        try:
            words.append(reduce_word(parse_word(content)))
        except WordSyntaxError as exc:
            raise CorpusSyntaxError(
                f"line {lineno}, column {exc.position + 1}: {exc}",
                lineno,
                exc.position + 1,
            ) from None
    return words


def _resolve_scale(name: str) -> Scale:
    if name == "trivial":
        return TRIVIAL_SCALE
    if name == "weighted":
        return weighted_scale()
    if name.startswith("file:"):
        return load_scale_file(name[len("file:") :])
    raise ValueError(f"unknown scale {name!r}; use trivial, weighted, or file:<path>")


def _default_points(level: int) -> list[Point]:
    if level == 0:
        return [Point(())]
    points = [Point(()), Point((1,)), Point((0,) * (level - 1) + (2,))]
    seen: set[Point] = set()
    return [p for p in points if not (p in seen or seen.add(p))]


def _probe_letters() -> list:
    from .freegroup import Letter

    out = []
    for coords in ((), (1,), (1, 2), (0, 0, 3)):
        p = Point(coords)
        out.append(Letter(1, p))
        out.append(Letter(-1, p))
    return out


_DEFAULT_R_GRID = (Rat(0), Rat(1, 4), Rat(1, 2), Rat(1), Rat(2))
_DEFAULT_EPS_TAIL = (Rat(1, 64), Rat(1, 256))


# ---------------------------------------------------------------------------
# Subcommand handlers.


def _cmd_norm(args: argparse.Namespace) -> int:
    w = parse_word(args.word)
    rw = reduce_word(w)
    if args.scale is None:
        if args.bruteforce:
            from .graevmetric import graev_norm_bruteforce

            result = graev_norm_bruteforce(rw)
            value, witness = result.value, result.witness
        else:
            value = graev_norm_dp(rw)
            witness = norm_theta_min(rw, TRIVIAL_SCALE).witness
        if args.json:
            print(
                json.dumps(
                    {
                        "value": format_rat(value),
                        "witness": witness.serialize(),
                        "reduced_input": format_word(rw),
                    },
                    sort_keys=True,
                )
            )
        else:
            print(format_rat(value))
            if args.witness:
                print(f"witness {witness.serialize()}")
        return 0
    scale = _resolve_scale(args.scale)
    bounds = norm_bounds(rw, scale, args.budget)
    if args.json:
        print(
            json.dumps(
                {
                    "lower": format_rat(bounds.lower),
                    "upper": format_rat(bounds.upper),
                    "witness_word": format_word(bounds.witness_word),
                    "witness_match": bounds.witness_match.serialize(),
                    "reduced_input": format_word(rw),
                },
                sort_keys=True,
            )
        )
    else:
        print(f"lower {format_rat(bounds.lower)} upper {format_rat(bounds.upper)}")
        if args.witness:
            print(f"witness-word {format_word(bounds.witness_word)}")
            print(f"witness-match {bounds.witness_match.serialize()}")
    return 0


def _cmd_dist(args: argparse.Namespace) -> int:
    u = reduce_word(parse_word(args.left))
    v = reduce_word(parse_word(args.right))
    forward = multiply(invert(u), v)
    backward = multiply(u, invert(v))
    value = graev_norm_dp(forward) + graev_norm_dp(backward)
    if args.json:
        print(
            json.dumps(
                {
                    "value": format_rat(value),
                    "witness": {
                        "delta": norm_theta_min(forward, TRIVIAL_SCALE).witness.serialize(),
                        "delta_inverse": norm_theta_min(
                            backward, TRIVIAL_SCALE
                        ).witness.serialize(),
                    },
                    "reduced_input": [format_word(u), format_word(v)],
                },
                sort_keys=True,
            )
        )
    else:
        print(format_rat(value))
    return 0


def _cmd_matches(args: argparse.Namespace) -> int:
    if args.length < 1:
        raise ValueError("--len must be >= 1")
    if args.count_only:
        print(count_matches(args.length))
        return 0
    cap = enumeration_cap()
    if args.length > cap:
        raise ResourceLimitError(
            f"listing matches of length {args.length} is above the enumeration cap "
            f"{cap}; use --count-only or raise GRAEV_MATCH_CAP"
        )
    for m in enumerate_matches(args.length):
        print(m.serialize())
    return 0


def _cmd_project(args: argparse.Namespace) -> int:
    w = parse_word(args.word)
    print(format_word(project_word(w, args.level)))
    return 0


def _cmd_seplevel(args: argparse.Namespace) -> int:
    u = reduce_word(parse_word(args.left))
    v = reduce_word(parse_word(args.right))
    level = separating_level(u, v)
    print("equal" if level is None else level)
    return 0


def _load_or_default_corpus(args: argparse.Namespace, points: list[Point]) -> list[Word]:
    if args.corpus is not None:
        return parse_corpus(args.corpus)
    if args.cases:
        rng = random.Random(args.seed)
        return sample_corpus(rng, points, args.cases, args.max_len)
    return exhaustive_reduced_words(points, 2)


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "discreteness":
        points = _default_points(args.level)
        corpus = _load_or_default_corpus(args, points)
        report = check_discreteness(args.level, corpus)
        report.parameters["source"] = args.corpus or ("random" if args.cases else "exhaustive")
    elif args.suite == "lipschitz":
        points = _default_points(args.level + 1)
        if args.corpus is not None:
            corpus = parse_corpus(args.corpus)
            pairs = [(u, v) for i, u in enumerate(corpus) for v in corpus[i + 1 :]]
        elif args.cases:
            rng = random.Random(args.seed)
            pairs = sample_distinct_pairs(rng, points, args.cases, args.max_len)
        else:
            corpus = exhaustive_reduced_words(points, 2)
            pairs = [(u, v) for i, u in enumerate(corpus) for v in corpus[i + 1 :]]
        report = VerificationReport(
            suite="lipschitz",
            parameters={"level": str(args.level), "pairs": str(len(pairs))},
        )
        for u, v in pairs:
            report.add(check_lipschitz_distance(u, v, args.level))
    elif args.suite == "extension":
        scale = _resolve_scale(args.scale or "weighted")
        report = check_extension_conditions(
            args.level, scale, _probe_letters(), _DEFAULT_R_GRID
        )
    elif args.suite == "scale-axioms":
        scale = _resolve_scale(args.scale or "weighted")
        report = check_scale_axioms(
            scale, _probe_letters(), _DEFAULT_R_GRID, _DEFAULT_EPS_TAIL
        )
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown suite {args.suite!r}")
    report.seed = args.seed
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    else:
        print(report.render_text())
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graev",
        description="Exact Graev norms and metrics on free-group words, "
        "scale-norm bounds, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("norm", help="norm of a word (exact, or bounded under a scale)")
    p_norm.add_argument("word")
    p_norm.add_argument("--scale", help="trivial | weighted | file:<path>")
    p_norm.add_argument("--budget", type=int, default=0, help="insertion budget for bounds")
    p_norm.add_argument("--witness", action="store_true", help="also print the witness")
    p_norm.add_argument("--bruteforce", action="store_true", help="use match enumeration (capped)")
    p_norm.add_argument("--json", action="store_true")
    p_norm.set_defaults(func=_cmd_norm)

    p_dist = sub.add_parser("dist", help="exact two-sided distance between two words")
    p_dist.add_argument("left")
    p_dist.add_argument("right")
    p_dist.add_argument("--json", action="store_true")
    p_dist.set_defaults(func=_cmd_dist)

    p_matches = sub.add_parser("matches", help="enumerate matches of a given length")
    p_matches.add_argument("--len", dest="length", type=int, required=True)
    p_matches.add_argument("--count-only", action="store_true")
    p_matches.set_defaults(func=_cmd_matches)

    p_project = sub.add_parser("project", help="truncate a word at a level")
    p_project.add_argument("-n", "--level", type=int, required=True)
    p_project.add_argument("word")
    p_project.set_defaults(func=_cmd_project)

    p_sep = sub.add_parser("seplevel", help="least level separating two words")
    p_sep.add_argument("left")
    p_sep.add_argument("right")
    p_sep.set_defaults(func=_cmd_seplevel)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=["discreteness", "lipschitz", "extension", "scale-axioms"],
    )
    p_verify.add_argument("--level", type=int, default=1)
    p_verify.add_argument("--corpus", help="text file, one word per line")
    p_verify.add_argument("--cases", type=int, default=0, help="random case count")
    p_verify.add_argument("--max-len", type=int, default=4, help="random word length cap")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--scale", help="trivial | weighted | file:<path>")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (WordSyntaxError, CorpusSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
