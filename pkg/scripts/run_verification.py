#!/usr/bin/env python3
"""Run every verification suite at desk scale and print the reports.

Exits nonzero if any case fails anywhere.
"""

import sys
from fractions import Fraction as F

from graev.freegroup import Letter, Point
from graev.scales import TRIVIAL_SCALE, check_scale_axioms, weighted_scale
from graev.sampling import exhaustive_reduced_words
from graev.tower import check_discreteness, check_extension_conditions

PROBE_LETTERS = [
    Letter(s, Point(c)) for c in ((), (1,), (1, 2), (0, 0, 3)) for s in (1, -1)
]
R_GRID = [F(0), F(1, 8), F(1, 2), F(1), F(2)]
EPS_TAIL = [F(1, 64), F(1, 256)]


def main() -> int:
    failed = 0
    for scale in (TRIVIAL_SCALE, weighted_scale()):
        report = check_scale_axioms(scale, PROBE_LETTERS, R_GRID, EPS_TAIL)
        print(report.render_text())
        print()
        failed += report.summary["failed"]
    for level in (0, 1, 2, 3):
        report = check_extension_conditions(level, weighted_scale(), PROBE_LETTERS, R_GRID)
        print(report.render_text())
        print()
        failed += report.summary["failed"]
    for level in (1, 2):
        points = [Point(()), Point((1,)), Point((0,) * (level - 1) + (2,))]
        report = check_discreteness(level, exhaustive_reduced_words(points, 2))
        print(report.render_text())
        print()
        failed += report.summary["failed"]
    print("all suites passed" if failed == 0 else f"{failed} case(s) FAILED")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
