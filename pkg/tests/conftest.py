from __future__ import annotations

from typing import Iterator

import pytest

from graev.freegroup import Point

# The standard 3-point test alphabet: the zero point and two depth-1 points.
ALPHA3 = (Point(()), Point((1,)), Point((2,)))

# Points of depth up to 3, for tests that need the projection tower to act.
DEEP_POINTS = (
    Point(()),
    Point((1,)),
    Point((2,)),
    Point((1, 2)),
    Point((0, 0, 1)),
    Point((1, 0, 2)),
)


def involutions(n: int) -> Iterator[tuple[int, ...]]:
    """All involutions on {0,...,n-1}: the brute-force oracle behind the
    match enumeration tests."""

    def build(free: tuple[int, ...]) -> Iterator[dict[int, int]]:
        if not free:
            yield {}
            return
        first, rest = free[0], free[1:]
        for sub in build(rest):
            yield {first: first, **sub}
        for k, partner in enumerate(rest):
            for sub in build(rest[:k] + rest[k + 1 :]):
                yield {first: partner, partner: first, **sub}

    for mapping in build(tuple(range(n))):
        yield tuple(mapping[i] for i in range(n))


@pytest.fixture
def alpha3() -> tuple[Point, ...]:
    return ALPHA3
