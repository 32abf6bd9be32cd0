"""Facing-step matching for paths over U, D and the horizontal step H.

A U step and a later D step face each other when the horizontal segment
joining their midpoints lies weakly below the path; those pairs form the
unique proper parenthesis matching of the word, with H steps ignored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


def check_tripath(t: str) -> str:
    if set(t) - {"U", "D", "H"}:
        raise ValueError(f"not a U/D/H path: {t!r}")
    return t


@lru_cache(maxsize=None)
def tri_heights(t: str) -> tuple[int, ...]:
    """Running heights with U = +1, D = -1, H = 0."""
    check_tripath(t)
    steps = {"U": 1, "D": -1, "H": 0}
    return tuple(itertools.accumulate(steps[c] for c in t))


@dataclass(frozen=True)
class Matching:
    """Matched (U, D) index pairs and the leftover steps, all 1-based.

    Every unmatched D sits to the left of every unmatched U; H steps
    never appear in any role.
    """

    pairs: tuple[tuple[int, int], ...]
    unmatched_d: tuple[int, ...]
    unmatched_u: tuple[int, ...]


@lru_cache(maxsize=None)
def match_faces(t: str) -> Matching:
    """Stack scan: U pushes, D pops a match if possible, H is skipped."""
    check_tripath(t)
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    unmatched_d: list[int] = []
    for a, c in enumerate(t, start=1):
        if c == "U":
            stack.append(a)
        elif c == "D":
            if stack:
                pairs.append((stack.pop(), a))
            else:
                unmatched_d.append(a)
    pairs.sort()
    return Matching(tuple(pairs), tuple(unmatched_d), tuple(stack))
