"""Lattice paths over the steps U = (1,1) and D = (1,-1).

A path is a plain string of 'U' and 'D' characters; the empty string is the
length-0 path. This module owns the height geometry, the weakly-below partial
order, and exhaustive enumeration of every path family used elsewhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

UP = "U"
DOWN = "D"

_NEGATE = str.maketrans("UD", "DU")
_LEXKEY = str.maketrans("UD", "01")


def check_path(path: str) -> str:
    """Validate the U/D text encoding and return the path unchanged."""
    if set(path) - {"U", "D"}:
        raise ValueError(f"not a U/D path: {path!r}")
    return path


@lru_cache(maxsize=None)
def heights(path: str) -> tuple[int, ...]:
    """Height profile (h_1(P), ..., h_n(P)): running sum of +1 per U, -1 per D."""
    check_path(path)
    return tuple(itertools.accumulate(1 if c == UP else -1 for c in path))


def end_height(path: str) -> int:
    h = heights(path)
    return h[-1] if h else 0


def min_height(path: str) -> int:
    """Lowest height over the whole path, the starting point at 0 included."""
    return min(heights(path) + (0,))


def negate(path: str) -> str:
    """Reflect along the x-axis: swap U and D everywhere."""
    return check_path(path).translate(_NEGATE)


def flip_steps(path: str, positions) -> str:
    """Swap U/D at the given 1-based positions."""
    chars = list(path)
    for a in positions:
        if not 1 <= a <= len(chars):
            raise ValueError(f"flip position {a} outside 1..{len(chars)}")
        chars[a - 1] = DOWN if chars[a - 1] == UP else UP
    return "".join(chars)


def is_weakly_below(q: str, p: str) -> bool:
    """True iff h_a(Q) <= h_a(P) for every a. Lengths must agree."""
    if len(q) != len(p):
        raise ValueError(f"length mismatch: {len(q)} vs {len(p)}")
    return all(a <= b for a, b in zip(heights(q), heights(p)))


def is_prefix(path: str) -> bool:
    return min_height(path) >= 0


def is_dyck(path: str) -> bool:
    return min_height(path) >= 0 and end_height(path) == 0


def is_grand(path: str) -> bool:
    return end_height(path) == len(path) % 2


@dataclass(frozen=True)
class PathClass:
    is_dyck: bool
    is_grand: bool
    is_prefix: bool


def classify(path: str) -> PathClass:
    """Membership flags of a single path in the three named families."""
    return PathClass(is_dyck(path), is_grand(path), is_prefix(path))


def lexkey(word: str) -> str:
    """Sort key realizing the U < D order ('U' -> '0', 'D' -> '1')."""
    return word.translate(_LEXKEY)


def _tuple_key(paths: tuple[str, ...]) -> str:
    return "".join(paths).translate(_LEXKEY)


# ---------------------------------------------------------------------------
# Families


@dataclass(frozen=True)
class FamilySpec:
    """A path family plus its parameters.

    Tags for single paths: A (all), D (Dyck), G (Grand Dyck), P (prefixes),
    Pend (prefixes ending at height s), Aend (paths ending at height s; with i
    given, additionally minimum height -(i-s)/2). Tags for nested tuples:
    Ak, Pk, Gk (k paths, parameter k) and M2, P2, G2 (pairs; i and j select
    the endpoint-constrained sets, P2/G2 without them are the full unions).
    """

    family: str
    n: int
    k: int | None = None
    i: int | None = None
    j: int | None = None
    s: int | None = None


def valid_ij(n: int) -> tuple[tuple[int, int], ...]:
    """All (i, j) with i >= j >= 0, i+j <= n and i+j = n (mod 2)."""
    out = []
    for i in range(n + 1):
        for j in range(min(i, n - i) + 1):
            if (i + j) % 2 == n % 2:
                out.append((i, j))
    return tuple(out)


def check_ij(n: int, i, j) -> tuple[int, int]:
    if i is None or j is None:
        raise ValueError("this family needs both i and j")
    if not (i >= j >= 0):
        raise ValueError(f"need i >= j >= 0, got i={i}, j={j}")
    if i + j > n:
        raise ValueError(f"need i+j <= n, got i+j={i + j}, n={n}")
    if (i + j) % 2 != n % 2:
        raise ValueError(f"need i+j = n (mod 2), got i+j={i + j}, n={n}")
    return i, j


@lru_cache(maxsize=None)
def all_paths(n: int) -> tuple[str, ...]:
    """Every path of length n, in lexicographic order with U < D."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple("".join(w) for w in itertools.product("UD", repeat=n))


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[str, ...]:
    return tuple(p for p in all_paths(n) if is_dyck(p))


@lru_cache(maxsize=None)
def prefix_paths(n: int) -> tuple[str, ...]:
    return tuple(p for p in all_paths(n) if is_prefix(p))


@lru_cache(maxsize=None)
def grand_paths(n: int) -> tuple[str, ...]:
    return tuple(p for p in all_paths(n) if is_grand(p))


@lru_cache(maxsize=None)
def _m2_members(n: int, i: int, j: int) -> tuple[tuple[str, str], ...]:
    """Pairs -P <= Q <= P with h(P) = i+j and h(Q) = i-j, by pruned search."""
    tp, tq = i + j, i - j
    out: list[tuple[str, str]] = []
    pc: list[str] = []
    qc: list[str] = []

    def walk(hp: int, hq: int, m: int) -> None:
        # reachable endpoints always have the right parity, a range check suffices
        if abs(tp - hp) > m or abs(tq - hq) > m:
            return
        if m == 0:
            out.append(("".join(pc), "".join(qc)))
            return
        for dp, sp in ((1, UP), (-1, DOWN)):
            for dq, sq in ((1, UP), (-1, DOWN)):
                np_, nq = hp + dp, hq + dq
                if -np_ <= nq <= np_:
                    pc.append(sp)
                    qc.append(sq)
                    walk(np_, nq, m - 1)
                    pc.pop()
                    qc.pop()

    walk(0, 0, n)
    out.sort(key=_tuple_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _g2_members(n: int, i: int, j: int) -> tuple[tuple[str, str], ...]:
    """Nested pairs with ell(P,Q) = -floor(i/2), h(P) = j+d, h(Q) = -j+d, d = i mod 2."""
    t = i // 2
    d = i % 2
    tp, tq = j + d, -j + d
    out: list[tuple[str, str]] = []
    pc: list[str] = []
    qc: list[str] = []

    def walk(hp: int, hq: int, smin: int, m: int) -> None:
        if abs(tp - hp) > m or abs(tq - hq) > m:
            return
        if smin > -t:
            # must still dip the agreement height to -t, then climb back to d
            c = (hp + hq) // 2
            if (c + t) + (t + d) > m:
                return
        if m == 0:
            if smin == -t:
                out.append(("".join(pc), "".join(qc)))
            return
        for dp, sp in ((1, UP), (-1, DOWN)):
            for dq, sq in ((1, UP), (-1, DOWN)):
                np_, nq = hp + dp, hq + dq
                if nq > np_:
                    continue
                ns = min(smin, (np_ + nq) // 2)
                if ns < -t:
                    continue
                pc.append(sp)
                qc.append(sq)
                walk(np_, nq, ns, m - 1)
                pc.pop()
                qc.pop()

    walk(0, 0, 0, n)
    out.sort(key=_tuple_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _nested_tuples(
    n: int, k: int, floor: bool, ends: tuple[int, ...] | None
) -> tuple[tuple[str, ...], ...]:
    """Nested k-tuples; floor keeps the bottom path at heights >= 0,
    ends fixes the ending height of each layer."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out: list[tuple[str, ...]] = []
    cols: list[list[str]] = [[] for _ in range(k)]
    deltas = tuple(itertools.product((1, -1), repeat=k))

    def walk(h: tuple[int, ...], m: int) -> None:
        if ends is not None and any(abs(t - a) > m for t, a in zip(ends, h)):
            return
        if m == 0:
            out.append(tuple("".join(c) for c in cols))
            return
        for dv in deltas:
            nh = tuple(a + d for a, d in zip(h, dv))
            if any(nh[t] > nh[t - 1] for t in range(1, k)):
                continue
            if floor and nh[-1] < 0:
                continue
            for c, d in zip(cols, dv):
                c.append(UP if d == 1 else DOWN)
            walk(nh, m - 1)
            for c in cols:
                c.pop()

    walk((0,) * k, n)
    out.sort(key=_tuple_key)
    return tuple(out)


def _require_k(spec: FamilySpec) -> int:
    if spec.k is None or spec.k < 1:
        raise ValueError(f"family {spec.family} needs k >= 1")
    return spec.k


def enumerate_family(spec: FamilySpec):
    """All members of the family, each once, sorted by their concatenated
    step words under U < D. Single-path families yield strings, tuple
    families yield tuples of strings."""
    f, n = spec.family, spec.n
    if n < 0:
        raise ValueError("n must be nonnegative")
    if f == "A":
        return all_paths(n)
    if f == "D":
        return dyck_paths(n)
    if f == "G":
        return grand_paths(n)
    if f == "P":
        return prefix_paths(n)
    if f == "Pend":
        if spec.s is None or spec.s < 0:
            raise ValueError("family Pend needs s >= 0")
        return tuple(p for p in prefix_paths(n) if end_height(p) == spec.s)
    if f == "Aend":
        if spec.s is None:
            raise ValueError("family Aend needs s")
        members = (p for p in all_paths(n) if end_height(p) == spec.s)
        if spec.i is None:
            return tuple(members)
        if spec.i < spec.s or (spec.i - spec.s) % 2:
            raise ValueError(f"need i >= s with i = s (mod 2), got i={spec.i}, s={spec.s}")
        floor = -(spec.i - spec.s) // 2
        return tuple(p for p in members if min_height(p) == floor)
    if f == "Ak":
        return _nested_tuples(n, _require_k(spec), False, None)
    if f == "Pk":
        return _nested_tuples(n, _require_k(spec), True, None)
    if f == "Gk":
        k = _require_k(spec)
        return _nested_tuples(n, k, False, (n % 2,) * k)
    if f == "M2":
        i, j = check_ij(n, spec.i, spec.j)
        return _m2_members(n, i, j)
    if f == "G2":
        if spec.i is None and spec.j is None:
            return _nested_tuples(n, 2, False, (n % 2,) * 2)
        i, j = check_ij(n, spec.i, spec.j)
        return _g2_members(n, i, j)
    if f == "P2":
        if spec.i is None and spec.j is None:
            return _nested_tuples(n, 2, True, None)
        i, j = check_ij(n, spec.i, spec.j)
        lo, hi = i - j, i + j
        return tuple(
            (p, q)
            for p, q in _nested_tuples(n, 2, True, None)
            if lo <= end_height(q) <= hi <= end_height(p)
        )
    raise ValueError(f"unknown family tag: {spec.family!r}")
