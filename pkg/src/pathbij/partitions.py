"""Plane partitions in a p x q x k box and their path-tuple encoding.

A plane partition is stored as a tuple of q rows, each a tuple of p
nonnegative integers, weakly decreasing along rows and columns. A nested
k-tuple of paths of length p+q, all ending at height p-q, carries the same
data: layer l of the array is the Young diagram cut out by the l-th path,
the top path holding the smallest diagram.
"""

from __future__ import annotations

from .paths import check_path, is_weakly_below

PlanePartition = tuple[tuple[int, ...], ...]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path_to_diagram(path: str, p: int, q: int) -> tuple[int, ...]:
    """Part t counts the U steps after the t-th D step of the path.

    The path must have exactly p U steps and q D steps. Lower paths give
    containing diagrams.
    """
    check_path(path)
    _require(
        path.count("U") == p and path.count("D") == q,
        f"need {p} U steps and {q} D steps, got {path.count('U')} and {path.count('D')}",
    )
    parts: list[int] = []
    seen_u = 0
    for c in reversed(path):
        if c == "U":
            seen_u += 1
        else:
            parts.append(seen_u)
    return tuple(reversed(parts))


def diagram_to_path(parts: tuple[int, ...], p: int, q: int) -> str:
    """Boundary path of a diagram inside the p x q rectangle."""
    _require(len(parts) == q, f"need {q} parts, got {len(parts)}")
    _require(all(x >= 0 for x in parts), "parts must be nonnegative")
    _require(all(parts[t] >= parts[t + 1] for t in range(q - 1)), "parts must weakly decrease")
    _require(q == 0 or parts[0] <= p, f"parts must be at most {p}")
    pieces = []
    prev = p
    for part in parts:
        pieces.append("U" * (prev - part))
        pieces.append("D")
        prev = part
    pieces.append("U" * prev)
    return "".join(pieces)


def check_pp(a: PlanePartition, k: int | None = None) -> PlanePartition:
    """Validate rectangularity, row/column monotonicity and the bound k."""
    q = len(a)
    p = len(a[0]) if q else 0
    for row in a:
        _require(len(row) == p, "rows must all have the same length")
        _require(all(x >= 0 for x in row), "entries must be nonnegative")
        _require(
            all(row[c] >= row[c + 1] for c in range(p - 1)),
            "rows must weakly decrease",
        )
        if k is not None:
            _require(all(x <= k for x in row), f"entries must be at most {k}")
    for r in range(q - 1):
        _require(
            all(a[r][c] >= a[r + 1][c] for c in range(p)),
            "columns must weakly decrease",
        )
    return a


def tuple_to_pp(paths: tuple[str, ...], p: int, q: int) -> PlanePartition:
    """Stack the diagrams of a nested tuple into a plane partition.

    Every path must end at (p+q, p-q); entry (i, j) counts the layers whose
    diagram contains the cell, so the result fits a p x q x len(paths) box.
    """
    diagrams = [path_to_diagram(path, p, q) for path in paths]
    for t in range(len(paths) - 1):
        _require(
            is_weakly_below(paths[t + 1], paths[t]),
            f"path {t + 2} is not weakly below path {t + 1}",
        )
    return tuple(
        tuple(sum(1 for d in diagrams if d[r] >= c) for c in range(1, p + 1))
        for r in range(q)
    )


def pp_to_tuple(a: PlanePartition, k: int, p: int | None = None) -> tuple[str, ...]:
    """Slice a plane partition into its k boundary paths.

    Layer l (1-based) is the diagram of the cells with entry >= k+1-l. The
    column count p is read off the rows; pass it explicitly when q = 0.
    """
    check_pp(a, k)
    q = len(a)
    if q:
        p = len(a[0])
    elif p is None:
        raise ValueError("p is needed when the array has no rows")
    paths = []
    for l in range(1, k + 1):
        threshold = k + 1 - l
        parts = tuple(sum(1 for x in row if x >= threshold) for row in a)
        paths.append(diagram_to_path(parts, p, q))
    return tuple(paths)


def enumerate_pp(p: int, q: int, k: int) -> tuple[PlanePartition, ...]:
    """All plane partitions in the p x q x k box, sorted by their rows."""
    if p < 0 or q < 0 or k < 0:
        raise ValueError("p, q, k must be nonnegative")
    rows_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}

    def rows_below(cap: tuple[int, ...]) -> list[tuple[int, ...]]:
        if cap in rows_cache:
            return rows_cache[cap]
        out: list[tuple[int, ...]] = []
        row = [0] * p

        def fill(c: int, left: int) -> None:
            if c == p:
                out.append(tuple(row))
                return
            for v in range(min(left, cap[c]) + 1):
                row[c] = v
                fill(c + 1, v)

        fill(0, k)
        rows_cache[cap] = out
        return out

    results: list[PlanePartition] = []
    partial: list[tuple[int, ...]] = []

    def build(r: int, cap: tuple[int, ...]) -> None:
        if r == q:
            results.append(tuple(partial))
            return
        for row in rows_below(cap):
            partial.append(row)
            build(r + 1, row)
            partial.pop()

    build(0, (k,) * p)
    results.sort()
    return tuple(results)


def format_pp(a: PlanePartition) -> str:
    """Text encoding: rows of space-separated integers, one row per line."""
    return "\n".join(" ".join(str(x) for x in row) for row in a)


def parse_pp(text: str) -> PlanePartition:
    """Parse the text encoding; ';' is accepted as a row separator too."""
    rows = [r for r in text.replace(";", "\n").splitlines() if r.strip()]
    try:
        return tuple(tuple(int(x) for x in row.split()) for row in rows)
    except ValueError:
        raise ValueError(f"not a plane partition encoding: {text!r}") from None
