"""Plane walks with N/S/E/W steps and the path-pair correspondence omega.

omega sends a pair of equal-length U/D paths to a walk, one step per
position: UU -> E, UD -> N, DU -> S, DD -> W. After l steps the walk sits at
((h_l(P)+h_l(Q))/2, (h_l(P)-h_l(Q))/2), which turns nesting and endpoint
conditions on pairs into region and endpoint conditions on walks. The maps
phi_tilde, psi_tilde and psi_tilde_s are the walk-level forms of phi, psi
and psi_s, implemented directly on walks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .paths import check_path
from .single import xi, xi_inv, xi_s, xi_s_inv

_PAIR_TO_STEP = {"UU": "E", "UD": "N", "DU": "S", "DD": "W"}
_STEP_TO_PAIR = {"E": ("U", "U"), "N": ("U", "D"), "S": ("D", "U"), "W": ("D", "D")}
_DXY = {"E": (1, 0), "N": (0, 1), "S": (0, -1), "W": (-1, 0)}
_SWAP_DIAG = str.maketrans("NESW", "ENWS")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def check_walk(w: str) -> str:
    if set(w) - {"N", "S", "E", "W"}:
        raise ValueError(f"not an N/S/E/W walk: {w!r}")
    return w


def omega(p: str, q: str) -> str:
    """Encode a pair of paths as a plane walk, one step per position."""
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    check_path(p)
    check_path(q)
    return "".join(_PAIR_TO_STEP[a + b] for a, b in zip(p, q))


def omega_inv(w: str) -> tuple[str, str]:
    """Decode a plane walk back into its path pair."""
    check_walk(w)
    steps = [_STEP_TO_PAIR[c] for c in w]
    return "".join(a for a, _ in steps), "".join(b for _, b in steps)


def positions(w: str) -> tuple[tuple[int, int], ...]:
    """Positions after each step, the origin not included."""
    check_walk(w)
    x = y = 0
    out = []
    for c in w:
        dx, dy = _DXY[c]
        x += dx
        y += dy
        out.append((x, y))
    return tuple(out)


@dataclass(frozen=True)
class WalkGeometry:
    endpoint: tuple[int, int]
    min_x: int
    min_y: int
    stays_octant: bool
    stays_quadrant: bool
    stays_upper_half: bool


def walk_geometry(w: str) -> WalkGeometry:
    """Endpoint, coordinate minima and region flags, the origin included."""
    check_walk(w)
    x = y = 0
    min_x = min_y = 0
    octant = True
    for c in w:
        dx, dy = _DXY[c]
        x += dx
        y += dy
        if x < min_x:
            min_x = x
        if y < min_y:
            min_y = y
        if y > x:
            octant = False
    return WalkGeometry(
        endpoint=(x, y),
        min_x=min_x,
        min_y=min_y,
        stays_octant=octant and min_y >= 0,
        stays_quadrant=min_x >= 0 and min_y >= 0,
        stays_upper_half=min_y >= 0,
    )


def _check_quadrant_domain(w: str) -> tuple[int, int]:
    """Validate that w stays in the first quadrant; any endpoint is allowed."""
    geo = walk_geometry(w)
    _require(geo.stays_quadrant, "walk leaves the first quadrant")
    return geo.endpoint


def phi_tilde(w: str) -> str:
    """Walk-level phi: octant image of a quadrant walk.

    Step 1 swaps N with E and S with W on every step ending strictly above
    the diagonal, positions taken in the original walk. Step 2 turns the S
    steps of the result that reach a new minimum y-coordinate into N steps.
    """
    _check_quadrant_domain(w)
    wp = "".join(
        c.translate(_SWAP_DIAG) if y > x else c for c, (x, y) in zip(w, positions(w))
    )
    out = []
    y = min_y = 0
    for c in wp:
        y += _DXY[c][1]
        if c == "S" and y < min_y:
            out.append("N")
        else:
            out.append(c)
        if y < min_y:
            min_y = y
    return "".join(out)


def phi_tilde_inv(w2: str, i: int, j: int) -> str:
    """Inverse of phi_tilde; conjugates the pair-level inverse by omega."""
    from .pairs import phi_inv

    pt, qt = omega_inv(w2)
    p, q, _ = phi_inv(pt, qt, i, j)
    return omega(p, q)


def ns_ew_split(w: str) -> tuple[str, str, str]:
    """Split into the NS and EW subsequences plus a V/H interleaving mask."""
    check_walk(w)
    ns = "".join(c for c in w if c in "NS")
    ew = "".join(c for c in w if c in "EW")
    mask = "".join("V" if c in "NS" else "H" for c in w)
    return ns, ew, mask


def interleave(ns: str, ew: str, mask: str) -> str:
    """Rebuild a walk from its split; inverse of ns_ew_split."""
    _require(
        len(ns) + len(ew) == len(mask),
        f"mask length {len(mask)} does not cover {len(ns)} + {len(ew)} steps",
    )
    _require(set(mask) <= {"V", "H"}, "mask must be over 'V'/'H'")
    _require(len(ns) == mask.count("V"), "vertical step count does not match mask")
    it_ns, it_ew = iter(ns), iter(ew)
    return "".join(next(it_ns) if m == "V" else next(it_ew) for m in mask)


_EW_TO_PATH = str.maketrans("EW", "UD")
_PATH_TO_EW = str.maketrans("UD", "EW")


def psi_tilde(w: str) -> str:
    """Walk-level psi: apply xi to the EW-subsequence, E as U and W as D."""
    _check_quadrant_domain(w)
    ns, ew, mask = ns_ew_split(w)
    return interleave(ns, xi(ew.translate(_EW_TO_PATH)).translate(_PATH_TO_EW), mask)


def psi_tilde_inv(wh: str) -> str:
    """Inverse of psi_tilde: apply xi_inv to the EW-subsequence."""
    geo = walk_geometry(wh)
    _require(geo.stays_upper_half, "walk leaves the upper half-plane")
    _require(geo.endpoint[0] in (0, 1), f"walk must end at x = 0 or 1, got {geo.endpoint}")
    ns, ew, mask = ns_ew_split(wh)
    return interleave(ns, xi_inv(ew.translate(_EW_TO_PATH)).translate(_PATH_TO_EW), mask)


def psi_tilde_s(w: str, s: int) -> str:
    """Ending-abscissa-s variant: apply xi_s to the EW-subsequence.

    The image ends at (s, j) and its leftmost point lies on x = -(i-s)/2.
    """
    _check_quadrant_domain(w)
    ns, ew, mask = ns_ew_split(w)
    return interleave(ns, xi_s(ew.translate(_EW_TO_PATH), s).translate(_PATH_TO_EW), mask)


def psi_tilde_s_inv(wh: str) -> str:
    """Inverse of psi_tilde_s; s and i are read off the walk itself."""
    geo = walk_geometry(wh)
    _require(geo.stays_upper_half, "walk leaves the upper half-plane")
    _require(geo.endpoint[0] >= 0, f"walk must end at x >= 0, got {geo.endpoint}")
    ns, ew, mask = ns_ew_split(wh)
    return interleave(ns, xi_s_inv(ew.translate(_EW_TO_PATH)).translate(_PATH_TO_EW), mask)


def shadow_contains(i: int, j: int, x: int, y: int) -> bool:
    """Membership of (x, y) in sh(i,j) = {i-j <= x-y <= i+j <= x+y}."""
    _require(i >= j >= 0, f"need i >= j >= 0, got i={i}, j={j}")
    return i - j <= x - y <= i + j <= x + y


# ---------------------------------------------------------------------------
# Walk families


@dataclass(frozen=True)
class WalkFamilySpec:
    """A walk family plus its parameters.

    Tags: O (octant), Ox (octant, ends on the x-axis), Odiag (octant, ends
    on y = x), Osh (octant, ends in sh(i,j)), Q (quadrant), Qend (quadrant,
    ends at (i,j)), Qx (quadrant, ends on the x-axis), H (upper half-plane),
    Hend (upper half-plane, ends at (i,j)), Hij (upper half-plane, ends at
    (i mod 2, j) with leftmost abscissa -floor(i/2)).
    """

    family: str
    n: int
    i: int | None = None
    j: int | None = None
    s: int | None = None


def _need_ij(spec: WalkFamilySpec) -> tuple[int, int]:
    if spec.i is None or spec.j is None:
        raise ValueError(f"walk family {spec.family} needs both i and j")
    return spec.i, spec.j


def _walk_search(n, region, target, accept) -> tuple[str, ...]:
    """Depth-first generation with early region pruning.

    region(x, y) is the prefix constraint; target, when set, prunes on
    Manhattan distance to an exact endpoint; accept(x, y, min_x) is the
    final filter. Steps are tried in the order E, N, S, W.
    """
    out: list[str] = []
    chars: list[str] = []

    def walk(x: int, y: int, mnx: int, m: int) -> None:
        if target is not None and abs(target[0] - x) + abs(target[1] - y) > m:
            return
        if m == 0:
            if accept is None or accept(x, y, mnx):
                out.append("".join(chars))
            return
        for c in "ENSW":
            dx, dy = _DXY[c]
            nx, ny = x + dx, y + dy
            if region(nx, ny):
                chars.append(c)
                walk(nx, ny, min(mnx, nx), m - 1)
                chars.pop()

    walk(0, 0, 0, n)
    return tuple(out)


def enumerate_walk_family(spec: WalkFamilySpec) -> tuple[str, ...]:
    """All members, each once, in lexicographic step order E < N < S < W."""
    f, n = spec.family, spec.n
    if n < 0:
        raise ValueError("n must be nonnegative")
    octant = lambda x, y: x >= y >= 0
    quadrant = lambda x, y: x >= 0 and y >= 0
    upper = lambda x, y: y >= 0
    if f == "O":
        return _walk_search(n, octant, None, None)
    if f == "Ox":
        return _walk_search(n, octant, None, lambda x, y, m: y == 0)
    if f == "Odiag":
        return _walk_search(n, octant, None, lambda x, y, m: x == y)
    if f == "Osh":
        i, j = _need_ij(spec)
        _require(i >= j >= 0, f"need i >= j >= 0, got i={i}, j={j}")
        return _walk_search(n, octant, None, lambda x, y, m: shadow_contains(i, j, x, y))
    if f == "Q":
        return _walk_search(n, quadrant, None, None)
    if f == "Qend":
        return _walk_search(n, quadrant, _need_ij(spec), None)
    if f == "Qx":
        return _walk_search(n, quadrant, None, lambda x, y, m: y == 0)
    if f == "H":
        return _walk_search(n, upper, None, None)
    if f == "Hend":
        return _walk_search(n, upper, _need_ij(spec), None)
    if f == "Hij":
        i, j = _need_ij(spec)
        _require(i >= 0 and j >= 0, f"need i, j >= 0, got i={i}, j={j}")
        lo = -(i // 2)
        return _walk_search(
            n,
            lambda x, y: y >= 0 and x >= lo,
            (i % 2, j),
            lambda x, y, m: m == lo,
        )
    raise ValueError(f"unknown walk family tag: {spec.family!r}")
