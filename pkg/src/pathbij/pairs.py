"""Bijections on pairs of paths: the flip-below step, phi and psi.

The pair sets are parameterized by (i, j) with i >= j >= 0, i+j <= n and
i+j = n (mod 2):

  M2(n,i;j): -P <= Q <= P with h(P) = i+j, h(Q) = i-j
  P2(n,i;j): P >= Q >= 0 with i-j <= h(Q) <= i+j <= h(P)
  G2(n,i;j): nested pairs with ell(P,Q) = -floor(i/2), h(P) = j + d,
             h(Q) = -j + d, where d = i mod 2

phi maps M2 onto P2 through an intermediate flip of Q's below-axis steps
followed by flipping the unmatched D steps of the disagreement path in both
coordinates; psi maps M2 onto G2 by flipping unmatched U steps of the
agreement path in both coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matching import match_faces, tri_heights
from .paths import check_ij, end_height, flip_steps, heights, is_prefix, min_height


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _same_length(p: str, q: str) -> int:
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    return len(p)


def disagreement(p: str, q: str) -> str:
    """The path (P-Q)/2: U where (U,D), D where (D,U), H where the steps agree."""
    _same_length(p, q)
    heights(p), heights(q)
    return "".join("H" if a == b else ("U" if a == "U" else "D") for a, b in zip(p, q))


def agreement(p: str, q: str) -> str:
    """The path (P+Q)/2: the common step where P and Q agree, H elsewhere."""
    _same_length(p, q)
    heights(p), heights(q)
    return "".join(a if a == b else "H" for a, b in zip(p, q))


def ell(p: str, q: str) -> int:
    """Lowest height of the agreement path, its starting point included."""
    return min(tri_heights(agreement(p, q)) + (0,))


def infer_ij(p: str, q: str) -> tuple[int, int]:
    """Read (i, j) off the ending heights: h(P) = i+j, h(Q) = i-j."""
    _same_length(p, q)
    hp, hq = end_height(p), end_height(q)
    return (hp + hq) // 2, (hp - hq) // 2


def check_m2(p: str, q: str, i: int, j: int) -> None:
    """Raise naming the first violated M2(n,i;j) predicate."""
    n = _same_length(p, q)
    check_ij(n, i, j)
    _require(end_height(p) == i + j, f"h(P) = {end_height(p)}, need i+j = {i + j}")
    _require(end_height(q) == i - j, f"h(Q) = {end_height(q)}, need i-j = {i - j}")
    hp, hq = heights(p), heights(q)
    _require(all(b <= a for a, b in zip(hp, hq)), "Q is not weakly below P")
    _require(all(-a <= b for a, b in zip(hp, hq)), "-P is not weakly below Q")


def check_p2(p: str, q: str, i: int, j: int) -> None:
    """Raise naming the first violated P2(n,i;j) predicate."""
    n = _same_length(p, q)
    check_ij(n, i, j)
    _require(min_height(q) >= 0, "Q goes below the x-axis")
    hp, hq = heights(p), heights(q)
    _require(all(b <= a for a, b in zip(hp, hq)), "Q is not weakly below P")
    _require(i - j <= end_height(q), f"h(Q) = {end_height(q)}, need at least i-j = {i - j}")
    _require(end_height(q) <= i + j, f"h(Q) = {end_height(q)}, need at most i+j = {i + j}")
    _require(i + j <= end_height(p), f"h(P) = {end_height(p)}, need at least i+j = {i + j}")


@dataclass(frozen=True)
class FlipRecord:
    """Positions touched by the flip steps, for invariant introspection.

    chi: positions flipped in both coordinates (empty when not applicable);
    lower_returns: U steps of Q ending exactly on the x-axis; r = their count.
    """

    chi: tuple[int, ...]
    lower_returns: tuple[int, ...]
    r: int


def flip_below(q: str) -> tuple[str, FlipRecord]:
    """Flip the steps of Q that end strictly below the x-axis.

    Requires h(Q) >= 0. The result is a prefix with h = h(Q) + 2r, where the
    r lower returns of Q are its U steps ending at height 0 exactly.
    """
    h = heights(q)
    _require(end_height(q) >= 0, f"flip_below needs h(Q) >= 0, got {end_height(q)}")
    flips = tuple(a for a, hh in enumerate(h, 1) if hh < 0)
    returns = tuple(a for a, (c, hh) in enumerate(zip(q, h), 1) if c == "U" and hh == 0)
    return flip_steps(q, flips), FlipRecord((), returns, len(returns))


def flip_below_inv(qp: str, r: int) -> str:
    """Recover Q from Q' and its number of lower returns.

    For l = 0..r-1, flips the fragment of Q' between the rightmost point at
    height 2l and the rightmost point at height 2l+1; those fragments are
    disjoint and in left-to-right order.
    """
    _require(r >= 0, f"need r >= 0, got {r}")
    _require(is_prefix(qp), "flip_below_inv needs a prefix")
    _require(
        end_height(qp) >= 2 * r,
        f"need h(Q') >= 2r, got h(Q') = {end_height(qp)}, r = {r}",
    )
    profile = (0,) + heights(qp)
    flips: list[int] = []
    for l in range(r):
        a = max(x for x, h in enumerate(profile) if h == 2 * l)
        b = max(x for x, h in enumerate(profile) if h == 2 * l + 1)
        flips.extend(range(a + 1, b + 1))
    return flip_steps(qp, flips)


def phi(p: str, q: str, i: int | None = None, j: int | None = None):
    """Map an M2(n,i;j) pair to its P2(n,i;j) image.

    Q is first straightened by flip_below; then chi, the unmatched D steps of
    the disagreement path (P-Q')/2, is flipped in both coordinates. Returns
    (P~, Q~, record). i and j are inferred from the ending heights when
    omitted.
    """
    if i is None and j is None:
        i, j = infer_ij(p, q)
    check_m2(p, q, i, j)
    qp, rec = flip_below(q)
    chi = match_faces(disagreement(p, qp)).unmatched_d
    return (
        flip_steps(p, chi),
        flip_steps(qp, chi),
        FlipRecord(chi, rec.lower_returns, rec.r),
    )


def phi_inv(pt: str, qt: str, i: int, j: int):
    """Map a P2(n,i;j) pair back to its M2(n,i;j) preimage.

    chi is the leftmost (h(P~)-i-j)/2 unmatched U steps of (P~-Q~)/2; after
    flipping it in both coordinates, Q is recovered by undoing r fragment
    flips with r = (h(Q') - i + j)/2. Returns (P, Q, record).
    """
    check_p2(pt, qt, i, j)
    c = (end_height(pt) - i - j) // 2
    unmatched_u = match_faces(disagreement(pt, qt)).unmatched_u
    _require(
        len(unmatched_u) >= c,
        f"need {c} unmatched U steps in the disagreement path, found {len(unmatched_u)}",
    )
    chi = unmatched_u[:c]
    p = flip_steps(pt, chi)
    qp = flip_steps(qt, chi)
    r = (end_height(qp) - i + j) // 2
    q = flip_below_inv(qp, r)
    _, rec = flip_below(q)
    return p, q, FlipRecord(chi, rec.lower_returns, r)


def psi(p: str, q: str):
    """Map an M2(n,i;j) pair to its G2(n,i;j) image.

    Flips, in both coordinates, the leftmost floor(i/2) unmatched U steps of
    the agreement path (P+Q)/2. Returns (P^, Q^, flipped positions).
    """
    i, j = infer_ij(p, q)
    check_m2(p, q, i, j)
    flips = match_faces(agreement(p, q)).unmatched_u[: i // 2]
    return flip_steps(p, flips), flip_steps(q, flips), flips


def psi_inv(ph: str, qh: str):
    """Map a G2(n,i;j) pair back to M2(n,i;j); i is recovered internally.

    i = 2 * (-ell) + d, where d is the agreement path's ending height (0 or
    1); the flips are all unmatched D steps of the agreement path.
    """
    n = _same_length(ph, qh)
    hp, hq = end_height(ph), end_height(qh)
    d = (hp + hq) // 2
    j = (hp - hq) // 2
    _require(d in (0, 1), f"agreement path must end at 0 or 1, got {d}")
    _require(j >= 0, "Q must end weakly below P")
    hsp, hsq = heights(ph), heights(qh)
    _require(all(b <= a for a, b in zip(hsp, hsq)), "Q is not weakly below P")
    i = 2 * (-ell(ph, qh)) + d
    check_ij(n, i, j)
    flips = match_faces(agreement(ph, qh)).unmatched_d
    return flip_steps(ph, flips), flip_steps(qh, flips), flips


def psi_s(p: str, q: str, s: int):
    """The ending-height-s variant of psi: apply xi_s to the agreement path.

    Flips the leftmost (i-s)/2 unmatched U steps of (P+Q)/2 in both
    coordinates; the images end at heights s+j and s-j and their agreement
    path has minimum -(i-s)/2.
    """
    i, j = infer_ij(p, q)
    check_m2(p, q, i, j)
    _require(s >= 0, f"need s >= 0, got s={s}")
    _require(i >= s, f"need i >= s, got i={i}, s={s}")
    _require((i - s) % 2 == 0, f"need i = s (mod 2), got i={i}, s={s}")
    flips = match_faces(agreement(p, q)).unmatched_u[: (i - s) // 2]
    return flip_steps(p, flips), flip_steps(q, flips), flips


def psi_s_inv(ps: str, qs: str):
    """Undo psi_s; s and i are read off the pair itself.

    s is the agreement path's ending height, i = s + 2 * (-ell), and the
    flips are all unmatched D steps of the agreement path.
    """
    _same_length(ps, qs)
    hp, hq = end_height(ps), end_height(qs)
    s = (hp + hq) // 2
    j = (hp - hq) // 2
    _require(s >= 0, f"agreement path must end at height >= 0, got {s}")
    _require(j >= 0, "Q must end weakly below P")
    hsp, hsq = heights(ps), heights(qs)
    _require(all(b <= a for a, b in zip(hsp, hsq)), "Q is not weakly below P")
    flips = match_faces(agreement(ps, qs)).unmatched_d
    return flip_steps(ps, flips), flip_steps(qs, flips), flips
