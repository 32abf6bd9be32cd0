"""Single-path bijections built on the facing-step matching.

xi sends Dyck path prefixes to Grand Dyck paths by flipping unmatched U
steps; xi_s is the ending-height-s refinement. nu is the split-and-reflect
companion bijection; its odd-length images end at height -1, so the
codomain is documented as "ends at -(n mod 2)" throughout.
"""

from __future__ import annotations

from .matching import match_faces
from .paths import (
    check_path,
    end_height,
    flip_steps,
    heights,
    is_grand,
    is_prefix,
    min_height,
    negate,
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def xi(p: str) -> str:
    """Flip the leftmost floor(j/2) unmatched U steps, j = h(P).

    Maps prefixes of length n onto Grand Dyck paths (ending height n mod 2)
    and keeps the set of facing pairs unchanged.
    """
    _require(is_prefix(p), "xi needs a Dyck path prefix")
    return xi_s(p, end_height(p) % 2)


def xi_inv(g: str) -> str:
    """Flip every unmatched D step; inverse of xi on Grand Dyck paths."""
    _require(is_grand(g), f"xi_inv needs a Grand Dyck path, got end height {end_height(g)}")
    return flip_steps(g, match_faces(g).unmatched_d)


def xi_s(p: str, s: int) -> str:
    """Flip the leftmost (i-s)/2 unmatched U steps of a prefix with h(P) = i.

    The image ends at height s and has minimum height -(i-s)/2.
    """
    _require(is_prefix(p), "xi_s needs a Dyck path prefix")
    i = end_height(p)
    _require(s >= 0, f"need s >= 0, got s={s}")
    _require(i >= s, f"need h(P) >= s, got h(P)={i}, s={s}")
    _require((i - s) % 2 == 0, f"need h(P) = s (mod 2), got h(P)={i}, s={s}")
    flips = match_faces(p).unmatched_u[: (i - s) // 2]
    return flip_steps(p, flips)


def xi_s_inv(r: str) -> str:
    """Flip every unmatched D step of r; undoes xi_s without extra data.

    The ending height s and the minimum height of r pin down i, so the
    preimage under xi_s is the prefix returned here.
    """
    check_path(r)
    return flip_steps(r, match_faces(r).unmatched_d)


def _reflect(piece: str) -> str:
    # reflection along a vertical axis: reverse the word, swap U and D
    return negate(piece[::-1])


def nu(p: str) -> str:
    """Split at the last point at height floor(h(P)/2), reflect the right
    piece and put it in front."""
    _require(is_prefix(p), "nu needs a Dyck path prefix")
    half = end_height(p) // 2
    profile = (0,) + heights(p)
    cut = max(a for a, h in enumerate(profile) if h == half)
    return _reflect(p[cut:]) + p[:cut]


def nu_inv(g: str) -> str:
    """Split at the leftmost lowest point, reflect the left piece and
    append it; inverse of nu on paths ending at -(n mod 2)."""
    check_path(g)
    _require(
        end_height(g) == -(len(g) % 2),
        f"nu_inv needs end height {-(len(g) % 2)}, got {end_height(g)}",
    )
    profile = (0,) + heights(g)
    cut = profile.index(min_height(g))
    return g[cut:] + _reflect(g[:cut])
