"""Lattice path bijections, plane walk correspondences, and exact counting."""

from .counting import (
    brute_count,
    catalan,
    count_g2_sum,
    count_grand_tuples_det,
    count_macmahon,
    count_octant_diag,
    count_octant_total,
    count_octant_xaxis,
)
from .matching import Matching, match_faces, tri_heights
from .pairs import (
    FlipRecord,
    agreement,
    disagreement,
    ell,
    flip_below,
    flip_below_inv,
    infer_ij,
    phi,
    phi_inv,
    psi,
    psi_inv,
    psi_s,
    psi_s_inv,
)
from .partitions import (
    enumerate_pp,
    format_pp,
    parse_pp,
    path_to_diagram,
    pp_to_tuple,
    tuple_to_pp,
)
from .paths import (
    FamilySpec,
    classify,
    end_height,
    enumerate_family,
    heights,
    is_weakly_below,
    min_height,
    negate,
    valid_ij,
)
from .single import nu, nu_inv, xi, xi_inv, xi_s, xi_s_inv
from .walks import (
    WalkFamilySpec,
    WalkGeometry,
    enumerate_walk_family,
    interleave,
    ns_ew_split,
    omega,
    omega_inv,
    phi_tilde,
    phi_tilde_inv,
    psi_tilde,
    psi_tilde_inv,
    psi_tilde_s,
    psi_tilde_s_inv,
    shadow_contains,
    walk_geometry,
)

__all__ = [name for name in dir() if not name.startswith("_")]
