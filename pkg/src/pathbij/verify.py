"""Self-contained identity suite over every module, with bounded budgets.

verify_suite(max_n, max_k) re-derives each published identity from scratch
inside the given budgets and reports one result per identity. Element sweeps
(bijections, conjugations, flip-record identities) run up to max_n; counting
identities get a small bonus range, capped so the whole suite stays
proportionate; pure-arithmetic identities run to twice max_n. Each check
reports the exact range it covered, and the first counterexample on failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .counting import (
    binom,
    brute_count,
    catalan,
    count_g2_sum,
    count_grand_tuples_det,
    count_macmahon,
    count_octant_diag,
    count_octant_total,
    count_octant_xaxis,
)
from .matching import match_faces, tri_heights
from .pairs import ell, flip_below, flip_below_inv, phi, phi_inv, psi, psi_inv, psi_s, psi_s_inv
from .partitions import enumerate_pp, pp_to_tuple, tuple_to_pp
from .paths import (
    FamilySpec,
    all_paths,
    dyck_paths,
    end_height,
    enumerate_family,
    grand_paths,
    heights,
    lexkey,
    min_height,
    prefix_paths,
    valid_ij,
)
from .single import nu, nu_inv, xi, xi_inv, xi_s, xi_s_inv
from .walks import (
    WalkFamilySpec,
    enumerate_walk_family,
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


@dataclass(frozen=True)
class CheckResult:
    name: str
    range_text: str
    passed: bool
    counterexample: str | None = None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        tail = "" if self.counterexample is None else f"  {self.counterexample}"
        return f"{self.name:<28} {self.range_text:<24} {verdict}{tail}"


def format_report(results) -> str:
    return "\n".join(r.line() for r in results)


def _count_cap(max_n: int) -> int:
    return min(max_n + 2, 14)


# Each check returns None on success or a short counterexample string.


def _check_families(max_n):
    for n in range(min(max_n, 8) + 1):
        for fam, members in (
            ("A", all_paths(n)),
            ("D", dyck_paths(n)),
            ("G", grand_paths(n)),
            ("P", prefix_paths(n)),
        ):
            keys = [lexkey(p) for p in members]
            if keys != sorted(keys) or len(set(members)) != len(members):
                return f"family {fam}, n={n}: unsorted or duplicated"
        if len(all_paths(n)) != 2**n:
            return f"|A_{n}| != 2^{n}"
        if len(prefix_paths(n)) != binom(n, n // 2):
            return f"|P_{n}| != binom"
        if len(grand_paths(n)) != binom(n, n // 2):
            return f"|G_{n}| != binom"
        expected = catalan(n // 2) if n % 2 == 0 else 0
        if len(dyck_paths(n)) != expected:
            return f"|D_{n}| != Catalan"
    return None


def _check_matching(max_n):
    for n in range(min(max_n, 10) + 1):
        for t in itertools.product("UDH", repeat=n):
            w = "".join(t)
            m = match_faces(w)
            if m.unmatched_d and m.unmatched_u and m.unmatched_d[-1] >= m.unmatched_u[0]:
                return f"leftover word out of order: {w}"
            low = min(tri_heights(w) + (0,))
            if len(m.unmatched_d) != -low:
                return f"unmatched D count wrong: {w}"
    return None


def _check_xi(max_n):
    for n in range(max_n + 1):
        image = set()
        for p in prefix_paths(n):
            g = xi(p)
            image.add(g)
            if xi_inv(g) != p:
                return f"xi roundtrip fails: {p}"
            if match_faces(g).pairs != match_faces(p).pairs:
                return f"xi breaks facing pairs: {p}"
        if image != set(grand_paths(n)):
            return f"xi image is not G_{n}"
    return None


def _check_xi_s(max_n):
    for n in range(max_n + 1):
        for p in prefix_paths(n):
            i = end_height(p)
            for s in range(i % 2, i + 1, 2):
                r = xi_s(p, s)
                if end_height(r) != s or min_height(r) != -(i - s) // 2:
                    return f"xi_s lands wrong: {p}, s={s}"
                if xi_s_inv(r) != p:
                    return f"xi_s roundtrip fails: {p}, s={s}"
    return None


def _check_nu(max_n):
    for n in range(max_n + 1):
        image = set()
        for p in prefix_paths(n):
            g = nu(p)
            image.add(g)
            if nu_inv(g) != p:
                return f"nu roundtrip fails: {p}"
        target = {g for g in all_paths(n) if end_height(g) == -(n % 2)}
        if image != target:
            return f"nu image wrong at n={n}"
    return None


def _check_phi_sector(max_n):
    for n in range(max_n + 1):
        for i, j in valid_ij(n):
            image = set()
            for p, q in enumerate_family(FamilySpec("M2", n, i=i, j=j)):
                pt, qt, _ = phi(p, q, i, j)
                image.add((pt, qt))
                if min_height(qt) < 0 or not all(
                    b <= a for a, b in zip(heights(pt), heights(qt))
                ):
                    return f"phi image not nested: {p}/{q}"
                if not (i - j <= end_height(qt) <= i + j <= end_height(pt)):
                    return f"phi image outside sector: {p}/{q}"
                if phi_inv(pt, qt, i, j)[:2] != (p, q):
                    return f"phi roundtrip fails: {p}/{q}"
            sector = set(enumerate_family(FamilySpec("P2", n, i=i, j=j)))
            if image != sector:
                return f"phi image is not P2({n},{i};{j})"
    return None


def _check_flip_heights(max_n):
    for n in range(_count_cap(max_n) + 1):
        for q in all_paths(n):
            if end_height(q) < 0:
                continue
            qp, rec = flip_below(q)
            hq, hqp = heights(q), heights(qp)
            gained = 0
            for a in range(1, n + 1):
                if a in rec.lower_returns:
                    gained += 1
                if hqp[a - 1] != abs(hq[a - 1]) + 2 * gained:
                    return f"height profile wrong after flips: {q} at a={a}"
            if flip_below_inv(qp, rec.r) != q:
                return f"flip_below roundtrip fails: {q}"
    return None


def _check_flip_records(max_n):
    for n in range(max_n + 1):
        for i, j in valid_ij(n):
            for p, q in enumerate_family(FamilySpec("M2", n, i=i, j=j)):
                qp, _ = flip_below(q)
                _, _, rec = phi(p, q, i, j)
                if not (rec.r - j <= len(rec.chi) <= rec.r):
                    return f"flip count outside bounds: {p}/{q}"
                hp = (0,) + heights(p)
                hqp = (0,) + heights(qp)
                chi_seen = ret_seen = running = 0
                for a in range(n + 1):
                    running = max(running, hqp[a] - hp[a])
                    chi_seen += a in rec.chi
                    ret_seen += a in rec.lower_returns
                    if 2 * chi_seen != running or running > 2 * ret_seen:
                        return f"flip prefix identity fails: {p}/{q} at a={a}"
    return None


def _check_psi_sector(max_n):
    for n in range(max_n + 1):
        for i, j in valid_ij(n):
            d = i % 2
            image = set()
            for p, q in enumerate_family(FamilySpec("M2", n, i=i, j=j)):
                ph, qh, _ = psi(p, q)
                image.add((ph, qh))
                if end_height(ph) != j + d or end_height(qh) != -j + d:
                    return f"psi endpoints wrong: {p}/{q}"
                if ell(ph, qh) != -(i // 2):
                    return f"psi depth wrong: {p}/{q}"
                if psi_inv(ph, qh)[:2] != (p, q):
                    return f"psi roundtrip fails: {p}/{q}"
            if image != set(enumerate_family(FamilySpec("G2", n, i=i, j=j))):
                return f"psi image is not G2({n},{i};{j})"
    return None


def _check_composed_map(max_n):
    for n in range(max_n + 1):
        p2 = enumerate_family(FamilySpec("P2", n))
        image = set()
        for pt, qt in p2:
            i = end_height(qt)
            p, q, _ = phi_inv(pt, qt, i, 0)
            image.add(psi(p, q)[:2])
        if len(image) != len(p2) or image != set(
            enumerate_family(FamilySpec("G2", n))
        ):
            return f"composed map not bijective at n={n}"
    return None


def _check_floor_pairs(max_n):
    for n in range(max_n + 1):
        p2 = enumerate_family(FamilySpec("P2", n))
        pairs_by_end = {}
        for pt, qt in p2:
            pairs_by_end.setdefault(end_height(qt), []).append((pt, qt))
        nested = enumerate_family(FamilySpec("Ak", n, k=2))
        for s in range(n % 2, n + 1, 2):
            image = set()
            total = 0
            for i, dom in pairs_by_end.items():
                if i < s:
                    continue
                total += len(dom)
                for pt, qt in dom:
                    p, q, _ = phi_inv(pt, qt, i, 0)
                    a, b, _ = psi_s(p, q, s)
                    image.add((a, b))
                    if psi_s_inv(a, b)[:2] != (p, q):
                        return f"psi_s roundtrip fails: {p}/{q}, s={s}"
            target = {
                (a, b)
                for a, b in nested
                if end_height(a) == s and end_height(b) == s
            }
            if len(image) != total or image != target:
                return f"floor map fails at n={n}, s={s}"
    return None


def _check_step_dictionary(max_n):
    probes = valid_ij(4)
    for n in range(min(max_n, 8) + 1):
        for pw in itertools.product("UD", repeat=n):
            p = "".join(pw)
            hp = (0,) + heights(p)
            for qw in itertools.product("UD", repeat=n):
                q = "".join(qw)
                hq = (0,) + heights(q)
                w = omega(p, q)
                x = y = 0
                mnx = mny = 0
                above = False
                for c, a, b in zip(w, hp[1:], hq[1:]):
                    x += (c == "E") - (c == "W")
                    y += (c == "N") - (c == "S")
                    if 2 * x != a + b or 2 * y != a - b:
                        return f"omega coordinates wrong: {p}/{q}"
                    mnx = min(mnx, x)
                    mny = min(mny, y)
                    above = above or y > x
                checks = (
                    (all(a >= b for a, b in zip(hp, hq))) == (mny >= 0),
                    (min(hq) >= 0) == (not above),
                    (all(-a <= b for a, b in zip(hp, hq))) == (mnx >= 0),
                    (hp[-1] == hq[-1]) == (y == 0),
                    hq[-1] == x - y,
                    hp[-1] == x + y,
                    all(
                        (i - j <= hq[-1] <= i + j <= hp[-1])
                        == shadow_contains(i, j, x, y)
                        for i, j in probes
                    ),
                )
                if not all(checks):
                    return f"dictionary row fails: {p}/{q}"
    return None


def _check_conjugation(max_n):
    for n in range(max_n + 1):
        for i, j in valid_ij(n):
            for p, q in enumerate_family(FamilySpec("M2", n, i=i, j=j)):
                w = omega(p, q)
                wf = phi_tilde(w)
                if wf != omega(*phi(p, q, i, j)[:2]):
                    return f"phi conjugation fails: {p}/{q}"
                if phi_tilde_inv(wf, i, j) != w:
                    return f"phi_tilde roundtrip fails: {w}"
                wh = psi_tilde(w)
                if wh != omega(*psi(p, q)[:2]):
                    return f"psi conjugation fails: {p}/{q}"
                if psi_tilde_inv(wh) != w:
                    return f"psi_tilde roundtrip fails: {w}"
                for s in range(i % 2, i + 1, 2):
                    if psi_tilde_s(w, s) != omega(*psi_s(p, q, s)[:2]):
                        return f"psi_s conjugation fails: {p}/{q}, s={s}"
    return None


def _check_omega(max_n):
    for n in range(min(max_n, 8) + 1):
        seen = set()
        for p in all_paths(n):
            for q in all_paths(n):
                w = omega(p, q)
                seen.add(w)
                if omega_inv(w) != (p, q):
                    return f"omega roundtrip fails: {p}/{q}"
        if len(seen) != 4**n:
            return f"omega not onto at n={n}"
    return None


def _check_psi_tilde_s_union(max_n):
    for n in range(min(max_n, 9) + 1):
        qbucket = {}
        for w in enumerate_walk_family(WalkFamilySpec("Q", n)):
            qbucket.setdefault(walk_geometry(w).endpoint, []).append(w)
        hbucket = {}
        for w in enumerate_walk_family(WalkFamilySpec("H", n)):
            hbucket.setdefault(walk_geometry(w).endpoint, []).append(w)
        for (s, j), target in hbucket.items():
            if s < 0:
                continue
            image = set()
            count = 0
            for i in range(s, n + 1, 2):
                for w in qbucket.get((i, j), ()):
                    wh = psi_tilde_s(w, s)
                    image.add(wh)
                    count += 1
                    if psi_tilde_s_inv(wh) != w:
                        return f"psi_tilde_s roundtrip fails: {w}, s={s}"
            if len(image) != count or image != set(target):
                return f"psi_tilde_s union fails at n={n}, end=({s},{j})"
    return None


def _check_phi_tilde_identity(max_n):
    for n in range(max_n + 1):
        for w in enumerate_walk_family(WalkFamilySpec("Ox", n)):
            if phi_tilde(w) != w:
                return f"phi_tilde moves an axis octant walk: {w}"
    return None


def _check_shadow(max_n):
    for i, j in ((0, 0), (1, 1), (2, 0), (3, 1), (4, 2)):
        for x in range(-12, 13):
            for y in range(-12, 13):
                expected = i - j <= x - y <= i + j <= x + y
                if shadow_contains(i, j, x, y) != expected:
                    return f"shadow wrong at ({i},{j}) vs ({x},{y})"
    return None


def _check_hij_g2(max_n):
    for n in range(min(max_n, 8) + 1):
        for i, j in valid_ij(n):
            walks = enumerate_walk_family(WalkFamilySpec("Hij", n, i=i, j=j))
            pairs = enumerate_family(FamilySpec("G2", n, i=i, j=j))
            if sorted(walks) != sorted(omega(p, q) for p, q in pairs):
                return f"Hij mismatch at n={n}, (i,j)=({i},{j})"
    return None


def _check_det_vs_box(max_n, max_k):
    for n in range(2 * max_n + 1):
        for k in range(1, max_k + 3):
            if count_grand_tuples_det(n, k) != count_macmahon(
                (n + 1) // 2, n // 2, k
            ):
                return f"det != box product at n={n}, k={k}"
    return None


def _check_g2_sum(max_n):
    for n in range(2 * max_n + 1):
        if count_g2_sum(n) != count_grand_tuples_det(n, 2):
            return f"sum formula fails at n={n}"
    return None


def _check_tuple_counts(max_n, max_k):
    for k in range(1, max_k + 1):
        cap = _count_cap(max_n) if k <= 2 else min(max_n, 8)
        for n in range(cap + 1):
            pk = brute_count(FamilySpec("Pk", n, k=k), max_n=cap)
            gk = brute_count(FamilySpec("Gk", n, k=k), max_n=cap)
            if pk != gk:
                return f"|P^{k}| != |G^{k}| at n={n}"
            if k == 2 and pk != count_grand_tuples_det(n, 2):
                return f"pair count != det at n={n}"
    return None


def _check_octant_census(max_n):
    cap = min(max_n + 1, 11)
    for n in range(cap + 1):
        o = brute_count(WalkFamilySpec("O", n), max_n=cap)
        ox = brute_count(WalkFamilySpec("Ox", n), max_n=cap)
        if o != count_octant_total(n):
            return f"octant total fails at n={n}"
        if ox != count_octant_xaxis(n):
            return f"x-axis count fails at n={n}"
        if n % 2 == 0:
            od = brute_count(WalkFamilySpec("Odiag", n), max_n=cap)
            if od != count_octant_diag(n // 2):
                return f"diagonal count fails at n={n}"
    return None


def _check_origin_walks(max_n):
    for m in range(min(max_n // 2, 5) + 1):
        n = 2 * m
        dom = enumerate_walk_family(WalkFamilySpec("Qend", n, i=0, j=0))
        if len(dom) != catalan(m) * catalan(m + 1):
            return f"origin walk count fails at m={m}"
        image = set()
        for w in dom:
            w2 = phi_tilde(w)
            image.add(w2)
            if phi_tilde_inv(w2, 0, 0) != w:
                return f"phi_tilde roundtrip fails on {w}"
        if len(image) != len(dom) or image != set(
            enumerate_walk_family(WalkFamilySpec("Odiag", n))
        ):
            return f"diagonal image fails at m={m}"
    return None


def _check_floor_counts(max_n):
    for n in range(max_n + 1):
        p2 = enumerate_family(FamilySpec("P2", n))
        nested = enumerate_family(FamilySpec("Ak", n, k=2))
        for s in range(n % 2, n + 1, 2):
            lhs = sum(1 for _, qt in p2 if end_height(qt) >= s)
            rhs = sum(
                1
                for a, b in nested
                if end_height(a) == s and end_height(b) == s
            )
            if lhs != rhs:
                return f"floor count fails at n={n}, s={s}"
    return None


def _check_pp(pmax, kmax):
    for p in range(pmax + 1):
        for q in range(pmax + 1):
            for k in range(kmax + 1):
                box = enumerate_pp(p, q, k)
                if len(box) != count_macmahon(p, q, k):
                    return f"box census fails at ({p},{q},{k})"
                for a in box:
                    if tuple_to_pp(pp_to_tuple(a, k, p=p), p, q) != a:
                        return f"partition roundtrip fails at ({p},{q},{k})"
    return None


def verify_suite(max_n: int, max_k: int = 2) -> tuple[CheckResult, ...]:
    """Run every identity check within the budgets; never raises on failure."""
    if max_n < 0 or max_k < 1:
        raise ValueError("need max_n >= 0 and max_k >= 1")
    ncap = _count_cap(max_n)
    pmax = min(max(max_n // 3, 1), 4)
    kmax = min(max_k + 1, 3)
    checks = (
        ("families_sorted_counted", f"n <= {min(max_n, 8)}", _check_families, (max_n,)),
        ("matching_structure", f"n <= {min(max_n, 10)}", _check_matching, (max_n,)),
        ("xi_bijection", f"n <= {max_n}", _check_xi, (max_n,)),
        ("xi_s_bijection", f"n <= {max_n}", _check_xi_s, (max_n,)),
        ("nu_bijection", f"n <= {max_n}", _check_nu, (max_n,)),
        ("phi_sector_bijection", f"n <= {max_n}", _check_phi_sector, (max_n,)),
        ("flip_height_profile", f"n <= {ncap}", _check_flip_heights, (max_n,)),
        ("flip_record_bounds", f"n <= {max_n}", _check_flip_records, (max_n,)),
        ("psi_sector_bijection", f"n <= {max_n}", _check_psi_sector, (max_n,)),
        ("composed_map_bijection", f"n <= {max_n}", _check_composed_map, (max_n,)),
        ("floor_pair_bijection", f"n <= {max_n}", _check_floor_pairs, (max_n,)),
        ("step_dictionary", f"n <= {min(max_n, 8)}", _check_step_dictionary, (max_n,)),
        ("walk_conjugation", f"n <= {max_n}", _check_conjugation, (max_n,)),
        ("omega_bijection", f"n <= {min(max_n, 8)}", _check_omega, (max_n,)),
        ("psi_tilde_s_union", f"n <= {min(max_n, 9)}", _check_psi_tilde_s_union, (max_n,)),
        ("phi_tilde_axis_identity", f"n <= {max_n}", _check_phi_tilde_identity, (max_n,)),
        ("shadow_region", "|x|,|y| <= 12", _check_shadow, (max_n,)),
        ("hij_walks_vs_g2", f"n <= {min(max_n, 8)}", _check_hij_g2, (max_n,)),
        ("det_vs_box_product", f"n <= {2 * max_n}, k <= {max_k + 2}", _check_det_vs_box, (max_n, max_k)),
        ("g2_sum_formula", f"n <= {2 * max_n}", _check_g2_sum, (max_n,)),
        (
            "tuple_count_agreement",
            f"k <= {max_k}, n <= {ncap}"
            + (f" ({min(max_n, 8)} for k>2)" if max_k > 2 else ""),
            _check_tuple_counts,
            (max_n, max_k),
        ),
        ("octant_census_formulas", f"n <= {min(max_n + 1, 11)}", _check_octant_census, (max_n,)),
        ("origin_walk_bijection", f"m <= {min(max_n // 2, 5)}", _check_origin_walks, (max_n,)),
        ("floor_count_identity", f"n <= {max_n}", _check_floor_counts, (max_n,)),
        ("pp_box_roundtrip", f"p,q <= {pmax}, k <= {kmax}", _check_pp, (pmax, kmax)),
    )
    results = []
    for name, rng, fn, args in checks:
        try:
            bad = fn(*args)
        except Exception as exc:  # a crash inside a sweep is a failure, not an abort
            bad = f"error: {exc}"
        results.append(CheckResult(name, rng, bad is None, bad))
    return tuple(results)
