"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line that is printed in the terminal summary
(section "acceptance criteria") and then asserts.  Tolerances are exact: every
quantity compared here is an integer or a boolean.
"""
import itertools
import math
import random
import time

import numpy as np

from conftest import ACCEPTANCE
from facetdecomp import corpus
from facetdecomp.bounds import (
    MonomialIdeal,
    complement_complex,
    enumerate_pure,
    generate_tight_example,
    has_linear_resolution,
    has_linear_resolution_hochster,
    meets_main_theorem,
    vd_threshold,
    verify,
    verify_range,
)
from facetdecomp.classify import colex_initial, is_extremal, is_matroid, is_shifted, is_shifted_under, kruskal_katona_min_shadow
from facetdecomp.complex import Complex, codimension, f_vector, from_facets, is_pure, k_subsets, skeleton
from facetdecomp.decomp import (
    is_shellable,
    is_shelling_completable,
    is_vertex_decomposable,
    verify_certificate,
    verify_shelling,
)
from facetdecomp.homology import boundary_matrix, is_cohen_macaulay, reduced_homology_ranks

TEN_MINUTES = 600.0


def record(num: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[num] = (ok, detail)
    assert ok, detail


def families_at_least(n: int, c: int, lo: int) -> int:
    """Covering families of (n-c)-subsets of [n] with at least ``lo`` members,
    by inclusion-exclusion over the uncovered vertices."""
    k = n - c
    total = 0
    for j in range(n + 1):
        avail = math.comb(n - j, k)
        total += (-1) ** j * math.comb(n, j) * sum(math.comb(avail, m) for m in range(max(lo, 1), avail + 1))
    return total


# 1 --------------------------------------------------------------------------------

def test_criterion_1_threshold_implies_vd():
    enumerated = failures = 0
    counts_ok = True
    n6_ms = 0.0
    for n in range(3, 7):
        start = time.perf_counter()
        for c in range(n):
            r = verify(n, c, "threshold-vd")
            assert r.complete
            enumerated += r.enumerated
            failures += r.failures
            counts_ok &= r.enumerated == families_at_least(n, c, vd_threshold(n, c))
        if n == 6:
            n6_ms = time.perf_counter() - start
    ok = failures == 0 and counts_ok and n6_ms < TEN_MINUTES
    record(1, ok, f"{enumerated} complexes (n=3..6, all c), {failures} counterexamples, "
                  f"counts match inclusion-exclusion: {counts_ok}, n=6 took {n6_ms:.1f}s (< 600s)")


# 2 --------------------------------------------------------------------------------

def test_criterion_2_tight_family():
    cases = bad = 0
    for n in range(4, 9):
        for c in range(2, n - 1):
            t = generate_tight_example(n, c)
            cases += 1
            if not (len(t.facets) == math.comb(n, c) - 2 * c and is_pure(t)
                    and codimension(t) == c and is_cohen_macaulay(t, 2) is False):
                bad += 1
    record(2, bad == 0, f"{cases} pairs (n <= 8, 2 <= c <= n-2): exact facet count, pure, "
                        f"codim c, not CM over F_2; {bad} violations")


# 3 --------------------------------------------------------------------------------

def test_criterion_3_sixteen_facet_example():
    cx = corpus.load("many_facets_not_extremal")
    comp = corpus.load("extremal_companion")
    vd = is_vertex_decomposable(cx)
    checks = {
        "f-vector (6,15,16)": f_vector(cx) == (6, 15, 16),
        "16 >= 15": len(cx.facets) == 16 and vd_threshold(6, 3) == 15 and meets_main_theorem(cx),
        "VD with certificate": vd.holds is True and verify_certificate(cx, vd.witness),
        "not extremal": is_extremal(cx) is False,
        "companion (6,14,16)": f_vector(comp) == (6, 14, 16),
        "companion extremal": is_extremal(comp) is True,
    }
    failed = [k for k, v in checks.items() if not v]
    record(3, not failed, "all checks hold" if not failed else f"failed: {failed}")


# 4 --------------------------------------------------------------------------------

def test_criterion_4_matroid_and_shifted_counterexamples():
    a = from_facets([[1, 4], [2, 3], [2, 4], [3, 4]])
    b = from_facets([[1, 3], [1, 4], [2, 3], [2, 4]])
    every_labeling = not any(is_shifted_under(b, list(p)) for p in itertools.permutations(range(1, 5)))
    checks = {
        "K4 - {12,13} not matroid": is_matroid(a) is False,
        "K4 - {12,13} VD": is_vertex_decomposable(a).holds is True,
        "K4 - {12,34} never shifted": every_labeling and is_shifted(b) is False,
        "K4 - {12,34} VD": is_vertex_decomposable(b).holds is True,
    }
    failed = [k for k, v in checks.items() if not v]
    record(4, not failed, "all checks hold" if not failed else f"failed: {failed}")


# 5 --------------------------------------------------------------------------------

def test_criterion_5_top_heavy_complexes():
    pure = verify_range("top-heavy-pure", range(1, 7))
    vd = verify_range("top-heavy-vd", range(1, 7))
    ok = pure.complete and vd.complete and pure.failures == 0 and vd.failures == 0
    ok &= pure.enumerated == vd.enumerated > 0
    record(5, ok, f"{vd.enumerated} complexes (n <= 6, >= C(n,c)-c top facets): "
                  f"{pure.failures} not pure, {vd.failures} pure-and-VD failures")


# 6 --------------------------------------------------------------------------------

def test_criterion_6_supporting_claims():
    parts = []
    ok = True
    for key in ("light-vertices", "large-nonfaces", "link-antifacets", "heavy-shed"):
        r = verify_range(key, range(1, 7))
        ok &= r.complete and r.failures == 0 and r.enumerated > 0
        parts.append(f"{key}: {r.enumerated} checked, {r.failures} failed")
    record(6, ok, "; ".join(parts))


# 7 --------------------------------------------------------------------------------

def random_pure(rng: random.Random) -> Complex:
    n = rng.randint(3, 6)
    c = rng.randint(1, n - 2)
    pool = k_subsets(n, n - c)
    if rng.random() < 0.5:
        k = rng.randint(1, len(pool))
    else:
        k = rng.randint(1, max(2, len(pool) // 2))
    chosen = rng.sample(pool, k)
    cover = 0
    for f in chosen:
        cover |= f
    for p in range(n):
        if not cover >> p & 1:
            f = next(m for m in pool if m >> p & 1)
            chosen.append(f)
            cover |= f
    return Complex.from_masks(n, chosen)


def test_criterion_7_implication_chain():
    rng = random.Random(20240607)
    samples = 1200
    stats = {"vd": 0, "shellable": 0, "cm": 0, "undecided": 0}
    violations = []
    for _ in range(samples):
        cx = random_pure(rng)
        vd = is_vertex_decomposable(cx)
        sh = is_shellable(cx, budget=500_000)
        cm = is_cohen_macaulay(cx, 2)
        stats["vd"] += vd.holds is True
        stats["shellable"] += sh.holds is True
        stats["cm"] += cm
        stats["undecided"] += sh.holds is None
        if vd.holds:
            comp = is_shelling_completable(cx, budget=500_000)
            if not (verify_certificate(cx, vd.witness) and sh.holds and comp.holds
                    and verify_shelling(cx, comp.witness)):
                violations.append(cx)
        if sh.holds and not (verify_shelling(cx, sh.witness) and cm):
            violations.append(cx)
        if sh.holds is None:
            violations.append(cx)
    ok = not violations and samples >= 1000 and stats["vd"] < samples
    record(7, ok, f"{samples} random pure complexes (n <= 6), {stats}; {len(violations)} violations")


# 8 --------------------------------------------------------------------------------

def test_criterion_8_kruskal_katona():
    mismatches = 0
    for t in range(0, 5):
        for r in range(1, 301):
            cx = colex_initial(r, t)
            sets_ = [frozenset(f) for f in cx.facet_sets()]
            shadow = len({s - {x} for s in sets_ for x in s})
            mismatches += shadow != kruskal_katona_min_shadow(r, t)
    record(8, mismatches == 0, f"r = 1..300, t = 0..4 (1500 cases): {mismatches} mismatches")


# 9 --------------------------------------------------------------------------------

def test_criterion_9_eagon_reiner():
    checked = mismatches = 0
    for n in range(2, 6):
        for c in range(1, n):
            for cx in enumerate_pure(n, c):
                ideal = MonomialIdeal.dual_of(cx)
                cm = is_cohen_macaulay(complement_complex(ideal), 2)
                linear = has_linear_resolution(ideal, 2)
                betti = has_linear_resolution_hochster(ideal, 2)
                checked += 1
                mismatches += not (linear == cm == betti)
    record(9, mismatches == 0 and checked > 0,
           f"{checked} equigenerated ideals (n <= 5): linear resolution (Eagon-Reiner and "
           f"Hochster's formula) vs CM of the complement complex, {mismatches} mismatches")


# 10 -------------------------------------------------------------------------------

def test_criterion_10_homology_sanity():
    sphere_bad = 0
    for k in range(1, 9):
        boundary = skeleton(k, k - 2)
        for p in (2, 3):
            ranks = reduced_homology_ranks(boundary, p)
            expected = [1 if dim == k - 2 else 0 for dim in range(-1, k - 1)]
            sphere_bad += list(ranks.ranks) != expected
    rng = random.Random(17)
    nonzero = 0
    for _ in range(200):
        n = rng.randint(2, 8)
        pool = list(range(1, 1 << n))
        cx = Complex.from_masks(n, rng.sample(pool, rng.randint(1, min(6, len(pool)))))
        top = f_vector(cx)
        for p in (2, 3):
            for k in range(1, len(top)):
                prod = boundary_matrix(cx, k - 1, p) @ boundary_matrix(cx, k, p)
                nonzero += bool(np.any(prod % p))
    ok = sphere_bad == 0 and nonzero == 0
    record(10, ok, f"spheres k = 1..8 over F_2 and F_3: {sphere_bad} wrong profiles; "
                   f"boundary of boundary on 200 random complexes: {nonzero} nonzero products")
