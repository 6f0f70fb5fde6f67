"""Shared helpers: brute-force oracles on frozensets and hypothesis strategies.

The oracles never touch the bitset code paths; they rebuild every face from
``itertools`` subsets and apply the textbook definitions directly.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from hypothesis import strategies as st

from facetdecomp.complex import Complex, from_facets

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")


# -- frozenset oracles --------------------------------------------------------------

def faces_of(facets) -> frozenset[frozenset[int]]:
    out = set()
    for f in facets:
        f = tuple(f)
        for k in range(len(f) + 1):
            out.update(frozenset(s) for s in itertools.combinations(f, k))
    return frozenset(out)


def maximal(faces) -> frozenset[frozenset[int]]:
    return frozenset(f for f in faces if not any(f < g for g in faces))


def facet_sets(cx: Complex) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(f) for f in cx.facet_sets())


def link_faces(faces, sigma: frozenset[int]):
    return frozenset(f for f in faces if not f & sigma and f | sigma in faces)


def deletion_faces(faces, v: int):
    return frozenset(f for f in faces if v not in f)


def all_subsets(n: int):
    for k in range(n + 1):
        for s in itertools.combinations(range(1, n + 1), k):
            yield frozenset(s)


def oracle_vd(faces: frozenset) -> bool:
    """Vertex decomposability straight from the recursive definition."""
    return _vd(frozenset(maximal(faces)))


@lru_cache(maxsize=None)
def _vd(facets: frozenset) -> bool:
    if len(facets) <= 1:
        return True  # void, {empty} or a simplex
    faces = faces_of(facets)
    for x in sorted(set().union(*facets)):
        dl = maximal(deletion_faces(faces, x))
        if not all(g in facets for g in dl):
            continue
        lk = maximal(link_faces(faces, frozenset([x])))
        if _vd(frozenset(lk)) and _vd(frozenset(dl)):
            return True
    return False


def oracle_is_shelling(facets: list[frozenset[int]]) -> bool:
    """Each facet meets the union of the earlier ones in a pure codim-one complex."""
    for k in range(1, len(facets)):
        f = facets[k]
        inter = maximal(frozenset(f & g for g in facets[:k]))
        if not all(len(x) == len(f) - 1 for x in inter):
            return False
    return True


def oracle_shellable(facets) -> bool:
    facets = [frozenset(f) for f in facets]
    return any(oracle_is_shelling(list(p)) for p in itertools.permutations(facets))


def antichains(n: int):
    """Every antichain of subsets of ``{1..n}`` (so every complex on ``n`` labels)."""
    subsets = sorted(all_subsets(n), key=lambda s: (len(s), sorted(s)))

    def rec(i, chosen):
        if i == len(subsets):
            yield list(chosen)
            return
        yield from rec(i + 1, chosen)
        s = subsets[i]
        if not any(c <= s or s <= c for c in chosen):
            chosen.append(s)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


# -- strategies -------------------------------------------------------------------

@st.composite
def complexes(draw, min_n: int = 1, max_n: int = 7, allow_void: bool = False):
    n = draw(st.integers(min_n, max_n))
    subsets = [list(s) for k in range(1, n + 1) for s in itertools.combinations(range(1, n + 1), k)]
    facets = draw(st.lists(st.sampled_from(subsets), min_size=0 if allow_void else 1, max_size=8))
    return from_facets(facets, n)


@st.composite
def pure_complexes(draw, min_n: int = 1, max_n: int = 6, cover: bool = True):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, n))
    pool = [list(s) for s in itertools.combinations(range(1, n + 1), k)]
    chosen = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=len(pool), unique_by=tuple))
    if cover:
        seen = {v for f in chosen for v in f}
        for v in range(1, n + 1):
            if v not in seen:
                extra = next(f for f in pool if v in f)
                chosen.append(extra)
                seen.update(extra)
    return from_facets(chosen, n)
