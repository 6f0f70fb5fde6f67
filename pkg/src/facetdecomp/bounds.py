"""Facet-count thresholds, the tight family, squarefree ideals, and the
exhaustive small-``n`` verification harness."""
from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .complex import (
    Complex,
    ComplexError,
    canonical_form,
    codimension,
    dimension,
    is_pure,
    k_subsets,
    labels_of,
    link,
    minimal_nonfaces,
    positions,
    simplex,
    skeleton,
)
from .decomp import (
    VDSearch,
    is_shellable,
    is_shelling_completable,
    is_shedding,
    verify_certificate,
    vertex_antifacet_counts,
)
from .homology import is_cohen_macaulay, reduced_homology_ranks

DEFAULT_BUDGET = 5_000_000


def default_budget() -> int:
    raw = os.environ.get("FACETDECOMP_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


# -- thresholds -------------------------------------------------------------------

def _check_nc(n: int, c: int) -> None:
    if n < 1 or not 0 <= c <= n - 1:
        raise ComplexError(f"need 0 <= c <= n - 1, got n={n}, c={c}")


def vd_threshold(n: int, c: int) -> int:
    """Facet count from which a pure complex of codimension ``c`` on ``n``
    vertices is guaranteed vertex decomposable: ``C(n, c) - 2c + 1``.

    At ``c = 0`` the formula overshoots the single possible facet, so the
    value is capped at ``C(n, c)`` and the simplex meets it.
    """
    _check_nc(n, c)
    return _threshold(n, c)


def _threshold(n: int, c: int) -> int:
    total = math.comb(n, c)
    return min(total - 2 * c + 1, total)


def purity_threshold(n: int, c: int) -> int:
    """Top-dimensional facet count ``C(n, c) - c`` that forces purity."""
    _check_nc(n, c)
    return math.comb(n, c) - c


def meets_main_theorem(cx: Complex) -> bool:
    """Hypothesis test only: pure with at least :func:`vd_threshold` facets."""
    if cx.is_void or not is_pure(cx):
        return False
    return len(cx.facets) >= _threshold(cx.n, codimension(cx))


def generate_tight_example(n: int, c: int) -> Complex:
    """Pure, codimension ``c``, ``C(n, c) - 2c`` facets, not Cohen-Macaulay.

    Start from all ``(n - c)``-subsets and drop the ``2c`` sets made of
    ``{1..n-c-2}``, one of ``{n-c-1, n-c}`` and one of ``{n-c+1..n}``.
    """
    if not 2 <= c <= n - 2:
        raise ComplexError(f"tight construction needs 2 <= c <= n - 2, got n={n}, c={c}")
    core = (1 << (n - c - 2)) - 1
    removed = {core | 1 << (a - 1) | 1 << (b - 1)
               for a in (n - c - 1, n - c) for b in range(n - c + 1, n + 1)}
    return Complex.from_masks(n, (m for m in k_subsets(n, n - c) if m not in removed))


def min_nontrivial_cut(n: int) -> int:
    """Fewest edges of ``K_n`` whose removal splits it into two sides of at
    least two vertices each (brute force over bipartitions)."""
    if n < 4:
        raise ComplexError("need n >= 4 for a cut into two nontrivial parts")
    best = None
    for side in range(1, 1 << (n - 1)):
        s = side.bit_count()
        if s < 2 or n - s < 2:
            continue
        cut = sum(1 for a, b in itertools.combinations(range(n), 2)
                  if (side >> a & 1) != (side >> b & 1))
        best = cut if best is None else min(best, cut)
    return best


# -- squarefree monomial ideals ----------------------------------------------------

def _minimal(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal in ``x_1..x_n`` by its minimal generator supports."""

    n: int
    generators: tuple[int, ...]

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        masks = []
        for s in supports:
            s = list(s)
            if any(v < 1 or v > n for v in s):
                raise ComplexError(f"support {s} outside 1..{n}")
            masks.append(sum(1 << (v - 1) for v in set(s)))
        return cls(n, _minimal(masks))

    @classmethod
    def dual_of(cls, cx: Complex) -> MonomialIdeal:
        """Generators ``prod_{i not in F} x_i`` over the facets ``F``."""
        full = (1 << cx.n) - 1
        return cls(cx.n, _minimal(full & ~f for f in cx.facets))

    @property
    def degree(self) -> int | None:
        sizes = {g.bit_count() for g in self.generators}
        return sizes.pop() if len(sizes) == 1 else None


def complement_complex(ideal: MonomialIdeal) -> Complex:
    """``<[n] - supp(m)>`` over the generators ``m``."""
    full = (1 << ideal.n) - 1
    return Complex.from_masks(ideal.n, (full & ~g for g in ideal.generators))


def stanley_reisner_complex(ideal: MonomialIdeal) -> Complex:
    """Faces are the vertex sets containing no generator support."""
    gens = ideal.generators
    faces = [s for s in range(1 << ideal.n) if not any(g & s == g for g in gens)]
    return Complex.from_masks(ideal.n, faces)


def has_linear_resolution(ideal: MonomialIdeal, p: int = 2) -> bool:
    """Linear resolution over ``F_p`` for an ideal generated in one degree.

    By Eagon and Reiner this is Cohen-Macaulayness of the complex whose
    facets complement the generator supports.
    """
    if not ideal.generators:
        raise ComplexError("the zero ideal has no generators")
    c = ideal.degree
    if c is None:
        raise ComplexError("linear-resolution test needs all generators of one degree")
    if c < 1:
        raise ComplexError("generators must have degree at least 1")
    return is_cohen_macaulay(complement_complex(ideal), p)


def has_linear_resolution_hochster(ideal: MonomialIdeal, p: int = 2) -> bool:
    """Same predicate through Hochster's formula on induced subcomplexes.

    ``beta_{i,j}`` is a sum of ``H~_{j-i-2}`` over restrictions to ``j``-sets,
    so the resolution is linear iff no restriction to ``W`` carries reduced
    homology in a degree ``m <= |W| - 2`` other than ``c - 2``.
    """
    c = ideal.degree
    if not ideal.generators or c is None or c < 1:
        raise ComplexError("linear-resolution test needs generators of one positive degree")
    gamma = stanley_reisner_complex(ideal)
    for w in range(1 << ideal.n):
        sub = Complex.from_masks(ideal.n, (f & w for f in gamma.facets))
        prof = reduced_homology_ranks(sub, p)
        for m in range(-1, w.bit_count() - 1):
            if m != c - 2 and prof.rank(m):
                return False
    return True


def _monomial(m: int) -> str:
    return "*".join(f"x{v}" for v in labels_of(m)) or "1"


def sr_export(obj: Complex | MonomialIdeal) -> str:
    """Minimal nonfaces of a complex (or generators of an ideal) as monomials,
    one per line, colex order."""
    gens = obj.generators if isinstance(obj, MonomialIdeal) else minimal_nonfaces(obj)
    return "\n".join(_monomial(m) for m in gens)


# -- enumeration -----------------------------------------------------------------

def enumerate_pure(n: int, c: int, min_facets: int = 1, dedup: bool = False) -> Iterator[Complex]:
    """Pure complexes on ``{1..n}`` of codimension ``c`` with at least
    ``min_facets`` facets, every vertex covered.

    Streams by facet count, then lexicographically over colex-sorted candidate
    facets.  ``dedup`` keeps one complex per isomorphism class.
    """
    _check_nc(n, c)
    pool = k_subsets(n, n - c)
    full = (1 << n) - 1
    seen: set[tuple[int, ...]] = set()
    for k in range(max(min_facets, 1), len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            cover = 0
            for f in combo:
                cover |= f
            if cover != full:
                continue
            cx = Complex.from_masks(n, combo)
            if dedup:
                key = canonical_form(cx, limit=10 ** 7)[0].facets
                if key in seen:
                    continue
                seen.add(key)
            yield cx


def _free_sets(n: int, top: tuple[int, ...], size: int) -> list[int]:
    out = []
    for m in range(1, 1 << n):
        if m.bit_count() < size and not any(m & t == m for t in top):
            out.append(m)
    return out


def _antichains(items: list[int]) -> Iterator[list[int]]:
    def rec(i: int, chosen: list[int]) -> Iterator[list[int]]:
        if i == len(items):
            yield chosen
            return
        yield from rec(i + 1, chosen)
        m = items[i]
        if not any(m & x == m or m & x == x for x in chosen):
            yield from rec(i + 1, chosen + [m])
    return rec(0, [])


def complexes_with_top(n: int, top: tuple[int, ...]) -> Iterator[Complex]:
    """Every complex on ``{1..n}`` (all vertices covered) whose facets of the
    top size are exactly ``top``; lower facets range over all antichains of
    sets not inside a top facet."""
    full = (1 << n) - 1
    size = top[0].bit_count()
    free = _free_sets(n, top, size)
    cover_top = 0
    for t in top:
        cover_top |= t
    for extra in _antichains(free):
        cover = cover_top
        for m in extra:
            cover |= m
        if cover == full:
            yield Complex.from_masks(n, list(top) + extra)


def enumerate_top_heavy(n: int, c: int, min_top: int) -> Iterator[Complex]:
    """All complexes on ``{1..n}`` of dimension ``n - c - 1`` with at least
    ``min_top`` facets of that dimension, pure or not."""
    _check_nc(n, c)
    pool = k_subsets(n, n - c)
    for k in range(max(min_top, 1), len(pool) + 1):
        for combo in itertools.combinations(pool, k):
            yield from complexes_with_top(n, combo)


# -- claims ------------------------------------------------------------------------

def _two_light_vertices(cx: Complex, n: int, c: int, ctx) -> bool:
    anti = vertex_antifacet_counts(cx)
    ebar = math.comb(n, c) - len(cx.facets)
    # antifacets avoiding v = all antifacets minus those containing v
    return sum(1 for p in range(n) if ebar - anti[p] <= 2 * c - 3) >= 2


def _nonfaces_large(cx: Complex, n: int, c: int, ctx) -> bool:
    d = dimension(cx)
    sizes = [m.bit_count() for m in minimal_nonfaces(cx)]
    return all(s >= d for s in sizes) and sizes.count(d) <= 1


def _antifacets_of(cx: Complex) -> int:
    c = codimension(cx)
    return math.comb(cx.n, c) - len(cx.facets)


def _links_few_antifacets(cx: Complex, n: int, c: int, ctx) -> bool:
    d = dimension(cx)
    for v in range(1, n + 1):
        lk = link(cx, 1 << (v - 1)).complex
        ebar = _antifacets_of(lk)
        if d <= 1:
            if ebar != 0:
                return False
        elif ebar > 2 * codimension(lk) - 1:
            return False
    return True


def _heavy_vertices_shed(cx: Complex, n: int, c: int, ctx) -> bool:
    anti = vertex_antifacet_counts(cx)
    full = (1 << n) - 1
    faces = set(cx.facets)
    for w in range(1, n + 1):
        shed = is_shedding(cx, w)
        if anti[w - 1] >= c and not shed:
            return False
        if shed:
            continue
        bit = 1 << (w - 1)
        for f in cx.facets:
            if not f & bit:
                continue
            base = f ^ bit
            if any(base | 1 << u in faces for u in positions(full & ~f)):
                continue
            for v in positions(base):
                if anti[v] < c or not is_shedding(cx, v + 1):
                    return False
    return True


def _vd_certified(cx: Complex, n: int, c: int, ctx) -> bool:
    decision = ctx.decide(cx)
    return decision.holds is True and verify_certificate(cx, decision.witness)


def _is_pure(cx: Complex, n: int, c: int, ctx) -> bool:
    return is_pure(cx)


def _pure_and_vd(cx: Complex, n: int, c: int, ctx) -> bool:
    return is_pure(cx) and _vd_certified(cx, n, c, ctx)


def _simon(cx: Complex, n: int, c: int, ctx) -> bool:
    shell = is_shellable(cx)
    if not shell.holds:
        return True
    return is_shelling_completable(cx).holds is True


@dataclass(frozen=True)
class Claim:
    key: str
    hypothesis: str
    family: str  # "pure" or "top-heavy"
    min_facets: Callable[[int, int], int]
    max_facets: Callable[[int, int], int] | None
    applies: Callable[[int, int], bool]
    check: Callable


def _always(n, c):
    return True


CLAIMS: dict[str, Claim] = {
    "threshold-vd": Claim(
        "threshold-vd", "pure, covering [n], facets >= min(C(n,c) - 2c + 1, C(n,c)); conclusion: VD with verified certificate",
        "pure", _threshold, None, _always, _vd_certified),
    "light-vertices": Claim(
        "light-vertices", "pure, dim >= 1, c >= 2, antifacets <= 2c - 1; conclusion: two vertices avoid <= 2c - 3 antifacets",
        "pure", lambda n, c: math.comb(n, c) - 2 * c + 1, None,
        lambda n, c: c >= 2 and c <= n - 2, _two_light_vertices),
    "large-nonfaces": Claim(
        "large-nonfaces", "pure, antifacets <= 2c; conclusion: no nonface below dim vertices, at most one minimal nonface of dim vertices",
        "pure", lambda n, c: math.comb(n, c) - 2 * c, None, _always, _nonfaces_large),
    "link-antifacets": Claim(
        "link-antifacets", "pure, antifacets <= 2c - 1; conclusion: every vertex link has antifacets <= 2b - 1 (dim >= 2) or none (dim <= 1)",
        "pure", lambda n, c: math.comb(n, c) - 2 * c + 1, None, _always, _links_few_antifacets),
    "heavy-shed": Claim(
        "heavy-shed", "pure, antifacets <= 2c - 1; conclusion: vertices in >= c antifacets shed; witness-facet vertices lie in >= c antifacets and shed",
        "pure", lambda n, c: math.comb(n, c) - 2 * c + 1, None, _always, _heavy_vertices_shed),
    "top-heavy-pure": Claim(
        "top-heavy-pure", "any complex covering [n], dim n - c - 1, >= C(n,c) - c top facets; conclusion: pure",
        "top-heavy", lambda n, c: math.comb(n, c) - c, None, _always, _is_pure),
    "top-heavy-vd": Claim(
        "top-heavy-vd", "any complex covering [n], dim n - c - 1, >= C(n,c) - c top facets; conclusion: pure and VD with verified certificate",
        "top-heavy", lambda n, c: math.comb(n, c) - c, None, _always, _pure_and_vd),
    "simon": Claim(
        "simon", "pure, covering [n], facets <= C(n,c) - 2c; conclusion: shellable implies shelling completable",
        "pure", lambda n, c: 1, lambda n, c: math.comb(n, c) - 2 * c, _always, _simon),
}


# short ids accepted on the command line
ALIASES = {
    "thm1.1": "threshold-vd",
    "lemma3.1": "light-vertices",
    "lemma3.3": "large-nonfaces",
    "cor3.4": "link-antifacets",
    "lemma3.6": "heavy-shed",
    "lemma4.5": "top-heavy-pure",
    "cor4.6": "top-heavy-vd",
}


def resolve_claim(claim_id: str) -> Claim:
    key = ALIASES.get(claim_id, claim_id)
    if key not in CLAIMS:
        raise ComplexError(f"unknown claim {claim_id!r}; choose from {sorted(CLAIMS)}")
    return CLAIMS[key]


# -- harness ------------------------------------------------------------------------

@dataclass
class VerificationReport:
    params: dict
    enumerated: int = 0
    passes: int = 0
    failures: int = 0
    counterexamples: list[Complex] = field(default_factory=list)
    elapsed_ms: float | None = None
    complete: bool = True

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "enumerated": self.enumerated,
            "passes": self.passes,
            "failures": self.failures,
            "counterexamples": [{"n": cx.n, "facets": [list(f) for f in cx.facet_sets()]}
                                for cx in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
            "complete": self.complete,
        }


def _candidate_count(claim: Claim, n: int, c: int, cap: int) -> int:
    """Number of candidate facet families, or ``cap + 1`` once it passes ``cap``."""
    total = math.comb(n, c)
    lo = max(claim.min_facets(n, c), 1)
    hi = total if claim.max_facets is None else min(total, claim.max_facets(n, c))
    count = 0
    # largest families first: C(total, k) is smallest there
    for k in range(hi, lo - 1, -1):
        count += math.comb(total, total - k)
        if count > cap:
            return cap + 1
    return count


def _tasks(claim: Claim, n: int, c: int) -> list[tuple]:
    total = math.comb(n, c)
    lo = max(claim.min_facets(n, c), 1)
    hi = total if claim.max_facets is None else min(total, claim.max_facets(n, c))
    return [(claim.key, n, c, k, first)
            for k in range(lo, hi + 1) for first in range(0, total - k + 1)]


_WORKER_SEARCH: VDSearch | None = None


def _worker_search() -> VDSearch:
    global _WORKER_SEARCH
    if _WORKER_SEARCH is None or len(_WORKER_SEARCH.memo) > 2_000_000:
        _WORKER_SEARCH = VDSearch()
    return _WORKER_SEARCH


def _run_task(task: tuple) -> tuple[int, int, list[tuple[int, tuple[int, ...]]]]:
    key, n, c, k, first = task
    claim = CLAIMS[key]
    ctx = _worker_search()
    pool = k_subsets(n, n - c)
    full = (1 << n) - 1
    enumerated = passes = 0
    bad = []
    head = pool[first]
    for rest in itertools.combinations(pool[first + 1:], k - 1):
        combo = (head,) + rest
        if claim.family == "pure":
            cover = head
            for f in rest:
                cover |= f
            if cover != full:
                continue
            candidates: Iterable[Complex] = (Complex.from_masks(n, combo),)
        else:
            candidates = complexes_with_top(n, combo)
        for cx in candidates:
            enumerated += 1
            if claim.check(cx, n, c, ctx):
                passes += 1
            else:
                bad.append((cx.n, cx.facets))
    return enumerated, passes, bad


def verify(n: int, c: int, claim_id: str, budget: int | None = None,
           jobs: int = 1, timing: bool = True) -> VerificationReport:
    """Enumerate the hypothesis class of ``claim_id`` at ``(n, c)`` and check
    its conclusion on every member.

    ``budget`` caps the number of candidate facet families; over budget the
    run is skipped and the report is marked incomplete.
    """
    claim = resolve_claim(claim_id)
    _check_nc(n, c)
    budget = default_budget() if budget is None else budget
    start = time.perf_counter()
    report = VerificationReport({"theorem": claim.key, "n": n, "c": c,
                                 "hypothesis": claim.hypothesis, "family": claim.family})
    if not claim.applies(n, c):
        report.params["skipped"] = "outside the claim's parameter range"
    elif _candidate_count(claim, n, c, budget) > budget:
        report.complete = False
    else:
        tasks = _tasks(claim, n, c)
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_task, tasks))
        else:
            results = [_run_task(t) for t in tasks]
        for enumerated, passes, bad in results:
            report.enumerated += enumerated
            report.passes += passes
            report.failures += len(bad)
            report.counterexamples.extend(Complex.from_masks(m, f) for m, f in bad)
    if timing:
        report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return report


def verify_range(claim_id: str, ns: Iterable[int], budget: int | None = None,
                 jobs: int = 1, timing: bool = True) -> VerificationReport:
    """Run :func:`verify` for every ``n`` in ``ns`` and every ``0 <= c <= n-1``."""
    claim = resolve_claim(claim_id)
    ns = list(ns)
    start = time.perf_counter()
    runs = []
    total = VerificationReport({"theorem": claim.key, "n_range": [min(ns), max(ns)] if ns else [],
                                "hypothesis": claim.hypothesis})
    for n in ns:
        for c in range(n):
            r = verify(n, c, claim.key, budget=budget, jobs=jobs, timing=timing)
            runs.append(r)
            total.enumerated += r.enumerated
            total.passes += r.passes
            total.failures += r.failures
            total.counterexamples.extend(r.counterexamples)
            total.complete &= r.complete
    total.params["runs"] = [r.to_json() for r in runs]
    if timing:
        total.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return total


def full_skeleton(n: int, d: int) -> Complex:
    """``d``-dimensional skeleton of the simplex on ``{1..n}``."""
    return skeleton(simplex(n), d)
