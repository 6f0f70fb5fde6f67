"""Membership tests for matroid, shifted and extremal complexes."""
from __future__ import annotations

import math
from typing import Sequence

from .complex import (
    Complex,
    ComplexError,
    dimension,
    f_vector,
    is_uniform,
    k_subsets,
    positions,
    relabel,
)


def _require_uniform(cx: Complex, what: str) -> None:
    if cx.is_void or not is_uniform(cx):
        raise ComplexError(f"{what} is defined for pure complexes only")


def is_matroid(cx: Complex) -> bool:
    """Basis exchange: for facets F, G and v in F - G some w in G - F has
    F - v + w a facet."""
    _require_uniform(cx, "matroid test")
    facets = set(cx.facets)
    for f in cx.facets:
        for g in cx.facets:
            for v in positions(f & ~g):
                base = f ^ (1 << v)
                if not any(base | 1 << w in facets for w in positions(g & ~f)):
                    return False
    return True


# -- shiftedness ---------------------------------------------------------------

def dominates(cx: Complex, u: int, v: int) -> bool:
    """Swapping ``v`` for ``u`` in any facet containing ``v`` but not ``u``
    lands in the complex (labels are 1-based)."""
    ub, vb = 1 << (u - 1), 1 << (v - 1)
    return all(cx.contains((f ^ vb) | ub) for f in cx.facets if f & vb and not f & ub)


def is_shifted_under(cx: Complex, labeling: Sequence[int] | None = None) -> bool:
    """Closure under label-decreasing swaps after applying ``labeling``.

    ``labeling[i - 1]`` is the new label of vertex ``i``; ``None`` keeps the
    given labels.  Checking facets is enough: a swap inside a smaller face
    stays inside the swapped facet.
    """
    if labeling is not None:
        if sorted(labeling) != list(range(1, cx.n + 1)):
            raise ComplexError("labeling must be a permutation of 1..n")
        cx = relabel(cx, labeling)
    for f in cx.facets:
        for v in positions(f):
            for u in range(v):
                if not f >> u & 1 and not cx.contains((f ^ (1 << v)) | (1 << u)):
                    return False
    return True


def shifting_order(cx: Complex) -> list[int] | None:
    """Vertices in an order that makes the complex shifted, or ``None``.

    A valid order must open with a vertex that dominates every other vertex,
    and moving any such vertex to the front of a valid order keeps it valid.
    So picking greedily (highest degree first among the candidates) is exact.
    """
    n = cx.n
    dom = [[u == v or dominates(cx, u, v) for v in range(1, n + 1)] for u in range(1, n + 1)]
    degree = [sum(1 for f in cx.facets if f >> p & 1) for p in range(n)]
    rest = sorted(range(n), key=lambda p: (-degree[p], p))
    order = []
    while rest:
        x = next((x for x in rest if all(dom[x][y] for y in rest)), None)
        if x is None:
            return None
        order.append(x + 1)
        rest.remove(x)
    return order


def is_shifted(cx: Complex, labeling: Sequence[int] | None = None) -> bool:
    """Shifted under ``labeling`` if given, otherwise under some relabeling."""
    if labeling is not None:
        return is_shifted_under(cx, labeling)
    return shifting_order(cx) is not None


def shifted_labeling(cx: Complex) -> list[int] | None:
    """A labeling (old label -> new label) under which the complex is shifted."""
    order = shifting_order(cx)
    if order is None:
        return None
    labeling = [0] * cx.n
    for new, old in enumerate(order, start=1):
        labeling[old - 1] = new
    return labeling


def is_threshold_graph(cx: Complex) -> bool:
    """Peel isolated or dominating vertices; for graphs this is shiftedness."""
    d = dimension(cx)
    if d is None or d > 1:
        raise ComplexError("threshold recognition needs a complex of dimension at most 1")
    adj = [0] * cx.n
    for f in cx.facets:
        if f.bit_count() == 2:
            a, b = positions(f)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    alive = (1 << cx.n) - 1
    while alive:
        for p in positions(alive):
            nb = adj[p] & alive
            if nb == 0 or nb == alive & ~(1 << p):
                alive &= ~(1 << p)
                break
        else:
            return False
    return True


# -- Kruskal-Katona --------------------------------------------------------------

def cascade(r: int, k: int) -> list[tuple[int, int]]:
    """``k``-cascade of ``r``: pairs ``(a_i, i)`` with ``r = sum C(a_i, i)``,
    ``a_k > a_{k-1} > ... >= i``."""
    if r < 1 or k < 1:
        raise ComplexError("cascade needs r >= 1 and k >= 1")
    out = []
    i = k
    while r > 0 and i >= 1:
        a = i
        while math.comb(a + 1, i) <= r:
            a += 1
        out.append((a, i))
        r -= math.comb(a, i)
        i -= 1
    return out


def kruskal_katona_min_shadow(r: int, t: int) -> int:
    """Fewest ``(t-1)``-faces possible under ``r`` faces of dimension ``t``."""
    if r < 1 or t < 0:
        raise ComplexError("need r >= 1 and t >= 0")
    return sum(math.comb(a, i - 1) for a, i in cascade(r, t + 1))


def colex_initial(r: int, t: int, n: int | None = None) -> Complex:
    """The first ``r`` sets of size ``t + 1`` in colex order, as a complex."""
    k = t + 1
    if r < 1 or t < 0:
        raise ComplexError("need r >= 1 and t >= 0")
    a = k
    while math.comb(a, k) < r:
        a += 1
    if n is None:
        n = a
    if math.comb(n, k) < r:
        raise ComplexError(f"only {math.comb(n, k)} sets of size {k} fit on {n} vertices")
    return Complex.from_masks(n, k_subsets(n, k)[:r])


def is_extremal(cx: Complex) -> bool:
    """Pure of dimension t with r facets and exactly the Kruskal-Katona minimum
    number of ``(t-1)``-faces."""
    _require_uniform(cx, "extremality")
    t = dimension(cx)
    if t < 0:
        return True
    r = len(cx.facets)
    ridges = f_vector(cx)[t - 1] if t >= 1 else 1
    return ridges == kruskal_katona_min_shadow(r, t)
