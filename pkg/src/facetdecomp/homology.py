"""Reduced simplicial homology over prime fields and Reisner's criterion."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import Complex, ComplexError, dimension, link, positions


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers over ``F_p`` for dimensions ``-1..dim``."""

    p: int
    ranks: tuple[int, ...]

    def rank(self, k: int) -> int:
        i = k + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    @property
    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic ``sum (-1)^k rank_k``."""
        return sum((-1) ** (i - 1) * r for i, r in enumerate(self.ranks))

    def is_acyclic_below(self, k: int) -> bool:
        return all(self.rank(j) == 0 for j in range(-1, k))


def _check_prime(p: int) -> None:
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ComplexError(f"{p} is not prime")


def boundary_matrix(cx: Complex, k: int, p: int = 2) -> np.ndarray:
    """Matrix of the boundary map from ``k``-faces to ``(k-1)``-faces mod ``p``.

    Rows and columns follow colex face order.  ``k = 0`` maps each vertex to
    the empty face (augmented complex).
    """
    _check_prime(p)
    d = dimension(cx)
    if d is None or not 0 <= k <= d:
        raise ComplexError(f"boundary dimension {k} out of range for dim {d}")
    cols = cx.faces_of_dim(k)
    rows = cx.faces_of_dim(k - 1)
    index = {f: i for i, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, f in enumerate(cols):
        for i, q in enumerate(positions(f)):
            mat[index[f ^ (1 << q)], j] = (-1) ** i % p
    return mat


def _rank_mod2(cx: Complex, k: int) -> int:
    rows = {f: i for i, f in enumerate(cx.faces_of_dim(k - 1))}
    # each k-face becomes a bit-row over the (k-1)-faces; xor elimination
    pivots: dict[int, int] = {}
    rank = 0
    for f in cx.faces_of_dim(k):
        r = 0
        for q in positions(f):
            r |= 1 << rows[f ^ (1 << q)]
        while r:
            top = r.bit_length() - 1
            if top in pivots:
                r ^= pivots[top]
            else:
                pivots[top] = r
                rank += 1
                break
    return rank


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = a[rank] * pow(int(a[rank, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        for r in others:
            if r != rank:
                a[r] = (a[r] - a[r, c] * a[rank]) % p
        rank += 1
    return rank


def _boundary_rank(cx: Complex, k: int, p: int) -> int:
    if p == 2:
        return _rank_mod2(cx, k)
    return rank_mod_p(boundary_matrix(cx, k, p), p)


def reduced_homology_ranks(cx: Complex, p: int = 2) -> HomologyProfile:
    _check_prime(p)
    d = dimension(cx)
    if d is None:
        raise ComplexError("homology of the void complex is undefined")
    counts = [len(cx.faces_of_dim(k)) for k in range(-1, d + 1)]
    # brank[k + 1] = rank of the boundary out of dimension k; zero past the top
    brank = [0] + [_boundary_rank(cx, k, p) for k in range(0, d + 1)] + [0]
    ranks = tuple(counts[i] - brank[i] - brank[i + 1] for i in range(d + 2))
    return HomologyProfile(p, ranks)


def is_connected(cx: Complex) -> bool:
    """Connectivity of the vertices that actually occur in some face."""
    comps: list[int] = []
    for f in cx.facets:
        if not f:
            continue
        merged = f
        rest = []
        for c in comps:
            if c & merged:
                merged |= c
            else:
                rest.append(c)
        comps = rest + [merged]
    return len(comps) <= 1


def reisner_failure(cx: Complex, p: int = 2):
    """First face (colex-smallest among the largest) whose link has homology
    below its dimension, or ``None`` when the criterion holds."""
    d = dimension(cx)
    if d is None:
        raise ComplexError("Cohen-Macaulay test on the void complex is undefined")
    facets = set(cx.facets)
    by_dim: dict[int, list[int]] = {}
    for f in cx.faces:
        if f not in facets:
            by_dim.setdefault(f.bit_count() - 1, []).append(f)
    for k in sorted(by_dim, reverse=True):
        for f in sorted(by_dim[k]):
            lk = link(cx, f).complex
            ld = dimension(lk)
            if ld <= 0:
                continue
            if ld >= 1 and not is_connected(lk):
                return f
            if not reduced_homology_ranks(lk, p).is_acyclic_below(ld):
                return f
    return None


def is_cohen_macaulay(cx: Complex, p: int = 2) -> bool:
    """Reisner: every link has vanishing reduced homology below its dimension."""
    return reisner_failure(cx, p) is None
