"""Finite simplicial complexes stored as antichains of bitset facets.

Vertex ``i`` (1-based label) is bit ``i - 1`` of a facet mask.  Facets are kept
inclusion-free and sorted by integer value, which is colexicographic order on
the underlying vertex sets, so two complexes on the same ``n`` are equal
exactly when their facet tuples are.

Two degenerate complexes are distinguished throughout:

* the *void* complex has no faces at all (``facets == ()``);
* the *empty* complex ``{∅}`` has the single facet ``∅`` (``facets == (0,)``).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 63


class ComplexError(ValueError):
    """Raised when an operation is applied outside its domain."""


# -- bitset helpers ---------------------------------------------------------

def mask(labels: Iterable[int]) -> int:
    m = 0
    for v in labels:
        m |= 1 << (v - 1)
    return m


def labels_of(m: int) -> tuple[int, ...]:
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def positions(m: int) -> Iterator[int]:
    """Yield 0-based bit positions set in ``m``, lowest first."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def submasks(m: int) -> Iterator[int]:
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def k_subsets(n: int, k: int) -> list[int]:
    """All ``k``-subsets of ``{1..n}`` as masks, in colex order."""
    if k < 0 or k > n:
        return []
    if k == 0:
        return [0]
    out = []
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        out.append(m)
        # Gosper's hack: next integer with the same popcount
        low = m & -m
        ripple = m + low
        m = (((ripple ^ m) >> 2) // low) | ripple
    return out


def antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``masks``, deduplicated and sorted."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _as_mask(face) -> int:
    return face if isinstance(face, int) else mask(face)


# -- the complex ------------------------------------------------------------

@dataclass(frozen=True)
class Complex:
    """A simplicial complex on ``{1..n}`` given by its facets (bitmasks)."""

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ComplexError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if any(f >> self.n for f in self.facets):
            raise ComplexError("facet uses a label larger than n")
        if self.facets != antichain(self.facets):
            raise ComplexError("facets must be a sorted antichain; use from_facets")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Complex:
        return _make(n, masks)

    def __repr__(self) -> str:
        if self.is_void:
            return f"Complex(n={self.n}, void)"
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_sets())
        return f"Complex(n={self.n}, <{body}>)"

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    @property
    def vertex_mask(self) -> int:
        v = 0
        for f in self.facets:
            v |= f
        return v

    @property
    def vertices(self) -> tuple[int, ...]:
        return labels_of(self.vertex_mask)

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [labels_of(f) for f in self.facets]

    @cached_property
    def faces(self) -> frozenset[int]:
        """Every face as a mask (downward closure of the facets)."""
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    def contains(self, face) -> bool:
        m = _as_mask(face)
        return any(m & f == m for f in self.facets)

    def faces_of_dim(self, k: int) -> list[int]:
        return sorted(f for f in self.faces if f.bit_count() == k + 1)


def _make(n: int, masks: Iterable[int]) -> Complex:
    # skips __post_init__; callers guarantee labels fit in n
    obj = object.__new__(Complex)
    object.__setattr__(obj, "n", n)
    object.__setattr__(obj, "facets", antichain(masks))
    return obj


class Restriction(NamedTuple):
    """A sub-complex re-housed on labels ``1..n'`` plus the map back.

    ``labels[i]`` is the original label of compacted vertex ``i + 1``.
    """

    complex: Complex
    labels: tuple[int, ...]


def from_facets(facet_list: Iterable[Iterable[int]], n: int | None = None,
                *, compact: bool = False) -> Complex:
    """Build a complex from vertex lists; dominated and repeated faces are absorbed.

    With ``compact=True`` uncovered labels are dropped and the rest renumbered
    ``1..n'`` in increasing order.
    """
    masks = []
    top = 0
    for face in facet_list:
        face = list(face)
        for v in face:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ComplexError(f"vertex label {v!r} is not an integer")
            if v <= 0:
                raise ComplexError(f"vertex label {v} must be positive")
            if n is not None and v > n:
                raise ComplexError(f"vertex label {v} exceeds declared n={n}")
            if v > MAX_VERTICES:
                raise ComplexError(f"vertex label {v} exceeds the {MAX_VERTICES} cap")
            top = max(top, v)
        masks.append(mask(face))
    if n is None:
        n = top
    cx = Complex(n, antichain(masks))
    if compact:
        cx = compacted(cx).complex
    return cx


def simplex(n: int) -> Complex:
    return Complex(n, ((1 << n) - 1,))


def void(n: int = 0) -> Complex:
    return Complex(n, ())


def empty(n: int = 0) -> Complex:
    return Complex(n, (0,))


def compacted(cx: Complex) -> Restriction:
    """Drop uncovered labels and renumber the remaining vertices ``1..n'``."""
    cover = cx.vertex_mask
    labels = labels_of(cover)
    if cover == (1 << cx.n) - 1:
        return Restriction(cx, labels)
    return Restriction(_squeeze(cx.facets, cover), labels)


def _squeeze(facets: Iterable[int], cover: int) -> Complex:
    pos = list(positions(cover))
    if pos == list(range(len(pos))):
        return _make(len(pos), facets)
    new = []
    for f in facets:
        m = 0
        for i, p in enumerate(pos):
            if f >> p & 1:
                m |= 1 << i
        new.append(m)
    return _make(len(pos), new)


def relabel(cx: Complex, perm: Sequence[int], n: int | None = None) -> Complex:
    """Apply ``perm`` where ``perm[i - 1]`` is the new label of vertex ``i``."""
    n = cx.n if n is None else n
    new = []
    for f in cx.facets:
        m = 0
        for p in positions(f):
            m |= 1 << (perm[p] - 1)
        new.append(m)
    return _make(n, new)


# -- basic invariants ---------------------------------------------------------

def dimension(cx: Complex) -> int | None:
    """Maximum facet dimension; ``None`` for the void complex."""
    if cx.is_void:
        return None
    return max(f.bit_count() for f in cx.facets) - 1


def codimension(cx: Complex) -> int:
    if cx.is_void:
        raise ComplexError("codimension of the void complex is undefined")
    return cx.n - dimension(cx) - 1


def is_uniform(cx: Complex) -> bool:
    """All facets share one cardinality (purity without the coverage rule)."""
    return len({f.bit_count() for f in cx.facets}) <= 1


def is_pure(cx: Complex, require_cover: bool = True) -> bool:
    """Equal facet sizes and, by default, every label ``1..n`` is a vertex."""
    if not is_uniform(cx):
        return False
    if require_cover and cx.vertex_mask != (1 << cx.n) - 1:
        return False
    return True


def facet_count(cx: Complex) -> int:
    return len(cx.facets)


def _require_pure(cx: Complex, what: str) -> None:
    if cx.is_void or not is_pure(cx):
        raise ComplexError(f"{what} needs a pure complex covering 1..n")


def antifacets(cx: Complex) -> list[int]:
    """Top-dimensional non-faces: ``(dim+1)``-subsets of ``[n]`` that are not facets."""
    _require_pure(cx, "antifacets")
    present = set(cx.facets)
    size = cx.facets[0].bit_count()
    return [m for m in k_subsets(cx.n, size) if m not in present]


def antifacet_count(cx: Complex) -> int:
    _require_pure(cx, "antifacet_count")
    return math.comb(cx.n, codimension(cx)) - len(cx.facets)


def cone_apex(cx: Complex) -> int | None:
    if cx.is_void:
        return None
    common = cx.facets[0]
    for f in cx.facets[1:]:
        common &= f
    if not common:
        return None
    return (common & -common).bit_length()


def f_vector(cx: Complex) -> tuple[int, ...]:
    """``(f_0, ..., f_d)``; the empty complex gives ``()``."""
    d = dimension(cx)
    if d is None:
        raise ComplexError("f-vector of the void complex is undefined")
    counts = [0] * (d + 1)
    for f in cx.faces:
        if f:
            counts[f.bit_count() - 1] += 1
    return tuple(counts)


# -- local constructions ------------------------------------------------------

def link(cx: Complex, face=0) -> Restriction:
    """``lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}``, compacted."""
    m = _as_mask(face)
    inner = [f & ~m for f in cx.facets if f & m == m]
    if not inner:
        raise ComplexError(f"{labels_of(m)} is not a face")
    # facets containing m stay an antichain after removing m
    return _restrict(inner)


def deletion(cx: Complex, v: int) -> Restriction:
    """Faces avoiding ``v``, compacted."""
    if not 1 <= v <= cx.n:
        raise ComplexError(f"vertex {v} outside 1..{cx.n}")
    bit = 1 << (v - 1)
    return _restrict(deletion_facets(cx.facets, bit))


def deletion_facets(facets: Sequence[int], bit: int) -> list[int]:
    keep = [f for f in facets if not f & bit]
    for f in facets:
        if f & bit:
            g = f ^ bit
            if not any(g & k == g for k in keep):
                keep.append(g)
    return keep


def _restrict(facets: list[int]) -> Restriction:
    cover = 0
    for f in facets:
        cover |= f
    return Restriction(_squeeze(facets, cover), labels_of(cover))


def skeleton(cx: Complex | int, k: int) -> Complex:
    """All faces of dimension at most ``k``.

    An integer argument stands for the full simplex on ``{1..n}``.  For a pure
    complex the facets are exactly its ``k``-dimensional faces.
    """
    if isinstance(cx, int):
        cx = simplex(cx)
    d = dimension(cx)
    if d is None or not -1 <= k <= d:
        raise ComplexError(f"skeleton dimension {k} out of range for dim {d}")
    if k == d:
        return cx
    out = set()
    for f in cx.facets:
        if f.bit_count() <= k + 1:
            out.add(f)
        else:
            for combo in itertools.combinations(list(positions(f)), k + 1):
                out.add(sum(1 << p for p in combo))
    return _make(cx.n, out)


def minimal_nonfaces(cx: Complex) -> list[int]:
    """Inclusion-minimal subsets of ``[n]`` outside the complex, colex order."""
    if cx.is_void:
        return [0]
    faces = cx.faces
    full = (1 << cx.n) - 1
    found = []
    # a minimal nonface S has every S - x a face, so S = G + x for a face G
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    for size in range(1, cx.n + 1):
        candidates = set()
        for g in by_size.get(size - 1, ()):
            rest = full & ~g
            for p in positions(rest):
                candidates.add(g | 1 << p)
        for s in candidates:
            if s in faces:
                continue
            if all(s ^ (1 << p) in faces for p in positions(s)):
                found.append(s)
    return sorted(found)


def alexander_dual(cx: Complex) -> Complex:
    """``{F ⊆ [n] : [n] - F ∉ Δ}``; facets are complements of minimal nonfaces."""
    full = (1 << cx.n) - 1
    return _make(cx.n, (full & ~m for m in minimal_nonfaces(cx)))


# -- isomorphism --------------------------------------------------------------

def _vertex_invariants(cx: Complex) -> list[tuple]:
    base = []
    for p in range(cx.n):
        sizes = sorted(f.bit_count() for f in cx.facets if f >> p & 1)
        base.append((len(sizes), tuple(sizes)))
    refined = []
    for p in range(cx.n):
        nbrs = []
        for f in cx.facets:
            if f >> p & 1:
                nbrs.append(tuple(sorted(base[q] for q in positions(f) if q != p)))
        refined.append((base[p], tuple(sorted(nbrs))))
    return refined


def canonical_form(cx: Complex, limit: int = 200_000) -> tuple[Complex, tuple[int, ...]] | None:
    """Isomorphism-invariant representative and the relabeling that reaches it.

    Vertices are grouped by refined degree invariants and only permutations
    within groups are tried.  Returns ``None`` when more than ``limit``
    labelings would be needed.
    """
    inv = _vertex_invariants(cx)
    order = sorted(range(cx.n), key=lambda p: inv[p])
    cells: list[list[int]] = []
    for p in order:
        if cells and inv[cells[-1][0]] == inv[p]:
            cells[-1].append(p)
        else:
            cells.append([p])
    total = 1
    for cell in cells:
        total *= math.factorial(len(cell))
        if total > limit:
            return None
    best = None
    best_perm = None
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        perm = [0] * cx.n
        slot = 1
        for cell in choice:
            for p in cell:
                perm[p] = slot
                slot += 1
        key = tuple(sorted(sum(1 << (perm[q] - 1) for q in positions(f)) for f in cx.facets))
        if best is None or key < best:
            best, best_perm = key, tuple(perm)
    return Complex(cx.n, best), best_perm
