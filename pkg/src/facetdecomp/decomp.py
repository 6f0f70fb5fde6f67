"""Decision procedures with checkable witnesses.

Every search takes an optional ``budget`` (a node limit).  When it runs out
the result is ``Decision(None, None)``: undecided, never a guess.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple, Union

from .complex import (
    Complex,
    ComplexError,
    canonical_form,
    compacted,
    deletion,
    dimension,
    is_uniform,
    k_subsets,
    labels_of,
    link,
    mask,
    positions,
)


class Decision(NamedTuple):
    """``holds`` is True, False, or None when the node budget ran out."""

    holds: bool | None
    witness: Any = None

    @property
    def undecided(self) -> bool:
        return self.holds is None


class BudgetExhausted(Exception):
    pass


class _Counter:
    def __init__(self, budget: int | None):
        self.left = budget

    def tick(self) -> None:
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise BudgetExhausted


# -- shedding vertices --------------------------------------------------------

def _vertex_bit(cx: Complex, v: int) -> int:
    bit = 1 << (v - 1)
    if not 1 <= v <= cx.n or not cx.vertex_mask & bit:
        raise ComplexError(f"{v} is not a vertex of the complex")
    return bit


def _sheds(facets: tuple[int, ...], bit: int) -> bool:
    rest = [f for f in facets if not f & bit]
    for f in facets:
        if f & bit:
            g = f ^ bit
            if not any(g & k == g for k in rest):
                return False
    return True


def is_shedding(cx: Complex, v: int) -> bool:
    """Every facet of the deletion of ``v`` is a facet of the complex."""
    bit = _vertex_bit(cx, v)
    return _sheds(cx.facets, bit)


def is_shedding_exchange(cx: Complex, v: int) -> bool:
    """Exchange form: each facet ``F ∋ v`` has ``y ∉ F`` with ``F - v + y`` a face."""
    bit = _vertex_bit(cx, v)
    full = (1 << cx.n) - 1
    for f in cx.facets:
        if f & bit:
            base = f ^ bit
            if not any(cx.contains(base | 1 << y) for y in positions(full & ~f)):
                return False
    return True


def nonshedding_witness(cx: Complex, v: int) -> int | None:
    """A facet ``F ∋ v`` with ``F - v`` maximal in the deletion, if any."""
    bit = _vertex_bit(cx, v)
    rest = [f for f in cx.facets if not f & bit]
    for f in cx.facets:
        if f & bit:
            g = f ^ bit
            if not any(g & k == g for k in rest):
                return f
    return None


def shedding_vertices(cx: Complex) -> list[int]:
    return [v for v in cx.vertices if is_shedding(cx, v)]


def vertex_antifacet_counts(cx: Complex) -> list[int]:
    """For each label ``1..n``, how many top-size non-faces contain it."""
    d = dimension(cx)
    counts = [0] * cx.n
    if d is None:
        return counts
    # a top-size set is a face only if it is a facet
    facets = set(cx.facets)
    for m in k_subsets(cx.n, d + 1):
        if m not in facets:
            for p in positions(m):
                counts[p] += 1
    return counts


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    kind: str  # "simplex" or "empty"

    def to_json(self) -> dict:
        return {"leaf": self.kind}


@dataclass(frozen=True)
class Split:
    vertex: int
    link: "Certificate"
    deletion: "Certificate"

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "link": self.link.to_json(), "del": self.deletion.to_json()}


Certificate = Union[Leaf, Split]
SIMPLEX = Leaf("simplex")
EMPTY = Leaf("empty")


def certificate_from_json(obj) -> Certificate:
    if not isinstance(obj, dict):
        raise ValueError(f"certificate node must be an object, got {type(obj).__name__}")
    if "leaf" in obj:
        if set(obj) != {"leaf"} or obj["leaf"] not in ("simplex", "empty"):
            raise ValueError(f"bad leaf node {obj!r}")
        return SIMPLEX if obj["leaf"] == "simplex" else EMPTY
    if set(obj) != {"vertex", "link", "del"}:
        raise ValueError(f"internal node needs exactly vertex/link/del, got {sorted(obj)}")
    v = obj["vertex"]
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ValueError(f"bad vertex {v!r}")
    return Split(v, certificate_from_json(obj["link"]), certificate_from_json(obj["del"]))


def _relabel_cert(cert: Certificate, labels: tuple[int, ...]) -> Certificate:
    if isinstance(cert, Leaf):
        return cert
    return Split(labels[cert.vertex - 1],
                 _relabel_cert(cert.link, labels),
                 _relabel_cert(cert.deletion, labels))


def certificate_size(cert: Certificate) -> int:
    if isinstance(cert, Leaf):
        return 1
    return 1 + certificate_size(cert.link) + certificate_size(cert.deletion)


def verify_certificate(cx: Complex, cert: Certificate) -> bool:
    """Replay ``cert`` against ``cx`` without any search.

    Internal nodes name vertices by the labels of ``cx``.  A malformed tree
    raises ``ValueError``; a well-formed but wrong one returns False.
    """
    if isinstance(cert, dict):
        cert = certificate_from_json(cert)
    if not isinstance(cert, (Leaf, Split)):
        raise ValueError(f"not a certificate: {cert!r}")
    base = compacted(cx)
    return _replay(base.complex, base.labels, cert)


def _replay(cx: Complex, labels: tuple[int, ...], cert: Certificate) -> bool:
    if isinstance(cert, Leaf):
        if cert.kind == "empty":
            return cx.facets in ((), (0,))
        return len(cx.facets) == 1
    if not isinstance(cert, Split):
        raise ValueError(f"not a certificate node: {cert!r}")
    if cert.vertex not in labels:
        return False
    local = labels.index(cert.vertex) + 1
    if not is_shedding(cx, local):
        return False
    lk = link(cx, 1 << (local - 1))
    dl = deletion(cx, local)
    return (_replay(lk.complex, tuple(labels[i - 1] for i in lk.labels), cert.link)
            and _replay(dl.complex, tuple(labels[i - 1] for i in dl.labels), cert.deletion))


# -- vertex decomposability -----------------------------------------------------

def _vertex_order(cx: Complex) -> list[int]:
    counts = vertex_antifacet_counts(cx)
    return sorted(range(1, cx.n + 1), key=lambda v: (-counts[v - 1], v))


class VDSearch:
    """Memoized search for vertex decompositions.

    One instance may be reused across many complexes; the memo is keyed on
    compacted facet tuples, so isomorphic-by-shift subproblems are shared.
    With ``isomorphism=True`` keys are further collapsed to canonical forms.
    """

    def __init__(self, isomorphism: bool = False):
        self.memo: dict[tuple[int, ...], Certificate | None] = {}
        self.canonical_memo: dict[tuple[int, ...], Certificate | None] = {}
        self.isomorphism = isomorphism

    def decide(self, cx: Complex, budget: int | None = None) -> Decision:
        if cx.is_void:
            return Decision(True, EMPTY)
        base = compacted(cx)
        counter = _Counter(budget)
        try:
            cert = self._search(base.complex, counter)
        except BudgetExhausted:
            return Decision(None, None)
        if cert is None:
            return Decision(False, None)
        return Decision(True, _relabel_cert(cert, base.labels))

    def _search(self, cx: Complex, counter: _Counter) -> Certificate | None:
        key = cx.facets
        if key in self.memo:
            return self.memo[key]
        if len(key) == 1:
            return EMPTY if key == (0,) else SIMPLEX
        canon = canonical_form(cx) if self.isomorphism else None
        if canon is not None and canon[0].facets in self.canonical_memo:
            hit = self.canonical_memo[canon[0].facets]
            result = None if hit is None else _relabel_cert(hit, _inverse(canon[1]))
            self.memo[key] = result
            return result
        counter.tick()
        result = None
        for v in _vertex_order(cx):
            bit = 1 << (v - 1)
            if not _sheds(cx.facets, bit):
                continue
            lk = link(cx, bit)
            lk_cert = self._search(lk.complex, counter)
            if lk_cert is None:
                continue
            dl = deletion(cx, v)
            dl_cert = self._search(dl.complex, counter)
            if dl_cert is None:
                continue
            result = Split(v, _relabel_cert(lk_cert, lk.labels), _relabel_cert(dl_cert, dl.labels))
            break
        self.memo[key] = result
        if canon is not None:
            self.canonical_memo[canon[0].facets] = (
                None if result is None else _relabel_cert(result, canon[1]))
        return result


def _inverse(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for old, new in enumerate(perm, start=1):
        inv[new - 1] = old
    return tuple(inv)


def is_vertex_decomposable(cx: Complex, budget: int | None = None,
                           search: VDSearch | None = None) -> Decision:
    """Decide vertex decomposability; the witness is a :class:`Certificate`.

    Follows the recursive definition for arbitrary (also non-pure) complexes.
    The void complex counts as vertex decomposable.
    """
    return (search or VDSearch()).decide(cx, budget)


# -- shellability -----------------------------------------------------------------

@dataclass(frozen=True)
class ShellingOrder:
    order: tuple[tuple[int, ...], ...]
    extension: tuple[tuple[int, ...], ...] = field(default=())

    def to_json(self):
        if not self.extension:
            return [list(f) for f in self.order]
        return {"shelling": [list(f) for f in self.order],
                "extension": [list(f) for f in self.extension]}


def shelling_order_from_json(obj) -> ShellingOrder:
    def facets(arr):
        if not isinstance(arr, list) or not all(
                isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool)
                                            for v in f) for f in arr):
            raise ValueError("shelling order must be an array of integer arrays")
        return tuple(tuple(sorted(f)) for f in arr)

    if isinstance(obj, dict):
        if set(obj) != {"shelling", "extension"}:
            raise ValueError("completion object needs shelling and extension arrays")
        return ShellingOrder(facets(obj["shelling"]), facets(obj["extension"]))
    return ShellingOrder(facets(obj))


def _attaches(f: int, earlier: list[int]) -> bool:
    """``<f> ∩ (earlier)`` is pure of codimension one in ``<f>``."""
    if not earlier:
        return True
    ridge_vertices = 0
    for g in earlier:
        gone = f & ~g
        if gone.bit_count() == 1:
            ridge_vertices |= gone
    if not ridge_vertices:
        return False
    return all(f & ~g & ridge_vertices for g in earlier)


def is_shelling(order) -> bool:
    """Check an explicit facet sequence (masks or label tuples)."""
    masks = [f if isinstance(f, int) else mask(f) for f in order]
    if len(set(masks)) != len(masks):
        return False
    if len({m.bit_count() for m in masks}) > 1:
        return False
    return all(_attaches(masks[k], masks[:k]) for k in range(len(masks)))


def _require_uniform(cx: Complex, what: str) -> None:
    if not is_uniform(cx):
        raise ComplexError(f"{what} is defined for pure complexes only")


def _shell_dfs(pool: list[int], used: int, seq: list[int], target: int,
               failed: set[int], counter: _Counter, phase_mask: int | None = None) -> bool:
    if used == target:
        return True
    if used in failed:
        return False
    counter.tick()
    # while phase_mask is not covered only facets from the first pool may go next
    if phase_mask is not None and used & phase_mask != phase_mask:
        candidates = [i for i in range(len(pool)) if (phase_mask >> i) & 1 and not used >> i & 1]
    else:
        candidates = [i for i in range(len(pool)) if not used >> i & 1]
    earlier = [pool[i] for i in seq]
    scored = []
    for i in candidates:
        f = pool[i]
        if _attaches(f, earlier):
            shared = sum(1 for g in earlier if (f & ~g).bit_count() == 1)
            scored.append((-shared, i))
    scored.sort()
    for _, i in scored:
        seq.append(i)
        if _shell_dfs(pool, used | 1 << i, seq, target, failed, counter, phase_mask):
            return True
        seq.pop()
    failed.add(used)
    return False


def is_shellable(cx: Complex, budget: int | None = None) -> Decision:
    """Backtracking over facet orders; failed prefixes are remembered by facet set."""
    _require_uniform(cx, "shellability")
    if len(cx.facets) <= 1:
        return Decision(True, ShellingOrder(tuple(labels_of(f) for f in cx.facets)))
    pool = list(cx.facets)
    seq: list[int] = []
    try:
        ok = _shell_dfs(pool, 0, seq, (1 << len(pool)) - 1, set(), _Counter(budget))
    except BudgetExhausted:
        return Decision(None, None)
    if not ok:
        return Decision(False, None)
    return Decision(True, ShellingOrder(tuple(labels_of(pool[i]) for i in seq)))


def is_shelling_completable(cx: Complex, budget: int | None = None) -> Decision:
    """Search for a shelling of ``cx`` that continues to a shelling of the full
    ``d``-skeleton of the simplex on ``{1..n}``."""
    _require_uniform(cx, "shelling completability")
    if cx.is_void or cx.is_empty:
        return Decision(True, ShellingOrder(tuple(labels_of(f) for f in cx.facets)))
    size = cx.facets[0].bit_count()
    own = set(cx.facets)
    others = [m for m in k_subsets(cx.n, size) if m not in own]
    pool = list(cx.facets) + others
    first = (1 << len(cx.facets)) - 1
    seq: list[int] = []
    try:
        ok = _shell_dfs(pool, 0, seq, (1 << len(pool)) - 1, set(), _Counter(budget), first)
    except BudgetExhausted:
        return Decision(None, None)
    if not ok:
        return Decision(False, None)
    k = len(cx.facets)
    return Decision(True, ShellingOrder(tuple(labels_of(pool[i]) for i in seq[:k]),
                                        tuple(labels_of(pool[i]) for i in seq[k:])))


def verify_shelling(cx: Complex, order: ShellingOrder) -> bool:
    """Check that ``order`` shells ``cx`` and, if extended, the whole skeleton."""
    if sorted(mask(f) for f in order.order) != list(cx.facets):
        return False
    if not order.extension:
        return is_shelling(order.order)
    size = cx.facets[0].bit_count()
    full = list(order.order) + list(order.extension)
    if sorted(mask(f) for f in full) != k_subsets(cx.n, size):
        return False
    return is_shelling(full)
